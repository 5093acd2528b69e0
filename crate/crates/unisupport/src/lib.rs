//! Exact combinatorial machinery for unipotent-support data of the
//! classical Weyl groups: character labels with their a/b/d invariants,
//! symbols and families, the Springer correspondence, induction from
//! centralizer subsystems, and verification sweeps over the resulting
//! support map.
//!
//! Everything is exact integer arithmetic. The `weyloracle` module is an
//! independent brute-force engine used to cross-check the scalable
//! combinatorial implementations at small rank.
//!
//! See the crate examples for runnable tours of each capability, and the
//! `unisupport` binary for the `verify`/`inspect` command line.

use serde::{Deserialize, Serialize};

pub mod charcomb;
pub mod cli;
pub mod error;
pub mod induction;
pub mod partitions;
pub mod report;
pub mod rootdata;
pub mod springer;
pub mod support;
pub mod weyloracle;

/// A two-valued tag used for split conjugacy classes, split subsystem
/// classes, degenerate character pairs and very even unipotent classes.
#[derive(
    Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Debug,
)]
pub enum Sign {
    Plus,
    Minus,
}

pub use charcomb::{a_invariant, b_invariant, char_labels, families, CharacterLabel, Family, Symbol};
pub use error::{Error, Result};
pub use partitions::Partition;
pub use rootdata::{
    build_root_system, enumerate_isolated_subsystems, enumerate_subsystem_classes, CartanType,
    Series, SubsystemClass,
};
pub use springer::{
    closure_leq, component_group_order, springer_char_of_class, springer_class, unipotent_classes,
    UnipotentClass,
};
