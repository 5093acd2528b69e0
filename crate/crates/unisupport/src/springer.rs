//! Unipotent classes of the connected-center classical groups and the
//! Springer correspondence between character labels and pairs
//! (class, local-system slot), together with the d-invariant dim B_u.
//!
//! Classes are Jordan types: partitions of n+1 (A_n), of 2n+1 with even
//! parts in even multiplicity (B_n), of 2n with odd parts in even
//! multiplicity (C_n), of 2n with even parts in even multiplicity (D_n,
//! the all-even types splitting into two classes).
//!
//! The correspondence is the staircase/parity algorithm: the label's rows
//! are staircased, doubled with opposite parities, merged, and the
//! staircase removed; non-admissible results collapse to the largest
//! admissible Jordan type below, which is exactly the non-trivial
//! local-system case.

use crate::charcomb::{a_invariant, b_invariant, symbol_of, CharacterLabel, LabelPayload, Symbol};
use crate::error::{Error, Result};
use crate::partitions::{collapse_to, partitions_of, Partition};
use crate::rootdata::{CartanType, Series};
use crate::Sign;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A unipotent class with its numerical invariants.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnipotentClass {
    pub group_type: CartanType,
    pub jordan_type: Partition,
    pub very_even_tag: Option<Sign>,
    /// Dimension of the fiber of Borel subgroups through a class element.
    pub dim_bu: u32,
    /// Dimension of the conjugacy class.
    pub class_dim: u32,
    /// Order of the relevant component group (the canonical quotient for
    /// the adjoint group); a power of 2, and 1 in type A.
    pub component_group_order: u64,
}

impl fmt::Display for UnipotentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.jordan_type)?;
        match self.very_even_tag {
            Some(Sign::Plus) => write!(f, "+"),
            Some(Sign::Minus) => write!(f, "-"),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for UnipotentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.group_type, self)
    }
}

/// The Springer datum of a character label.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpringerDatum {
    pub label: CharacterLabel,
    pub class: UnipotentClass,
    pub psi_trivial: bool,
}

/// A fully assembled character record.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterRecord {
    pub label: CharacterLabel,
    pub a: u32,
    pub b: u32,
    pub d: u32,
    pub symbol: Option<Symbol>,
    pub family_id: String,
    pub special: bool,
}

fn is_admissible(t: CartanType, p: &Partition) -> bool {
    match t.series {
        Series::A => true,
        Series::B | Series::D => p.is_orthogonal(),
        Series::C => p.is_symplectic(),
    }
}

fn jordan_size(t: CartanType) -> u32 {
    match t.series {
        Series::A => t.rank as u32 + 1,
        Series::B => 2 * t.rank as u32 + 1,
        Series::C | Series::D => 2 * t.rank as u32,
    }
}

fn centralizer_dim(t: CartanType, p: &Partition) -> u32 {
    let sq: u32 = p.transpose().parts().iter().map(|&c| c * c).sum();
    let odd = p.odd_part_count() as u32;
    match t.series {
        Series::A => sq,
        Series::B | Series::D => (sq - odd) / 2,
        Series::C => (sq + odd) / 2,
    }
}

fn group_dim(t: CartanType) -> u32 {
    let n = t.rank as u32;
    match t.series {
        Series::A => (n + 1) * (n + 1),
        Series::B | Series::C => n * (2 * n + 1),
        Series::D => n * (2 * n - 1),
    }
}

fn rank_for_dim(t: CartanType) -> u32 {
    match t.series {
        Series::A => t.rank as u32 + 1,
        _ => t.rank as u32,
    }
}

fn component_order(t: CartanType, p: &Partition) -> u64 {
    match t.series {
        Series::A => 1,
        Series::B => {
            let r = p.distinct_parts_with_parity(1).len() as u32;
            1u64 << r.saturating_sub(1)
        }
        Series::C => {
            let evens = p.distinct_parts_with_parity(0);
            let k = evens.len() as u32;
            let central_nontrivial = evens.iter().any(|&q| p.multiplicity(q) % 2 == 1);
            1u64 << (k - u32::from(central_nontrivial))
        }
        Series::D => {
            let odds = p.distinct_parts_with_parity(1);
            let r = odds.len() as u32;
            let central_nontrivial = odds.iter().any(|&q| p.multiplicity(q) % 2 == 1);
            if r == 0 {
                1
            } else {
                // the total count of odd parts is even, so a single distinct
                // odd part always has even multiplicity
                debug_assert!(r >= 2 || !central_nontrivial);
                1u64 << (r - 1 - u32::from(central_nontrivial))
            }
        }
    }
}

fn build_class(t: CartanType, p: Partition, tag: Option<Sign>) -> UnipotentClass {
    let c = centralizer_dim(t, &p);
    let dim_bu = (c - rank_for_dim(t)) / 2;
    let class_dim = group_dim(t) - c;
    let component_group_order = component_order(t, &p);
    UnipotentClass {
        group_type: t,
        jordan_type: p,
        very_even_tag: tag,
        dim_bu,
        class_dim,
        component_group_order,
    }
}

/// All unipotent classes of the group of type `t`, deterministically ordered
/// by decreasing dominance (regular first).
pub fn unipotent_classes(t: CartanType) -> Vec<UnipotentClass> {
    let mut out = Vec::new();
    for p in partitions_of(jordan_size(t)) {
        if !is_admissible(t, &p) {
            continue;
        }
        if t.series == Series::D && p.is_very_even() {
            out.push(build_class(t, p.clone(), Some(Sign::Plus)));
            out.push(build_class(t, p, Some(Sign::Minus)));
        } else {
            out.push(build_class(t, p, None));
        }
    }
    out
}

/// Order of the component group attached to a class (see
/// [`UnipotentClass::component_group_order`]).
pub fn component_group_order(c: &UnipotentClass) -> u64 {
    c.component_group_order
}

/// Closure (dominance) order on unipotent classes of a common group. The
/// two classes of a very even pair are incomparable.
pub fn closure_leq(c1: &UnipotentClass, c2: &UnipotentClass) -> Result<bool> {
    if c1.group_type != c2.group_type {
        return Err(Error::Mismatch(format!(
            "closure order needs a common group: {} vs {}",
            c1.group_type, c2.group_type
        )));
    }
    if c1.jordan_type == c2.jordan_type {
        return Ok(c1.very_even_tag == c2.very_even_tag);
    }
    Ok(c1.jordan_type.dominated_by(&c2.jordan_type))
}

fn doubled_merge(row_odd: &[u32], row_even: &[u32]) -> Vec<u32> {
    let mut m: Vec<u32> = row_odd
        .iter()
        .map(|&x| 2 * x + 1)
        .chain(row_even.iter().map(|&x| 2 * x))
        .collect();
    m.sort_unstable();
    m
}

fn merge_to_partition(merged: &[u32]) -> Partition {
    let parts: Vec<u32> = merged
        .iter()
        .enumerate()
        .map(|(i, &v)| v - i as u32)
        .collect();
    Partition::new(parts)
}

/// The Jordan type produced by a label before any collapse, per series.
/// For D both row orders are tried; the admissible one wins.
fn raw_springer_partition(l: &CharacterLabel) -> Partition {
    let t = l.group_type;
    match &l.payload {
        LabelPayload::Partition(lam) => lam.clone(),
        LabelPayload::Bipartition(alpha, beta) => match t.series {
            Series::B => {
                let m = beta.len().max(alpha.len().saturating_sub(1));
                let top = alpha.beta_sequence(m + 1);
                let bottom = beta.beta_sequence(m);
                merge_to_partition(&doubled_merge(&top, &bottom))
            }
            Series::C => {
                let m = alpha.len().max(beta.len()).max(1);
                let a = alpha.beta_sequence(m);
                let b = beta.beta_sequence(m);
                merge_to_partition(&doubled_merge(&a, &b))
            }
            _ => unreachable!("bipartition labels are B/C"),
        },
        LabelPayload::DPair { lo, hi, .. } => {
            let m = lo.len().max(hi.len()).max(1);
            let a = lo.beta_sequence(m);
            let b = hi.beta_sequence(m);
            let p1 = merge_to_partition(&doubled_merge(&a, &b));
            let p2 = merge_to_partition(&doubled_merge(&b, &a));
            match (is_admissible(t, &p1), is_admissible(t, &p2)) {
                (true, true) => {
                    assert_eq!(p1, p2, "ambiguous class for {l:?}");
                    p1
                }
                (true, false) => p1,
                (false, true) => p2,
                (false, false) => {
                    let c1 = collapse_to(&p1, |q| is_admissible(t, q));
                    let c2 = collapse_to(&p2, |q| is_admissible(t, q));
                    assert_eq!(c1, c2, "collapse disagreement for {l:?}");
                    c1
                }
            }
        }
    }
}

/// The class component of the Springer datum of `l`, with the tag
/// convention that degenerate D labels keep their sign on very even
/// classes.
pub fn springer_class(l: &CharacterLabel) -> SpringerDatum {
    let t = l.group_type;
    let raw = raw_springer_partition(l);
    let jordan = collapse_to(&raw, |q| is_admissible(t, q));
    let tag = if t.series == Series::D && jordan.is_very_even() {
        match &l.payload {
            LabelPayload::DPair { tag: Some(s), .. } => Some(*s),
            _ => panic!("non-degenerate {l:?} landed on a very even class"),
        }
    } else {
        None
    };
    let class = build_class(t, jordan, tag);
    let psi_trivial = springer_char_of_class(&class) == *l;
    SpringerDatum {
        label: l.clone(),
        class,
        psi_trivial,
    }
}

/// d-invariant of a label: dim B_u of its Springer class.
pub fn d_invariant(l: &CharacterLabel) -> u32 {
    springer_class(l).class.dim_bu
}

/// The unique label pairing with (class, trivial local system): the inverse
/// staircase/parity extraction.
pub fn springer_char_of_class(c: &UnipotentClass) -> CharacterLabel {
    let t = c.group_type;
    let p = &c.jordan_type;
    match t.series {
        Series::A => CharacterLabel::a_label(t, p.clone()),
        Series::B => {
            // odd padding; odd values feed the top row
            let mut len = p.len().max(1);
            if len % 2 == 0 {
                len += 1;
            }
            let seq = p.beta_sequence(len);
            let odds: Vec<u32> = seq.iter().filter(|&&v| v % 2 == 1).map(|&v| v / 2).collect();
            let evens: Vec<u32> = seq.iter().filter(|&&v| v % 2 == 0).map(|&v| v / 2).collect();
            assert_eq!(odds.len(), evens.len() + 1, "parity split for {c:?}");
            let alpha = Partition::from_beta_sequence(&odds);
            let beta = Partition::from_beta_sequence(&evens);
            CharacterLabel::bc_label(t, alpha, beta)
        }
        Series::C => {
            let mut len = p.len().max(2);
            if len % 2 == 1 {
                len += 1;
            }
            let seq = p.beta_sequence(len);
            let odds: Vec<u32> = seq.iter().filter(|&&v| v % 2 == 1).map(|&v| v / 2).collect();
            let evens: Vec<u32> = seq.iter().filter(|&&v| v % 2 == 0).map(|&v| v / 2).collect();
            assert_eq!(odds.len(), evens.len(), "parity split for {c:?}");
            let alpha = Partition::from_beta_sequence(&odds);
            let beta = Partition::from_beta_sequence(&evens);
            CharacterLabel::bc_label(t, alpha, beta)
        }
        Series::D => {
            let mut len = p.len().max(2);
            if len % 2 == 1 {
                len += 1;
            }
            let seq = p.beta_sequence(len);
            let odds: Vec<u32> = seq.iter().filter(|&&v| v % 2 == 1).map(|&v| v / 2).collect();
            let evens: Vec<u32> = seq.iter().filter(|&&v| v % 2 == 0).map(|&v| v / 2).collect();
            assert_eq!(odds.len(), evens.len(), "parity split for {c:?}");
            let alpha = Partition::from_beta_sequence(&odds);
            let beta = Partition::from_beta_sequence(&evens);
            let tag = if alpha == beta {
                Some(c.very_even_tag.unwrap_or(Sign::Plus))
            } else {
                None
            };
            CharacterLabel::d_label(t, alpha, beta, tag)
        }
    }
}

/// The full record of a label: a, b, d, symbol, family, specialness.
pub fn character_record(l: &CharacterLabel) -> CharacterRecord {
    let a = a_invariant(l);
    let b = b_invariant(l);
    let d = d_invariant(l);
    let symbol = symbol_of(l).ok();
    let fams = crate::charcomb::families(l.group_type);
    let family_id = fams
        .iter()
        .find(|f| f.members.contains(l))
        .map(|f| f.id())
        .unwrap_or_default();
    CharacterRecord {
        label: l.clone(),
        a,
        b,
        d,
        symbol,
        family_id,
        special: a == b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charcomb::char_labels;

    fn ct(s: Series, r: usize) -> CartanType {
        CartanType::new(s, r).unwrap()
    }

    fn bc(t: CartanType, a: Vec<u32>, b: Vec<u32>) -> CharacterLabel {
        CharacterLabel::bc_label(t, Partition::new(a), Partition::new(b))
    }

    fn dl(t: CartanType, a: Vec<u32>, b: Vec<u32>, tag: Option<Sign>) -> CharacterLabel {
        CharacterLabel::d_label(t, Partition::new(a), Partition::new(b), tag)
    }

    #[test]
    fn classes_b2() {
        let cs = unipotent_classes(ct(Series::B, 2));
        let names: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
        assert_eq!(names, vec!["(5)", "(3,1,1)", "(2,2,1)", "(1,1,1,1,1)"]);
        let dims: Vec<u32> = cs.iter().map(|c| c.dim_bu).collect();
        assert_eq!(dims, vec![0, 1, 2, 4]);
        let orders: Vec<u64> = cs.iter().map(|c| c.component_group_order).collect();
        assert_eq!(orders, vec![1, 2, 1, 1]);
    }

    #[test]
    fn classes_a1() {
        let cs = unipotent_classes(ct(Series::A, 1));
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].jordan_type, Partition::new(vec![2]));
        assert_eq!(cs[0].dim_bu, 0);
        assert_eq!(cs[1].dim_bu, 1);
        assert!(cs.iter().all(|c| c.component_group_order == 1));
    }

    #[test]
    fn component_orders_c2() {
        let cs = unipotent_classes(ct(Series::C, 2));
        let table: Vec<(String, u64)> = cs
            .iter()
            .map(|c| (c.to_string(), c.component_group_order))
            .collect();
        assert_eq!(
            table,
            vec![
                ("(4)".to_string(), 1),
                ("(2,2)".to_string(), 2),
                ("(2,1,1)".to_string(), 1),
                ("(1,1,1,1)".to_string(), 1),
            ]
        );
    }

    #[test]
    fn component_orders_d() {
        // rank 2/3 orthogonal quotients are all trivial (products of
        // projective linear groups); rank 4 has one order-2 class per
        // non-regular slot with matching parities
        for t in [ct(Series::D, 2), ct(Series::D, 3)] {
            for c in unipotent_classes(t) {
                assert_eq!(c.component_group_order, 1, "{c:?}");
            }
        }
        let d4: Vec<(String, u64)> = unipotent_classes(ct(Series::D, 4))
            .iter()
            .map(|c| (c.to_string(), c.component_group_order))
            .collect();
        for (name, expect) in [
            ("(7,1)", 1),
            ("(5,3)", 1),
            ("(4,4)+", 1),
            ("(4,4)-", 1),
            ("(3,3,1,1)", 2),
            ("(1,1,1,1,1,1,1,1)", 1),
        ] {
            let got = d4.iter().find(|(n, _)| n == name).map(|(_, o)| *o);
            assert_eq!(got, Some(expect), "{name}");
        }
    }

    #[test]
    fn endpoint_classes() {
        for t in [
            ct(Series::B, 4),
            ct(Series::C, 4),
            ct(Series::D, 4),
            ct(Series::A, 5),
        ] {
            let cs = unipotent_classes(t);
            let regular = cs.iter().find(|c| c.dim_bu == 0).unwrap();
            let identity = cs
                .iter()
                .find(|c| c.dim_bu as usize == t.num_positive_roots())
                .unwrap();
            assert_eq!(springer_char_of_class(regular), CharacterLabel::trivial(t));
            assert_eq!(springer_char_of_class(identity), CharacterLabel::sign(t));
        }
    }

    #[test]
    fn b2_sweep_assignment() {
        // so(5): the d = 2 class is anchored by [;2]; [11;] carries the
        // non-trivial local system on (3,1,1)
        let t = ct(Series::B, 2);
        let d = |a: Vec<u32>, b: Vec<u32>| springer_class(&bc(t, a, b));
        let s = d(vec![1], vec![1]);
        assert_eq!(s.class.jordan_type, Partition::new(vec![3, 1, 1]));
        assert!(s.psi_trivial);
        let s = d(vec![], vec![2]);
        assert_eq!(s.class.jordan_type, Partition::new(vec![2, 2, 1]));
        assert!(s.psi_trivial);
        assert_eq!(s.class.dim_bu, 2);
        let s = d(vec![1, 1], vec![]);
        assert_eq!(s.class.jordan_type, Partition::new(vec![3, 1, 1]));
        assert!(!s.psi_trivial);
        assert_eq!(s.class.dim_bu, 1);
    }

    #[test]
    fn c2_sweep_assignment() {
        // sp(4): mirror assignment
        let t = ct(Series::C, 2);
        let s = springer_class(&bc(t, vec![1], vec![1]));
        assert_eq!(s.class.jordan_type, Partition::new(vec![2, 2]));
        assert!(s.psi_trivial);
        let s = springer_class(&bc(t, vec![1, 1], vec![]));
        assert_eq!(s.class.jordan_type, Partition::new(vec![2, 1, 1]));
        assert!(s.psi_trivial);
        assert_eq!(s.class.dim_bu, 2);
        let s = springer_class(&bc(t, vec![], vec![2]));
        assert_eq!(s.class.jordan_type, Partition::new(vec![2, 2]));
        assert!(!s.psi_trivial);
        assert_eq!(s.class.dim_bu, 1);
    }

    #[test]
    fn b3_anchor_spot_checks() {
        let t = ct(Series::B, 3);
        let anchor = |parts: Vec<u32>| {
            springer_char_of_class(&build_class(t, Partition::new(parts), None))
        };
        assert_eq!(anchor(vec![3, 3, 1]), bc(t, vec![1], vec![2]));
        assert_eq!(anchor(vec![3, 2, 2]), bc(t, vec![1, 1], vec![1]));
        assert_eq!(anchor(vec![5, 1, 1]), bc(t, vec![2], vec![1]));
    }

    #[test]
    fn c3_anchor_spot_checks() {
        let t = ct(Series::C, 3);
        let anchor = |parts: Vec<u32>| {
            springer_char_of_class(&build_class(t, Partition::new(parts), None))
        };
        assert_eq!(anchor(vec![2, 2, 2]), bc(t, vec![1, 1], vec![1]));
        assert_eq!(anchor(vec![4, 2]), bc(t, vec![2], vec![1]));
        assert_eq!(anchor(vec![3, 3]), bc(t, vec![1], vec![2]));
        assert_eq!(anchor(vec![2, 1, 1, 1, 1]), bc(t, vec![1, 1, 1], vec![]));
    }

    #[test]
    fn d4_degenerate_tags() {
        let t = ct(Series::D, 4);
        let plus = dl(t, vec![2], vec![2], Some(Sign::Plus));
        let s = springer_class(&plus);
        assert_eq!(s.class.jordan_type, Partition::new(vec![4, 4]));
        assert_eq!(s.class.very_even_tag, Some(Sign::Plus));
        assert!(s.psi_trivial);
        let mixed = dl(t, vec![2], vec![1, 1], None);
        let s = springer_class(&mixed);
        assert_eq!(s.class.jordan_type, Partition::new(vec![3, 3, 1, 1]));
        assert!(!s.psi_trivial);
        assert_eq!(s.class.dim_bu, 3);
    }

    #[test]
    fn correspondence_is_injective_and_counts_fit() {
        for t in [
            ct(Series::B, 3),
            ct(Series::B, 4),
            ct(Series::C, 3),
            ct(Series::C, 4),
            ct(Series::D, 3),
            ct(Series::D, 4),
            ct(Series::A, 4),
        ] {
            let labels = char_labels(t);
            let classes = unipotent_classes(t);
            // anchors form a bijection classes <-> psi-trivial labels
            for c in &classes {
                let anchor = springer_char_of_class(c);
                let s = springer_class(&anchor);
                assert_eq!(s.class, *c, "{t} anchor roundtrip for {c}");
                assert!(s.psi_trivial);
            }
            // counting: labels on a class fit inside Irr of its component
            // group, and psi-trivial slots are hit exactly once
            for c in &classes {
                let on_c: Vec<_> = labels
                    .iter()
                    .filter(|l| springer_class(l).class == *c)
                    .collect();
                assert!(
                    on_c.len() as u64 <= c.component_group_order,
                    "{t}: {} labels on {c} with |A| = {}",
                    on_c.len(),
                    c.component_group_order
                );
                let trivial_slots = on_c
                    .iter()
                    .filter(|l| springer_class(l).psi_trivial)
                    .count();
                assert_eq!(trivial_slots, 1, "{t} {c}");
            }
            let total: usize = classes
                .iter()
                .map(|c| labels.iter().filter(|l| springer_class(l).class == *c).count())
                .sum();
            assert_eq!(total, labels.len(), "{t}: correspondence is total");
        }
    }

    #[test]
    fn lemma_abd_chain_small() {
        for t in [
            ct(Series::B, 4),
            ct(Series::C, 4),
            ct(Series::D, 4),
            ct(Series::A, 5),
        ] {
            for l in char_labels(t) {
                let a = a_invariant(&l);
                let b = b_invariant(&l);
                let d = d_invariant(&l);
                assert!(a <= d && d <= b, "{l:?}: a={a} d={d} b={b}");
            }
        }
    }

    #[test]
    fn specials_map_to_trivial_slots() {
        for t in [ct(Series::B, 4), ct(Series::C, 4), ct(Series::D, 4)] {
            for l in char_labels(t) {
                if a_invariant(&l) == b_invariant(&l) {
                    assert!(springer_class(&l).psi_trivial, "{l:?}");
                }
            }
        }
    }

    #[test]
    fn closure_order_basics() {
        let t = ct(Series::B, 2);
        let cs = unipotent_classes(t);
        for c in &cs {
            assert!(closure_leq(c, c).unwrap());
        }
        let bot = cs.last().unwrap();
        let top = &cs[0];
        for c in &cs {
            assert!(closure_leq(bot, c).unwrap());
            assert!(closure_leq(c, top).unwrap());
        }
        // dim_bu strictly decreases along strict closure ascents
        for c1 in &cs {
            for c2 in &cs {
                if c1 != c2 && closure_leq(c1, c2).unwrap() {
                    assert!(c1.dim_bu > c2.dim_bu);
                }
            }
        }
        // very even pairs are incomparable
        let d4 = unipotent_classes(ct(Series::D, 4));
        let plus = d4.iter().find(|c| c.to_string() == "(4,4)+").unwrap();
        let minus = d4.iter().find(|c| c.to_string() == "(4,4)-").unwrap();
        assert!(!closure_leq(plus, minus).unwrap());
        assert!(!closure_leq(minus, plus).unwrap());
    }
}
