//! Irreducible-character labels for the classical Weyl groups, their
//! symbols, a- and b-invariants, and the partition of Irr(W) into families.
//!
//! Labels: partitions of n+1 for A_n, ordered bipartitions (α;β) of n for
//! B_n/C_n, unordered bipartitions for D_n with the equal-row pairs split
//! into two sign-tagged characters.

use crate::error::{Error, Result};
use crate::partitions::{bipartitions_of, partitions_of, Partition};
use crate::rootdata::{CartanType, Series};
use crate::Sign;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LabelPayload {
    /// Type A: a partition of n+1.
    Partition(Partition),
    /// Types B and C: an ordered pair (α; β) with |α| + |β| = n.
    Bipartition(Partition, Partition),
    /// Type D: an unordered pair, stored sorted; `tag` is present exactly
    /// when the two rows are equal.
    DPair {
        lo: Partition,
        hi: Partition,
        tag: Option<Sign>,
    },
}

/// A labeled irreducible character of a classical Weyl group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharacterLabel {
    pub group_type: CartanType,
    pub payload: LabelPayload,
}

impl CharacterLabel {
    pub fn a_label(t: CartanType, lambda: Partition) -> Self {
        debug_assert_eq!(lambda.size() as usize, t.rank + 1);
        CharacterLabel {
            group_type: t,
            payload: LabelPayload::Partition(lambda),
        }
    }

    pub fn bc_label(t: CartanType, alpha: Partition, beta: Partition) -> Self {
        debug_assert!(t.series == Series::B || t.series == Series::C);
        CharacterLabel {
            group_type: t,
            payload: LabelPayload::Bipartition(alpha, beta),
        }
    }

    pub fn d_label(t: CartanType, a: Partition, b: Partition, tag: Option<Sign>) -> Self {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        debug_assert_eq!(lo == hi, tag.is_some());
        CharacterLabel {
            group_type: t,
            payload: LabelPayload::DPair { lo, hi, tag },
        }
    }

    /// The trivial character of W(t).
    pub fn trivial(t: CartanType) -> Self {
        match t.series {
            Series::A => Self::a_label(t, Partition::new(vec![t.rank as u32 + 1])),
            Series::B | Series::C => {
                Self::bc_label(t, Partition::new(vec![t.rank as u32]), Partition::empty())
            }
            Series::D => Self::d_label(
                t,
                Partition::empty(),
                Partition::new(vec![t.rank as u32]),
                None,
            ),
        }
    }

    /// The sign character of W(t).
    pub fn sign(t: CartanType) -> Self {
        let ones = |k: usize| Partition::new(vec![1; k]);
        match t.series {
            Series::A => Self::a_label(t, ones(t.rank + 1)),
            Series::B | Series::C => Self::bc_label(t, Partition::empty(), ones(t.rank)),
            Series::D => Self::d_label(t, Partition::empty(), ones(t.rank), None),
        }
    }

    /// Degree of the character (number of standard objects of the shape).
    pub fn degree(&self) -> u64 {
        fn binom(n: u64, k: u64) -> u64 {
            let mut r = 1u64;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        match &self.payload {
            LabelPayload::Partition(l) => l.dimension(),
            LabelPayload::Bipartition(a, b) => {
                binom((a.size() + b.size()) as u64, a.size() as u64)
                    * a.dimension()
                    * b.dimension()
            }
            LabelPayload::DPair { lo, hi, tag } => {
                let full = binom((lo.size() + hi.size()) as u64, lo.size() as u64)
                    * lo.dimension()
                    * hi.dimension();
                if tag.is_some() {
                    full / 2
                } else {
                    full
                }
            }
        }
    }
}

impl fmt::Display for CharacterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn row(p: &Partition) -> String {
            p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(
                if p.parts().iter().any(|&x| x > 9) {
                    ","
                } else {
                    ""
                },
            )
        }
        match &self.payload {
            LabelPayload::Partition(l) => write!(f, "({l})"),
            LabelPayload::Bipartition(a, b) => write!(f, "[{};{}]", row(a), row(b)),
            LabelPayload::DPair { lo, hi, tag } => {
                write!(f, "[{};{}]", row(lo), row(hi))?;
                match tag {
                    Some(Sign::Plus) => write!(f, "+"),
                    Some(Sign::Minus) => write!(f, "-"),
                    None => Ok(()),
                }
            }
        }
    }
}

impl fmt::Debug for CharacterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.group_type, self)
    }
}

/// All irreducible-character labels of W(t), deterministically ordered.
pub fn char_labels(t: CartanType) -> Vec<CharacterLabel> {
    let n = t.rank as u32;
    match t.series {
        Series::A => partitions_of(n + 1)
            .into_iter()
            .map(|l| CharacterLabel::a_label(t, l))
            .collect(),
        Series::B | Series::C => bipartitions_of(n)
            .into_iter()
            .map(|(a, b)| CharacterLabel::bc_label(t, a, b))
            .collect(),
        Series::D => {
            let mut out = Vec::new();
            for (a, b) in bipartitions_of(n) {
                if a < b {
                    continue; // unordered: keep one representative
                }
                if a == b {
                    out.push(CharacterLabel::d_label(t, a.clone(), b.clone(), Some(Sign::Plus)));
                    out.push(CharacterLabel::d_label(t, a, b, Some(Sign::Minus)));
                } else {
                    out.push(CharacterLabel::d_label(t, a, b, None));
                }
            }
            out.sort();
            out
        }
    }
}

// ---------------------------------------------------------------------------
// Symbols
// ---------------------------------------------------------------------------

/// A two-row symbol: strictly increasing rows of non-negative integers.
/// Shift equivalence prepends 0 to both rows and increments the rest; the
/// normal form carries no common removable 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl Symbol {
    pub fn defect(&self) -> isize {
        self.top.len() as isize - self.bottom.len() as isize
    }

    /// One shift step up: both rows gain a 0 and the old entries move by 1.
    pub fn shift_up(&self) -> Symbol {
        let mut top = vec![0];
        top.extend(self.top.iter().map(|x| x + 1));
        let mut bottom = vec![0];
        bottom.extend(self.bottom.iter().map(|x| x + 1));
        Symbol { top, bottom }
    }

    /// Fully reduced representative.
    pub fn normal_form(&self) -> Symbol {
        let mut s = self.clone();
        while s.top.first() == Some(&0) && s.bottom.first() == Some(&0) {
            s = Symbol {
                top: s.top[1..].iter().map(|x| x - 1).collect(),
                bottom: s.bottom[1..].iter().map(|x| x - 1).collect(),
            };
        }
        s
    }

    /// Representative with the bottom row stretched to the given length.
    pub fn at_bottom_length(&self, m: usize) -> Symbol {
        let mut s = self.normal_form();
        while s.bottom.len() < m {
            s = s.shift_up();
        }
        assert_eq!(s.bottom.len(), m, "cannot reach bottom length {m}");
        s
    }

    /// Multiset of all entries, sorted.
    pub fn entries(&self) -> Vec<u32> {
        let mut e: Vec<u32> = self.top.iter().chain(self.bottom.iter()).copied().collect();
        e.sort_unstable();
        e
    }

    /// Entries occurring exactly once.
    pub fn singles(&self) -> Vec<u32> {
        let e = self.entries();
        e.iter()
            .filter(|&&x| e.iter().filter(|&&y| y == x).count() == 1)
            .copied()
            .collect()
    }

    /// The rows as partitions: staircase removed.
    pub fn row_partitions(&self) -> (Partition, Partition) {
        (
            Partition::from_beta_sequence(&self.top),
            Partition::from_beta_sequence(&self.bottom),
        )
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_row = |r: &[u32]| {
            r.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({})({})", fmt_row(&self.top), fmt_row(&self.bottom))
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The symbol of a B/C/D label: the staircase construction. Defect 1 for
/// B/C (top row one longer), defect 0 for D (rows equal, stored sorted).
pub fn symbol_of(l: &CharacterLabel) -> Result<Symbol> {
    match &l.payload {
        LabelPayload::Partition(_) => Err(Error::Unsupported(
            "type A labels have no symbol".to_string(),
        )),
        LabelPayload::Bipartition(alpha, beta) => {
            let m = beta.len().max(alpha.len().saturating_sub(1));
            let top = alpha.beta_sequence(m + 1);
            let bottom = beta.beta_sequence(m);
            Ok(Symbol { top, bottom }.normal_form())
        }
        LabelPayload::DPair { lo, hi, .. } => {
            let m = lo.len().max(hi.len()).max(1);
            let a = lo.beta_sequence(m);
            let b = hi.beta_sequence(m);
            let (bottom, top) = if a <= b { (a, b) } else { (b, a) };
            Ok(Symbol { top, bottom }.normal_form())
        }
    }
}

fn pair_min_sum(entries: &[u32]) -> u64 {
    let mut s = 0u64;
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            s += entries[i].min(entries[j]) as u64;
        }
    }
    s
}

/// b-invariant: the lowest degree of the symmetric algebra of the
/// reflection representation containing the character.
pub fn b_invariant(l: &CharacterLabel) -> u32 {
    match &l.payload {
        LabelPayload::Partition(lam) => lam.n_invariant(),
        LabelPayload::Bipartition(a, b) => 2 * a.n_invariant() + 2 * b.n_invariant() + b.size(),
        LabelPayload::DPair { lo, hi, .. } => {
            2 * lo.n_invariant() + 2 * hi.n_invariant() + lo.size().min(hi.size())
        }
    }
}

/// a-invariant, computed from the symbol by the pairwise-minimum statistic
/// relative to the base symbol of the same shape. In type A every character
/// is special, so a = b.
pub fn a_invariant(l: &CharacterLabel) -> u32 {
    match &l.payload {
        LabelPayload::Partition(_) => b_invariant(l),
        _ => {
            let s = symbol_of(l).expect("symbol exists for B/C/D");
            let val = pair_min_sum(&s.entries());
            let base = Symbol {
                top: (0..s.top.len() as u32).collect(),
                bottom: (0..s.bottom.len() as u32).collect(),
            };
            let base_val = pair_min_sum(&base.entries());
            (val - base_val) as u32
        }
    }
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// A family of Irr(W): a block of the symbol-similarity partition, carrying
/// its unique special member and the two-group exponent e (|G_F| = 2^e).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Family {
    pub group_type: CartanType,
    pub members: Vec<CharacterLabel>,
    pub special: CharacterLabel,
    pub a_value: u32,
    /// |G_F| = 2^exponent for classical types.
    pub exponent: u32,
    /// |M(G_F)| = 4^exponent.
    pub m_size: u64,
}

impl Family {
    pub fn id(&self) -> String {
        format!("{}", self.special)
    }
}

/// 2^e, the order of the finite group attached to the family.
pub fn family_group_order(f: &Family) -> u64 {
    1u64 << f.exponent
}

/// The partition of Irr(W(t)) into families.
///
/// Type A: all singletons. Types B/C/D: members share the entry multiset of
/// their symbols in a common shift normalization; the exponent comes from
/// the number of singles (2e+1 singles for defect 1, 2(e+1) for defect 0,
/// with the degenerate all-double D symbols giving e = 0).
pub fn families(t: CartanType) -> Vec<Family> {
    let labels = char_labels(t);
    match t.series {
        Series::A => labels
            .into_iter()
            .map(|l| {
                let a = a_invariant(&l);
                Family {
                    group_type: t,
                    members: vec![l.clone()],
                    special: l,
                    a_value: a,
                    exponent: 0,
                    m_size: 1,
                }
            })
            .collect(),
        Series::B | Series::C | Series::D => {
            let symbols: Vec<Symbol> = labels.iter().map(|l| symbol_of(l).unwrap()).collect();
            let m = symbols
                .iter()
                .map(|s| s.normal_form().bottom.len())
                .max()
                .unwrap_or(0);
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for (i, s) in symbols.iter().enumerate() {
                groups
                    .entry(s.at_bottom_length(m).entries())
                    .or_default()
                    .push(i);
            }
            let mut out = Vec::new();
            for (entries, idxs) in groups {
                let singles = {
                    let e = &entries;
                    e.iter()
                        .filter(|&&x| e.iter().filter(|&&y| y == x).count() == 1)
                        .count()
                };
                // degenerate D pairs share one symbol but form two
                // singleton families
                let degenerate = t.series == Series::D && singles == 0;
                let member_sets: Vec<Vec<usize>> = if degenerate {
                    idxs.iter().map(|&i| vec![i]).collect()
                } else {
                    vec![idxs]
                };
                for set in member_sets {
                    let members: Vec<CharacterLabel> =
                        set.iter().map(|&i| labels[i].clone()).collect();
                    let specials: Vec<&CharacterLabel> = members
                        .iter()
                        .filter(|l| a_invariant(l) == b_invariant(l))
                        .collect();
                    assert_eq!(
                        specials.len(),
                        1,
                        "family {entries:?} of {t} has {} specials",
                        specials.len()
                    );
                    let special = specials[0].clone();
                    let a_value = a_invariant(&special);
                    for l in &members {
                        debug_assert_eq!(a_invariant(l), a_value, "a not constant on family");
                    }
                    let exponent = match t.series {
                        Series::D => (singles as u32 / 2).saturating_sub(1),
                        _ => singles as u32 / 2,
                    };
                    out.push(Family {
                        group_type: t,
                        members,
                        special,
                        a_value,
                        exponent,
                        m_size: 1u64 << (2 * exponent),
                    });
                }
            }
            out.sort_by(|x, y| (x.a_value, x.id()).cmp(&(y.a_value, y.id())));
            out
        }
    }
}

/// Number of symbols similar to the family's symbol, counted over all
/// defects of the right parity up to row swap and shift. For defect-1
/// families this equals 4^e; for defect-0 (type D) families with 2d > 0
/// singles it equals 4^(d-1).
pub fn similarity_class_size(f: &Family) -> u64 {
    let s = symbol_of(&f.special).expect("B/C/D family");
    let singles = s.singles().len() as u32;
    match f.group_type.series {
        Series::D => {
            // distributions of the singles over two rows with defect
            // divisible by 4, modulo row swap
            if singles == 0 {
                return 1;
            }
            let mut count = 0u64;
            for mask in 0u64..(1 << singles) {
                let up = mask.count_ones() as i64;
                let defect = 2 * up - singles as i64;
                if defect.rem_euclid(4) == 0 {
                    count += 1;
                }
            }
            count / 2
        }
        _ => {
            // all odd defects arise; every distribution of singles is valid
            (1u64 << singles) / 2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(s: Series, r: usize) -> CartanType {
        CartanType::new(s, r).unwrap()
    }

    fn bc(t: CartanType, a: Vec<u32>, b: Vec<u32>) -> CharacterLabel {
        CharacterLabel::bc_label(t, Partition::new(a), Partition::new(b))
    }

    #[test]
    fn label_counts() {
        assert_eq!(char_labels(ct(Series::A, 2)).len(), 3);
        assert_eq!(char_labels(ct(Series::B, 2)).len(), 5);
        assert_eq!(char_labels(ct(Series::D, 2)).len(), 4);
        assert_eq!(char_labels(ct(Series::D, 3)).len(), 5);
        assert_eq!(char_labels(ct(Series::D, 4)).len(), 13);
    }

    #[test]
    fn b_values() {
        let t = ct(Series::B, 2);
        assert_eq!(b_invariant(&CharacterLabel::trivial(t)), 0);
        assert_eq!(b_invariant(&CharacterLabel::sign(t)), 4); // n^2
        assert_eq!(b_invariant(&bc(t, vec![1], vec![1])), 1);
        assert_eq!(b_invariant(&bc(t, vec![1, 1], vec![])), 2);
        assert_eq!(b_invariant(&bc(t, vec![], vec![2])), 2);
        let b6 = ct(Series::B, 6);
        assert_eq!(b_invariant(&CharacterLabel::sign(b6)), 36);
        // type D sign has b = n(n-1)
        let d4 = ct(Series::D, 4);
        assert_eq!(b_invariant(&CharacterLabel::sign(d4)), 12);
        assert_eq!(b_invariant(&CharacterLabel::trivial(d4)), 0);
    }

    #[test]
    fn symbols_b2() {
        let t = ct(Series::B, 2);
        let s = symbol_of(&bc(t, vec![1], vec![1])).unwrap();
        assert_eq!(s.top, vec![0, 2]);
        assert_eq!(s.bottom, vec![1]);
        let s = symbol_of(&bc(t, vec![2], vec![])).unwrap();
        // normal form of the minimal construction
        assert_eq!(s.top, vec![2]);
        assert_eq!(s.bottom, Vec::<u32>::new());
        // shift equivalence: one step up gives (0,3)(0)
        let up = s.shift_up();
        assert_eq!(up.top, vec![0, 3]);
        assert_eq!(up.bottom, vec![0]);
        assert_eq!(up.normal_form(), s);
    }

    #[test]
    fn empty_symbol() {
        let t = ct(Series::B, 1);
        let l = bc(t, vec![1], vec![]);
        let s = symbol_of(&l).unwrap();
        assert_eq!(s.defect(), 1);
    }

    #[test]
    fn a_values_b2() {
        let t = ct(Series::B, 2);
        assert_eq!(a_invariant(&CharacterLabel::trivial(t)), 0);
        assert_eq!(a_invariant(&CharacterLabel::sign(t)), 4);
        assert_eq!(a_invariant(&bc(t, vec![1], vec![1])), 1);
        // the two non-special members of the 3-element family share a = 1
        assert_eq!(a_invariant(&bc(t, vec![1, 1], vec![])), 1);
        assert_eq!(a_invariant(&bc(t, vec![], vec![2])), 1);
    }

    #[test]
    fn a_at_most_b_everywhere() {
        for t in [
            ct(Series::A, 4),
            ct(Series::B, 4),
            ct(Series::C, 4),
            ct(Series::D, 4),
            ct(Series::B, 5),
            ct(Series::D, 5),
        ] {
            for l in char_labels(t) {
                assert!(a_invariant(&l) <= b_invariant(&l), "{l:?}");
            }
        }
    }

    #[test]
    fn families_b2() {
        let fams = families(ct(Series::B, 2));
        assert_eq!(fams.len(), 3);
        let sizes: Vec<usize> = fams.iter().map(|f| f.members.len()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 5);
        let big = fams.iter().find(|f| f.members.len() == 3).unwrap();
        assert_eq!(big.exponent, 1);
        assert_eq!(big.m_size, 4);
        assert_eq!(family_group_order(big), 2);
        let t = ct(Series::B, 2);
        assert_eq!(big.special, bc(t, vec![1], vec![1]));
        // the singleton families
        assert!(fams
            .iter()
            .any(|f| f.members.len() == 1 && f.special == CharacterLabel::trivial(t)));
        assert!(fams
            .iter()
            .any(|f| f.members.len() == 1 && f.special == CharacterLabel::sign(t)));
    }

    #[test]
    fn families_partition_everything() {
        for t in [
            ct(Series::B, 4),
            ct(Series::C, 5),
            ct(Series::D, 4),
            ct(Series::D, 5),
            ct(Series::A, 5),
        ] {
            let fams = families(t);
            let total: usize = fams.iter().map(|f| f.members.len()).sum();
            assert_eq!(total, char_labels(t).len(), "{t}");
            for f in &fams {
                let specials = f
                    .members
                    .iter()
                    .filter(|l| a_invariant(l) == b_invariant(l))
                    .count();
                assert_eq!(specials, 1, "{t} family {}", f.id());
                for m in &f.members {
                    assert_eq!(a_invariant(m), f.a_value);
                }
            }
        }
    }

    #[test]
    fn degenerate_d_pairs_are_singletons() {
        let fams = families(ct(Series::D, 2));
        assert_eq!(fams.len(), 4);
        for f in &fams {
            assert_eq!(f.members.len(), 1);
            assert_eq!(f.exponent, 0);
        }
    }

    #[test]
    fn counting_identity_small() {
        for t in [ct(Series::B, 2), ct(Series::B, 3), ct(Series::C, 4)] {
            for f in families(t) {
                assert_eq!(similarity_class_size(&f), f.m_size, "{t} {}", f.id());
            }
        }
        // D families: 2d singles give 4^(d-1)
        for f in families(ct(Series::D, 4)) {
            let s = symbol_of(&f.special).unwrap();
            let d = s.singles().len() as u32 / 2;
            if d > 0 {
                assert_eq!(similarity_class_size(&f), 1u64 << (2 * (d - 1)));
            }
        }
    }

    #[test]
    fn degrees_sum_of_squares() {
        // sum of squared degrees equals |W|
        for t in [ct(Series::B, 3), ct(Series::D, 4), ct(Series::A, 4)] {
            let total: u64 = char_labels(t).iter().map(|l| l.degree() * l.degree()).sum();
            assert_eq!(total, t.weyl_order(), "{t}");
        }
    }
}
