//! Integer partitions and the partition combinatorics shared by the label,
//! class and induction machinery: dominance order, parity conditions for
//! orthogonal/symplectic Jordan types, and collapse to the nearest
//! admissible partition.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A partition: weakly decreasing positive parts. The empty partition is
/// allowed and represents 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from arbitrary parts: zeros are dropped and the
    /// rest is sorted decreasingly.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// n(λ) = Σ (i−1)·λ_i, the classical partition statistic.
    pub fn n_invariant(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u32 * p)
            .sum()
    }

    /// Conjugate (transposed) partition.
    pub fn transpose(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let max = self.0[0] as usize;
        let mut cols = vec![0u32; max];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Dominance order: `self` ⊴ `other` (other dominates), comparing
    /// partial sums of partitions of equal size.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let mut sa = 0u32;
        let mut sb = 0u32;
        let len = self.0.len().max(other.0.len());
        for i in 0..len {
            sa += self.0.get(i).copied().unwrap_or(0);
            sb += other.0.get(i).copied().unwrap_or(0);
            if sa > sb {
                return false;
            }
        }
        true
    }

    /// Multiplicity of a given part value.
    pub fn multiplicity(&self, part: u32) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// Distinct part values with the given parity (parity 0 = even, 1 = odd),
    /// in decreasing order.
    pub fn distinct_parts_with_parity(&self, parity: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .0
            .iter()
            .copied()
            .filter(|p| p % 2 == parity)
            .collect();
        out.dedup();
        out
    }

    /// Number of parts that are odd.
    pub fn odd_part_count(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Orthogonal parity condition: every even part has even multiplicity.
    pub fn is_orthogonal(&self) -> bool {
        self.0
            .iter()
            .filter(|&&p| p % 2 == 0)
            .fold(std::collections::HashMap::new(), |mut m, &p| {
                *m.entry(p).or_insert(0usize) += 1;
                m
            })
            .values()
            .all(|&c| c % 2 == 0)
    }

    /// Symplectic parity condition: every odd part has even multiplicity.
    pub fn is_symplectic(&self) -> bool {
        self.0
            .iter()
            .filter(|&&p| p % 2 == 1)
            .fold(std::collections::HashMap::new(), |mut m, &p| {
                *m.entry(p).or_insert(0usize) += 1;
                m
            })
            .values()
            .all(|&c| c % 2 == 0)
    }

    /// True when every part is even (the "very even" case in type D).
    pub fn is_very_even(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&p| p % 2 == 0)
    }

    /// Ascending parts padded with zeros to `len`, plus the staircase
    /// (0, 1, ..., len−1). The result is strictly increasing.
    pub fn beta_sequence(&self, len: usize) -> Vec<u32> {
        assert!(len >= self.0.len(), "padding shorter than the partition");
        let mut asc = vec![0u32; len - self.0.len()];
        asc.extend(self.0.iter().rev());
        for (i, v) in asc.iter_mut().enumerate() {
            *v += i as u32;
        }
        asc
    }

    /// Inverse of `beta_sequence`: strictly increasing values minus the
    /// staircase give back a partition.
    pub fn from_beta_sequence(seq: &[u32]) -> Partition {
        let parts: Vec<u32> = seq
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                assert!(v >= i as u32, "not a valid beta-sequence");
                v - i as u32
            })
            .collect();
        Partition::new(parts)
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn dimension(&self) -> u64 {
        let n = self.size() as u64;
        if n == 0 {
            return 1;
        }
        let t = self.transpose();
        let mut numer = 1u128;
        let mut hooks = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p as usize {
                let hook = (p as usize - j) + (t.0[j] as usize - i) - 1;
                hooks.push(hook as u128);
            }
        }
        for k in 1..=n as u128 {
            numer *= k;
        }
        let denom: u128 = hooks.iter().product();
        (numer / denom) as u64
    }

    /// Removes a rim hook of the given length starting from the row whose
    /// arm ends at column `start_col`; used by the Murnaghan–Nakayama
    /// recursion. Returns (new partition, hook height) for every valid hook.
    pub fn rim_hooks(&self, length: u32) -> Vec<(Partition, u32)> {
        // Beta-set formulation: removing a rim hook of length L is moving
        // one beta-number down by L if the target is free.
        let len = self.0.len() + length as usize;
        let beta = self.beta_sequence(len);
        let set: std::collections::HashSet<u32> = beta.iter().copied().collect();
        let mut out = Vec::new();
        for (idx, &b) in beta.iter().enumerate() {
            if b >= length && !set.contains(&(b - length)) {
                let mut nb = beta.clone();
                nb[idx] = b - length;
                nb.sort_unstable();
                // height = number of beta entries strictly between the old
                // and new value = crossings
                let height = beta
                    .iter()
                    .filter(|&&x| x > b - length && x < b)
                    .count() as u32;
                out.push((Partition::from_beta_sequence(&nb), height));
            }
        }
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let top = remaining.min(max);
        for p in (1..=top).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// Ordered pairs (α, β) with |α| + |β| = n, in deterministic order.
pub fn bipartitions_of(n: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in 0..=n {
        for alpha in partitions_of(a) {
            for beta in partitions_of(n - a) {
                out.push((alpha.clone(), beta));
            }
        }
    }
    out
}

/// The admissible-partition collapse: the dominance-largest partition of the
/// same size that satisfies `admissible`, among those dominated by `lambda`.
///
/// Desk-scale sizes make direct search over all partitions exact and cheap;
/// uniqueness of the maximum is asserted rather than assumed.
pub fn collapse_to(lambda: &Partition, admissible: impl Fn(&Partition) -> bool) -> Partition {
    if admissible(lambda) {
        return lambda.clone();
    }
    let candidates: Vec<Partition> = partitions_of(lambda.size())
        .into_iter()
        .filter(|mu| admissible(mu) && mu.dominated_by(lambda))
        .collect();
    assert!(
        !candidates.is_empty(),
        "no admissible partition below {lambda}"
    );
    let mut maxima: Vec<&Partition> = Vec::new();
    for c in &candidates {
        if candidates.iter().all(|d| d == c || !c.dominated_by(d)) {
            maxima.push(c);
        }
    }
    assert_eq!(
        maxima.len(),
        1,
        "collapse of {lambda} is not unique: {maxima:?}"
    );
    maxima[0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_invariant_values() {
        assert_eq!(Partition::new(vec![3]).n_invariant(), 0);
        assert_eq!(Partition::new(vec![2, 1]).n_invariant(), 1);
        assert_eq!(Partition::new(vec![1, 1, 1]).n_invariant(), 3);
    }

    #[test]
    fn transpose_involution() {
        for n in 0..=8 {
            for p in partitions_of(n) {
                assert_eq!(p.transpose().transpose(), p);
            }
        }
    }

    #[test]
    fn dominance_extremes() {
        let top = Partition::new(vec![5]);
        let bot = Partition::new(vec![1, 1, 1, 1, 1]);
        for p in partitions_of(5) {
            assert!(p.dominated_by(&top));
            assert!(bot.dominated_by(&p));
        }
    }

    #[test]
    fn orthogonal_collapse() {
        // (3,2) is not orthogonal (even part 2 with multiplicity 1);
        // the largest orthogonal partition below it is (3,1,1).
        let c = collapse_to(&Partition::new(vec![3, 2]), Partition::is_orthogonal);
        assert_eq!(c, Partition::new(vec![3, 1, 1]));
        // (3,1) is not symplectic; collapse is (2,2).
        let c = collapse_to(&Partition::new(vec![3, 1]), Partition::is_symplectic);
        assert_eq!(c, Partition::new(vec![2, 2]));
    }

    #[test]
    fn beta_sequence_roundtrip() {
        for n in 0..=7 {
            for p in partitions_of(n) {
                for pad in p.len()..p.len() + 3 {
                    let seq = p.beta_sequence(pad);
                    assert!(seq.windows(2).all(|w| w[0] < w[1]));
                    assert_eq!(Partition::from_beta_sequence(&seq), p);
                }
            }
        }
    }

    #[test]
    fn hook_dimensions_s4() {
        // dimensions of Irr(S_4)
        let dims: Vec<u64> = partitions_of(4).iter().map(|p| p.dimension()).collect();
        let mut sorted = dims.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 1, 2, 3, 3]);
        assert_eq!(dims.iter().map(|d| d * d).sum::<u64>(), 24);
    }

    #[test]
    fn rim_hook_small() {
        // removing a 2-hook from (2,1) can give (1) in two ways
        let p = Partition::new(vec![2, 1]);
        let hooks = p.rim_hooks(2);
        assert_eq!(hooks.len(), 2);
        for (q, _) in hooks {
            assert_eq!(q, Partition::new(vec![1]));
        }
    }
}
