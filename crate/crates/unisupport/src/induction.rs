//! Combinatorial induction from subsystem Weyl groups to the full group,
//! built on Littlewood–Richardson coefficients. Scales far beyond the
//! explicit oracle: factor characters are lifted into full hyperoctahedral
//! blocks, merged by coordinatewise LR products, and (for D ambient)
//! transferred back along the index-2 restriction.

use crate::charcomb::{CharacterLabel, LabelPayload};
use crate::error::{Error, Result};
use crate::partitions::{bipartitions_of, partitions_of, Partition};
use crate::rootdata::{CartanType, Series, SubsystemClass};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;
use std::sync::OnceLock;

/// One constituent of an induced character. For a D-ambient target landing
/// on a degenerate pair, the multiplicity is the combined one for both sign
/// tags and `degenerate_combined` is set: the split is not determined by
/// the block combinatorics, and no downstream verdict depends on it.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize, Debug)]
pub struct Constituent {
    pub label: CharacterLabel,
    pub multiplicity: u64,
    pub degenerate_combined: bool,
}

/// Result of inducing an external tensor of factor labels.
#[derive(Clone, Serialize, Deserialize, Debug)]
pub struct InductionResult {
    pub source: SubsystemClass,
    pub source_labels: Vec<CharacterLabel>,
    pub constituents: Vec<Constituent>,
}

impl InductionResult {
    /// Total degree of the result, counting a combined degenerate entry as
    /// the sum over both tags.
    pub fn total_degree(&self) -> u64 {
        self.constituents
            .iter()
            .map(|c| c.label.degree() * c.multiplicity)
            .sum()
    }
}

// -- Littlewood–Richardson ----------------------------------------------------

fn lr_cache() -> &'static Mutex<HashMap<(Partition, Partition, Partition), u64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition, Partition), u64>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Littlewood–Richardson coefficient c^λ_{μν}, by direct enumeration of
/// LR skew tableaux of shape λ/μ and content ν (semistandard fillings whose
/// reverse reading word is a lattice word). Memoized.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() {
        return 0;
    }
    // μ must fit inside λ
    for (i, &m) in mu.parts().iter().enumerate() {
        if lambda.parts().get(i).copied().unwrap_or(0) < m {
            return 0;
        }
    }
    if nu.is_empty() {
        return u64::from(*mu == *lambda);
    }
    let key = (mu.clone(), nu.clone(), lambda.clone());
    if let Some(&v) = lr_cache().lock().unwrap().get(&key) {
        return v;
    }

    // cells of λ/μ in reverse reading order: rows top to bottom, each row
    // right to left
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (r, &lam_r) in lambda.parts().iter().enumerate() {
        let mu_r = mu.parts().get(r).copied().unwrap_or(0);
        for c in (mu_r..lam_r).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = lambda.parts().first().copied().unwrap_or(0) as usize;
    let rows = lambda.len();
    let mut grid = vec![vec![0usize; width]; rows];
    let mut counts = vec![0u32; nu.len() + 1];
    let nu_parts: Vec<u32> = nu.parts().to_vec();
    let mu_parts: Vec<u32> = mu.parts().to_vec();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<u32>,
        nu: &[u32],
        mu: &[u32],
        total: &mut u64,
    ) {
        if idx == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[idx];
        for v in 1..=nu.len() {
            if counts[v] >= nu[v - 1] {
                continue;
            }
            // lattice: before writing v, strictly more v-1 than v so far
            if v > 1 && counts[v - 1] <= counts[v] {
                continue;
            }
            // row weakly increasing: right neighbour (already filled) must
            // be >= v
            if c + 1 < grid[r].len() && grid[r][c + 1] != 0 && grid[r][c + 1] < v {
                continue;
            }
            // column strictly increasing: the cell above, when in the skew
            // shape, is already filled and must be < v
            if r > 0 {
                let above_in_skew = (c as u32) >= mu.get(r - 1).copied().unwrap_or(0)
                    && grid[r - 1][c] != 0;
                if above_in_skew && grid[r - 1][c] >= v {
                    continue;
                }
            }
            grid[r][c] = v;
            counts[v] += 1;
            fill(idx + 1, cells, grid, counts, nu, mu, total);
            counts[v] -= 1;
            grid[r][c] = 0;
        }
    }

    let mut total = 0u64;
    fill(
        0,
        &cells,
        &mut grid,
        &mut counts,
        &nu_parts,
        &mu_parts,
        &mut total,
    );
    lr_cache().lock().unwrap().insert(key, total);
    total
}

// -- distributions over labels -----------------------------------------------

type BcDist = BTreeMap<(Partition, Partition), u64>;
type ADist = BTreeMap<Partition, u64>;

fn merge_bc(x: &BcDist, y: &BcDist) -> BcDist {
    let mut out = BcDist::new();
    for ((a1, b1), &m1) in x {
        for ((a2, b2), &m2) in y {
            let na = a1.size() + a2.size();
            let nb = b1.size() + b2.size();
            for alpha in partitions_of(na) {
                let ca = lr_coefficient(a1, a2, &alpha);
                if ca == 0 {
                    continue;
                }
                for beta in partitions_of(nb) {
                    let cb = lr_coefficient(b1, b2, &beta);
                    if cb == 0 {
                        continue;
                    }
                    *out.entry((alpha.clone(), beta)).or_insert(0) += m1 * m2 * ca * cb;
                }
            }
        }
    }
    out
}

fn merge_a(x: &ADist, y: &ADist) -> ADist {
    let mut out = ADist::new();
    for (p1, &m1) in x {
        for (p2, &m2) in y {
            for lam in partitions_of(p1.size() + p2.size()) {
                let c = lr_coefficient(p1, p2, &lam);
                if c > 0 {
                    *out.entry(lam).or_insert(0) += m1 * m2 * c;
                }
            }
        }
    }
    out
}

/// Lift of one factor label into the distribution over the labels of the
/// full hyperoctahedral block on the factor's support.
fn lift_factor_bc(label: &CharacterLabel) -> Result<BcDist> {
    let mut out = BcDist::new();
    match &label.payload {
        LabelPayload::Bipartition(a, b) => {
            out.insert((a.clone(), b.clone()), 1);
        }
        LabelPayload::Partition(mu) => {
            // GL-type factor: S_c inside the rank-c block
            for a in 0..=mu.size() {
                for sigma in partitions_of(a) {
                    for tau in partitions_of(mu.size() - a) {
                        let c = lr_coefficient(&sigma, &tau, mu);
                        if c > 0 {
                            *out.entry((sigma.clone(), tau)).or_insert(0) += c;
                        }
                    }
                }
            }
        }
        LabelPayload::DPair { lo, hi, tag } => {
            if tag.is_some() {
                out.insert((lo.clone(), hi.clone()), 1);
            } else {
                out.insert((lo.clone(), hi.clone()), 1);
                out.insert((hi.clone(), lo.clone()), 1);
            }
        }
    }
    Ok(out)
}

/// Combinatorial induction of an external tensor of factor labels along the
/// subsystem's embedding into the full group.
pub fn induce(sub: &SubsystemClass, factor_labels: &[CharacterLabel]) -> Result<InductionResult> {
    if factor_labels.len() != sub.factors.len() {
        return Err(Error::Mismatch(format!(
            "{} labels for {} factors of {sub}",
            factor_labels.len(),
            sub.factors.len()
        )));
    }
    for (l, f) in factor_labels.iter().zip(&sub.factors) {
        if l.group_type.series != f.series || l.group_type.rank != f.rank {
            return Err(Error::Mismatch(format!("label {l:?} on factor {f}")));
        }
    }
    let t = sub.ambient;
    let constituents = match t.series {
        Series::A => {
            // blocks of the symmetric group: plain LR, with the unused
            // points as singleton blocks
            let mut dist: ADist = BTreeMap::new();
            dist.insert(Partition::empty(), 1);
            for l in factor_labels {
                let p = match &l.payload {
                    LabelPayload::Partition(p) => p.clone(),
                    _ => unreachable!("A factors carry partition labels"),
                };
                let mut single = ADist::new();
                single.insert(p, 1);
                dist = merge_a(&dist, &single);
            }
            let singles = t.rank + 1
                - factor_labels
                    .iter()
                    .map(|l| l.group_type.rank + 1)
                    .sum::<usize>();
            for _ in 0..singles {
                let mut one = ADist::new();
                one.insert(Partition::new(vec![1]), 1);
                dist = merge_a(&dist, &one);
            }
            dist.into_iter()
                .map(|(lam, m)| Constituent {
                    label: CharacterLabel::a_label(t, lam),
                    multiplicity: m,
                    degenerate_combined: false,
                })
                .collect()
        }
        Series::B | Series::C => {
            let mut dist: BcDist = BTreeMap::new();
            dist.insert((Partition::empty(), Partition::empty()), 1);
            for l in factor_labels {
                dist = merge_bc(&dist, &lift_factor_bc(l)?);
            }
            for _ in 0..sub.torus_rank {
                let mut coord = BcDist::new();
                coord.insert((Partition::new(vec![1]), Partition::empty()), 1);
                coord.insert((Partition::empty(), Partition::new(vec![1])), 1);
                dist = merge_bc(&dist, &coord);
            }
            dist.into_iter()
                .map(|((a, b), m)| Constituent {
                    label: CharacterLabel::bc_label(t, a, b),
                    multiplicity: m,
                    degenerate_combined: false,
                })
                .collect()
        }
        Series::D => {
            // identity case keeps the exact sign tag
            if sub.factors.len() == 1
                && sub.factors[0].series == Series::D
                && sub.factors[0].rank == t.rank
            {
                return Ok(InductionResult {
                    source: sub.clone(),
                    source_labels: factor_labels.to_vec(),
                    constituents: vec![Constituent {
                        label: factor_labels[0].clone(),
                        multiplicity: 1,
                        degenerate_combined: false,
                    }],
                });
            }
            let mut dist: BcDist = BTreeMap::new();
            dist.insert((Partition::empty(), Partition::empty()), 1);
            for l in factor_labels {
                dist = merge_bc(&dist, &lift_factor_bc(l)?);
            }
            for _ in 0..sub.torus_rank {
                let mut coord = BcDist::new();
                coord.insert((Partition::new(vec![1]), Partition::empty()), 1);
                coord.insert((Partition::empty(), Partition::new(vec![1])), 1);
                dist = merge_bc(&dist, &coord);
            }
            // transfer along the restriction to the index-2 subgroup: an
            // unordered pair receives the common multiplicity of its two
            // ordered lifts; a degenerate pair receives the combined one.
            let mut out = Vec::new();
            let mut seen: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
            for ((a, b), m) in &dist {
                let key = if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                };
                *seen.entry(key).or_insert(0) += m;
            }
            for ((lo, hi), m) in seen {
                if lo == hi {
                    out.push(Constituent {
                        label: CharacterLabel::d_label(t, lo, hi, Some(crate::Sign::Plus)),
                        multiplicity: m,
                        degenerate_combined: true,
                    });
                } else {
                    let m1 = dist.get(&(lo.clone(), hi.clone())).copied().unwrap_or(0);
                    let m2 = dist.get(&(hi.clone(), lo.clone())).copied().unwrap_or(0);
                    assert_eq!(m1, m2, "ordered lifts disagree for ({lo};{hi})");
                    out.push(Constituent {
                        label: CharacterLabel::d_label(t, lo, hi, None),
                        multiplicity: m1,
                        degenerate_combined: false,
                    });
                }
            }
            out
        }
    };
    Ok(InductionResult {
        source: sub.clone(),
        source_labels: factor_labels.to_vec(),
        constituents,
    })
}

/// All label tuples for the factors of a subsystem, in deterministic order.
pub fn factor_label_tuples(sub: &SubsystemClass) -> Vec<Vec<CharacterLabel>> {
    let per_factor: Vec<Vec<CharacterLabel>> = sub
        .factors
        .iter()
        .map(|f| crate::charcomb::char_labels(CartanType::new(f.series, f.rank).unwrap()))
        .collect();
    let mut out = vec![Vec::new()];
    for labels in per_factor {
        let mut next = Vec::new();
        for prefix in &out {
            for l in &labels {
                let mut row = prefix.clone();
                row.push(l.clone());
                next.push(row);
            }
        }
        out = next;
    }
    out
}
