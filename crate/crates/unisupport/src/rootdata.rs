//! Cartan types, coordinate root systems, and the classification of
//! reflection subsystems that occur as centralizer Weyl groups: the
//! full-rank ("isolated") subsystems obtained by deleting one node of the
//! affine diagram, and their Levi subsystems.

use crate::error::{Error, Result};
use crate::Sign;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// The four classical series.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Debug)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
        }
    }

    /// The series of the dual root system (coroots): B and C swap.
    pub fn dual(self) -> Series {
        match self {
            Series::B => Series::C,
            Series::C => Series::B,
            s => s,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A classical Cartan type: series plus rank.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let min = match series {
            Series::A | Series::B | Series::C => 1,
            Series::D => 2,
        };
        if rank < min {
            return Err(Error::InvalidCartanType {
                series: series.letter(),
                rank,
                reason: format!("series {} requires rank >= {min}", series.letter()),
            });
        }
        Ok(CartanType { series, rank })
    }

    pub fn dual(self) -> CartanType {
        CartanType {
            series: self.series.dual(),
            rank: self.rank,
        }
    }

    /// |W| for this type.
    pub fn weyl_order(self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u64 << n) * fact(n),
            Series::D => (1u64 << (n - 1)) * fact(n),
        }
    }

    /// Number of positive roots.
    pub fn num_positive_roots(self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
        }
    }

    /// Dimension of the ambient coordinate space of the standard model.
    pub fn coord_dim(self) -> usize {
        match self.series {
            Series::A => self.rank + 1,
            _ => self.rank,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl fmt::Debug for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A root system in the standard orthonormal coordinate model, with integer
/// coordinates throughout so that closure tests are exact.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub roots: Vec<Vec<i32>>,
    pub simple_roots: Vec<usize>,
    pub positive_roots: Vec<usize>,
    pub highest_root: Vec<i32>,
}

fn unit(dim: usize, i: usize, c: i32) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn pm(dim: usize, i: usize, j: usize, si: i32, sj: i32) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[i] = si;
    v[j] = sj;
    v
}

/// Builds the standard coordinate model of the root system of type `t`.
pub fn build_root_system(t: CartanType) -> Result<RootSystem> {
    let n = t.rank;
    let dim = t.coord_dim();
    let mut positive: Vec<Vec<i32>> = Vec::new();
    let mut simple: Vec<Vec<i32>> = Vec::new();
    match t.series {
        Series::A => {
            for i in 0..dim {
                for j in (i + 1)..dim {
                    positive.push(pm(dim, i, j, 1, -1));
                }
            }
            for i in 0..n {
                simple.push(pm(dim, i, i + 1, 1, -1));
            }
        }
        Series::B => {
            for i in 0..n {
                for j in (i + 1)..n {
                    positive.push(pm(dim, i, j, 1, -1));
                    positive.push(pm(dim, i, j, 1, 1));
                }
                positive.push(unit(dim, i, 1));
            }
            for i in 0..n - 1 {
                simple.push(pm(dim, i, i + 1, 1, -1));
            }
            simple.push(unit(dim, n - 1, 1));
        }
        Series::C => {
            for i in 0..n {
                for j in (i + 1)..n {
                    positive.push(pm(dim, i, j, 1, -1));
                    positive.push(pm(dim, i, j, 1, 1));
                }
                positive.push(unit(dim, i, 2));
            }
            for i in 0..n - 1 {
                simple.push(pm(dim, i, i + 1, 1, -1));
            }
            simple.push(unit(dim, n - 1, 2));
        }
        Series::D => {
            for i in 0..n {
                for j in (i + 1)..n {
                    positive.push(pm(dim, i, j, 1, -1));
                    positive.push(pm(dim, i, j, 1, 1));
                }
            }
            for i in 0..n - 1 {
                simple.push(pm(dim, i, i + 1, 1, -1));
            }
            simple.push(pm(dim, n - 2, n - 1, 1, 1));
        }
    }
    debug_assert_eq!(positive.len(), t.num_positive_roots());

    let mut roots = positive.clone();
    roots.extend(positive.iter().map(|r| r.iter().map(|x| -x).collect()));
    roots.sort();
    roots.dedup();

    let index_of = |v: &Vec<i32>| roots.iter().position(|r| r == v).unwrap();
    let positive_roots: Vec<usize> = positive.iter().map(index_of).collect();
    let simple_roots: Vec<usize> = simple.iter().map(index_of).collect();

    let highest_root = match t.series {
        Series::A => pm(dim, 0, dim - 1, 1, -1),
        Series::B => {
            if n >= 2 {
                pm(dim, 0, 1, 1, 1)
            } else {
                unit(dim, 0, 1)
            }
        }
        Series::C => unit(dim, 0, 2),
        Series::D => pm(dim, 0, 1, 1, 1),
    };

    Ok(RootSystem {
        cartan_type: t,
        roots,
        simple_roots,
        positive_roots,
        highest_root,
    })
}

/// One irreducible factor of a reflection subsystem. The series carries the
/// length information of the embedding: in a B-ambient system an `A` factor
/// consists of long roots e_i - e_j while `B1` is the short {±e_i}; in a
/// C-ambient system `C1` is the long {±2e_i} while `A1` is short.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub series: Series,
    pub rank: usize,
}

impl Factor {
    pub fn new(series: Series, rank: usize) -> Self {
        Factor { series, rank }
    }

    /// Number of coordinates of the ambient model this factor occupies.
    pub fn support(self) -> usize {
        match self.series {
            Series::A => self.rank + 1,
            _ => self.rank,
        }
    }

    pub fn weyl_order(self) -> u64 {
        let fact = |k: u64| (1..=k).product::<u64>();
        let n = self.rank as u64;
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u64 << n) * fact(n),
            Series::D => {
                if self.rank >= 2 {
                    (1u64 << (n - 1)) * fact(n)
                } else {
                    1
                }
            }
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl fmt::Debug for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Elementary steps in the realization of a subsystem inside the ambient
/// group; used for bookkeeping and tested for index multiplicativity.
#[derive(Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Debug)]
pub enum EmbedStep {
    /// Symmetric group S_c as the GL-type Levi inside the rank-c
    /// hyperoctahedral block; index 2^c.
    GlLevi { block: usize, index: u64 },
    /// W(D_k) as the index-2 reflection subgroup of W(B_k).
    DInsideB { rank: usize, index: u64 },
    /// Product of block subgroups inside the full ambient group.
    Blocks { ambient_rank: usize, index: u64 },
}

impl EmbedStep {
    pub fn index(self) -> u64 {
        match self {
            EmbedStep::GlLevi { index, .. }
            | EmbedStep::DInsideB { index, .. }
            | EmbedStep::Blocks { index, .. } => index,
        }
    }
}

/// A W-conjugacy class of reflection subsystems of the ambient system,
/// described by its factor multiset. In a D-ambient system a multiset can
/// split into two classes distinguished by `twist`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize, Debug)]
pub struct SubsystemClass {
    pub ambient: CartanType,
    /// Irreducible factors, canonically sorted.
    pub factors: Vec<Factor>,
    /// Coordinates not met by any factor.
    pub torus_rank: usize,
    pub isolated: bool,
    /// Distinguishes the two W(D_n)-classes of an O(2n)-conjugate pair.
    pub twist: Option<Sign>,
    pub embedding_chain: Vec<EmbedStep>,
    /// |W(ambient)| / |W_s|.
    pub index: u64,
}

impl SubsystemClass {
    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn weyl_order(&self) -> u64 {
        self.factors.iter().map(|f| f.weyl_order()).product()
    }

    pub fn name(&self) -> String {
        let mut s = if self.factors.is_empty() {
            "T".to_string()
        } else {
            self.factors
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join("x")
        };
        if let Some(t) = self.twist {
            s.push(match t {
                Sign::Plus => '+',
                Sign::Minus => '-',
            });
        }
        s
    }
}

impl fmt::Display for SubsystemClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}<{}", self.name(), self.ambient)
    }
}

fn sort_factors(factors: &mut [Factor]) {
    factors.sort_by(|a, b| {
        (a.series, std::cmp::Reverse(a.rank)).cmp(&(b.series, std::cmp::Reverse(b.rank)))
    });
}

fn make_class(
    ambient: CartanType,
    mut factors: Vec<Factor>,
    isolated: bool,
    twist: Option<Sign>,
) -> SubsystemClass {
    sort_factors(&mut factors);
    let rank_sum: usize = factors.iter().map(|f| f.rank).sum();
    let torus_rank = ambient.rank - rank_sum;
    let sub_order: u64 = factors.iter().map(|f| f.weyl_order()).product();
    let index = ambient.weyl_order() / sub_order;

    // Per-factor lifts into full blocks of the ambient kind, then the block
    // product inside the whole group; indices telescope to the total.
    let mut chain = Vec::new();
    let mut lifted_order = 1u64;
    for f in &factors {
        match f.series {
            Series::A if ambient.series != Series::A => {
                let c = f.rank + 1;
                let step_index = if ambient.series == Series::D {
                    1u64 << (c - 1)
                } else {
                    1u64 << c
                };
                chain.push(EmbedStep::GlLevi {
                    block: c,
                    index: step_index,
                });
                lifted_order *= step_index * f.weyl_order();
            }
            Series::D if ambient.series == Series::B || ambient.series == Series::C => {
                chain.push(EmbedStep::DInsideB {
                    rank: f.rank,
                    index: 2,
                });
                lifted_order *= 2 * f.weyl_order();
            }
            _ => {
                lifted_order *= f.weyl_order();
            }
        }
    }
    if ambient.series == Series::A {
        chain.push(EmbedStep::Blocks {
            ambient_rank: ambient.rank,
            index,
        });
    } else {
        let chain_so_far: u64 = chain.iter().map(|s| s.index()).product();
        debug_assert_eq!(lifted_order, sub_order * chain_so_far);
        debug_assert_eq!(index % chain_so_far, 0);
        chain.push(EmbedStep::Blocks {
            ambient_rank: ambient.rank,
            index: index / chain_so_far,
        });
    }

    SubsystemClass {
        ambient,
        factors,
        torus_rank,
        isolated,
        twist,
        embedding_chain: chain,
        index,
    }
}

/// Multisets of part sizes >= 2 with total at most `budget`, used for the
/// GL-type factor blocks.
fn a_part_multisets(budget: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    fn rec(budget: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for c in (2..=budget.min(max)).rev() {
            cur.push(c);
            out.push(cur.clone());
            rec(budget - c, c, cur, out);
            cur.pop();
        }
    }
    rec(budget, budget, &mut Vec::new(), &mut out);
    out
}

/// All full-rank subsystem classes arising from single-node deletion in the
/// affine diagram. These are the centralizer systems of isolated semisimple
/// elements of the simply connected group with this root system.
pub fn enumerate_isolated_subsystems(t: CartanType) -> Result<Vec<SubsystemClass>> {
    CartanType::new(t.series, t.rank)?;
    let n = t.rank;
    let mut out = Vec::new();
    match t.series {
        Series::A => {
            out.push(make_class(t, vec![Factor::new(Series::A, n)], true, None));
        }
        Series::B => {
            // deleting node k of the extended diagram yields D_k x B_{n-k}
            for k in std::iter::once(0).chain(2..=n) {
                let mut fs = Vec::new();
                if k >= 2 {
                    fs.push(Factor::new(Series::D, k));
                }
                if n - k >= 1 {
                    fs.push(Factor::new(Series::B, n - k));
                }
                out.push(make_class(t, fs, true, None));
            }
        }
        Series::C => {
            for k in 0..=n / 2 {
                let mut fs = Vec::new();
                if k >= 1 {
                    fs.push(Factor::new(Series::C, k));
                }
                if n - k >= 1 {
                    fs.push(Factor::new(Series::C, n - k));
                }
                out.push(make_class(t, fs, true, None));
            }
        }
        Series::D => {
            for k in std::iter::once(0).chain(2..=n / 2) {
                if k > 0 && n - k < 2 {
                    continue;
                }
                let mut fs = Vec::new();
                if k >= 2 {
                    fs.push(Factor::new(Series::D, k));
                }
                fs.push(Factor::new(Series::D, n - k));
                out.push(make_class(t, fs, true, None));
            }
        }
    }
    Ok(out)
}

/// All subsystem classes: the closure of the isolated ones under passing to
/// parabolic (Levi) subsystems of each factor, up to W-conjugacy.
pub fn enumerate_subsystem_classes(t: CartanType) -> Result<Vec<SubsystemClass>> {
    CartanType::new(t.series, t.rank)?;
    let n = t.rank;
    let isolated: BTreeSet<(Vec<Factor>, Option<Sign>)> = enumerate_isolated_subsystems(t)?
        .into_iter()
        .map(|c| (c.factors, c.twist))
        .collect();
    let mut out: Vec<SubsystemClass> = Vec::new();
    let mut push = |factors: Vec<Factor>, twist: Option<Sign>, out: &mut Vec<SubsystemClass>| {
        let mut fs = factors;
        sort_factors(&mut fs);
        let iso = isolated.contains(&(fs.clone(), twist));
        out.push(make_class(t, fs, iso, twist));
    };

    match t.series {
        Series::A => {
            for mu in crate::partitions::partitions_of(n as u32 + 1) {
                let fs: Vec<Factor> = mu
                    .parts()
                    .iter()
                    .filter(|&&c| c >= 2)
                    .map(|&c| Factor::new(Series::A, c as usize - 1))
                    .collect();
                push(fs, None, &mut out);
            }
        }
        Series::B => {
            for a in std::iter::once(0).chain(2..=n) {
                for b in 0..=(n - a) {
                    for parts in a_part_multisets(n - a - b) {
                        let mut fs = Vec::new();
                        if a >= 2 {
                            fs.push(Factor::new(Series::D, a));
                        }
                        if b >= 1 {
                            fs.push(Factor::new(Series::B, b));
                        }
                        fs.extend(parts.iter().map(|&c| Factor::new(Series::A, c - 1)));
                        push(fs, None, &mut out);
                    }
                }
            }
        }
        Series::C => {
            for a in 0..=n {
                for b in 0..=a.min(n - a) {
                    for parts in a_part_multisets(n - a - b) {
                        let mut fs = Vec::new();
                        if a >= 1 {
                            fs.push(Factor::new(Series::C, a));
                        }
                        if b >= 1 {
                            fs.push(Factor::new(Series::C, b));
                        }
                        fs.extend(parts.iter().map(|&c| Factor::new(Series::A, c - 1)));
                        push(fs, None, &mut out);
                    }
                }
            }
        }
        Series::D => {
            for a in std::iter::once(0).chain(2..=n) {
                for b in std::iter::once(0).chain(2..=a) {
                    if a + b > n {
                        continue;
                    }
                    for parts in a_part_multisets(n - a - b) {
                        let mut fs = Vec::new();
                        if a >= 2 {
                            fs.push(Factor::new(Series::D, a));
                        }
                        if b >= 2 {
                            fs.push(Factor::new(Series::D, b));
                        }
                        fs.extend(parts.iter().map(|&c| Factor::new(Series::A, c - 1)));
                        // A class with no sign-symmetric factor, no unused
                        // coordinate, and only even-support GL blocks is not
                        // stable under odd sign changes: it splits in W(D_n).
                        let support: usize = parts.iter().sum::<usize>() + a + b;
                        let splits = a == 0
                            && b == 0
                            && support == n
                            && !parts.is_empty()
                            && parts.iter().all(|c| c % 2 == 0);
                        if splits {
                            push(fs.clone(), Some(Sign::Plus), &mut out);
                            push(fs, Some(Sign::Minus), &mut out);
                        } else {
                            push(fs, None, &mut out);
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|x, y| (&x.factors, x.twist).cmp(&(&y.factors, y.twist)));
    out.dedup_by(|x, y| x.factors == y.factors && x.twist == y.twist);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

/// Ground-truth record produced by the brute-force closed-subsystem search.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClosedSubsystem {
    pub factors: Vec<Factor>,
    pub full_rank: bool,
    /// Number of distinct W-orbits with this factor multiset.
    pub orbit_count: usize,
}

fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reflect(v: &[i32], alpha: &[i32]) -> Vec<i32> {
    // s_alpha(v) = v - 2 (v,alpha)/(alpha,alpha) alpha ; exact because the
    // coordinate models keep 2(v,a)/(a,a) integral for roots.
    let num = 2 * dot(v, alpha);
    let den = dot(alpha, alpha);
    assert_eq!(num % den, 0);
    let c = num / den;
    v.iter().zip(alpha).map(|(x, a)| x - c * a).collect()
}

fn span_rank(vectors: &[&Vec<i32>]) -> usize {
    // integer Gaussian elimination over Q using i64
    let mut rows: Vec<Vec<i64>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| x as i64).collect())
        .collect();
    let mut rank = 0;
    let cols = rows.first().map_or(0, |r| r.len());
    for c in 0..cols {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) {
            rows.swap(rank, p);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for row in tail {
                if row[c] != 0 {
                    let a = pivot[c];
                    let b = row[c];
                    for k in 0..cols {
                        row[k] = row[k] * a - pivot[k] * b;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Enumerates every subsystem generated by a subset of positive roots and
/// closed under addition and negation, classifies the factors, and dedups by
/// the explicit W-action. Ground truth for the two enumerators above.
pub fn brute_force_closed_subsystems(t: CartanType) -> Result<Vec<ClosedSubsystem>> {
    if t.rank > 3 {
        return Err(Error::BoundExceeded {
            what: "brute_force_closed_subsystems",
            bound: "rank <= 3".to_string(),
            got: t.rank,
        });
    }
    let rs = build_root_system(t)?;
    let roots = &rs.roots;
    let root_index: BTreeMap<&Vec<i32>, usize> =
        roots.iter().enumerate().map(|(i, r)| (r, i)).collect();

    // the Weyl group as permutations of the root list
    let mut perms: BTreeSet<Vec<usize>> = BTreeSet::new();
    let id: Vec<usize> = (0..roots.len()).collect();
    perms.insert(id.clone());
    let gens: Vec<Vec<usize>> = rs
        .simple_roots
        .iter()
        .map(|&s| {
            roots
                .iter()
                .map(|r| root_index[&reflect(r, &roots[s])])
                .collect()
        })
        .collect();
    let mut frontier = vec![id];
    while let Some(w) = frontier.pop() {
        for g in &gens {
            let wg: Vec<usize> = (0..roots.len()).map(|i| g[w[i]]).collect();
            if perms.insert(wg.clone()) {
                frontier.push(wg);
            }
        }
    }

    // all generated closed subsystems, as sorted index sets
    let pos = &rs.positive_roots;
    let mut closed: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 0u32..(1 << pos.len()) {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        for (bit, &p) in pos.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                set.insert(p);
                set.insert(root_index[&roots[p].iter().map(|x| -x).collect::<Vec<i32>>()]);
            }
        }
        loop {
            let items: Vec<usize> = set.iter().copied().collect();
            let mut grew = false;
            for (i, &a) in items.iter().enumerate() {
                for &b in &items[i + 1..] {
                    let sum: Vec<i32> = roots[a].iter().zip(&roots[b]).map(|(x, y)| x + y).collect();
                    if let Some(&k) = root_index.get(&sum) {
                        if set.insert(k) {
                            let neg: Vec<i32> = sum.iter().map(|x| -x).collect();
                            set.insert(root_index[&neg]);
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        closed.insert(set.into_iter().collect());
    }

    // orbit representatives under W
    let mut orbits: BTreeSet<Vec<usize>> = BTreeSet::new();
    for set in &closed {
        let canon = perms
            .iter()
            .map(|p| {
                let mut img: Vec<usize> = set.iter().map(|&i| p[i]).collect();
                img.sort_unstable();
                img
            })
            .min()
            .unwrap();
        orbits.insert(canon);
    }

    // classify each orbit representative
    let mut by_factors: BTreeMap<(Vec<Factor>, bool), usize> = BTreeMap::new();
    for set in &orbits {
        let factors = classify_root_set(t, roots, set);
        let rank = span_rank(&set.iter().map(|&i| &roots[i]).collect::<Vec<_>>());
        let key = (factors, rank == t.rank);
        *by_factors.entry(key).or_insert(0) += 1;
    }

    Ok(by_factors
        .into_iter()
        .map(|((factors, full_rank), orbit_count)| ClosedSubsystem {
            factors,
            full_rank,
            orbit_count,
        })
        .collect())
}

/// Classifies a closed root subset into irreducible factors, using support
/// and length data of the ambient coordinate model.
fn classify_root_set(t: CartanType, roots: &[Vec<i32>], set: &[usize]) -> Vec<Factor> {
    if set.is_empty() {
        return Vec::new();
    }
    // connected components of the non-orthogonality graph, then merge
    // components with identical support: two orthogonal A1's {e_i±e_j}
    // sharing their support form a D2.
    let items: Vec<usize> = set.to_vec();
    let mut comp: Vec<usize> = (0..items.len()).collect();
    fn find(comp: &mut Vec<usize>, i: usize) -> usize {
        if comp[i] != i {
            let r = find(comp, comp[i]);
            comp[i] = r;
            r
        } else {
            i
        }
    }
    for i in 0..items.len() {
        for j in (i + 1)..items.len() {
            if dot(&roots[items[i]], &roots[items[j]]) != 0 {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..items.len() {
        let r = find(&mut comp, i);
        groups.entry(r).or_default().push(items[i]);
    }
    let support_of = |g: &[usize]| -> BTreeSet<usize> {
        g.iter()
            .flat_map(|&i| {
                roots[i]
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(c, _)| c)
            })
            .collect()
    };
    // merge support-sharing components
    let mut groups: Vec<(Vec<usize>, BTreeSet<usize>)> = groups
        .into_values()
        .map(|g| {
            let s = support_of(&g);
            (g, s)
        })
        .collect();
    loop {
        let mut merged = false;
        'outer: for i in 0..groups.len() {
            for j in (i + 1)..groups.len() {
                if !groups[i].1.is_disjoint(&groups[j].1) {
                    let (gj, sj) = groups.remove(j);
                    groups[i].0.extend(gj);
                    groups[i].1.extend(sj);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            break;
        }
    }

    let mut factors = Vec::new();
    for (g, support) in &groups {
        let rank = span_rank(&g.iter().map(|&i| &roots[i]).collect::<Vec<_>>());
        let count = g.len();
        let norms: BTreeSet<i32> = g.iter().map(|&i| dot(&roots[i], &roots[i])).collect();
        let f = match t.series {
            Series::A => Factor::new(Series::A, rank),
            Series::B => {
                if norms.contains(&1) {
                    Factor::new(Series::B, rank)
                } else if support.len() == rank {
                    Factor::new(Series::D, rank)
                } else {
                    Factor::new(Series::A, rank)
                }
            }
            Series::C => {
                if norms.contains(&4) {
                    Factor::new(Series::C, rank)
                } else {
                    Factor::new(Series::A, rank)
                }
            }
            Series::D => {
                if support.len() == rank {
                    Factor::new(Series::D, rank)
                } else {
                    Factor::new(Series::A, rank)
                }
            }
        };
        debug_assert!(
            count
                == match f.series {
                    Series::A => f.rank * (f.rank + 1),
                    Series::B | Series::C => 2 * f.rank * f.rank,
                    Series::D => 2 * f.rank * (f.rank - 1),
                },
            "root count {count} does not match {f}"
        );
        factors.push(f);
    }
    sort_factors(&mut factors);
    factors
}
