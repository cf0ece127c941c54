//! Ordered set partitions with positivity constraints, their sign systems
//! and the piecewise-linear `c`-functions.
//!
//! Index sets are sorted lists of positive integers; a partition's blocks
//! are kept sorted internally, and unordered partitions are normalized by
//! sorting blocks by their least element. Enumeration is visitor-based so
//! the big families never have to be materialized.

use crate::arith::{rint, Rat};
use crate::{Error, Result};
use num::Zero;
use serde::Serialize;

/// Exact rational vector indexed by a finite sorted index set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalVector {
    idx: Vec<usize>,
    val: Vec<Rat>,
}

impl RationalVector {
    pub fn new(idx: Vec<usize>, val: Vec<Rat>) -> Result<Self> {
        if idx.len() != val.len() {
            return Err(Error::InvalidArgument("index/value length mismatch".into()));
        }
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "indices must be strictly increasing".into(),
            ));
        }
        Ok(RationalVector { idx, val })
    }

    /// Values on `{1, ..., n}`.
    pub fn from_values(values: &[Rat]) -> Self {
        RationalVector {
            idx: (1..=values.len()).collect(),
            val: values.to_vec(),
        }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::from_values(&values.iter().map(|v| rint(*v)).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.idx.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idx.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.idx
    }

    pub fn values(&self) -> &[Rat] {
        &self.val
    }

    pub fn get(&self, i: usize) -> Rat {
        let pos = self.idx.binary_search(&i).expect("index not present");
        self.val[pos]
    }

    /// `s_J(λ) = Σ_{i∈J} λ_i`.
    pub fn sum(&self, j: &[usize]) -> Rat {
        j.iter().map(|i| self.get(*i)).sum()
    }

    pub fn total(&self) -> Rat {
        self.val.iter().copied().sum()
    }

    pub fn restrict(&self, j: &[usize]) -> RationalVector {
        RationalVector {
            idx: j.to_vec(),
            val: j.iter().map(|i| self.get(*i)).collect(),
        }
    }

    /// `δ(λ)`: minimum of `s_J(λ)/|J|` over subsets with positive sum,
    /// with the minimal achieving cardinality `N(λ)`. `None` when no
    /// subset has positive sum.
    pub fn delta_n(&self) -> Option<(Rat, usize)> {
        let n = self.len();
        let mut best: Option<(Rat, usize)> = None;
        for mask in 1u64..(1u64 << n) {
            let mut s = rint(0);
            let mut card = 0usize;
            for i in 0..n {
                if mask & (1 << i) != 0 {
                    s += self.val[i];
                    card += 1;
                }
            }
            if s > rint(0) {
                let avg = s / rint(card as i64);
                match &mut best {
                    None => best = Some((avg, card)),
                    Some((d, nn)) => {
                        if avg < *d || (avg == *d && card < *nn) {
                            *d = avg;
                            *nn = card;
                        }
                    }
                }
            }
        }
        best
    }

    /// Subsets achieving `(δ, N)`, lexicographically sorted.
    pub fn minimizing_subsets(&self) -> Vec<Vec<usize>> {
        let Some((delta, nmin)) = self.delta_n() else {
            return Vec::new();
        };
        let n = self.len();
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << n) {
            let subset: Vec<usize> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.idx[i])
                .collect();
            if subset.len() == nmin && self.sum(&subset) == delta * rint(nmin as i64) {
                out.push(subset);
            }
        }
        out.sort();
        out
    }

    /// The perturbation `λ + η·1` with `η = 1/(2·maxden·(n+1))`, small
    /// enough that `s_I(λ) ≥ 0 ⟺ s_I(λ + η·1) > 0` for every subset `I`.
    pub fn perturbed(&self) -> RationalVector {
        let maxden = self.val.iter().map(|v| *v.denom()).max().unwrap_or(1);
        let eta = Rat::new(1, 2 * maxden * (self.len() as i64 + 1));
        RationalVector {
            idx: self.idx.clone(),
            val: self.val.iter().map(|v| *v + eta).collect(),
        }
    }
}

/// Ordered partition: a sequence of disjoint nonempty blocks. Blocks are
/// sorted internally.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct OrderedPartition {
    pub blocks: Vec<Vec<usize>>,
}

/// Unordered partition, normalized: blocks sorted by least element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Partition {
    pub blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        OrderedPartition { blocks }
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `P ∩ J`: intersect blocks with `J`, dropping empties.
    pub fn restrict(&self, j: &[usize]) -> OrderedPartition {
        let jset: std::collections::BTreeSet<usize> = j.iter().copied().collect();
        OrderedPartition {
            blocks: self
                .blocks
                .iter()
                .map(|b| {
                    b.iter()
                        .copied()
                        .filter(|x| jset.contains(x))
                        .collect::<Vec<_>>()
                })
                .filter(|b: &Vec<usize>| !b.is_empty())
                .collect(),
        }
    }

    pub fn forget_order(&self) -> Partition {
        let mut blocks = self.blocks.clone();
        blocks.sort_by_key(|b| b[0]);
        Partition { blocks }
    }

    /// Block sums `λ_P = (s_{I_1}(λ), ..., s_{I_k}(λ))`.
    pub fn block_sums(&self, lam: &RationalVector) -> Vec<Rat> {
        self.blocks.iter().map(|b| lam.sum(b)).collect()
    }

    /// Cumulative positivity `λ_P > 0` (strict) or `λ_P ≥ 0` (weak).
    pub fn is_positive(&self, lam: &RationalVector, weak: bool) -> bool {
        let mut acc = rint(0);
        for b in &self.blocks {
            acc += lam.sum(b);
            if weak {
                if acc < rint(0) {
                    return false;
                }
            } else if acc <= rint(0) {
                return false;
            }
        }
        true
    }

    pub fn odd_block_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() % 2 == 1).count()
    }

    /// Rotation by whole blocks: `(I_s, ..., I_k, I_1, ..., I_{s-1})`,
    /// `s` 0-based.
    pub fn rotate_blocks(&self, s: usize) -> OrderedPartition {
        let k = self.blocks.len();
        let blocks = (0..k).map(|i| self.blocks[(s + i) % k].clone()).collect();
        OrderedPartition { blocks }
    }

    pub fn index_set(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        Partition { blocks }
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn odd_block_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() % 2 == 1).count()
    }

    /// Every block has positive (or weakly positive) sum.
    pub fn is_positive(&self, lam: &RationalVector, weak: bool) -> bool {
        self.blocks.iter().all(|b| {
            let s = lam.sum(b);
            if weak {
                s >= rint(0)
            } else {
                s > rint(0)
            }
        })
    }
}

const MAX_ORDERED: usize = 9;

fn guard_ordered(len: usize) -> Result<()> {
    if len > MAX_ORDERED {
        return Err(Error::SizeLimit(format!(
            "ordered-partition enumeration limited to {MAX_ORDERED} indices, got {len}"
        )));
    }
    Ok(())
}

/// Visit every ordered partition of `universe` exactly once.
pub fn for_each_ordered_partition<F: FnMut(&OrderedPartition)>(
    universe: &[usize],
    f: &mut F,
) -> Result<()> {
    guard_ordered(universe.len())?;
    let mut acc: Vec<Vec<usize>> = Vec::new();
    rec_ordered(universe, &mut acc, f);
    Ok(())
}

fn rec_ordered<F: FnMut(&OrderedPartition)>(
    remaining: &[usize],
    acc: &mut Vec<Vec<usize>>,
    f: &mut F,
) {
    if remaining.is_empty() {
        f(&OrderedPartition { blocks: acc.clone() });
        return;
    }
    let k = remaining.len();
    for mask in 1u64..(1u64 << k) {
        let block: Vec<usize> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| remaining[i])
            .collect();
        let rest: Vec<usize> = (0..k)
            .filter(|i| mask & (1 << i) == 0)
            .map(|i| remaining[i])
            .collect();
        acc.push(block);
        rec_ordered(&rest, acc, f);
        acc.pop();
    }
}

/// Visit every ordered partition of the support of `lam` whose cumulative
/// block sums are positive (strictly, or weakly when `weak`), pruning
/// failed prefixes.
pub fn for_each_positive_ordered_partition<F: FnMut(&OrderedPartition)>(
    lam: &RationalVector,
    weak: bool,
    f: &mut F,
) -> Result<()> {
    guard_ordered(lam.len())?;
    let mut acc: Vec<Vec<usize>> = Vec::new();
    rec_positive(lam.indices().to_vec(), lam, weak, rint(0), &mut acc, f);
    Ok(())
}

fn rec_positive<F: FnMut(&OrderedPartition)>(
    remaining: Vec<usize>,
    lam: &RationalVector,
    weak: bool,
    prefix: Rat,
    acc: &mut Vec<Vec<usize>>,
    f: &mut F,
) {
    if remaining.is_empty() {
        f(&OrderedPartition { blocks: acc.clone() });
        return;
    }
    let k = remaining.len();
    for mask in 1u64..(1u64 << k) {
        let mut s = prefix;
        let block: Vec<usize> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| {
                s += lam.get(remaining[i]);
                remaining[i]
            })
            .collect();
        let ok = if weak { s >= rint(0) } else { s > rint(0) };
        if !ok {
            continue;
        }
        let rest: Vec<usize> = (0..k)
            .filter(|i| mask & (1 << i) == 0)
            .map(|i| remaining[i])
            .collect();
        acc.push(block);
        rec_positive(rest, lam, weak, s, acc, f);
        acc.pop();
    }
}

/// Visit every unordered partition of `universe` exactly once.
pub fn for_each_partition<F: FnMut(&Partition)>(universe: &[usize], f: &mut F) -> Result<()> {
    guard_ordered(universe.len())?;
    let mut acc: Vec<Vec<usize>> = Vec::new();
    rec_unordered(universe, &mut acc, f);
    Ok(())
}

fn rec_unordered<F: FnMut(&Partition)>(
    remaining: &[usize],
    acc: &mut Vec<Vec<usize>>,
    f: &mut F,
) {
    if remaining.is_empty() {
        f(&Partition { blocks: acc.clone() });
        return;
    }
    let first = remaining[0];
    let rest = &remaining[1..];
    let k = rest.len();
    for mask in 0u64..(1u64 << k) {
        let mut block = vec![first];
        block.extend((0..k).filter(|i| mask & (1 << i) != 0).map(|i| rest[i]));
        let others: Vec<usize> = (0..k)
            .filter(|i| mask & (1 << i) == 0)
            .map(|i| rest[i])
            .collect();
        acc.push(block);
        rec_unordered(&others, acc, f);
        acc.pop();
    }
}

/// All partitions of `universe` into blocks of size at most 2 with at most
/// one singleton: a perfect matching when `|universe|` is even, a
/// near-perfect matching otherwise.
pub fn par0_le2(universe: &[usize]) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc: Vec<Vec<usize>> = Vec::new();
    rec_matchings(universe, universe.len() % 2 == 0, &mut acc, &mut out);
    out.sort();
    out
}

fn rec_matchings(
    remaining: &[usize],
    singleton_used: bool,
    acc: &mut Vec<Vec<usize>>,
    out: &mut Vec<Partition>,
) {
    if remaining.is_empty() {
        out.push(Partition::new(acc.clone()));
        return;
    }
    let first = remaining[0];
    if !singleton_used {
        acc.push(vec![first]);
        rec_matchings(&remaining[1..], true, acc, out);
        acc.pop();
    }
    for j in 1..remaining.len() {
        let mut rest: Vec<usize> = remaining[1..].to_vec();
        let partner = rest.remove(j - 1);
        acc.push(vec![first, partner]);
        rec_matchings(&rest, singleton_used, acc, out);
        acc.pop();
    }
}

/// Ordered pairs `(I_1, I_2)` of disjoint (possibly empty) subsets with
/// union `universe`.
pub fn splits(universe: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let k = universe.len();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u64..(1u64 << k) {
        let a: Vec<usize> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| universe[i])
            .collect();
        let b: Vec<usize> = (0..k)
            .filter(|i| mask & (1 << i) == 0)
            .map(|i| universe[i])
            .collect();
        out.push((a, b));
    }
    out
}

/// Visit every ordered partition of `{1..n+2m}` in which the elements
/// `n+2i-1` and `n+2i` share a block, by enumerating ordered partitions of
/// a fused index set and expanding the pair tokens in place.
pub fn for_each_paired_ordered_partition<F: FnMut(&OrderedPartition)>(
    n: usize,
    m: usize,
    f: &mut F,
) -> Result<()> {
    guard_ordered(n + m)?;
    let fused: Vec<usize> = (1..=(n + m)).collect();
    let mut g = |p: &OrderedPartition| {
        let blocks = p
            .blocks
            .iter()
            .map(|b| {
                let mut nb = Vec::with_capacity(b.len() + m);
                for &x in b {
                    if x <= n {
                        nb.push(x);
                    } else {
                        let i = x - n;
                        nb.push(n + 2 * i - 1);
                        nb.push(n + 2 * i);
                    }
                }
                nb.sort_unstable();
                nb
            })
            .collect();
        f(&OrderedPartition { blocks });
    };
    for_each_ordered_partition(&fused, &mut g)
}

/// Sign `ε(P)`: signature of the permutation sorting the blockwise word
/// back to the ambient order of `P`'s index set.
pub fn eps_ordered(p: &OrderedPartition) -> i64 {
    let universe = p.index_set();
    let rank = |x: usize| universe.binary_search(&x).unwrap();
    let word: Vec<usize> = p.blocks.iter().flatten().map(|x| rank(*x)).collect();
    sign_by_inversions(&word)
}

/// Split sign `ε(J, K)`: signature of the permutation sorting `J ++ K`.
pub fn eps_split(j: &[usize], k: &[usize]) -> i64 {
    let mut universe: Vec<usize> = j.iter().chain(k).copied().collect();
    universe.sort_unstable();
    let rank = |x: usize| universe.binary_search(&x).unwrap();
    let word: Vec<usize> = j.iter().chain(k).map(|x| rank(*x)).collect();
    sign_by_inversions(&word)
}

fn sign_by_inversions(word: &[usize]) -> i64 {
    let mut inv = 0usize;
    for a in 0..word.len() {
        for b in (a + 1)..word.len() {
            if word[a] > word[b] {
                inv += 1;
            }
        }
    }
    crate::arith::neg_one_pow(inv)
}

/// `ε'(P) = (-1)^{½ Σ |I_α|(|I_α|-1)}`; depends only on the underlying
/// unordered partition.
pub fn eps_prime_ordered(p: &OrderedPartition) -> i64 {
    eps_prime_blocks(&p.blocks)
}

pub fn eps_prime(p: &Partition) -> i64 {
    eps_prime_blocks(&p.blocks)
}

fn eps_prime_blocks(blocks: &[Vec<usize>]) -> i64 {
    let e: usize = blocks.iter().map(|b| b.len() * (b.len() - 1) / 2).sum();
    crate::arith::neg_one_pow(e)
}

/// `ε(p)` for an unordered partition with at most one odd block: the
/// common value of `ε` over all orderings (computed at the normalized
/// ordering).
pub fn eps_unordered(p: &Partition) -> i64 {
    debug_assert!(p.odd_block_count() <= 1, "ε(p) needs at most one odd block");
    eps_ordered(&OrderedPartition {
        blocks: p.blocks.clone(),
    })
}

/// `ε''(p)` for a partition with exactly one odd block `I`:
/// `(-1)^{(|I|-1)/2}`.
pub fn eps_double_prime(p: &Partition) -> i64 {
    let odd = p
        .blocks
        .iter()
        .find(|b| b.len() % 2 == 1)
        .expect("no odd block");
    crate::arith::neg_one_pow((odd.len() - 1) / 2)
}

/// `c_1(a) = 1` if `a > 0`, else 0.
pub fn c1(a: Rat) -> i64 {
    if a > rint(0) {
        1
    } else {
        0
    }
}

/// `c_2(a,b)`: 0 when `a + b ≤ 0` or `a ≤ 0`; 1 when `a > 0` and `b > 0`;
/// 2 otherwise.
pub fn c2(a: Rat, b: Rat) -> i64 {
    if a + b <= rint(0) || a <= rint(0) {
        0
    } else if a > rint(0) && b > rint(0) {
        1
    } else {
        2
    }
}

/// `c_{2,C}(a,b) = 1` when `0 < a < b` or `0 < -b < a`.
pub fn c2_c(a: Rat, b: Rat) -> i64 {
    if (rint(0) < a && a < b) || (rint(0) < -b && -b < a) {
        1
    } else {
        0
    }
}

/// `c_{2,D}(a,b) = 1` when `a > |b|`.
pub fn c2_d(a: Rat, b: Rat) -> i64 {
    if a > b && a > -b {
        1
    } else {
        0
    }
}

/// `c(p, λ)`: product of `c_1` over singletons and `c_2` over pairs.
pub fn c_partition(p: &Partition, lam: &RationalVector) -> i64 {
    let mut acc = 1i64;
    for b in &p.blocks {
        acc *= match b.len() {
            1 => c1(lam.get(b[0])),
            2 => c2(lam.get(b[0]), lam.get(b[1])),
            _ => panic!("c(p, λ) needs blocks of size ≤ 2"),
        };
        if acc == 0 {
            return 0;
        }
    }
    acc
}

/// The product-sum coefficient built from `c_1`/`c_2`:
/// `Π_j c_1(ν_j) · Σ_{p⁺} Σ_{p⁻} ε(p⁺) ε(p⁻) c(p⁺, μ) c(p⁻, μ)`
/// with `p^±` running over the near-matchings of `I^±`.
pub fn herb_c(iplus: &[usize], iminus: &[usize], mu: &RationalVector, nu: &[Rat]) -> Rat {
    let mut acc = rint(1);
    for v in nu {
        acc *= rint(c1(*v));
        if acc.is_zero() {
            return acc;
        }
    }
    let mut s = rint(0);
    for pp in par0_le2(iplus) {
        let cp = c_partition(&pp, mu);
        if cp == 0 {
            continue;
        }
        for pm in par0_le2(iminus) {
            let cm = c_partition(&pm, mu);
            if cm == 0 {
                continue;
            }
            s += rint(eps_unordered(&pp) * eps_unordered(&pm) * cp * cm);
        }
    }
    acc * s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn count_ordered(universe: &[usize]) -> usize {
        let mut c = 0;
        for_each_ordered_partition(universe, &mut |_| c += 1).unwrap();
        c
    }

    #[test]
    fn fubini_counts() {
        assert_eq!(count_ordered(&[]), 1);
        assert_eq!(count_ordered(&[1]), 1);
        assert_eq!(count_ordered(&[1, 2]), 3);
        assert_eq!(count_ordered(&[1, 2, 3]), 13);
        assert_eq!(count_ordered(&[1, 2, 3, 4]), 75);
        assert_eq!(count_ordered(&[2, 5, 7, 8]), 75);
    }

    #[test]
    fn size_guard() {
        let big: Vec<usize> = (1..=10).collect();
        assert!(for_each_ordered_partition(&big, &mut |_| {}).is_err());
    }

    #[test]
    fn bell_counts() {
        let mut c = 0;
        for_each_partition(&[1, 2, 3, 4], &mut |_| c += 1).unwrap();
        assert_eq!(c, 15);
    }

    #[test]
    fn positive_filter() {
        // λ = (-1,-1,3): pruned enumeration agrees with brute-force filter
        let lam = RationalVector::from_ints(&[-1, -1, 3]);
        let mut seen = Vec::new();
        for_each_positive_ordered_partition(&lam, false, &mut |p| seen.push(p.clone())).unwrap();
        let mut brute = Vec::new();
        for_each_ordered_partition(&[1, 2, 3], &mut |p| {
            if p.is_positive(&lam, false) {
                brute.push(p.clone());
            }
        })
        .unwrap();
        seen.sort();
        brute.sort();
        assert_eq!(seen, brute);
        assert!(!seen.is_empty());
    }

    #[test]
    fn matchings() {
        let p = par0_le2(&[1, 2]);
        assert_eq!(p, vec![Partition::new(vec![vec![1, 2]])]);
        assert_eq!(par0_le2(&[1, 2, 3]).len(), 3);
        assert_eq!(par0_le2(&[1, 2, 3, 4]).len(), 3);
        assert_eq!(par0_le2(&[]).len(), 1);
        for p in par0_le2(&[1, 2, 3, 4, 5]) {
            assert!(p.blocks.iter().all(|b| b.len() <= 2));
            assert_eq!(p.blocks.iter().filter(|b| b.len() == 1).count(), 1);
        }
    }

    #[test]
    fn signs_basic() {
        let p = OrderedPartition::new(vec![vec![1], vec![2], vec![3]]);
        assert_eq!(eps_ordered(&p), 1);
        assert_eq!(eps_prime_ordered(&p), 1);
        let p = OrderedPartition::new(vec![vec![1, 2]]);
        assert_eq!(eps_ordered(&p), 1);
        assert_eq!(eps_prime_ordered(&p), -1);
        let p = OrderedPartition::new(vec![vec![2], vec![1]]);
        assert_eq!(eps_ordered(&p), -1);
    }

    #[test]
    fn eps_constant_on_even_partitions() {
        // for p with at most one odd block, ε is constant over orderings
        let p = Partition::new(vec![vec![1, 4], vec![2, 3], vec![5]]);
        let base = eps_unordered(&p);
        use itertools::Itertools;
        for perm in (0..3usize).permutations(3) {
            let blocks: Vec<Vec<usize>> = perm.iter().map(|i| p.blocks[*i].clone()).collect();
            assert_eq!(eps_ordered(&OrderedPartition::new(blocks)), base);
        }
    }

    #[test]
    fn eps_prime_constant_on_odd_classes() {
        // ε' is constant on partitions with exactly 2k or 2k+1 odd blocks,
        // with value (-1)^{m-k}, m = floor(n/2)
        for n in 1..=8usize {
            let universe: Vec<usize> = (1..=n).collect();
            let m = n / 2;
            for_each_partition(&universe, &mut |p| {
                let k = p.odd_block_count() / 2;
                assert_eq!(eps_prime(p), crate::arith::neg_one_pow(m - k), "{p:?}");
            })
            .unwrap();
        }
    }

    #[test]
    fn c_function_tables() {
        assert_eq!(c2(rint(1), rint(2)), 1);
        assert_eq!(c2(rint(3), rint(-1)), 2);
        assert_eq!(c2(rint(-1), rint(3)), 0);
        assert_eq!(c2(rint(1), rint(-1)), 0);
        assert_eq!(c1(rat(1, 2)), 1);
        assert_eq!(c1(rint(0)), 0);
        // c_2 = c_{2,C} + c_{2,D} away from ties (a ≠ ±b, a,b ≠ 0)
        for an in -4i64..=4 {
            for bn in -4i64..=4 {
                let (a, b) = (rint(an), rint(bn));
                if an == 0 || bn == 0 || an == bn || an == -bn {
                    continue;
                }
                assert_eq!(c2(a, b), c2_c(a, b) + c2_d(a, b), "a={an}, b={bn}");
            }
        }
    }

    #[test]
    fn herb_c_examples() {
        // t=0, I+={1,2}, I-=∅, μ=(3,1) → 1
        let mu = RationalVector::from_ints(&[3, 1]);
        assert_eq!(herb_c(&[1, 2], &[], &mu, &[]), rint(1));
        // a c1(ν) = 0 factor kills everything
        assert_eq!(herb_c(&[1, 2], &[], &mu, &[rint(-1)]), rint(0));
        // empty everything → 1
        let empty = RationalVector::from_ints(&[]);
        assert_eq!(herb_c(&[], &[], &empty, &[]), rint(1));
    }

    #[test]
    fn delta_and_n() {
        // λ=(2,-1): δ=1/2 achieved by {1,2}, N=2
        let lam = RationalVector::from_ints(&[2, -1]);
        assert_eq!(lam.delta_n(), Some((rat(1, 2), 2)));
        assert_eq!(lam.minimizing_subsets(), vec![vec![1, 2]]);
        // λ=(1,1): δ=1, N=1
        let lam = RationalVector::from_ints(&[1, 1]);
        assert_eq!(lam.delta_n(), Some((rint(1), 1)));
        assert_eq!(lam.minimizing_subsets(), vec![vec![1], vec![2]]);
        // no positive subset
        let lam = RationalVector::from_ints(&[-1, 0]);
        assert_eq!(lam.delta_n(), None);
    }

    #[test]
    fn paired_enumeration() {
        // partitions of {1,2,3} with 2,3 glued ↔ 3 ordered partitions
        let mut seen = Vec::new();
        for_each_paired_ordered_partition(1, 1, &mut |p| seen.push(p.clone())).unwrap();
        assert_eq!(seen.len(), 3);
        for p in &seen {
            let pos2 = p.blocks.iter().position(|b| b.contains(&2)).unwrap();
            let pos3 = p.blocks.iter().position(|b| b.contains(&3)).unwrap();
            assert_eq!(pos2, pos3);
        }
    }

    #[test]
    fn perturbation_turns_weak_into_strict() {
        let lam = RationalVector::from_values(&[rat(1, 2), rat(-1, 2), rint(0)]);
        let pert = lam.perturbed();
        for (a, _) in splits(&[1, 2, 3]) {
            if a.is_empty() {
                continue;
            }
            assert_eq!(lam.sum(&a) >= rint(0), pert.sum(&a) > rint(0), "{a:?}");
        }
    }
}
