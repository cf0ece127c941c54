//! Brute-force verifiers for the signed ordered-partition identities: the
//! product identity over positive ordered partitions, its corollaries, the
//! rotation and reduction lemmas, block decompositions, the parity
//! vanishing lemmas, and the reduction identity tying the partition layer
//! to the torus-pairing layer.
//!
//! Each checker computes both sides of its identity by independent
//! enumeration and returns them; equality is asserted by the caller.

use crate::arith::{neg_one_pow, rint, Rat};
use crate::partitions::*;
use crate::root_data::{pairing, varpi, Weight};
use crate::{Error, Result};
use serde::Serialize;

/// A multiplicative sign system: functions `c_{I'}` on ordered partitions
/// and `a_{I'}` on two-block splits satisfying
/// `c_{I'}(P) = a_{I'}(J, K) c_J(P ∩ J) c_K(P ∩ K)` whenever `J` is a
/// union of leading blocks of `P`.
#[derive(Clone, Debug)]
pub enum SignSystem {
    /// `c = 1`, `a = 1`.
    One,
    /// `c = ε'`, `a = 1`.
    EpsPrime,
    /// `c = ε`, `a = ε(J,K)`.
    Eps,
    /// `c = ε ε'`, `a = ε(J,K)`.
    EpsEpsPrime,
    /// Pointwise product of two systems.
    Product(Box<SignSystem>, Box<SignSystem>),
    /// Two systems spliced along a two-coloring of the ambient index set.
    Mixed {
        plus: Box<SignSystem>,
        minus: Box<SignSystem>,
        iplus: Vec<usize>,
        iminus: Vec<usize>,
    },
}

impl SignSystem {
    pub fn name(&self) -> String {
        match self {
            SignSystem::One => "1".into(),
            SignSystem::EpsPrime => "eps'".into(),
            SignSystem::Eps => "eps".into(),
            SignSystem::EpsEpsPrime => "eps*eps'".into(),
            SignSystem::Product(a, b) => format!("({})*({})", a.name(), b.name()),
            SignSystem::Mixed { plus, minus, .. } => {
                format!("mixed({}, {})", plus.name(), minus.name())
            }
        }
    }

    /// The four catalogued systems.
    pub fn catalogue() -> Vec<SignSystem> {
        vec![
            SignSystem::One,
            SignSystem::EpsPrime,
            SignSystem::Eps,
            SignSystem::EpsEpsPrime,
        ]
    }

    pub fn c(&self, p: &OrderedPartition) -> i64 {
        match self {
            SignSystem::One => 1,
            SignSystem::EpsPrime => eps_prime_ordered(p),
            SignSystem::Eps => eps_ordered(p),
            SignSystem::EpsEpsPrime => eps_ordered(p) * eps_prime_ordered(p),
            SignSystem::Product(a, b) => a.c(p) * b.c(p),
            SignSystem::Mixed {
                plus,
                minus,
                iplus,
                iminus,
            } => plus.c(&p.restrict(iplus)) * minus.c(&p.restrict(iminus)),
        }
    }

    pub fn a(&self, j: &[usize], k: &[usize]) -> i64 {
        match self {
            SignSystem::One | SignSystem::EpsPrime => 1,
            SignSystem::Eps | SignSystem::EpsEpsPrime => eps_split(j, k),
            SignSystem::Product(x, y) => x.a(j, k) * y.a(j, k),
            SignSystem::Mixed {
                plus,
                minus,
                iplus,
                iminus,
            } => {
                let inter = |s: &[usize], t: &[usize]| -> Vec<usize> {
                    s.iter().copied().filter(|x| t.contains(x)).collect()
                };
                plus.a(&inter(j, iplus), &inter(k, iplus))
                    * minus.a(&inter(j, iminus), &inter(k, iminus))
            }
        }
    }

    /// Exhaustively validate the prefix-split multiplicativity law on all
    /// subsets of `universe`.
    pub fn validate(&self, universe: &[usize]) -> Result<()> {
        for (sub, _) in splits(universe) {
            let mut ok = true;
            for_each_ordered_partition(&sub, &mut |p| {
                for cut in 0..=p.num_blocks() {
                    let j: Vec<usize> = {
                        let mut v: Vec<usize> =
                            p.blocks[..cut].iter().flatten().copied().collect();
                        v.sort_unstable();
                        v
                    };
                    let k: Vec<usize> = {
                        let mut v: Vec<usize> =
                            p.blocks[cut..].iter().flatten().copied().collect();
                        v.sort_unstable();
                        v
                    };
                    let lhs = self.c(p);
                    let rhs = self.a(&j, &k) * self.c(&p.restrict(&j)) * self.c(&p.restrict(&k));
                    if lhs != rhs {
                        ok = false;
                    }
                }
            })?;
            if !ok {
                return Err(Error::InvalidArgument(format!(
                    "sign system {} fails the prefix-split law on {:?}",
                    self.name(),
                    sub
                )));
            }
        }
        Ok(())
    }
}

/// Both sides of the product identity: for sign systems `c`, `d` and a
/// split `I = I⁺ ⊔ I⁻` of the support of `λ`,
/// `Σ_{P ∈ ParOrd(λ)} (-1)^{|P|} c(P∩I⁺) d(P∩I⁻)`
/// against the product of the two one-sided sums.
pub fn check_prop_a1(
    sys_c: &SignSystem,
    sys_d: &SignSystem,
    lam: &RationalVector,
    iplus: &[usize],
    iminus: &[usize],
) -> Result<(Rat, Rat)> {
    check_split(lam.indices(), iplus, iminus)?;
    let mut lhs = rint(0);
    for_each_positive_ordered_partition(lam, false, &mut |p| {
        let sgn = neg_one_pow(p.num_blocks());
        lhs += rint(sgn * sys_c.c(&p.restrict(iplus)) * sys_d.c(&p.restrict(iminus)));
    })?;
    let one_sided = |sys: &SignSystem, part: &[usize]| -> Result<Rat> {
        let mut acc = rint(0);
        for_each_positive_ordered_partition(&lam.restrict(part), false, &mut |p| {
            acc += rint(neg_one_pow(p.num_blocks()) * sys.c(p));
        })?;
        Ok(acc)
    };
    let rhs = one_sided(sys_c, iplus)? * one_sided(sys_d, iminus)?;
    Ok((lhs, rhs))
}

fn check_split(universe: &[usize], iplus: &[usize], iminus: &[usize]) -> Result<()> {
    let mut merged: Vec<usize> = iplus.iter().chain(iminus).copied().collect();
    merged.sort_unstable();
    if merged != universe {
        return Err(Error::InvalidArgument(
            "I⁺, I⁻ must partition the index set".into(),
        ));
    }
    Ok(())
}

/// `Σ_{P ∈ ParOrd(λ)} (-1)^{|P|}`, whose closed form is `(-1)^n` when all
/// entries are positive and 0 otherwise.
pub fn check_cor_a2(lam: &RationalVector) -> Result<Rat> {
    let mut acc = rint(0);
    for_each_positive_ordered_partition(lam, false, &mut |p| {
        acc += rint(neg_one_pow(p.num_blocks()));
    })?;
    Ok(acc)
}

pub fn cor_a2_closed_form(lam: &RationalVector) -> Rat {
    if lam.values().iter().all(|v| *v > rint(0)) {
        rint(neg_one_pow(lam.len()))
    } else {
        rint(0)
    }
}

/// Both sides of
/// `Σ_{P∈ParOrd(λ)} (-1)^{|P|} ε(P) ε'(P)
///   = (-1)^n Σ_{p near-matching} ε(p) c(p, λ)`.
pub fn check_prop_a3(lam: &RationalVector) -> Result<(Rat, Rat)> {
    let mut lhs = rint(0);
    for_each_positive_ordered_partition(lam, false, &mut |p| {
        lhs += rint(neg_one_pow(p.num_blocks()) * eps_ordered(p) * eps_prime_ordered(p));
    })?;
    let mut rhs = rint(0);
    for p in par0_le2(lam.indices()) {
        rhs += rint(eps_unordered(&p) * c_partition(&p, lam));
    }
    rhs *= rint(neg_one_pow(lam.len()));
    Ok((lhs, rhs))
}

/// Both sides of the paired corollary on `{1..n+2m}` with the elements
/// `n+2i-1, n+2i` glued:
/// `Σ_P (-1)^{|P|} ε(P⁺)ε(P⁻)ε'(P⁺)ε'(P⁻)
///   = (-1)^{n+m} Π c_1(λ'_i) ΣΣ ε(p⁺)ε(p⁻)c(p⁺,λ)c(p⁻,λ)`.
pub fn check_cor_a4(
    n: usize,
    m: usize,
    lam: &RationalVector,
    iplus: &[usize],
    iminus: &[usize],
) -> Result<(Rat, Rat)> {
    if lam.len() != n + 2 * m || lam.indices() != (1..=(n + 2 * m)).collect::<Vec<_>>() {
        return Err(Error::InvalidArgument(
            "λ must be indexed by {1..n+2m}".into(),
        ));
    }
    let free: Vec<usize> = (1..=n).collect();
    check_split(&free, iplus, iminus)?;
    let mut lhs = rint(0);
    for_each_paired_ordered_partition(n, m, &mut |p| {
        if !p.is_positive(lam, false) {
            return;
        }
        let pp = p.restrict(iplus);
        let pm = p.restrict(iminus);
        lhs += rint(
            neg_one_pow(p.num_blocks())
                * eps_ordered(&pp)
                * eps_ordered(&pm)
                * eps_prime_ordered(&pp)
                * eps_prime_ordered(&pm),
        );
    })?;
    let nu: Vec<Rat> = (1..=m)
        .map(|i| lam.get(n + 2 * i - 1) + lam.get(n + 2 * i))
        .collect();
    let rhs = rint(neg_one_pow(n + m)) * herb_c(iplus, iminus, &lam.restrict(&free), &nu);
    Ok((lhs, rhs))
}

/// Result of the rotation analysis of a vector with positive total.
#[derive(Clone, Debug, Serialize)]
pub struct RotationData {
    /// The canonical rotation offset in `{1..n}`: after rotating the first
    /// `k` entries to the back, every cumulative sum is positive.
    pub k: usize,
    /// Number of permutations `σ` with `σ(λ) > 0`.
    pub count: u64,
    /// True if no two-block partition has both sums positive
    /// (equivalently `N(λ) = n`).
    pub no_bipartition: bool,
    /// Number of rotations landing in the positive cone; equals 1 exactly
    /// under `no_bipartition`.
    pub positive_rotations: usize,
}

/// The rotation lemma data: canonical `k`, the count `|S(λ)|`, and the
/// uniqueness diagnostics. Errors when the total is not positive.
pub fn rotation_lemma(lam: &RationalVector) -> Result<RotationData> {
    let n = lam.len();
    if lam.total() <= rint(0) {
        return Err(Error::Hypothesis("rotation lemma needs Σλ > 0".into()));
    }
    // canonical k: last position achieving the minimal prefix sum
    let mut prefix = rint(0);
    let mut best: Option<Rat> = None;
    let mut k = 0usize;
    for (pos, v) in lam.values().iter().enumerate() {
        prefix += *v;
        if best.map_or(true, |b| prefix <= b) {
            best = Some(prefix);
            k = pos + 1;
        }
    }
    // characterization of k: suffixes after k climb strictly positive,
    // windows ending at k are non-positive
    let vals = lam.values();
    let mut acc = rint(0);
    for l in k..n {
        acc += vals[l];
        debug_assert!(acc > rint(0));
    }
    let mut acc = rint(0);
    for l in (1..k).rev() {
        acc += vals[l];
        debug_assert!(acc <= rint(0));
    }
    // the rotated vector is positive
    let rotated = rotate_values(vals, k);
    debug_assert!(cumulative_positive(&rotated));

    // |S(λ)|
    use itertools::Itertools;
    let mut count = 0u64;
    for perm in (0..n).permutations(n) {
        let arranged: Vec<Rat> = perm.iter().map(|i| vals[*i]).collect();
        if cumulative_positive(&arranged) {
            count += 1;
        }
    }

    let no_bipartition = lam.delta_n().map(|(_, nn)| nn == n).unwrap_or(false);
    let positive_rotations = (0..n)
        .filter(|j| cumulative_positive(&rotate_values(vals, *j)))
        .count();
    Ok(RotationData {
        k,
        count,
        no_bipartition,
        positive_rotations,
    })
}

fn rotate_values(vals: &[Rat], k: usize) -> Vec<Rat> {
    let n = vals.len();
    (0..n).map(|i| vals[(k + i) % n]).collect()
}

fn cumulative_positive(vals: &[Rat]) -> bool {
    let mut acc = rint(0);
    for v in vals {
        acc += *v;
        if acc <= rint(0) {
            return false;
        }
    }
    true
}

/// The reduction data `λ' = λ - δ·1_J` together with the split vectors.
#[derive(Clone, Debug)]
pub struct DeltaReduction {
    pub lambda_prime: RationalVector,
    pub mu: RationalVector,
    pub nu: RationalVector,
    pub eps0: i64,
    pub j: Vec<usize>,
    pub complement: Vec<usize>,
}

/// Subtract `δ` on a minimizing subset `J` (which the caller passes
/// explicitly; `RationalVector::minimizing_subsets` supplies candidates,
/// lexicographically least first).
pub fn delta_reduction(lam: &RationalVector, j: &[usize]) -> Result<DeltaReduction> {
    if lam.total() <= rint(0) {
        return Err(Error::Hypothesis("reduction needs Σλ > 0".into()));
    }
    let Some((delta, nmin)) = lam.delta_n() else {
        return Err(Error::Hypothesis("no subset with positive sum".into()));
    };
    if j.len() != nmin || lam.sum(j) != delta * rint(j.len() as i64) {
        return Err(Error::InvalidArgument(
            "J must achieve the minimal positive average with minimal cardinality".into(),
        ));
    }
    let complement: Vec<usize> = lam
        .indices()
        .iter()
        .copied()
        .filter(|i| !j.contains(i))
        .collect();
    let idx = lam.indices().to_vec();
    let val: Vec<Rat> = idx
        .iter()
        .map(|i| {
            if j.contains(i) {
                lam.get(*i) - delta
            } else {
                lam.get(*i)
            }
        })
        .collect();
    let lambda_prime = RationalVector::new(idx, val)?;
    Ok(DeltaReduction {
        mu: lam.restrict(j),
        nu: lam.restrict(&complement),
        eps0: eps_split(j, &complement),
        j: j.to_vec(),
        complement,
        lambda_prime,
    })
}

/// If the leading blocks of `p` exhaust exactly `j`, the number of those
/// blocks; `None` otherwise.
fn prefix_cut(p: &OrderedPartition, j: &[usize]) -> Option<usize> {
    let mut covered = 0usize;
    for (i, b) in p.blocks.iter().enumerate() {
        if b.iter().any(|x| !j.contains(x)) {
            return None;
        }
        covered += b.len();
        if covered == j.len() {
            return Some(i + 1);
        }
    }
    None
}

/// Exhaustive verification of the four assertions attached to the
/// reduction: subset-sum preservation, the disjoint decomposition of the
/// positive families (with strict decrease), the sign factorization over
/// the prefix family, and the prefix bijection onto
/// `ParOrd(μ) × ParOrd(ν)`.
pub fn verify_delta_assertions(lam: &RationalVector, j: &[usize]) -> Result<()> {
    let red = delta_reduction(lam, j)?;
    let lp = &red.lambda_prime;

    // (i) s_K(λ') > 0 ⟺ s_K(λ) > 0 for K ≠ J
    for (k, _) in splits(lam.indices()) {
        if k.is_empty() || k == j {
            continue;
        }
        if (lp.sum(&k) > rint(0)) != (lam.sum(&k) > rint(0)) {
            return Err(Error::Hypothesis(format!("subset-sum mismatch at {k:?}")));
        }
    }

    // (ii)-(iv) in one pass over all ordered partitions
    let mut count_lam = 0usize;
    let mut count_lp = 0usize;
    let mut pair_count = 0usize;
    let mut fail: Option<&'static str> = None;
    for_each_ordered_partition(lam.indices(), &mut |p| {
        let in_lam = p.is_positive(lam, false);
        let in_lp = p.is_positive(lp, false);
        count_lam += in_lam as usize;
        count_lp += in_lp as usize;
        let pref = prefix_cut(p, j);
        // (ii): ParOrd(λ) = ParOrd(λ') ⊔ (prefix family ∩ ParOrd(λ))
        if in_lp && !in_lam {
            fail = Some("ParOrd(λ') not inside ParOrd(λ)");
        }
        if in_lp && pref.is_some() {
            fail = Some("ParOrd(λ') meets the prefix family");
        }
        if in_lam && !in_lp && pref.is_none() {
            fail = Some("positive partition escapes both parts");
        }
        if let Some(cut) = pref {
            let p1 = OrderedPartition::new(p.blocks[..cut].to_vec());
            let p2 = OrderedPartition::new(p.blocks[cut..].to_vec());
            // (iii): sign factorization over the whole prefix family
            if eps_ordered(p) != red.eps0 * eps_ordered(&p1) * eps_ordered(&p2) {
                fail = Some("ε factorization fails");
            }
            if eps_prime_ordered(p) != eps_prime_ordered(&p1) * eps_prime_ordered(&p2) {
                fail = Some("ε' factorization fails");
            }
            // (iv): positives land in ParOrd(μ) × ParOrd(ν)
            if in_lam {
                if !p1.is_positive(&red.mu, false) || !p2.is_positive(&red.nu, false) {
                    fail = Some("prefix split leaves the positive cones");
                }
                pair_count += 1;
            }
        }
    })?;
    if let Some(msg) = fail {
        return Err(Error::Hypothesis(msg.into()));
    }
    if count_lp >= count_lam {
        return Err(Error::Hypothesis("no strict decrease of |ParOrd|".into()));
    }

    // (iv) surjectivity: distinct P give distinct pairs, so matching
    // counts suffice
    let mut count_mu = 0usize;
    let mut count_nu = 0usize;
    for_each_positive_ordered_partition(&red.mu, false, &mut |_| count_mu += 1)?;
    for_each_positive_ordered_partition(&red.nu, false, &mut |_| count_nu += 1)?;
    if pair_count != count_mu * count_nu {
        return Err(Error::Hypothesis("prefix bijection fails".into()));
    }

    // unordered analogue of (ii), with strict decrease
    let mut count_u_lam = 0usize;
    let mut count_u_lp = 0usize;
    let mut fail = false;
    for_each_partition(lam.indices(), &mut |p| {
        let in_lam = p.is_positive(lam, false);
        let in_lp = p.is_positive(lp, false);
        count_u_lam += in_lam as usize;
        count_u_lp += in_lp as usize;
        let j_is_block_union = {
            let covered: usize = p
                .blocks
                .iter()
                .filter(|b| b.iter().all(|x| j.contains(x)))
                .map(|b| b.len())
                .sum();
            covered == j.len()
        };
        if in_lp && !in_lam {
            fail = true;
        }
        if in_lp && j_is_block_union {
            fail = true;
        }
        if in_lam && !in_lp && !j_is_block_union {
            fail = true;
        }
    })?;
    if fail || count_u_lp >= count_u_lam {
        return Err(Error::Hypothesis("unordered decomposition fails".into()));
    }
    Ok(())
}

/// A contiguous run of blocks of an ordered partition forming a centered
/// block: cumulative sums strictly positive before the center, suffix
/// sums non-positive after it.
#[derive(Clone, Debug, Serialize)]
pub struct BlockSegment {
    /// Range of block positions `[start, end]`, inclusive.
    pub start: usize,
    pub end: usize,
    /// Position of the designated center block.
    pub center: usize,
    /// True if the total over the segment is positive.
    pub positive: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockDecomposition {
    pub segments: Vec<BlockSegment>,
}

/// Is `(I_lo, ..., I_hi)` a block with center at `center`?
pub fn is_block(
    lam: &RationalVector,
    p: &OrderedPartition,
    lo: usize,
    hi: usize,
    center: usize,
) -> bool {
    debug_assert!(lo <= center && center <= hi && hi < p.num_blocks());
    let sums = p.block_sums(lam);
    let mut acc = rint(0);
    for i in lo..center {
        acc += sums[i];
        if acc <= rint(0) {
            return false;
        }
    }
    let mut acc = rint(0);
    for i in ((center + 1)..=hi).rev() {
        acc += sums[i];
        if acc > rint(0) {
            return false;
        }
    }
    true
}

/// The unique decomposition of `P ∈ ParOrd(λ)` into blocks centered at the
/// given block positions, under `Σλ > 0` and `N(λ) = n`. The cut between
/// consecutive centers is located by the canonical rotation offset of the
/// window of block sums starting at the earlier center.
pub fn block_decomposition(
    lam: &RationalVector,
    p: &OrderedPartition,
    centers: &[usize],
) -> Result<BlockDecomposition> {
    let k = p.num_blocks();
    if centers.is_empty()
        || centers.windows(2).any(|w| w[0] >= w[1])
        || centers.iter().any(|c| *c >= k)
    {
        return Err(Error::InvalidArgument(
            "centers must be strictly increasing block positions".into(),
        ));
    }
    if lam.total() <= rint(0) || lam.delta_n().map(|(_, nn)| nn) != Some(lam.len()) {
        return Err(Error::Hypothesis(
            "block decomposition needs Σλ > 0 and N(λ) = n".into(),
        ));
    }
    if !p.is_positive(lam, false) {
        return Err(Error::Hypothesis("P must have positive cumulative sums".into()));
    }
    let sums = p.block_sums(lam);
    let mut segments = Vec::new();
    let mut start = 0usize;
    for (ci, &c) in centers.iter().enumerate() {
        let end = if ci + 1 < centers.len() {
            // window of sums from this center up to just before the next
            let next = centers[ci + 1];
            let window = &sums[c..next];
            // last position achieving the minimal prefix sum of the window
            let mut prefix = rint(0);
            let mut best: Option<Rat> = None;
            let mut cut = 0usize;
            for (pos, v) in window.iter().enumerate() {
                prefix += *v;
                if best.map_or(true, |b| prefix <= b) {
                    best = Some(prefix);
                    cut = pos;
                }
            }
            c + cut
        } else {
            k - 1
        };
        let total: Rat = sums[start..=end].iter().copied().sum();
        let seg = BlockSegment {
            start,
            end,
            center: c,
            positive: total > rint(0),
        };
        if !is_block(lam, p, start, end, c) {
            return Err(Error::Hypothesis(format!(
                "segment {seg:?} is not a centered block"
            )));
        }
        segments.push(seg);
        start = end + 1;
    }
    if start != k {
        return Err(Error::Hypothesis("segments do not cover P".into()));
    }
    if !segments[0].positive || (segments.len() >= 2 && segments.last().unwrap().positive) {
        return Err(Error::Hypothesis(
            "first segment must be positive and last negative".into(),
        ));
    }
    Ok(BlockDecomposition { segments })
}

/// Count all valid decompositions with the given centers by brute force
/// over the cut positions (used to confirm uniqueness).
pub fn count_block_decompositions(
    lam: &RationalVector,
    p: &OrderedPartition,
    centers: &[usize],
) -> usize {
    let k = p.num_blocks();
    let c = centers.len();
    let mut count = 0usize;
    // choose cuts: segment l covers [start_l, end_l] with centers[l] inside
    fn rec(
        lam: &RationalVector,
        p: &OrderedPartition,
        centers: &[usize],
        seg: usize,
        start: usize,
        count: &mut usize,
    ) {
        let k = p.num_blocks();
        if seg == centers.len() {
            return;
        }
        let c = centers[seg];
        if start > c {
            return;
        }
        let last = centers.len() - 1;
        let hi_lo = if seg == last { k - 1 } else { c };
        let hi_hi = if seg == last {
            k - 1
        } else {
            centers[seg + 1] - 1
        };
        for end in hi_lo..=hi_hi {
            if !is_block(lam, p, start, end, c) {
                continue;
            }
            if seg == last {
                if end == k - 1 {
                    *count += 1;
                }
            } else {
                rec(lam, p, centers, seg + 1, end + 1, count);
            }
        }
    }
    if c == 0 || centers[c - 1] >= k {
        return 0;
    }
    rec(lam, p, centers, 0, 0, &mut count);
    count
}

/// Under `Σλ > 0` and `N(λ) = n`, exactly one cyclic rotation of the
/// blocks of `P` lands in the positive family; returns its offset and the
/// rotated partition.
pub fn rotate_to_positive(
    lam: &RationalVector,
    p: &OrderedPartition,
) -> Result<(usize, OrderedPartition)> {
    if lam.total() <= rint(0) || lam.delta_n().map(|(_, nn)| nn) != Some(lam.len()) {
        return Err(Error::Hypothesis(
            "block rotation needs Σλ > 0 and N(λ) = n".into(),
        ));
    }
    let k = p.num_blocks();
    let hits: Vec<usize> = (0..k)
        .filter(|s| p.rotate_blocks(*s).is_positive(lam, false))
        .collect();
    match hits.as_slice() {
        [s] => Ok((*s, p.rotate_blocks(*s))),
        _ => Err(Error::Hypothesis(format!(
            "expected exactly one positive rotation, found {}",
            hits.len()
        ))),
    }
}

/// One parity-lemma evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct ParityOutcome {
    pub name: String,
    pub applicable: bool,
    pub reason: Option<String>,
    pub lhs: Rat,
    pub rhs: Rat,
    pub equal: bool,
}

/// Evaluate the family of parity vanishing statements for `λ`:
///
/// - the even-class identity
///   `Σ_{P, ≤1 odd block} (-1)^{|P|} ε ε' = (-1)^n Σ_{near-matchings} ε`,
///   in both the strict and the weak (`≥ 0`) reading, the weak one checked
///   twice (directly and through the perturbation `λ + η·1`);
/// - under `Σλ > 0`, `N(λ) = n`, `n ≥ 3`: the sums over the classes with
///   `2k` or `2k+1` odd blocks vanish for every `k ≤ kmax`;
/// - for odd `n ≥ 3` the λ-free mixed vanishing
///   `Σ ε(p) ε''(p) = 0` over partitions with one odd block and all other
///   blocks of size 2.
pub fn check_parity_lemmas(lam: &RationalVector, kmax: usize) -> Result<Vec<ParityOutcome>> {
    let n = lam.len();
    let mut out = Vec::new();

    let signed_sum = |lam: &RationalVector, weak: bool, odd_class: usize| -> Result<Rat> {
        let mut acc = rint(0);
        for_each_positive_ordered_partition(lam, weak, &mut |p| {
            let odd = p.odd_block_count();
            if odd / 2 != odd_class {
                return;
            }
            acc += rint(neg_one_pow(p.num_blocks()) * eps_ordered(p) * eps_prime_ordered(p));
        })?;
        Ok(acc)
    };
    let matching_sum = |lam: &RationalVector, weak: bool| -> Rat {
        let mut acc = rint(0);
        for p in par0_le2(lam.indices()) {
            if p.is_positive(lam, weak) {
                acc += rint(eps_unordered(&p));
            }
        }
        acc * rint(neg_one_pow(lam.len()))
    };

    // strict even-class identity
    let lhs = signed_sum(lam, false, 0)?;
    let rhs = matching_sum(lam, false);
    out.push(ParityOutcome {
        name: "even_class_identity".into(),
        applicable: true,
        reason: None,
        equal: lhs == rhs,
        lhs,
        rhs,
    });

    // weak variant, plus the perturbation route
    let lhs_weak = signed_sum(lam, true, 0)?;
    let rhs_weak = matching_sum(lam, true);
    let pert = lam.perturbed();
    let lhs_pert = signed_sum(&pert, false, 0)?;
    let rhs_pert = matching_sum(&pert, false);
    out.push(ParityOutcome {
        name: "even_class_identity_weak".into(),
        applicable: true,
        reason: None,
        equal: lhs_weak == rhs_weak && lhs_weak == lhs_pert && rhs_weak == rhs_pert,
        lhs: lhs_weak,
        rhs: rhs_weak,
    });

    // the vanishing statements need Σλ > 0, N(λ) = n, n ≥ 3
    let hyp = n >= 3
        && lam.total() > rint(0)
        && lam.delta_n().map(|(_, nn)| nn) == Some(n);
    for k in 0..=kmax {
        let (lhs, rhs, applicable, reason) = if hyp {
            (signed_sum(lam, false, k)?, rint(0), true, None)
        } else {
            (
                rint(0),
                rint(0),
                false,
                Some("needs Σλ > 0, N(λ) = n and n ≥ 3".to_string()),
            )
        };
        out.push(ParityOutcome {
            name: format!("odd_class_vanishing_k{k}"),
            applicable,
            reason,
            equal: lhs == rhs,
            lhs,
            rhs,
        });
    }

    // λ-free mixed vanishing at odd n
    if n >= 3 && n % 2 == 1 {
        let (lhs, rhs) = check_odd_mixed_vanishing(n)?;
        out.push(ParityOutcome {
            name: "odd_mixed_vanishing".into(),
            applicable: true,
            reason: None,
            equal: lhs == rhs,
            lhs,
            rhs,
        });
    }
    Ok(out)
}

/// `Σ ε(p) ε''(p) = 0` over the partitions of `{1..n}` (odd `n ≥ 3`) with
/// exactly one odd block and all other blocks of size 2.
pub fn check_odd_mixed_vanishing(n: usize) -> Result<(Rat, Rat)> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Hypothesis("needs odd n ≥ 3".into()));
    }
    let universe: Vec<usize> = (1..=n).collect();
    let mut acc = rint(0);
    for_each_partition(&universe, &mut |p| {
        if p.odd_block_count() != 1 {
            return;
        }
        if p.blocks.iter().any(|b| b.len() % 2 == 0 && b.len() != 2) {
            return;
        }
        acc += rint(eps_unordered(p) * eps_double_prime(p));
    })?;
    Ok((acc, rint(0)))
}

/// The reduction identity connecting the torus-pairing layer to the
/// partition layer: for a weight `μ` of `GSp(2(r+2t+m))` and a split of
/// `{1..r}`, the product-sum coefficient of the components
/// `y_i = <μ, ϖ_i> - <μ, ϖ_{i-1}>` equals
/// `(-1)^{r+t} Σ_{P paired} (-1)^{|P|} ε(P⁺)ε(P⁻)ε'(P⁺)ε'(P⁻) 1_{y >_P 0}`.
pub fn verify_prop331_core(
    r: usize,
    t: usize,
    mu: &Weight,
    iplus: &[usize],
    iminus: &[usize],
) -> Result<(Rat, Rat)> {
    let n_amb = mu.rank();
    if n_amb < r + 2 * t {
        return Err(Error::RankMismatch {
            expected: r + 2 * t,
            got: n_amb,
        });
    }
    let free: Vec<usize> = (1..=r).collect();
    check_split(&free, iplus, iminus)?;

    // y_i via successive ϖ-pairings
    let mut y = Vec::with_capacity(r + 2 * t);
    let mut prev = rint(0);
    for i in 1..=(r + 2 * t) {
        let cur = pairing(mu, &varpi(n_amb, i))?;
        y.push(cur - prev);
        prev = cur;
    }
    let yvec = RationalVector::from_values(&y);
    let nu: Vec<Rat> = (1..=t)
        .map(|j| yvec.get(r + 2 * j - 1) + yvec.get(r + 2 * j))
        .collect();
    let lhs = herb_c(iplus, iminus, &yvec.restrict(&free), &nu);

    let mut rhs = rint(0);
    for_each_paired_ordered_partition(r, t, &mut |p| {
        if !p.is_positive(&yvec, false) {
            return;
        }
        let pp = p.restrict(iplus);
        let pm = p.restrict(iminus);
        rhs += rint(
            neg_one_pow(p.num_blocks())
                * eps_ordered(&pp)
                * eps_ordered(&pm)
                * eps_prime_ordered(&pp)
                * eps_prime_ordered(&pm),
        );
    })?;
    rhs *= rint(neg_one_pow(r + t));
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn sign_systems_satisfy_the_law() {
        let universe: Vec<usize> = (1..=5).collect();
        for sys in SignSystem::catalogue() {
            sys.validate(&universe).unwrap();
        }
        let prod = SignSystem::Product(
            Box::new(SignSystem::Eps),
            Box::new(SignSystem::EpsPrime),
        );
        prod.validate(&universe).unwrap();
        let mixed = SignSystem::Mixed {
            plus: Box::new(SignSystem::EpsEpsPrime),
            minus: Box::new(SignSystem::One),
            iplus: vec![1, 3],
            iminus: vec![2, 4, 5],
        };
        mixed.validate(&universe).unwrap();
    }

    #[test]
    fn prop_a1_examples() {
        // trivial system, λ=(1,1)
        let lam = RationalVector::from_ints(&[1, 1]);
        let (l, r) = check_prop_a1(&SignSystem::One, &SignSystem::One, &lam, &[1], &[2]).unwrap();
        assert_eq!(l, r);
        // ε system on a 5-vector with ties
        let lam = RationalVector::from_values(&[
            rat(3, 2),
            rat(-1, 2),
            rint(1),
            rint(-1),
            rat(1, 2),
        ]);
        let (l, r) =
            check_prop_a1(&SignSystem::Eps, &SignSystem::Eps, &lam, &[1, 4], &[2, 3, 5]).unwrap();
        assert_eq!(l, r);
        // vanishing total: both sides zero or a zero factor
        let lam = RationalVector::from_ints(&[1, -1]);
        let (l, r) = check_prop_a1(&SignSystem::One, &SignSystem::One, &lam, &[1], &[2]).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn cor_a2_examples() {
        let lam = RationalVector::from_ints(&[1, 1]);
        assert_eq!(check_cor_a2(&lam).unwrap(), rint(1));
        assert_eq!(cor_a2_closed_form(&lam), rint(1));
        let lam = RationalVector::from_ints(&[2, -1]);
        assert_eq!(check_cor_a2(&lam).unwrap(), rint(0));
        let lam = RationalVector::from_ints(&[1, -2]);
        assert_eq!(check_cor_a2(&lam).unwrap(), rint(0));
    }

    #[test]
    fn prop_a3_examples() {
        for (vals, expect) in [
            (vec![1i64, 2], rint(1)),
            (vec![2, -1], rint(2)),
            (vec![-1, 2], rint(0)),
        ] {
            let lam = RationalVector::from_ints(&vals);
            let (l, r) = check_prop_a3(&lam).unwrap();
            assert_eq!(l, expect, "λ = {vals:?}");
            assert_eq!(r, expect, "λ = {vals:?}");
        }
    }

    #[test]
    fn cor_a4_examples() {
        // m=0 splits into two independent one-sided identities
        let lam = RationalVector::from_ints(&[1, -1, 2]);
        let (l, r) = check_cor_a4(3, 0, &lam, &[1, 3], &[2]).unwrap();
        assert_eq!(l, r);
        // n=0, m=1, λ=(1,1): single fused block, lhs = rhs = -c1(2) = -1
        let lam = RationalVector::from_ints(&[1, 1]);
        let (l, r) = check_cor_a4(0, 1, &lam, &[], &[]).unwrap();
        assert_eq!(l, rint(-1));
        assert_eq!(r, rint(-1));
        // ties
        let lam = RationalVector::from_values(&[rint(1), rint(-1), rat(1, 2), rat(-1, 2)]);
        let (l, r) = check_cor_a4(2, 1, &lam, &[2], &[1]).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn rotation_examples() {
        let lam = RationalVector::from_ints(&[-1, -1, 3]);
        let rot = rotation_lemma(&lam).unwrap();
        assert_eq!(rot.count, 2);
        assert!(rot.no_bipartition);
        assert_eq!(rot.positive_rotations, 1);
        assert_eq!(rot.k, 2); // rotation (3,-1,-1)

        let lam = RationalVector::from_ints(&[1, 1]);
        let rot = rotation_lemma(&lam).unwrap();
        assert!(!rot.no_bipartition);
        assert_eq!(rot.count, 2);

        let lam = RationalVector::from_ints(&[-2, 5, -1]);
        let rot = rotation_lemma(&lam).unwrap();
        assert_eq!(rot.k, 1); // rotation (5,-1,-2)

        assert!(rotation_lemma(&RationalVector::from_ints(&[-1, 1])).is_err());
    }

    #[test]
    fn delta_reduction_examples() {
        // λ=(2,-1): δ=1/2, N=2, J={1,2}, λ'=(3/2,-3/2)
        let lam = RationalVector::from_ints(&[2, -1]);
        let red = delta_reduction(&lam, &[1, 2]).unwrap();
        assert_eq!(red.lambda_prime.values(), &[rat(3, 2), rat(-3, 2)]);
        verify_delta_assertions(&lam, &[1, 2]).unwrap();

        // λ=(1,1): δ=1, N=1, J={1}, λ'=(0,1)
        let lam = RationalVector::from_ints(&[1, 1]);
        let red = delta_reduction(&lam, &[1]).unwrap();
        assert_eq!(red.lambda_prime.values(), &[rint(0), rint(1)]);
        verify_delta_assertions(&lam, &[1]).unwrap();

        // invalid J
        assert!(delta_reduction(&lam, &[1, 2]).is_err());
    }

    #[test]
    fn block_examples() {
        // λ=(-1,-1,3), P=({3},{1},{2}), centers blocks 0 and 2
        let lam = RationalVector::from_ints(&[-1, -1, 3]);
        let p = OrderedPartition::new(vec![vec![3], vec![1], vec![2]]);
        let dec = block_decomposition(&lam, &p, &[0, 2]).unwrap();
        assert_eq!(dec.segments.len(), 2);
        assert_eq!((dec.segments[0].start, dec.segments[0].end), (0, 1));
        assert!(dec.segments[0].positive);
        assert!(!dec.segments[1].positive);
        assert_eq!(count_block_decompositions(&lam, &p, &[0, 2]), 1);

        // single center: whole P is one block
        let dec = block_decomposition(&lam, &p, &[0]).unwrap();
        assert_eq!(dec.segments.len(), 1);
        assert_eq!((dec.segments[0].start, dec.segments[0].end), (0, 2));

        // rotation back to positivity is unique
        for s in 0..3 {
            let rotated = p.rotate_blocks(s);
            let (_, q) = rotate_to_positive(&lam, &rotated).unwrap();
            assert!(q.is_positive(&lam, false));
        }
    }

    #[test]
    fn parity_lemma_examples() {
        // λ=(-1,-1,3) has N = 3
        let lam = RationalVector::from_ints(&[-1, -1, 3]);
        for o in check_parity_lemmas(&lam, 1).unwrap() {
            assert!(o.equal, "{o:?}");
            assert!(o.applicable, "{o:?}");
        }
        // λ=(1,1): vanishing lemmas not applicable, identities still hold
        let lam = RationalVector::from_ints(&[1, 1]);
        for o in check_parity_lemmas(&lam, 1).unwrap() {
            assert!(o.equal || !o.applicable, "{o:?}");
        }
        // λ-free mixed vanishing at n = 3, 5
        for n in [3, 5] {
            let (l, r) = check_odd_mixed_vanishing(n).unwrap();
            assert_eq!(l, r);
        }
    }

    #[test]
    fn prop331_small() {
        use crate::root_data::Weight;
        // r=1, t=0: single index, reduces to a c1-type check
        let mu = Weight::from_ints(&[0, 2, 1]); // rank 2 ambient
        let (l, r) = verify_prop331_core(1, 0, &mu, &[1], &[]).unwrap();
        assert_eq!(l, r);
        // r=0, t=0: empty conventions, both sides 1
        let mu = Weight::from_ints(&[0, 1]);
        let (l, r) = verify_prop331_core(0, 0, &mu, &[], &[]).unwrap();
        assert_eq!(l, rint(1));
        assert_eq!(r, rint(1));
        // r=2, t=1 with a generic weight
        let mu = Weight::from_ints(&[1, 5, -2, 3, 1]);
        let (l, r) = verify_prop331_core(2, 1, &mu, &[1], &[2]).unwrap();
        assert_eq!(l, r);
    }
}
