//! Root datum of `GSp(2n)` (type `C_n` with similitude character) and its
//! Weyl group of signed permutations.
//!
//! Characters of the diagonal torus live in `Z c + sum Z e_i`. Coefficients
//! are stored doubled so that half-integral quantities (the `c/2` terms in
//! roots, the half-sum `rho`) stay in exact integer arithmetic. The basis
//! order is fixed as `(c, e_1, ..., e_n)` everywhere, including in the JSON
//! serialization.

use crate::arith::{rat, rint, Rat};
use crate::{Error, Result};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Element of `X^*(T) ⊗ ½Z`, stored as doubled coefficients
/// `(2a_c, 2a_1, ..., 2a_n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

/// Element of `X_*(T)`, in the dual basis `(c^, ê_1, ..., ê_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coweight(pub Vec<i64>);

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, dc: i64, name: &str| -> fmt::Result {
            if dc == 0 {
                return Ok(());
            }
            let s = if dc > 0 {
                if first {
                    ""
                } else {
                    " + "
                }
            } else {
                if first {
                    "-"
                } else {
                    " - "
                }
            };
            let a = dc.abs();
            if a == 2 {
                write!(f, "{s}{name}")?;
            } else if a % 2 == 0 {
                write!(f, "{s}{}{name}", a / 2)?;
            } else {
                write!(f, "{s}{a}/2 {name}")?;
            }
            first = false;
            Ok(())
        };
        put(f, self.0[0], "c")?;
        for i in 1..self.0.len() {
            put(f, self.0[i], &format!("e{}", i))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n + 1])
    }

    /// Rank `n` (number of `e_i` coordinates).
    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    /// Build from undoubled integer coefficients `(a_c, a_1, ..., a_n)`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Weight(coeffs.iter().map(|a| 2 * a).collect())
    }

    /// Doubled `c` coefficient.
    pub fn dc(&self) -> i64 {
        self.0[0]
    }

    /// Doubled `e_i` coefficient, `i` is 1-based.
    pub fn de(&self, i: usize) -> i64 {
        self.0[i]
    }

    /// `e_i` coefficient as an exact rational, `i` is 1-based.
    pub fn e_coeff(&self, i: usize) -> Rat {
        rat(self.0[i], 2)
    }

    pub fn c_coeff(&self) -> Rat {
        rat(self.0[0], 2)
    }

    /// True if all coefficients are integral (an honest character of `T`).
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|d| d % 2 == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| k * a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| *a == 0)
    }

    /// Dominance for the standard positive system: `a_1 >= ... >= a_n >= 0`.
    pub fn is_dominant(&self) -> bool {
        let n = self.rank();
        for i in 1..n {
            if self.0[i] < self.0[i + 1] {
                return false;
            }
        }
        n == 0 || self.0[n] >= 0
    }
}

impl Coweight {
    pub fn zero(n: usize) -> Self {
        Coweight(vec![0; n + 1])
    }

    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Coweight(coeffs.to_vec())
    }
}

/// Exact canonical pairing `X^*(T) x X_*(T) -> ½Z`, with
/// `<e_i, ê_j> = δ_ij`, `<c, c^> = 1` and the cross pairings zero.
pub fn pairing(x: &Weight, y: &Coweight) -> Result<Rat> {
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch {
            expected: x.rank(),
            got: y.rank(),
        });
    }
    let num: i64 = x.0.iter().zip(&y.0).map(|(a, b)| a * b).sum();
    Ok(rat(num, 2))
}

/// The character `e_i` (1-based).
pub fn e(n: usize, i: usize) -> Weight {
    let mut w = Weight::zero(n);
    w.0[i] = 2;
    w
}

/// The similitude character `c`.
pub fn c(n: usize) -> Weight {
    let mut w = Weight::zero(n);
    w.0[0] = 2;
    w
}

/// The cocharacter `ê_i` (1-based).
pub fn e_hat(n: usize, i: usize) -> Coweight {
    let mut w = Coweight::zero(n);
    w.0[i] = 1;
    w
}

/// All roots of the diagonal torus in `Lie(GSp(2n))`:
/// `±(e_i - c/2) ± (e_j - c/2)` for `i < j` and `±(2e_i - c)`.
/// There are `2n²` of them; for `n = 0` the set is empty.
pub fn roots(n: usize) -> Vec<Weight> {
    let mut out = Vec::with_capacity(2 * n * n);
    for w in positive_roots(n) {
        out.push(w.neg());
        out.push(w);
    }
    out
}

/// The positive system determined by the upper-triangular Borel:
/// `e_i - e_j` and `e_i + e_j - c` for `i < j`, and `2e_i - c`.
pub fn positive_roots(n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(e(n, i).sub(&e(n, j)));
            out.push(e(n, i).add(&e(n, j)).sub(&c(n)));
        }
        out.push(e(n, i).scale(2).sub(&c(n)));
    }
    out
}

/// Simple roots `α_i = e_i - e_{i+1}` for `i < n` and `α_n = 2e_n - c`.
pub fn simple_roots(n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(e(n, i).sub(&e(n, i + 1)));
    }
    if n >= 1 {
        out.push(e(n, n).scale(2).sub(&c(n)));
    }
    out
}

/// The coroot attached to a root: `e_i - e_j ↦ ê_i - ê_j`,
/// `e_i + e_j - c ↦ ê_i + ê_j`, `2e_i - c ↦ ê_i`. For all three shapes
/// this is the coordinatewise signum of the `e`-part.
pub fn coroot(alpha: &Weight) -> Coweight {
    let n = alpha.rank();
    let mut y = Coweight::zero(n);
    for i in 1..=n {
        y.0[i] = alpha.0[i].signum();
    }
    y
}

/// Half-sum of the positive roots.
pub fn rho(n: usize) -> Weight {
    let mut w = Weight::zero(n);
    // doubled coefficients of rho: e_i part (n + 1 - i), c part -n(n+1)/4;
    // doubling gives 2(n+1-i) and -n(n+1)/2.
    let nn = n as i64;
    w.0[0] = -nn * (nn + 1) / 2;
    for i in 1..=n {
        w.0[i] = 2 * (nn + 1 - i as i64);
    }
    w
}

/// The minuscule cocharacter attached to the Siegel setup, normalized so
/// its central component is dropped: `<e_i, μ> = 1` for all `i`,
/// `<c, μ> = 0`. With this normalization `<rho, μ> = n(n+1)/2`.
pub fn mu(n: usize) -> Coweight {
    let mut w = Coweight::zero(n);
    for i in 1..=n {
        w.0[i] = 1;
    }
    w
}

/// The cocharacter `ϖ_s : λ ↦ diag(λ I_s, I_{2(n-s)}, λ^{-1} I_s)`,
/// i.e. `ê_1 + ... + ê_s`.
pub fn varpi(n: usize, s: usize) -> Coweight {
    assert!(s >= 1 && s <= n, "varpi index out of range");
    let mut w = Coweight::zero(n);
    for i in 1..=s {
        w.0[i] = 1;
    }
    w
}

/// An element of the Weyl group `{±1}^n ⋊ S_n`.
///
/// `perm[i]` is the 0-based image of `i` under the underlying permutation;
/// `signs[j]` is the sign attached to (target) coordinate `j`. The group
/// law matches the semidirect action of `S_n` on `{±1}^n` by
/// `σ(ε)_i = ε_{σ^{-1}(i)}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    pub signs: Vec<i8>,
    pub perm: Vec<usize>,
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}{:?}", self.signs, self.perm)
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SignedPermutation", 2)?;
        st.serialize_field("signs", &self.signs)?;
        let perm1: Vec<usize> = self.perm.iter().map(|p| p + 1).collect();
        st.serialize_field("perm", &perm1)?;
        st.end()
    }
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            signs: vec![1; n],
            perm: (0..n).collect(),
        }
    }

    pub fn new(signs: Vec<i8>, perm: Vec<usize>) -> Result<Self> {
        let n = signs.len();
        if perm.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen[p] = true;
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::InvalidArgument("signs must be ±1".into()));
        }
        Ok(SignedPermutation { signs, perm })
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// Longest element: all signs `-1`, identity permutation.
    pub fn longest(n: usize) -> Self {
        SignedPermutation {
            signs: vec![-1; n],
            perm: (0..n).collect(),
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let n = self.rank();
        assert_eq!(n, other.rank());
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        let mut inv1 = vec![0; n];
        for i in 0..n {
            inv1[self.perm[i]] = i;
        }
        for i in 0..n {
            perm[i] = self.perm[other.perm[i]];
        }
        for j in 0..n {
            signs[j] = self.signs[j] * other.signs[inv1[j]];
        }
        SignedPermutation { signs, perm }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
        }
        for j in 0..n {
            signs[j] = self.signs[self.perm[j]];
        }
        SignedPermutation { signs, perm }
    }

    /// Linear action on weights: `c ↦ c`, and `e_i ↦ e_{σ(i)}` when the sign
    /// at `σ(i)` is `+1`, `e_i ↦ c - e_{σ(i)}` when it is `-1`.
    pub fn act(&self, x: &Weight) -> Result<Weight> {
        let n = self.rank();
        if x.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: x.rank(),
            });
        }
        let mut out = Weight::zero(n);
        out.0[0] = x.0[0];
        for i in 1..=n {
            let j = self.perm[i - 1] + 1;
            if self.signs[j - 1] == 1 {
                out.0[j] += x.0[i];
            } else {
                out.0[j] -= x.0[i];
                out.0[0] += x.0[i];
            }
        }
        Ok(out)
    }

    /// Inversion set `Φ(w) = Φ⁺ ∩ (-wΦ⁺) = {α > 0 : w^{-1}α < 0}`.
    pub fn inversion_set(&self) -> Vec<Weight> {
        let winv = self.inverse();
        positive_roots(self.rank())
            .into_iter()
            .filter(|alpha| !is_positive_root_combination(&winv.act(alpha).unwrap()))
            .collect()
    }

    /// Coxeter length `ℓ(w)`.
    pub fn length(&self) -> usize {
        self.inversion_set().len()
    }

    /// `ε(w) = (-1)^{ℓ(w)}`.
    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Positivity test for a (±)root: the first nonzero `e`-coefficient of a
/// positive root is positive.
fn is_positive_root_combination(w: &Weight) -> bool {
    for i in 1..w.0.len() {
        if w.0[i] != 0 {
            return w.0[i] > 0;
        }
    }
    false
}

/// Iterator over all `2^n n!` Weyl group elements, each exactly once.
pub fn weyl_group(n: usize) -> impl Iterator<Item = SignedPermutation> {
    use itertools::Itertools;
    (0..n)
        .permutations(n)
        .collect::<Vec<_>>()
        .into_iter()
        .flat_map(move |perm| {
            (0..(1u32 << n)).map(move |mask| {
                let signs = (0..n)
                    .map(|j| if mask & (1 << j) != 0 { -1 } else { 1 })
                    .collect();
                SignedPermutation {
                    signs,
                    perm: perm.clone(),
                }
            })
        })
}

pub fn weyl_order(n: usize) -> u64 {
    crate::arith::pow2(n) * crate::arith::factorial(n)
}

/// Standard parabolic index: a subset `S` of `{1..n}`. The Levi of `P_S`
/// is `GL_{r_1} x ... x GL_{r_m} x GSp_{2(n-r)}` where the `r_k` are the
/// gaps of `S` and `r = max(S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicIndex {
    pub n: usize,
    pub s: BTreeSet<usize>,
}

impl ParabolicIndex {
    pub fn new(n: usize, s: impl IntoIterator<Item = usize>) -> Result<Self> {
        let s: BTreeSet<usize> = s.into_iter().collect();
        if let Some(&m) = s.iter().max() {
            if m > n || s.contains(&0) {
                return Err(Error::InvalidArgument(format!(
                    "parabolic index out of range for rank {n}"
                )));
            }
        }
        Ok(ParabolicIndex { n, s })
    }

    /// Sizes `r_1, ..., r_m` of the `GL` blocks.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut prev = 0;
        for &s in &self.s {
            out.push(s - prev);
            prev = s;
        }
        out
    }

    /// Rank of the symplectic block, `n - max(S)`.
    pub fn hermitian_rank(&self) -> usize {
        self.n - self.s.iter().max().copied().unwrap_or(0)
    }

    /// Positive roots of the Levi `M_S`.
    pub fn levi_positive_roots(&self) -> Vec<Weight> {
        let n = self.n;
        let r = n - self.hermitian_rank();
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut prev = 1;
        for &s in &self.s {
            blocks.push((prev, s));
            prev = s + 1;
        }
        let mut out = Vec::new();
        for &(lo, hi) in &blocks {
            for i in lo..=hi {
                for j in (i + 1)..=hi {
                    out.push(e(n, i).sub(&e(n, j)));
                }
            }
        }
        for i in (r + 1)..=n {
            for j in (i + 1)..=n {
                out.push(e(n, i).sub(&e(n, j)));
                out.push(e(n, i).add(&e(n, j)).sub(&c(n)));
            }
            out.push(e(n, i).scale(2).sub(&c(n)));
        }
        out
    }

    /// Roots of the torus in `Lie(N_S)`: positive roots not in the Levi.
    pub fn nilradical_roots(&self) -> Vec<Weight> {
        let levi: BTreeSet<Weight> = self.levi_positive_roots().into_iter().collect();
        positive_roots(self.n)
            .into_iter()
            .filter(|a| !levi.contains(a))
            .collect()
    }

    /// Order of the Weyl group of the Levi.
    pub fn levi_weyl_order(&self) -> u64 {
        let m = self.hermitian_rank();
        let mut acc = crate::arith::pow2(m) * crate::arith::factorial(m);
        for b in self.block_sizes() {
            acc *= crate::arith::factorial(b);
        }
        acc
    }
}

/// Minimal-length representatives of `Ω_{M_S} \ Ω`: the elements whose
/// inversion set lies inside the nilradical roots of `P_S`.
pub fn kostant_representatives(n: usize, s: &ParabolicIndex) -> Vec<SignedPermutation> {
    let levi: BTreeSet<Weight> = s.levi_positive_roots().into_iter().collect();
    weyl_group(n)
        .filter(|w| w.inversion_set().iter().all(|a| !levi.contains(a)))
        .collect()
}

/// A rational point of the diagonal torus, written `(c, (x_1, ..., x_n))`
/// with all entries nonzero; corresponds to
/// `diag(x_1, ..., x_n, c/x_n, ..., c/x_1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusPoint {
    pub c: Rat,
    pub coords: Vec<Rat>,
}

impl TorusPoint {
    pub fn new(c: Rat, coords: Vec<Rat>) -> Result<Self> {
        if c.is_zero() || coords.iter().any(|x| x.is_zero()) {
            return Err(Error::InvalidArgument(
                "torus coordinates must be nonzero".into(),
            ));
        }
        Ok(TorusPoint { c, coords })
    }

    /// Build from the `2n` diagonal entries, checking the similitude
    /// constraint `x_i x_{2n+1-i} = const`.
    pub fn from_diagonal(diag: &[Rat]) -> Result<Self> {
        let len = diag.len();
        if len % 2 != 0 {
            return Err(Error::InvalidArgument("need an even number of entries".into()));
        }
        let n = len / 2;
        let cval = diag[0] * diag[len - 1];
        for i in 0..n {
            if diag[i] * diag[len - 1 - i] != cval {
                return Err(Error::InvalidArgument(
                    "similitude constraint violated".into(),
                ));
            }
        }
        TorusPoint::new(cval, diag[..n].to_vec())
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// Evaluate an integral weight at this point.
    pub fn eval(&self, w: &Weight) -> Result<Rat> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        if !w.is_integral() {
            return Err(Error::InvalidArgument(
                "cannot evaluate a half-integral weight on a torus point".into(),
            ));
        }
        let mut acc = rint(1);
        acc *= pow_rat(&self.c, w.0[0] / 2);
        for i in 1..=self.rank() {
            acc *= pow_rat(&self.coords[i - 1], w.0[i] / 2);
        }
        Ok(acc)
    }

    /// Weyl action on torus points: the sign flip at `i` sends
    /// `x_i ↦ c / x_i`, then coordinates are permuted.
    pub fn acted_by(&self, w: &SignedPermutation) -> Result<TorusPoint> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        let n = self.rank();
        let mut coords = vec![rint(0); n];
        for i in 0..n {
            let j = w.perm[i];
            coords[j] = if w.signs[j] == 1 {
                self.coords[i]
            } else {
                self.c / self.coords[i]
            };
        }
        TorusPoint::new(self.c, coords)
    }

    /// True if no root takes the value 1 at this point.
    pub fn is_regular(&self) -> bool {
        roots(self.rank())
            .iter()
            .all(|a| self.eval(a).map(|v| v != rint(1)).unwrap_or(false))
    }
}

fn pow_rat(x: &Rat, e: i64) -> Rat {
    let mut acc = rint(1);
    let (mut base, mut k) = if e >= 0 {
        (*x, e)
    } else {
        (x.recip(), -e)
    };
    while k > 0 {
        if k & 1 == 1 {
            acc *= base;
        }
        base *= base;
        k >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn root_counts() {
        assert_eq!(roots(1).len(), 2);
        assert_eq!(roots(2).len(), 8);
        assert_eq!(roots(3).len(), 18);
        assert!(roots(0).is_empty());
        // closed under negation
        let r3: BTreeSet<Weight> = roots(3).into_iter().collect();
        for a in &r3 {
            assert!(r3.contains(&a.neg()));
        }
    }

    #[test]
    fn rank_one_roots_are_plus_minus_long() {
        let r = roots(1);
        let long = e(1, 1).scale(2).sub(&c(1));
        assert!(r.contains(&long));
        assert!(r.contains(&long.neg()));
    }

    #[test]
    fn weyl_group_sizes() {
        assert_eq!(weyl_group(0).count(), 1);
        assert_eq!(weyl_group(1).count(), 2);
        assert_eq!(weyl_group(2).count(), 8);
        assert_eq!(weyl_group(3).count(), 48);
        let distinct: BTreeSet<_> = weyl_group(3).map(|w| (w.signs, w.perm)).collect();
        assert_eq!(distinct.len(), 48);
    }

    #[test]
    fn sign_flip_reflects_long_root() {
        // n = 1: the flip sends e_1 to c - e_1, so 2e_1 - c ↦ -(2e_1 - c).
        let w = SignedPermutation::longest(1);
        let alpha = e(1, 1).scale(2).sub(&c(1));
        assert_eq!(w.act(&alpha).unwrap(), alpha.neg());
        assert_eq!(w.act(&e(1, 1)).unwrap(), c(1).sub(&e(1, 1)));
    }

    #[test]
    fn action_permutes_roots() {
        for n in 1..=3 {
            let rootset: BTreeSet<Weight> = roots(n).into_iter().collect();
            for w in weyl_group(n) {
                let image: BTreeSet<Weight> =
                    rootset.iter().map(|a| w.act(a).unwrap()).collect();
                assert_eq!(image, rootset);
            }
        }
    }

    #[test]
    fn inversion_sets() {
        assert!(SignedPermutation::identity(3).inversion_set().is_empty());
        for n in 1..=3 {
            let w0 = SignedPermutation::longest(n);
            assert_eq!(w0.length(), n * n);
            let inv: BTreeSet<Weight> = w0.inversion_set().into_iter().collect();
            let pos: BTreeSet<Weight> = positive_roots(n).into_iter().collect();
            assert_eq!(inv, pos);
        }
        // simple reflection in α_n for n = 2 inverts exactly {2e_2 - c}
        let s = SignedPermutation::new(vec![1, -1], vec![0, 1]).unwrap();
        let inv = s.inversion_set();
        assert_eq!(inv, vec![e(2, 2).scale(2).sub(&c(2))]);
        assert_eq!(s.length(), 1);
    }

    #[test]
    fn sum_of_positive_roots_is_two_rho() {
        for n in 1..=5 {
            let mut acc = Weight::zero(n);
            for a in positive_roots(n) {
                acc = acc.add(&a);
            }
            assert_eq!(acc, rho(n).scale(2));
        }
    }

    #[test]
    fn simple_reflections_have_length_one() {
        for n in 1..=4 {
            for alpha in simple_roots(n) {
                // build the reflection: find the Weyl element sending alpha to
                // -alpha and fixing the other positive roots' positivity count
                let refl = weyl_group(n)
                    .find(|w| w.length() == 1 && w.inversion_set() == vec![alpha.clone()]);
                assert!(refl.is_some(), "missing simple reflection for {alpha}");
            }
        }
    }

    #[test]
    fn rho_mu_pairings() {
        for n in 1..=6 {
            let v = pairing(&rho(n), &mu(n)).unwrap();
            assert_eq!(v, rint((n * (n + 1) / 2) as i64));
        }
        assert_eq!(pairing(&Weight::zero(3), &mu(3)).unwrap(), rint(0));
        // <rho, varpi_s> = n s - s(s-1)/2
        for n in 1..=5i64 {
            for s in 1..=n {
                let v = pairing(&rho(n as usize), &varpi(n as usize, s as usize)).unwrap();
                assert_eq!(v, rint(n * s - s * (s - 1) / 2));
            }
        }
    }

    #[test]
    fn pairing_rank_mismatch() {
        assert!(pairing(&rho(2), &mu(3)).is_err());
    }

    #[test]
    fn roots_pair_integrally_with_coroots() {
        for n in 1..=4 {
            for alpha in roots(n) {
                for beta in roots(n) {
                    let v = pairing(&alpha, &coroot(&beta)).unwrap();
                    assert!(v.is_integer(), "<{alpha}, {beta}^> = {v}");
                }
                // Cartan integer <alpha, alpha^> = 2
                assert_eq!(pairing(&alpha, &coroot(&alpha)).unwrap(), rint(2));
            }
        }
    }

    #[test]
    fn kostant_representative_counts() {
        // n=1, S={1}: the Levi is the torus, all 2 elements appear
        let p = ParabolicIndex::new(1, [1]).unwrap();
        assert_eq!(kostant_representatives(1, &p).len(), 2);
        // n=2, S={2}: Levi GL_2, 8/2 = 4 representatives
        let p = ParabolicIndex::new(2, [2]).unwrap();
        assert_eq!(kostant_representatives(2, &p).len(), 4);
        // S=∅: only the identity
        let p = ParabolicIndex::new(2, []).unwrap();
        let reps = kostant_representatives(2, &p);
        assert_eq!(reps, vec![SignedPermutation::identity(2)]);
        // counts |Ω| / |Ω_M| in general
        for n in 1..=3 {
            for mask in 0..(1u32 << n) {
                let s: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let p = ParabolicIndex::new(n, s).unwrap();
                let reps = kostant_representatives(n, &p);
                assert_eq!(reps.len() as u64, weyl_order(n) / p.levi_weyl_order());
            }
        }
    }

    #[test]
    fn kostant_factorization_is_unique() {
        // every ω factors uniquely as ω_M · ω' with ω' in the transversal
        let n = 2;
        let p = ParabolicIndex::new(n, [1]).unwrap();
        let reps = kostant_representatives(n, &p);
        let levi: BTreeSet<Weight> = p.levi_positive_roots().into_iter().collect();
        let levi_elts: Vec<SignedPermutation> = weyl_group(n)
            .filter(|w| w.inversion_set().iter().all(|a| levi.contains(a)))
            .collect();
        let mut seen = BTreeSet::new();
        for wm in &levi_elts {
            for wp in &reps {
                let w = wm.compose(wp);
                assert!(seen.insert((w.signs.clone(), w.perm.clone())));
            }
        }
        assert_eq!(seen.len() as u64, weyl_order(n));
    }

    #[test]
    fn torus_blocks() {
        let p = ParabolicIndex::new(5, [2, 3]).unwrap();
        assert_eq!(p.block_sizes(), vec![2, 1]);
        assert_eq!(p.hermitian_rank(), 2);
    }

    #[test]
    fn torus_from_diagonal() {
        // diag(2, 3, 3, 4) violates the similitude constraint; a valid one
        // is diag(2, 3, 5/3, 5/2) with c = 5
        let bad = [rint(2), rint(3), rint(3), rint(4)];
        assert!(TorusPoint::from_diagonal(&bad).is_err());
        let good = [rint(2), rint(3), rat(5, 3), rat(5, 2)];
        let t = TorusPoint::from_diagonal(&good).unwrap();
        assert_eq!(t.c, rint(5));
        assert_eq!(t.coords, vec![rint(2), rint(3)]);
        assert!(TorusPoint::from_diagonal(&[rint(1)]).is_err());
    }

    #[test]
    fn character_action_compatibility() {
        // (w·χ)(t) = χ(w^{-1}·t)
        let t = TorusPoint::new(rint(6), vec![rint(2), rint(3)]).unwrap();
        for w in weyl_group(2) {
            for x in [e(2, 1), c(2), e(2, 1).add(&e(2, 2)).sub(&c(2))] {
                let lhs = t.eval(&w.act(&x).unwrap()).unwrap();
                let rhs = t.acted_by(&w.inverse()).unwrap().eval(&x).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    proptest! {
        #[test]
        fn group_action_property(seed1 in 0u64..48, seed2 in 0u64..48, wi in 0usize..3) {
            let all: Vec<SignedPermutation> = weyl_group(3).collect();
            let w1 = &all[seed1 as usize];
            let w2 = &all[seed2 as usize];
            let xs = [rho(3), e(3,1), e(3,2).add(&c(3))];
            let x = &xs[wi];
            let lhs = w1.act(&w2.act(x).unwrap()).unwrap();
            let rhs = w1.compose(w2).act(x).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn length_parity_is_homomorphism(i in 0u64..48, j in 0u64..48) {
            let all: Vec<SignedPermutation> = weyl_group(3).collect();
            let w1 = &all[i as usize];
            let w2 = &all[j as usize];
            let lw = w1.compose(w2).length();
            prop_assert_eq!((lw % 2) as i64, ((w1.length() + w2.length()) % 2) as i64);
        }

        #[test]
        fn inverse_composes_to_identity(i in 0u64..48) {
            let all: Vec<SignedPermutation> = weyl_group(3).collect();
            let w = &all[i as usize];
            prop_assert_eq!(w.compose(&w.inverse()), SignedPermutation::identity(3));
        }
    }
}
