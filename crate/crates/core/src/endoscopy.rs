//! Discrete classification of elliptic endoscopic data of `GSp(2n)`,
//! cuspidal Levi subgroups, and the compatibility triples between the two,
//! with every attached constant computed exactly.
//!
//! Groups are represented purely by their discrete labels: an elliptic
//! datum is `(n1, n2)` with `n1 + n2 = n` and `n2 ≠ 1`; a cuspidal Levi is
//! `(r, t, m)` with `r + 2t + m = n`; a triple over a Levi is
//! `(A, B, m1, m2)` with `A ⊆ {1..r}`, `B ⊆ {1..t}`, `m1 + m2 = m`,
//! `m2 ≠ 1`. Every formula used downstream depends only on these labels.

use crate::arith::{factorial, pow2, rat, rint, Rat};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;

/// An elliptic endoscopic datum of `GSp(2n)`, labeled by the split
/// `n = n1 + n2` with `n2 ≠ 1`. The associated group is
/// `G(Sp(2n1) x SO(2n2))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndoscopicDatum {
    pub n1: usize,
    pub n2: usize,
    /// Order of the outer-automorphism group of the datum: 1 when
    /// `n2 = 0`, 2 when `n2 ≥ 2`.
    pub lambda_order: u8,
    pub label: String,
}

impl EndoscopicDatum {
    pub fn new(n1: usize, n2: usize) -> Result<Self> {
        if n2 == 1 {
            return Err(Error::InvalidArgument(
                "orthogonal rank 1 does not occur in an elliptic datum".into(),
            ));
        }
        Ok(EndoscopicDatum {
            n1,
            n2,
            lambda_order: if n2 == 0 { 1 } else { 2 },
            label: sp_so_label(n1, n2),
        })
    }

    pub fn rank(&self) -> usize {
        self.n1 + self.n2
    }

    /// Tamagawa number: 1 when `n2 = 0`, 2 when `n2 ≥ 2`.
    pub fn tamagawa(&self) -> u64 {
        if self.n2 == 0 {
            1
        } else {
            2
        }
    }

    /// True if the group has an elliptic maximal torus over the reals.
    pub fn is_cuspidal(&self) -> bool {
        self.n2 % 2 == 0
    }
}

/// Human label for `G(Sp(2n1) x SO(2n2))`, collapsing the degenerate
/// factors.
pub fn sp_so_label(n1: usize, n2: usize) -> String {
    match (n1, n2) {
        (_, 0) => format!("GSp({})", 2 * n1),
        (0, _) => format!("GSO({})", 2 * n2),
        _ => format!("G(Sp({})xSO({}))", 2 * n1, 2 * n2),
    }
}

/// Representatives of the elliptic endoscopic data of `GSp(2n)`: one per
/// `n1 ∈ {0..n}` with `n1 ≠ n-1`, listed by decreasing symplectic rank.
pub fn elliptic_data(n: usize) -> Vec<EndoscopicDatum> {
    assert!(n >= 1);
    (0..=n)
        .rev()
        .filter(|&n1| n - n1 != 1)
        .map(|n1| EndoscopicDatum::new(n1, n - n1).unwrap())
        .collect()
}

/// The constant `k` of `G(Sp(2n1) x SO(2n2))` (a real-torus cohomology
/// count): 1 for `n = 0`, `2^{n-1}` when `n2 = 0`, `2^{n-2}` when
/// `n2 ≥ 2`. Requires `n2` even (otherwise there is no elliptic maximal
/// torus and the constant is undefined).
pub fn k_constant(n1: usize, n2: usize) -> Result<u64> {
    if n2 % 2 != 0 {
        return Err(Error::OddOrthogonalRank(n2));
    }
    let n = n1 + n2;
    Ok(if n == 0 {
        1
    } else if n2 == 0 {
        pow2(n - 1)
    } else {
        pow2(n - 2)
    })
}

/// Size of the discrete-series packets of `GSp(2n)(R)`: `2^{n-1}`.
pub fn l_packet_size(n: usize) -> u64 {
    assert!(n >= 1);
    pow2(n - 1)
}

/// The stabilization coefficient `ι(G, H) = τ(G) τ(H)^{-1} |Λ|^{-1}`.
pub fn iota(n: usize, d: &EndoscopicDatum) -> Rat {
    assert_eq!(d.rank(), n);
    rat(1, (d.tamagawa() * d.lambda_order as u64) as i64)
}

/// A cuspidal standard Levi subgroup of `GSp(2n)`, isomorphic to
/// `Gm^r x GL2^t x GSp(2m)` with `n = r + 2t + m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviDatum {
    pub r: usize,
    pub t: usize,
    pub m: usize,
}

impl LeviDatum {
    pub fn new(r: usize, t: usize, m: usize) -> Self {
        LeviDatum { r, t, m }
    }

    pub fn rank(&self) -> usize {
        self.r + 2 * self.t + self.m
    }

    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if self.r > 0 {
            parts.push(format!("Gm^{}", self.r));
        }
        if self.t > 0 {
            parts.push(format!("GL2^{}", self.t));
        }
        parts.push(format!("GSp({})", 2 * self.m));
        parts.join(" x ")
    }

    /// Normalizer order `n_M^G = 2^r r! 2^t t!`.
    pub fn n_m_g(&self) -> u64 {
        pow2(self.r) * factorial(self.r) * pow2(self.t) * factorial(self.t)
    }

    pub fn is_whole_group(&self) -> bool {
        self.r == 0 && self.t == 0
    }
}

/// All cuspidal Levi data of `GSp(2n)`: solutions of `r + 2t + m = n`.
pub fn cuspidal_levis(n: usize) -> Vec<LeviDatum> {
    let mut out = Vec::new();
    for t in 0..=(n / 2) {
        for r in 0..=(n - 2 * t) {
            out.push(LeviDatum::new(r, t, n - 2 * t - r));
        }
    }
    out
}

/// A compatibility triple over a cuspidal Levi `M = (r, t, m)`:
/// a subset `A` of the `Gm` indices, a subset `B` of the `GL2` indices and
/// a split `m = m1 + m2` with `m2 ≠ 1`. The derived data locate the
/// associated endoscopic group of the ambient `GSp(2n)` and the Levi
/// inside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GTriple {
    pub levi: LeviDatum,
    pub a: BTreeSet<usize>,
    pub b: BTreeSet<usize>,
    pub m1: usize,
    pub m2: usize,
    /// `r1 = r - |A|`, `r2 = |A|`, `t1 = t - |B|`, `t2 = |B|`.
    pub r1: usize,
    pub r2: usize,
    pub t1: usize,
    pub t2: usize,
    /// `n1 = r1 + 2 t1 + m1`, `n2 = r2 + 2 t2 + m2`.
    pub n1: usize,
    pub n2: usize,
    pub h_label: String,
    pub m_prime_label: String,
    /// The closed-form normalizer constant `2^{r+t} r1! t1! r2! t2!`.
    pub n_m_prime_h: u64,
    /// Outer-automorphism order of the triple within the ambient group:
    /// 2 when the hermitian part carries a genuine orthogonal factor
    /// (`m2 ≥ 2`), 1 otherwise. For `M = G` this coincides with the
    /// `lambda_order` of the associated elliptic datum.
    pub lambda_g_order: u8,
    /// `m2` and `|A|` even, so the associated groups stay cuspidal.
    pub is_cuspidal: bool,
    /// `n2` even: the associated elliptic datum is relevant at infinity.
    pub is_ell0: bool,
}

impl GTriple {
    pub fn new(
        levi: &LeviDatum,
        a: BTreeSet<usize>,
        b: BTreeSet<usize>,
        m1: usize,
        m2: usize,
    ) -> Result<Self> {
        if m1 + m2 != levi.m {
            return Err(Error::InvalidArgument("m1 + m2 must equal m".into()));
        }
        if m2 == 1 {
            return Err(Error::InvalidArgument("m2 = 1 is excluded".into()));
        }
        if a.iter().any(|i| *i < 1 || *i > levi.r) || b.iter().any(|j| *j < 1 || *j > levi.t) {
            return Err(Error::InvalidArgument("A or B out of range".into()));
        }
        let r1 = levi.r - a.len();
        let r2 = a.len();
        let t1 = levi.t - b.len();
        let t2 = b.len();
        let n1 = r1 + 2 * t1 + m1;
        let n2 = r2 + 2 * t2 + m2;
        let mut m_prime_parts = Vec::new();
        if levi.r > 0 {
            m_prime_parts.push(format!("Gm^{}", levi.r));
        }
        if levi.t > 0 {
            m_prime_parts.push(format!("GL2^{}", levi.t));
        }
        m_prime_parts.push(sp_so_label(m1, m2));
        Ok(GTriple {
            levi: levi.clone(),
            m1,
            m2,
            r1,
            r2,
            t1,
            t2,
            n1,
            n2,
            h_label: sp_so_label(n1, n2),
            m_prime_label: m_prime_parts.join(" x "),
            n_m_prime_h: pow2(levi.r + levi.t)
                * factorial(r1)
                * factorial(t1)
                * factorial(r2)
                * factorial(t2),
            lambda_g_order: if m2 >= 2 { 2 } else { 1 },
            is_cuspidal: m2 % 2 == 0 && a.len() % 2 == 0,
            is_ell0: n2 % 2 == 0,
            a,
            b,
        })
    }

    pub(crate) fn check_levi(&self, levi: &LeviDatum) -> Result<()> {
        if &self.levi != levi {
            return Err(Error::InvalidArgument(
                "triple does not belong to this Levi".into(),
            ));
        }
        Ok(())
    }

    /// The elliptic datum of the ambient group this triple maps to.
    pub fn image_datum(&self) -> Result<EndoscopicDatum> {
        EndoscopicDatum::new(self.n1, self.n2)
    }

    /// The shape of the Levi subgroup of the endoscopic group determined
    /// by this triple.
    pub fn h_levi_shape(&self) -> HLeviShape {
        HLeviShape {
            n1: self.n1,
            n2: self.n2,
            r1: self.r1,
            t1: self.t1,
            m1: self.m1,
            r2: self.r2,
            t2: self.t2,
            m2: self.m2,
        }
    }
}

/// Filters for the triple enumeration.
#[derive(Clone, Copy, Debug)]
pub struct TripleFilters {
    /// Keep only triples whose image datum is elliptic (`n2 ≠ 1`).
    pub require_n2_ne_1: bool,
    /// Keep only triples with `m2` and `|A|` even.
    pub cuspidal_only: bool,
    /// Keep only triples with `n2` even.
    pub ell0_only: bool,
}

impl Default for TripleFilters {
    fn default() -> Self {
        TripleFilters {
            require_n2_ne_1: true,
            cuspidal_only: false,
            ell0_only: false,
        }
    }
}

/// Enumerate the triples over a cuspidal Levi: one per `(A, B, m1, m2)`
/// with `m2 ≠ 1`, subject to the requested filters.
pub fn g_triples(levi: &LeviDatum, filters: &TripleFilters) -> Vec<GTriple> {
    let mut out = Vec::new();
    for amask in 0u64..(1 << levi.r) {
        let a: BTreeSet<usize> = (1..=levi.r).filter(|i| amask & (1 << (i - 1)) != 0).collect();
        for bmask in 0u64..(1 << levi.t) {
            let b: BTreeSet<usize> =
                (1..=levi.t).filter(|j| bmask & (1 << (j - 1)) != 0).collect();
            for m2 in 0..=levi.m {
                if m2 == 1 {
                    continue;
                }
                let tr = GTriple::new(levi, a.clone(), b.clone(), levi.m - m2, m2).unwrap();
                if filters.require_n2_ne_1 && tr.n2 == 1 {
                    continue;
                }
                if filters.cuspidal_only && !tr.is_cuspidal {
                    continue;
                }
                if filters.ell0_only && !tr.is_ell0 {
                    continue;
                }
                out.push(tr);
            }
        }
    }
    out
}

/// Shape of a Levi subgroup of `H = G(Sp(2n1) x SO(2n2))`: the `Gm` and
/// `GL2` factors split between the symplectic side (`r1`, `t1`) and the
/// orthogonal side (`r2`, `t2`), with hermitian blocks `(m1, m2)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HLeviShape {
    pub n1: usize,
    pub n2: usize,
    pub r1: usize,
    pub t1: usize,
    pub m1: usize,
    pub r2: usize,
    pub t2: usize,
    pub m2: usize,
}

impl HLeviShape {
    pub fn is_cuspidal(&self) -> bool {
        self.m2 % 2 == 0
    }

    pub fn label(&self) -> String {
        let r = self.r1 + self.r2;
        let t = self.t1 + self.t2;
        let mut parts = Vec::new();
        if r > 0 {
            parts.push(format!("Gm^{}", r));
        }
        if t > 0 {
            parts.push(format!("GL2^{}", t));
        }
        parts.push(sp_so_label(self.m1, self.m2));
        parts.join(" x ")
    }

    /// Normalizer order `|Nor_H(M_H)(Q) / M_H(Q)|`, computed side by side
    /// in the signed-permutation model (see [`side_normalizer_order`]).
    pub fn normalizer_order(&self) -> u64 {
        side_normalizer_order(SideType::Symplectic, self.r1, self.t1, self.m1)
            * side_normalizer_order(SideType::Orthogonal, self.r2, self.t2, self.m2)
    }

    /// Number of conjugacy classes of Levi subgroups of `H` with this
    /// shape (1 or 2; see [`side_class_count`]).
    pub fn class_count(&self) -> u64 {
        side_class_count(self.r2, self.t2, self.m2)
    }
}

/// Which classical factor a pattern sits in; the orthogonal side only
/// realizes signed permutations with an even number of sign flips.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideType {
    Symplectic,
    Orthogonal,
}

/// Order of `Nor(M)(Q)/M(Q)` for the cuspidal Levi pattern
/// `Gm^r x GL2^t x (rank-m hermitian block)` inside the rank
/// `r + 2t + m` classical factor.
///
/// In the signed-permutation model, the normalizer consists of the signed
/// permutations stabilizing the pattern's root set; on the orthogonal
/// side only even-flip elements exist, and a flip on a `Gm` coordinate
/// needs a compensating flip, which the hermitian block provides exactly
/// when `m ≥ 2`. Dividing out the pattern's inner Weyl group gives:
///
/// - symplectic side: `2^r r! 2^t t!`;
/// - orthogonal side, `m ≥ 2`: `2^r r! 2^t t!`;
/// - orthogonal side, `m = 0`, `r ≥ 1`: `2^{r-1} r! 2^t t!`;
/// - orthogonal side, `m = 0`, `r = 0`: `2^t t!`.
pub fn side_normalizer_order(ty: SideType, r: usize, t: usize, m: usize) -> u64 {
    assert!(ty == SideType::Symplectic || m != 1, "orthogonal block of rank 1");
    let base = pow2(r) * factorial(r) * pow2(t) * factorial(t);
    match ty {
        SideType::Symplectic => base,
        SideType::Orthogonal => {
            if m >= 2 || r == 0 {
                if m == 0 && r == 0 {
                    pow2(t) * factorial(t)
                } else {
                    base
                }
            } else {
                base / 2
            }
        }
    }
}

/// Number of conjugacy classes of Levi subgroups of the orthogonal factor
/// sharing the pattern `(r, t, m)`: 2 exactly when the pattern consists of
/// `GL2` blocks only (`r = m = 0`, `t > 0`, the two classes being swapped
/// by the outer flip), 1 otherwise.
pub fn side_class_count(r: usize, t: usize, m: usize) -> u64 {
    if r == 0 && m == 0 && t > 0 {
        2
    } else {
        1
    }
}

/// Cuspidal Levi shapes of the endoscopic group `H`, enumerated through
/// the triple classification: all splits of `(n1, n2)` into
/// `(r1, t1, m1; r2, t2, m2)` with `m2 ≠ 1`.
pub fn h_levi_shapes(d: &EndoscopicDatum) -> Vec<HLeviShape> {
    let mut out = Vec::new();
    for t1 in 0..=(d.n1 / 2) {
        for r1 in 0..=(d.n1 - 2 * t1) {
            let m1 = d.n1 - 2 * t1 - r1;
            for t2 in 0..=(d.n2 / 2) {
                for r2 in 0..=(d.n2 - 2 * t2) {
                    let m2 = d.n2 - 2 * t2 - r2;
                    if m2 == 1 {
                        continue;
                    }
                    out.push(HLeviShape {
                        n1: d.n1,
                        n2: d.n2,
                        r1,
                        t1,
                        m1,
                        r2,
                        t2,
                        m2,
                    });
                }
            }
        }
    }
    out
}

/// Both sides of the Levi/endoscopy double-counting identity for a test
/// function `phi` supported on cuspidal Levi shapes:
///
/// - left side: over elliptic data `H`, then over Levi classes of `H`,
///   weighted by `|Λ(H)|^{-1} (n_{M_H}^H)^{-1}`;
/// - right side: over cuspidal Levis `M` of `G`, then over triples,
///   weighted by `(n_M^G)^{-1} |Λ_G(triple)|^{-1}`.
///
/// Equality of the two sides is the content of the identity; the caller
/// asserts it.
pub fn double_counting_check<F>(n: usize, mut phi: F) -> (Rat, Rat)
where
    F: FnMut(&EndoscopicDatum, &HLeviShape) -> Rat,
{
    let mut lhs = rint(0);
    for d in elliptic_data(n) {
        let mut inner = rint(0);
        for shape in h_levi_shapes(&d) {
            if !shape.is_cuspidal() {
                continue;
            }
            let weight = rat(
                shape.class_count() as i64,
                shape.normalizer_order() as i64,
            );
            inner += weight * phi(&d, &shape);
        }
        lhs += rat(1, d.lambda_order as i64) * inner;
    }

    let mut rhs = rint(0);
    for levi in cuspidal_levis(n) {
        let mut inner = rint(0);
        for tr in g_triples(&levi, &TripleFilters::default()) {
            let shape = tr.h_levi_shape();
            if !shape.is_cuspidal() {
                continue;
            }
            let d = tr.image_datum().unwrap();
            inner += rat(1, tr.lambda_g_order as i64) * phi(&d, &shape);
        }
        rhs += rat(1, levi.n_m_g() as i64) * inner;
    }

    (lhs, rhs)
}

/// The four-term Tamagawa/torus-constant identity
/// `τ(G)/τ(H) · τ(M')/τ(M) = k(H)/k(G) · k(M)/k(M')` for a cuspidal
/// `(M, triple)` pair. Errors if any of the groups involved fails to be
/// cuspidal.
pub fn k_tau_identity(levi: &LeviDatum, triple: &GTriple) -> Result<bool> {
    triple.check_levi(levi)?;
    if !triple.is_cuspidal {
        return Err(Error::NonCuspidal(format!(
            "triple with m2 = {}, |A| = {}",
            triple.m2,
            triple.a.len()
        )));
    }
    if triple.n2 % 2 != 0 {
        return Err(Error::NonCuspidal(format!("datum with n2 = {}", triple.n2)));
    }
    let n = levi.rank();
    let tau_g = rint(1);
    let tau_h = rint(if triple.n2 == 0 { 1 } else { 2 });
    let tau_m = rint(1);
    let tau_m_prime = rint(if triple.m2 == 0 { 1 } else { 2 });
    let k_g = rint(k_constant(n, 0)? as i64);
    let k_h = rint(k_constant(triple.n1, triple.n2)? as i64);
    let k_m = rint(k_constant(levi.m, 0)? as i64);
    let k_m_prime = rint(k_constant(triple.m1, triple.m2)? as i64);
    let lhs = tau_g / tau_h * (tau_m_prime / tau_m);
    let rhs = k_h / k_g * (k_m / k_m_prime);
    Ok(lhs == rhs)
}
