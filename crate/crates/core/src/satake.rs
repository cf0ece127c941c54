//! Explicit spherical transforms as exact Laurent polynomials, and their
//! factorization identities.
//!
//! All polynomials live in `Z[p^{±1}, X^{±1}, X_1^{±1}, ..., X_n^{±1}]`
//! with `p` formal, so each identity is verified for every prime at once.

use crate::arith::rint;
use crate::endoscopy::{GTriple, LeviDatum};
use crate::laurent::LaurentPolynomial;
use crate::root_data::SignedPermutation;
use crate::Result;
use std::collections::BTreeSet;

/// Transform of the basic double-coset function at level `a`:
/// `p^{a n(n+1)/2} X^{-1} Σ_{I ⊆ {1..n}} Π_{i∈I} X_i`.
pub fn satake_phi(n: usize, a: i64) -> LaurentPolynomial {
    assert!(a >= 1, "level must be positive");
    let mut acc = LaurentPolynomial::zero(n);
    for mask in 0u64..(1 << n) {
        let ei: Vec<i64> = (0..n)
            .map(|i| if mask & (1 << i) != 0 { 1 } else { 0 })
            .collect();
        acc = &acc + &LaurentPolynomial::monomial(n, -1, &ei, 0, rint(1));
    }
    let nn = n as i64;
    &acc * &LaurentPolynomial::p_pow(n, a * nn * (nn + 1) / 2)
}

/// The sign-twisted transfer polynomial
/// `p^{a n(n+1)/2} X^{-a} Σ_{I ⊆ {1..n}} (-1)^{|I∩K|} Π_{i∈I} X_i^a`.
pub fn satake_transfer(n: usize, a: i64, k: &BTreeSet<usize>) -> LaurentPolynomial {
    assert!(a >= 1, "level must be positive");
    assert!(k.iter().all(|i| *i >= 1 && *i <= n), "K must lie in 1..=n");
    let mut acc = LaurentPolynomial::zero(n);
    for mask in 0u64..(1 << n) {
        let mut sign = 1i64;
        let ei: Vec<i64> = (0..n)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    if k.contains(&(i + 1)) {
                        sign = -sign;
                    }
                    a
                } else {
                    0
                }
            })
            .collect();
        acc = &acc + &LaurentPolynomial::monomial(n, -a, &ei, 0, rint(sign));
    }
    let nn = n as i64;
    &acc * &LaurentPolynomial::p_pow(n, a * nn * (nn + 1) / 2)
}

/// The seven transforms attached to a cuspidal Levi `M = (r, t, m)` and a
/// triple `(A, B, m1, m2)`, together with the index sets `K' ⊆ K` used in
/// the sign twists: `K' = {r+2t+m1+1, ..., n}` and
/// `K = A ∪ {r+2j-1, r+2j : j ∈ B} ∪ K'`.
#[derive(Clone, Debug)]
pub struct SatakeFamily {
    pub n: usize,
    pub a: i64,
    pub levi: LeviDatum,
    pub triple: GTriple,
    pub k: BTreeSet<usize>,
    pub k_prime: BTreeSet<usize>,
    /// Transform of the basic function on the big group.
    pub phi: LaurentPolynomial,
    /// Transform of its constant term along `M`; equals `phi`.
    pub phi_m: LaurentPolynomial,
    /// Transform of the basic function of `M` itself.
    pub phi_upper_m: LaurentPolynomial,
    /// Endoscopic transfer of `phi_upper_m`.
    pub f_m_prime: LaurentPolynomial,
    /// Endoscopic transfer of `phi`; also its constant term along `M_H`.
    pub f_h: LaurentPolynomial,
    pub f_h_m_h: LaurentPolynomial,
    /// Transfer of the constant term `phi_m`.
    pub psi_m_prime: LaurentPolynomial,
}

/// `K'` for the hermitian split `(m1, m2)` of a Levi of rank data `(r,t,m)`.
fn k_prime_set(r: usize, t: usize, m1: usize, m: usize) -> BTreeSet<usize> {
    let n = r + 2 * t + m;
    ((r + 2 * t + m1 + 1)..=n).collect()
}

fn k_set(triple: &GTriple) -> BTreeSet<usize> {
    let r = triple.levi.r;
    let t = triple.levi.t;
    let mut k: BTreeSet<usize> = triple.a.iter().copied().collect();
    for &j in &triple.b {
        k.insert(r + 2 * j - 1);
        k.insert(r + 2 * j);
    }
    k.extend(k_prime_set(r, t, triple.m1, triple.levi.m));
    k
}

/// Sum of `Π_{i∈I} X_i^a` over subsets `I` of `support`, signed by
/// `(-1)^{|I ∩ twist|}`, times `X^{x_exp}`.
fn subset_sum(
    n: usize,
    a: i64,
    support: &BTreeSet<usize>,
    twist: &BTreeSet<usize>,
    x_exp: i64,
) -> LaurentPolynomial {
    let sup: Vec<usize> = support.iter().copied().collect();
    let mut acc = LaurentPolynomial::zero(n);
    for mask in 0u64..(1 << sup.len()) {
        let mut ei = vec![0i64; n];
        let mut sign = 1i64;
        for (b, &i) in sup.iter().enumerate() {
            if mask & (1 << b) != 0 {
                ei[i - 1] = a;
                if twist.contains(&i) {
                    sign = -sign;
                }
            }
        }
        acc = &acc + &LaurentPolynomial::monomial(n, x_exp, &ei, 0, rint(sign));
    }
    acc
}

impl SatakeFamily {
    pub fn build(levi: &LeviDatum, triple: &GTriple, a: i64) -> Result<SatakeFamily> {
        triple.check_levi(levi)?;
        let (r, t, m) = (levi.r, levi.t, levi.m);
        let n = levi.rank();
        let nn = n as i64;
        let mm = m as i64;
        let k_prime = k_prime_set(r, t, triple.m1, m);
        let k = k_set(triple);
        let hermitian: BTreeSet<usize> = ((r + 2 * t + 1)..=n).collect();
        let all: BTreeSet<usize> = (1..=n).collect();
        let empty = BTreeSet::new();

        let p_full = LaurentPolynomial::p_pow(n, a * nn * (nn + 1) / 2);
        let p_herm = LaurentPolynomial::p_pow(n, a * mm * (mm + 1) / 2);

        let phi = satake_phi(n, a);
        let phi_m = phi.clone();
        let phi_upper_m = &p_herm * &subset_sum(n, 1, &hermitian, &empty, -1);
        let f_m_prime = &p_herm * &subset_sum(n, a, &hermitian, &k_prime, -a);
        let f_h = &p_full * &subset_sum(n, a, &all, &k, -a);
        let f_h_m_h = f_h.clone();
        let psi_m_prime = &p_full * &subset_sum(n, a, &all, &k_prime, -a);

        Ok(SatakeFamily {
            n,
            a,
            levi: levi.clone(),
            triple: triple.clone(),
            k,
            k_prime,
            phi,
            phi_m,
            phi_upper_m,
            f_m_prime,
            f_h,
            f_h_m_h,
            psi_m_prime,
        })
    }

    /// The factor `ψ_I = Π_{i∈I} X_i^a` on the split-torus part.
    pub fn psi_linear(&self, subset: &BTreeSet<usize>) -> LaurentPolynomial {
        let mut ei = vec![0i64; self.n];
        for &i in subset {
            assert!(i >= 1 && i <= self.levi.r);
            ei[i - 1] = self.a;
        }
        LaurentPolynomial::monomial(self.n, 0, &ei, 0, rint(1))
    }

    /// The degree-`d` factor on the `j`-th `GL_2` block: `1`,
    /// `X_{r+2j-1}^a + X_{r+2j}^a`, or `X_{r+2j-1}^a X_{r+2j}^a`.
    pub fn psi_gl2(&self, j: usize, d: u8) -> LaurentPolynomial {
        assert!(j >= 1 && j <= self.levi.t);
        let n = self.n;
        let lo = self.levi.r + 2 * j - 1;
        let hi = lo + 1;
        match d {
            0 => LaurentPolynomial::one(n),
            1 => {
                let mut e1 = vec![0i64; n];
                e1[lo - 1] = self.a;
                let mut e2 = vec![0i64; n];
                e2[hi - 1] = self.a;
                &LaurentPolynomial::monomial(n, 0, &e1, 0, rint(1))
                    + &LaurentPolynomial::monomial(n, 0, &e2, 0, rint(1))
            }
            2 => {
                let mut e = vec![0i64; n];
                e[lo - 1] = self.a;
                e[hi - 1] = self.a;
                LaurentPolynomial::monomial(n, 0, &e, 0, rint(1))
            }
            _ => panic!("block degree must be 0, 1 or 2"),
        }
    }

    /// The hermitian factor
    /// `ψ_h = X^{-a} Σ_{I ⊆ {r+2t+1..n}} (-1)^{|I∩K'|} Π X_i^a`.
    pub fn psi_hermitian(&self) -> LaurentPolynomial {
        let hermitian: BTreeSet<usize> = ((self.levi.r + 2 * self.levi.t + 1)..=self.n).collect();
        subset_sum(self.n, self.a, &hermitian, &self.k_prime, -self.a)
    }

    /// Check the three factorization identities as exact polynomial
    /// equalities:
    ///
    /// 1. `f^{M'} = p^{am(m+1)/2} ψ_∅ ψ_1^{(0)} ... ψ_t^{(0)} ψ_h`
    /// 2. `ψ^{M'} = p^{an(n+1)/2} (Σ_I ψ_I) Π_j (ψ_j^{(0)}+ψ_j^{(1)}+ψ_j^{(2)}) ψ_h`
    /// 3. `f^H_{M_H} = p^{an(n+1)/2} (Σ_I (-1)^{|I∩A|} ψ_I)
    ///     Π_{j∈B} (ψ_j^{(0)}-ψ_j^{(1)}+ψ_j^{(2)})
    ///     Π_{j∉B} (ψ_j^{(0)}+ψ_j^{(1)}+ψ_j^{(2)}) ψ_h`
    ///
    /// The middle product in (3) twists exactly the blocks in `B` (and the
    /// first factor the indices in `A`), matching the set `K` in the direct
    /// formula for `f^H_{M_H}`.
    pub fn verify_factorizations(&self) -> bool {
        let n = self.n;
        let nn = n as i64;
        let mm = self.levi.m as i64;
        let a = self.a;
        let r = self.levi.r;
        let t = self.levi.t;
        let psi_h = self.psi_hermitian();
        let p_full = LaurentPolynomial::p_pow(n, a * nn * (nn + 1) / 2);
        let p_herm = LaurentPolynomial::p_pow(n, a * mm * (mm + 1) / 2);

        // (1)
        let mut rhs1 = self.psi_linear(&BTreeSet::new());
        for j in 1..=t {
            rhs1 = &rhs1 * &self.psi_gl2(j, 0);
        }
        rhs1 = &(&rhs1 * &psi_h) * &p_herm;
        if rhs1 != self.f_m_prime {
            return false;
        }

        // sum of ψ_I over subsets of {1..r}, optionally sign-twisted by A
        let linear_sum = |twist: Option<&BTreeSet<usize>>| {
            let mut acc = LaurentPolynomial::zero(n);
            for mask in 0u64..(1 << r) {
                let subset: BTreeSet<usize> =
                    (1..=r).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let mut term = self.psi_linear(&subset);
                if let Some(aset) = twist {
                    if subset.intersection(aset).count() % 2 == 1 {
                        term = (&term).scale(rint(-1));
                    }
                }
                acc = &acc + &term;
            }
            acc
        };

        // (2)
        let mut rhs2 = linear_sum(None);
        for j in 1..=t {
            let block = &(&self.psi_gl2(j, 0) + &self.psi_gl2(j, 1)) + &self.psi_gl2(j, 2);
            rhs2 = &rhs2 * &block;
        }
        rhs2 = &(&rhs2 * &psi_h) * &p_full;
        if rhs2 != self.psi_m_prime {
            return false;
        }

        // (3)
        let mut rhs3 = linear_sum(Some(&self.triple.a));
        for j in 1..=t {
            let middle = if self.triple.b.contains(&j) {
                &(&self.psi_gl2(j, 0) - &self.psi_gl2(j, 1)) + &self.psi_gl2(j, 2)
            } else {
                &(&self.psi_gl2(j, 0) + &self.psi_gl2(j, 1)) + &self.psi_gl2(j, 2)
            };
            rhs3 = &rhs3 * &middle;
        }
        rhs3 = &(&rhs3 * &psi_h) * &p_full;
        rhs3 == self.f_h_m_h
    }
}

/// The subgroup of the Weyl group preserving the twist set `K`: signed
/// permutations stabilizing `K`, with an even number of sign flips inside
/// `K`. This is the Weyl group of the endoscopic group attached to `K`
/// (full hyperoctahedral on the complement, even-sign on `K`).
pub fn twist_stabilizer(n: usize, k: &BTreeSet<usize>) -> Vec<SignedPermutation> {
    crate::root_data::weyl_group(n)
        .filter(|w| {
            let stable = (1..=n).all(|i| {
                let j = w.perm[i - 1] + 1;
                k.contains(&i) == k.contains(&j)
            });
            if !stable {
                return false;
            }
            let flips_in_k = k.iter().filter(|i| w.signs[**i - 1] == -1).count();
            flips_in_k % 2 == 0
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endoscopy::{g_triples, TripleFilters};
    use crate::root_data::weyl_group;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn phi_small_cases() {
        // n=1, a=1: p^1 X^{-1} (1 + X_1)
        let f = satake_phi(1, 1);
        let expect = &(&LaurentPolynomial::monomial(1, -1, &[0], 0, rint(1))
            + &LaurentPolynomial::monomial(1, -1, &[1], 0, rint(1)))
            * &LaurentPolynomial::p_pow(1, 1);
        assert_eq!(f, expect);

        // n=2, a=1: p^3 X^{-1}(1+X_1)(1+X_2)
        let f = satake_phi(2, 1);
        let x1 = LaurentPolynomial::xi(2, 1);
        let x2 = LaurentPolynomial::xi(2, 2);
        let one = LaurentPolynomial::one(2);
        let prod = &(&one + &x1) * &(&one + &x2);
        let expect = &(&prod * &LaurentPolynomial::monomial(2, -1, &[0, 0], 0, rint(1)))
            * &LaurentPolynomial::p_pow(2, 3);
        assert_eq!(f, expect);
        assert_eq!(f.num_terms(), 4);

        // n=0: p^0 X^{-1}
        let f = satake_phi(0, 1);
        assert_eq!(f, LaurentPolynomial::monomial(0, -1, &[], 0, rint(1)));
    }

    #[test]
    fn transfer_small_cases() {
        // n=2, a=1, K={1,2}: p^3 X^{-1}(1-X_1)(1-X_2)
        let f = satake_transfer(2, 1, &set(&[1, 2]));
        let x1 = LaurentPolynomial::xi(2, 1);
        let x2 = LaurentPolynomial::xi(2, 2);
        let one = LaurentPolynomial::one(2);
        let prod = &(&one - &x1) * &(&one - &x2);
        let expect = &(&prod * &LaurentPolynomial::monomial(2, -1, &[0, 0], 0, rint(1)))
            * &LaurentPolynomial::p_pow(2, 3);
        assert_eq!(f, expect);

        // K=∅ reduces to satake_phi at a=1
        assert_eq!(satake_transfer(2, 1, &set(&[])), satake_phi(2, 1));

        // n=1, a=2, K={1}: p^2 X^{-2} (1 - X_1^2)
        let f = satake_transfer(1, 2, &set(&[1]));
        let expect = &(&LaurentPolynomial::monomial(1, -2, &[0], 0, rint(1))
            - &LaurentPolynomial::monomial(1, -2, &[2], 0, rint(1)))
            * &LaurentPolynomial::p_pow(1, 2);
        assert_eq!(f, expect);
    }

    #[test]
    fn phi_is_weyl_invariant() {
        for n in 0..=3 {
            for a in 1..=2 {
                let f = satake_phi(n, a);
                for w in weyl_group(n) {
                    assert_eq!(f.weyl_act(&w).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn transfer_invariant_under_twist_stabilizer() {
        let n = 3;
        for kv in [vec![], vec![3], vec![2, 3], vec![1, 2, 3]] {
            let k = set(&kv);
            let f = satake_transfer(n, 1, &k);
            for w in twist_stabilizer(n, &k) {
                assert_eq!(f.weyl_act(&w).unwrap(), f, "K = {:?}, w = {:?}", k, w);
            }
        }
    }

    #[test]
    fn single_flip_inside_twist_negates() {
        let n = 2;
        let k = set(&[2]);
        let f = satake_transfer(n, 1, &k);
        let w = SignedPermutation::new(vec![1, -1], vec![0, 1]).unwrap();
        assert_eq!(f.weyl_act(&w).unwrap(), (&f).scale(rint(-1)));
    }

    #[test]
    fn family_collapses_when_levi_is_whole_group() {
        // M = G: r = t = 0, hermitian part everything; f_h equals the
        // transfer with K = K'.
        let levi = LeviDatum::new(0, 0, 2);
        let triples = g_triples(&levi, &TripleFilters::default());
        for tr in triples {
            let fam = SatakeFamily::build(&levi, &tr, 1).unwrap();
            assert_eq!(fam.k, fam.k_prime);
            assert_eq!(fam.f_h, satake_transfer(2, 1, &fam.k_prime));
            assert_eq!(fam.f_m_prime, fam.f_h);
            assert!(fam.verify_factorizations());
        }
    }

    #[test]
    fn family_example_n2() {
        // n=2, M=(1,0,1), triple (∅,∅,1,0): K' = ∅,
        // f^H_{M_H} = p^3 (Σ_{I⊆{1}} ψ_I) ψ_h with ψ_h = X^{-1} Σ_{I⊆{2}} Π X_i
        let levi = LeviDatum::new(1, 0, 1);
        let triples = g_triples(&levi, &TripleFilters::default());
        let tr = triples
            .iter()
            .find(|t| t.a.is_empty() && t.m1 == 1)
            .unwrap();
        let fam = SatakeFamily::build(&levi, tr, 1).unwrap();
        assert!(fam.k_prime.is_empty());
        let psi_h = fam.psi_hermitian();
        let lin = &fam.psi_linear(&set(&[])) + &fam.psi_linear(&set(&[1]));
        let rhs = &(&lin * &psi_h) * &LaurentPolynomial::p_pow(2, 3);
        assert_eq!(fam.f_h_m_h, rhs);
        assert!(fam.verify_factorizations());
    }

    #[test]
    fn family_example_n3_signs() {
        // n=3, M=(1,0,2), triple ({1},∅,0,2): the ψ_{{1}} term is flipped
        // and ψ_h carries the K' = {2,3} twist.
        let levi = LeviDatum::new(1, 0, 2);
        let triples = g_triples(&levi, &TripleFilters::default());
        let tr = triples
            .iter()
            .find(|t| t.a.contains(&1) && t.m2 == 2)
            .unwrap();
        let fam = SatakeFamily::build(&levi, tr, 1).unwrap();
        assert_eq!(fam.k_prime, set(&[2, 3]));
        assert_eq!(fam.k, set(&[1, 2, 3]));
        assert!(fam.verify_factorizations());
    }

    #[test]
    fn factorizations_with_gl2_blocks() {
        // n=3, M=(1,1,0), triple (∅,{1},0,0)
        let levi = LeviDatum::new(1, 1, 0);
        let triples = g_triples(&levi, &TripleFilters::default());
        for tr in &triples {
            let fam = SatakeFamily::build(&levi, tr, 1).unwrap();
            assert!(fam.verify_factorizations());
        }
        // n=4, M=(0,1,2), triple (∅,{1},0,2)
        let levi = LeviDatum::new(0, 1, 2);
        let triples = g_triples(&levi, &TripleFilters::default());
        let tr = triples
            .iter()
            .find(|t| t.b.contains(&1) && t.m2 == 2)
            .unwrap();
        for a in 1..=2 {
            let fam = SatakeFamily::build(&levi, tr, a).unwrap();
            assert!(fam.verify_factorizations());
        }
    }
}
