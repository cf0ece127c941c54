//! Exact multivariate Laurent polynomials in `X, X_1, ..., X_n` with a
//! tracked formal prime power `p^k`.
//!
//! The prime is a formal variable, never a numeric value, so every identity
//! checked through this ring holds for all primes simultaneously. Monomials
//! are kept in a `BTreeMap`, so iteration order, display and serialization
//! are all deterministic.

use crate::arith::{rint, Rat};
use crate::root_data::SignedPermutation;
use crate::{Error, Result};
use num::Zero;
use serde::ser::SerializeSeq;
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector, layout `[e_X, e_1, ..., e_n, e_p]`.
type Mono = Vec<i64>;

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    n: usize,
    terms: std::collections::BTreeMap<Mono, Rat>,
}

impl LaurentPolynomial {
    pub fn zero(n: usize) -> Self {
        LaurentPolynomial {
            n,
            terms: Default::default(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, rint(1))
    }

    pub fn constant(n: usize, coef: Rat) -> Self {
        let mut p = Self::zero(n);
        if !coef.is_zero() {
            p.terms.insert(vec![0; n + 2], coef);
        }
        p
    }

    /// The variable `X`.
    pub fn x(n: usize) -> Self {
        Self::monomial(n, 1, &vec![0; n], 0, rint(1))
    }

    /// The variable `X_i` (1-based).
    pub fn xi(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::monomial(n, 0, &e, 0, rint(1))
    }

    /// The formal prime power `p^k`.
    pub fn p_pow(n: usize, k: i64) -> Self {
        Self::monomial(n, 0, &vec![0; n], k, rint(1))
    }

    /// `coef * X^ex * prod X_i^{ei[i]} * p^ep`.
    pub fn monomial(n: usize, ex: i64, ei: &[i64], ep: i64, coef: Rat) -> Self {
        assert_eq!(ei.len(), n);
        let mut p = Self::zero(n);
        if !coef.is_zero() {
            let mut key = Vec::with_capacity(n + 2);
            key.push(ex);
            key.extend_from_slice(ei);
            key.push(ep);
            p.terms.insert(key, coef);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, k: Rat) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), *c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute numeric values for `p`, `X` and the `X_i`.
    pub fn specialize(&self, p: Rat, x: Rat, xi: &[Rat]) -> Result<Rat> {
        if xi.len() != self.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                got: xi.len(),
            });
        }
        if p.is_zero() || x.is_zero() || xi.iter().any(|v| v.is_zero()) {
            return Err(Error::InvalidArgument(
                "specialization values must be nonzero".into(),
            ));
        }
        let mut acc = rint(0);
        for (m, c) in &self.terms {
            let mut t = *c;
            t *= pow_rat(x, m[0]);
            for i in 0..self.n {
                t *= pow_rat(xi[i], m[1 + i]);
            }
            t *= pow_rat(p, m[self.n + 1]);
            acc += t;
        }
        Ok(acc)
    }

    /// Ring automorphism induced by the Weyl group: the permutation part
    /// sends `X_i ↦ X_{σ(i)}`, a sign flip at (target) coordinate `j` sends
    /// `X_j ↦ X_j^{-1}` and `X ↦ X·X_j^{-1}`; `p` is fixed.
    pub fn weyl_act(&self, w: &SignedPermutation) -> Result<Self> {
        if w.rank() != self.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                got: w.rank(),
            });
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            let a = m[0];
            let mut key = vec![0i64; n + 2];
            key[0] = a;
            key[n + 1] = m[n + 1];
            for i in 0..n {
                let j = w.perm[i];
                key[1 + j] = if w.signs[j] == 1 {
                    m[1 + i]
                } else {
                    -a - m[1 + i]
                };
            }
            let entry = out.terms.entry(key).or_insert_with(|| rint(0));
            *entry += *c;
        }
        out.terms.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Terms in deterministic (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            let entry = out.terms.entry(m.clone()).or_insert_with(|| rint(0));
            *entry += *c;
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &rhs.neg()
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(rint(-1))
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.n, rhs.n);
        let mut out = LaurentPolynomial::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let key: Mono = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(key).or_insert_with(|| rint(0));
                *entry += *c1 * *c2;
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Sorted monomial list, `coef * p^e * X^e0 * X1^e1 ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            let ep = m[self.n + 1];
            if ep != 0 {
                write!(f, " * p^{ep}")?;
            }
            if m[0] != 0 {
                write!(f, " * X^{}", m[0])?;
            }
            for i in 0..self.n {
                if m[1 + i] != 0 {
                    write!(f, " * X{}^{}", i + 1, m[1 + i])?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coef: String,
            x: i64,
            xi: &'a [i64],
            p: i64,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&Term {
                coef: c.to_string(),
                x: m[0],
                xi: &m[1..=self.n],
                p: m[self.n + 1],
            })?;
        }
        seq.end()
    }
}

fn pow_rat(x: Rat, e: i64) -> Rat {
    let mut acc = rint(1);
    let (mut base, mut k) = if e >= 0 { (x, e) } else { (x.recip(), -e) };
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
    use crate::arith::rat;
    use crate::root_data::weyl_group;
    use proptest::prelude::*;

    fn sample_poly(n: usize, picks: &[(i64, Vec<i64>, i64, i64)]) -> LaurentPolynomial {
        let mut acc = LaurentPolynomial::zero(n);
        for (ex, ei, ep, c) in picks {
            acc = &acc + &LaurentPolynomial::monomial(n, *ex, ei, *ep, rint(*c));
        }
        acc
    }

    #[test]
    fn ring_basics() {
        let n = 2;
        let x = LaurentPolynomial::x(n);
        let x1 = LaurentPolynomial::xi(n, 1);
        let p = LaurentPolynomial::p_pow(n, 1);
        let f = &(&x + &x1) * &(&x - &x1);
        let g = &(&x * &x) - &(&x1 * &x1);
        assert_eq!(f, g);
        assert_eq!(&p * &LaurentPolynomial::zero(n), LaurentPolynomial::zero(n));
        assert_eq!(format!("{}", &p * &x), "1 * p^1 * X^1");
    }

    #[test]
    fn flip_fixes_rank_one_sum() {
        // n=1 flip: X ↦ X·X_1^{-1}, X_1 ↦ X_1^{-1} fixes X^{-1}(1 + X_1)
        let n = 1;
        let f = &LaurentPolynomial::monomial(n, -1, &[0], 0, rint(1))
            + &LaurentPolynomial::monomial(n, -1, &[1], 0, rint(1));
        let w = SignedPermutation::longest(1);
        assert_eq!(f.weyl_act(&w).unwrap(), f);
    }

    #[test]
    fn transposition_fixes_symmetric() {
        let n = 2;
        let f = &(&LaurentPolynomial::xi(n, 1) * &LaurentPolynomial::xi(n, 2))
            + &(&LaurentPolynomial::xi(n, 1) + &LaurentPolynomial::xi(n, 2));
        let w = SignedPermutation::new(vec![1, 1], vec![1, 0]).unwrap();
        assert_eq!(f.weyl_act(&w).unwrap(), f);
    }

    #[test]
    fn weyl_act_is_group_action() {
        let n = 2;
        let f = sample_poly(
            n,
            &[(1, vec![2, -1], 0, 3), (-1, vec![0, 1], 2, -5), (0, vec![1, 1], 1, 7)],
        );
        let all: Vec<SignedPermutation> = weyl_group(n).collect();
        for w1 in &all {
            for w2 in &all {
                let lhs = f.weyl_act(w2).unwrap().weyl_act(w1).unwrap();
                let rhs = f.weyl_act(&w1.compose(w2)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn weyl_act_is_ring_automorphism() {
        let n = 2;
        let f = sample_poly(n, &[(1, vec![1, 0], 0, 2), (0, vec![0, -1], 1, 1)]);
        let g = sample_poly(n, &[(-1, vec![0, 2], 0, 1), (0, vec![1, 1], 0, -3)]);
        for w in weyl_group(n) {
            let lhs = (&f * &g).weyl_act(&w).unwrap();
            let rhs = &f.weyl_act(&w).unwrap() * &g.weyl_act(&w).unwrap();
            assert_eq!(lhs, rhs);
            let lhs = (&f + &g).weyl_act(&w).unwrap();
            let rhs = &f.weyl_act(&w).unwrap() + &g.weyl_act(&w).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    proptest! {
        #[test]
        fn specialization_commutes_with_ring_ops(
            c1 in -4i64..=4, c2 in -4i64..=4,
            e1 in -2i64..=2, e2 in -2i64..=2,
            pv in 2i64..=5, xv in 1i64..=3, x1v in 1i64..=4,
        ) {
            let n = 1;
            let f = sample_poly(n, &[(e1, vec![e2], 1, c1), (0, vec![1], 0, 2)]);
            let g = sample_poly(n, &[(-e2, vec![e1], 0, c2), (1, vec![0], 2, 1)]);
            let p = rat(pv, 1);
            let x = rat(xv, 2);
            let xi = [rat(x1v, 3)];
            let fv = f.specialize(p, x, &xi).unwrap();
            let gv = g.specialize(p, x, &xi).unwrap();
            prop_assert_eq!((&f * &g).specialize(p, x, &xi).unwrap(), fv * gv);
            prop_assert_eq!((&f + &g).specialize(p, x, &xi).unwrap(), fv + gv);
            prop_assert_eq!((&f - &g).specialize(p, x, &xi).unwrap(), fv - gv);
        }
    }
}
