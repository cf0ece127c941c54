//! Nilradical Lie-algebra cohomology via minimal-length coset
//! representatives, the positivity truncation, and exact Weyl character
//! and dimension evaluation.

use crate::arith::{rint, Rat};
use crate::root_data::{
    coroot, kostant_representatives, pairing, positive_roots, rho, varpi, weyl_group,
    ParabolicIndex, SignedPermutation, TorusPoint, Weight,
};
use crate::{Error, Result};
use num::{One, Zero};
use serde::Serialize;

/// One summand of `H^*(Lie(N_S), V)`: an irreducible representation of the
/// Levi `M_S` sitting in degree `ℓ(w)` with highest weight `w(λ+ρ) - ρ`.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyPiece {
    pub degree: usize,
    pub rep: SignedPermutation,
    pub kostant_weight: Weight,
    pub parabolic: ParabolicIndex,
    pub dimension: u64,
    /// Set by [`truncate`]; `true` until a truncation is applied.
    pub kept_by_truncation: bool,
}

/// Truncation direction: keep the summands whose shifted weight pairs
/// strictly positively (or strictly negatively) with every `ϖ_s`, `s ∈ S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TruncationDirection {
    Above,
    Below,
}

/// Weyl dimension formula for the Levi attached to `parabolic` at the
/// `M_S`-dominant weight `mu`:
/// `Π_{α ∈ Φ_M⁺} <μ+ρ_M, α^> / <ρ_M, α^>`.
pub fn levi_weyl_dimension(parabolic: &ParabolicIndex, mu: &Weight) -> Result<u64> {
    let pos = parabolic.levi_positive_roots();
    let mut rho_m2 = Weight::zero(parabolic.n);
    for a in &pos {
        rho_m2 = rho_m2.add(a);
    }
    // rho_m2 holds 2ρ_M in doubled coordinates; combine so that all
    // pairings stay exact: <μ + ρ_M, α^> = <2μ + 2ρ_M, α^> / 2.
    let num_weight = mu.scale(2).add(&rho_m2);
    let mut acc = rint(1);
    for a in &pos {
        let av = coroot(a);
        let num = pairing(&num_weight, &av)?;
        let den = pairing(&rho_m2, &av)?;
        if den.is_zero() {
            return Err(Error::InvalidArgument("degenerate Levi root".into()));
        }
        acc *= num / den;
    }
    if !acc.is_integer() || acc <= rint(0) {
        return Err(Error::NonDominant);
    }
    Ok(*acc.numer() as u64)
}

/// The graded decomposition of `H^*(Lie(N_S), V_λ)` over the Levi `M_S`:
/// one piece per minimal-length representative `w`, in degree `ℓ(w)`,
/// with highest weight `w(λ+ρ) - ρ` and dimension given by the Weyl
/// dimension formula for `M_S`.
pub fn kostant_cohomology(
    n: usize,
    parabolic: &ParabolicIndex,
    lambda: &Weight,
) -> Result<Vec<CohomologyPiece>> {
    if lambda.rank() != n || parabolic.n != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: lambda.rank(),
        });
    }
    if !lambda.is_dominant() || !lambda.is_integral() {
        return Err(Error::NonDominant);
    }
    let rho_w = rho(n);
    let lam_rho = lambda.add(&rho_w);
    let mut pieces = Vec::new();
    for w in kostant_representatives(n, parabolic) {
        let kweight = w.act(&lam_rho)?.sub(&rho_w);
        let dimension = levi_weyl_dimension(parabolic, &kweight)?;
        pieces.push(CohomologyPiece {
            degree: w.length(),
            kostant_weight: kweight,
            rep: w,
            parabolic: parabolic.clone(),
            dimension,
            kept_by_truncation: true,
        });
    }
    pieces.sort_by(|a, b| {
        (a.degree, &a.kostant_weight).cmp(&(b.degree, &b.kostant_weight))
    });
    Ok(pieces)
}

/// The central character of `V_λ` as an element of `X^*(T) ⊗ ½Z`
/// supported on `c`: the center acts through `z ↦ z^{2a_c + Σ a_i}`, and
/// the canonical representative is `((2a_c + Σa_i)/2)·c`.
pub fn central_character(lambda: &Weight) -> Weight {
    let n = lambda.rank();
    let mut w = Weight::zero(n);
    w.0[0] = lambda.0[0] + lambda.0[1..].iter().sum::<i64>();
    w
}

/// Apply the positivity truncation: a piece is kept when
/// `<w(λ+ρ+λ0), ϖ_s>` is positive (direction `Above`) or negative
/// (`Below`) for every `s ∈ S`. The shifted weight is recovered from the
/// stored data as `kostant_weight + ρ + λ0`.
///
/// `lambda0` must be supported on `c` (so its `ϖ`-pairings vanish, as for
/// the canonical central character) and match the central restriction of
/// the original `λ`; pass [`central_character`] of `λ`.
pub fn truncate(
    pieces: &[CohomologyPiece],
    lambda0: &Weight,
    parabolic: &ParabolicIndex,
    direction: TruncationDirection,
) -> Result<Vec<CohomologyPiece>> {
    let n = parabolic.n;
    if lambda0.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: lambda0.rank(),
        });
    }
    if lambda0.0[1..].iter().any(|d| *d != 0) {
        return Err(Error::InvalidArgument(
            "the central character must be supported on c".into(),
        ));
    }
    // the center acts through 2a_c + Σa_i, which is Weyl-invariant, so the
    // pieces remember the central restriction of the original weight
    if let Some(piece) = pieces.first() {
        let restriction = |w: &Weight| w.0[0] + w.0[1..].iter().sum::<i64>();
        if restriction(lambda0) != restriction(&piece.kostant_weight) {
            return Err(Error::InvalidArgument(
                "central character does not match the highest weight".into(),
            ));
        }
    }
    let rho_w = rho(n);
    let mut out = pieces.to_vec();
    for piece in &mut out {
        let shifted = piece.kostant_weight.add(&rho_w).add(lambda0);
        let mut keep = true;
        for &s in &parabolic.s {
            let v = pairing(&shifted, &varpi(n, s))?;
            let ok = match direction {
                TruncationDirection::Above => v > rint(0),
                TruncationDirection::Below => v < rint(0),
            };
            if !ok {
                keep = false;
                break;
            }
        }
        piece.kept_by_truncation = keep;
    }
    Ok(out)
}

/// Torus-weight multiset of the `M_S`-irreducible with highest weight
/// `mu`, for Levis whose linear blocks have size at most 2 and whose
/// hermitian block has rank at most 1 (each factor is then a torus or a
/// rank-one group, and the weight strings are explicit).
pub fn small_levi_weight_multiset(
    parabolic: &ParabolicIndex,
    mu: &Weight,
) -> Result<std::collections::BTreeMap<Weight, usize>> {
    use crate::root_data::{c, e, e_hat};
    let n = parabolic.n;
    let mut strings: Vec<(Weight, i64)> = Vec::new();
    let mut prev = 1usize;
    for &s in &parabolic.s {
        let size = s - prev + 1;
        match size {
            1 => {}
            2 => {
                let alpha = e(n, prev).sub(&e(n, prev + 1));
                let k = pairing(mu, &coroot(&alpha))?;
                if !k.is_integer() || k < rint(0) {
                    return Err(Error::NonDominant);
                }
                strings.push((alpha, *k.numer()));
            }
            _ => {
                return Err(Error::SizeLimit(format!(
                    "weight expansion implemented for blocks of size ≤ 2, got {size}"
                )))
            }
        }
        prev = s + 1;
    }
    match parabolic.hermitian_rank() {
        0 => {}
        1 => {
            let alpha = e(n, n).scale(2).sub(&c(n));
            let k = pairing(mu, &e_hat(n, n))?;
            if !k.is_integer() || k < rint(0) {
                return Err(Error::NonDominant);
            }
            strings.push((alpha, *k.numer()));
        }
        m => {
            return Err(Error::SizeLimit(format!(
                "weight expansion implemented for hermitian rank ≤ 1, got {m}"
            )))
        }
    }
    let mut acc: std::collections::BTreeMap<Weight, usize> =
        [(mu.clone(), 1usize)].into_iter().collect();
    for (alpha, k) in strings {
        let mut next = std::collections::BTreeMap::new();
        for (w, mult) in &acc {
            for j in 0..=k {
                let shifted = w.sub(&alpha.scale(j));
                *next.entry(shifted).or_insert(0) += mult;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Per-degree torus-weight multisets predicted by the minimal-length
/// decomposition: each piece expanded through
/// [`small_levi_weight_multiset`]. The vector is indexed by degree up to
/// `dim N_S`.
pub fn kostant_weight_multisets(
    n: usize,
    parabolic: &ParabolicIndex,
    lambda: &Weight,
) -> Result<Vec<std::collections::BTreeMap<Weight, usize>>> {
    let pieces = kostant_cohomology(n, parabolic, lambda)?;
    let top = parabolic.nilradical_roots().len();
    let mut out = vec![std::collections::BTreeMap::new(); top + 1];
    for piece in &pieces {
        let weights = small_levi_weight_multiset(parabolic, &piece.kostant_weight)?;
        let total: usize = weights.values().sum();
        if total as u64 != piece.dimension {
            return Err(Error::InvalidArgument(format!(
                "weight expansion of {} has size {total}, dimension formula says {}",
                piece.kostant_weight, piece.dimension
            )));
        }
        for (w, m) in weights {
            *out[piece.degree].entry(w).or_insert(0) += m;
        }
    }
    Ok(out)
}

/// Exact trace of a regular rational torus element on `V_λ`, through the
/// alternating character sum over the Weyl group:
/// `Tr(γ, V) = Δ(γ)^{-1} Σ_w ε(w) (wλ)(γ) Π_{α ∈ Φ(w)} α^{-1}(γ)` with
/// `Δ(γ) = Π_{α>0} (1 - α^{-1}(γ))`.
pub fn weyl_character_trace(lambda: &Weight, gamma: &TorusPoint) -> Result<Rat> {
    let n = gamma.rank();
    check_character_inputs(lambda, gamma)?;
    let delta = weyl_denominator(gamma)?;
    let mut acc = rint(0);
    for w in weyl_group(n) {
        let mut term = gamma.eval(&w.act(lambda)?)? * rint(w.sign());
        for alpha in w.inversion_set() {
            term *= gamma.eval(&alpha)?.recip();
        }
        acc += term;
    }
    Ok(acc / delta)
}

/// The same trace as a sum over chambers:
/// `Σ_w (wλ)(γ) / Π_{α ∈ wΦ⁺} (1 - α^{-1}(γ))`; agreement with
/// [`weyl_character_trace`] is checked in the suites.
pub fn weyl_character_trace_chambers(lambda: &Weight, gamma: &TorusPoint) -> Result<Rat> {
    let n = gamma.rank();
    check_character_inputs(lambda, gamma)?;
    let mut acc = rint(0);
    for w in weyl_group(n) {
        let mut denom = rint(1);
        for alpha in positive_roots(n) {
            denom *= rint(1) - gamma.eval(&w.act(&alpha)?)?.recip();
        }
        if denom.is_zero() {
            return Err(Error::NonRegularElement("chamber denominator".into()));
        }
        acc += gamma.eval(&w.act(lambda)?)? / denom;
    }
    Ok(acc)
}

fn check_character_inputs(lambda: &Weight, gamma: &TorusPoint) -> Result<()> {
    if lambda.rank() != gamma.rank() {
        return Err(Error::RankMismatch {
            expected: gamma.rank(),
            got: lambda.rank(),
        });
    }
    if !lambda.is_dominant() || !lambda.is_integral() {
        return Err(Error::NonDominant);
    }
    Ok(())
}

fn weyl_denominator(gamma: &TorusPoint) -> Result<Rat> {
    let mut acc = rint(1);
    for alpha in positive_roots(gamma.rank()) {
        let v = gamma.eval(&alpha)?;
        if v.is_one() {
            return Err(Error::NonRegularElement(alpha.to_string()));
        }
        acc *= rint(1) - v.recip();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::root_data::{c, e};

    #[test]
    fn trivial_representation_has_trace_one() {
        let gamma = TorusPoint::new(rint(5), vec![rint(2), rint(3)]).unwrap();
        assert!(gamma.is_regular());
        let lam = Weight::zero(2);
        assert_eq!(weyl_character_trace(&lam, &gamma).unwrap(), rint(1));
        assert_eq!(weyl_character_trace_chambers(&lam, &gamma).unwrap(), rint(1));
    }

    #[test]
    fn standard_representation_trace() {
        // V_{e_1} of rank 2 is the standard 4-dimensional representation
        // with torus eigenvalues x1, x2, c/x2, c/x1
        let gamma = TorusPoint::new(rint(5), vec![rint(2), rint(3)]).unwrap();
        let lam = e(2, 1);
        let expect = rint(2) + rint(3) + rat(5, 3) + rat(5, 2);
        assert_eq!(weyl_character_trace(&lam, &gamma).unwrap(), expect);
        assert_eq!(
            weyl_character_trace_chambers(&lam, &gamma).unwrap(),
            expect
        );
    }

    #[test]
    fn character_is_weyl_invariant() {
        let gamma = TorusPoint::new(rat(5, 2), vec![rint(2), rat(1, 3)]).unwrap();
        let lam = e(2, 1).add(&e(2, 2));
        let base = weyl_character_trace(&lam, &gamma).unwrap();
        for w in weyl_group(2) {
            let moved = gamma.acted_by(&w).unwrap();
            assert_eq!(weyl_character_trace(&lam, &moved).unwrap(), base);
        }
    }

    #[test]
    fn character_rejects_irregular_points() {
        let gamma = TorusPoint::new(rint(1), vec![rint(2), rint(3)]).unwrap();
        // c = 1 makes 2e_1 - c evaluate to 4, fine; but x=1 breaks:
        let bad = TorusPoint::new(rint(4), vec![rint(2), rint(3)]).unwrap();
        // 2e_1 - c at (4, (2,3)) is 4/4 = 1 → non-regular
        assert!(weyl_character_trace(&e(2, 1), &bad).is_err());
        let _ = gamma;
    }

    #[test]
    fn character_rejects_non_dominant() {
        let gamma = TorusPoint::new(rint(5), vec![rint(2), rint(3)]).unwrap();
        let bad = e(2, 2); // a_1 = 0 < a_2 = 1
        assert!(weyl_character_trace(&bad, &gamma).is_err());
    }

    #[test]
    fn kostant_rank_one() {
        // n=1, S={1}, λ=0: two pieces, (deg 0, weight 0) and
        // (deg 1, weight c - 2e_1), both one-dimensional
        let p = ParabolicIndex::new(1, [1]).unwrap();
        let pieces = kostant_cohomology(1, &p, &Weight::zero(1)).unwrap();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].degree, 0);
        assert_eq!(pieces[0].kostant_weight, Weight::zero(1));
        assert_eq!(pieces[0].dimension, 1);
        assert_eq!(pieces[1].degree, 1);
        assert_eq!(pieces[1].kostant_weight, c(1).sub(&e(1, 1).scale(2)));
        assert_eq!(pieces[1].dimension, 1);
    }

    #[test]
    fn kostant_rank_two_degrees() {
        // n=2, S={2}, λ=0: 4 pieces in degrees 0..3
        let p = ParabolicIndex::new(2, [2]).unwrap();
        let pieces = kostant_cohomology(2, &p, &Weight::zero(2)).unwrap();
        let degs: Vec<usize> = pieces.iter().map(|p| p.degree).collect();
        assert_eq!(degs, vec![0, 1, 2, 3]);
    }

    #[test]
    fn kostant_empty_parabolic() {
        let p = ParabolicIndex::new(3, []).unwrap();
        let lam = e(3, 1).add(&e(3, 2));
        let pieces = kostant_cohomology(3, &p, &lam).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].degree, 0);
        assert_eq!(pieces[0].kostant_weight, lam);
    }

    #[test]
    fn truncation_rank_one() {
        // n=1, S={1}, λ=0, λ0=0: degree 0 kept (pairing 1), degree 1
        // dropped (pairing -1)
        let p = ParabolicIndex::new(1, [1]).unwrap();
        let pieces = kostant_cohomology(1, &p, &Weight::zero(1)).unwrap();
        let tr = truncate(&pieces, &Weight::zero(1), &p, TruncationDirection::Above).unwrap();
        assert!(tr[0].kept_by_truncation);
        assert!(!tr[1].kept_by_truncation);
        // below-truncation is the complement here (no zero pairings)
        let tb = truncate(&pieces, &Weight::zero(1), &p, TruncationDirection::Below).unwrap();
        assert!(!tb[0].kept_by_truncation);
        assert!(tb[1].kept_by_truncation);
    }

    #[test]
    fn empty_parabolic_keeps_everything() {
        let p = ParabolicIndex::new(2, []).unwrap();
        let lam = e(2, 1);
        let pieces = kostant_cohomology(2, &p, &lam).unwrap();
        let tr = truncate(
            &pieces,
            &central_character(&lam),
            &p,
            TruncationDirection::Above,
        )
        .unwrap();
        assert!(tr.iter().all(|p| p.kept_by_truncation));
    }

    #[test]
    fn truncation_directions_partition_without_zero_pairings() {
        let p = ParabolicIndex::new(2, [1]).unwrap();
        let lam = e(2, 1).scale(2).add(&e(2, 2));
        let pieces = kostant_cohomology(2, &p, &lam).unwrap();
        let l0 = central_character(&lam);
        let above = truncate(&pieces, &l0, &p, TruncationDirection::Above).unwrap();
        let below = truncate(&pieces, &l0, &p, TruncationDirection::Below).unwrap();
        let rho_w = rho(2);
        for i in 0..pieces.len() {
            let shifted = pieces[i].kostant_weight.add(&rho_w).add(&l0);
            let has_zero = p
                .s
                .iter()
                .any(|s| pairing(&shifted, &varpi(2, *s)).unwrap() == rint(0));
            if !has_zero {
                assert!(above[i].kept_by_truncation != below[i].kept_by_truncation);
            }
        }
    }

    #[test]
    fn truncation_rejects_mismatched_central_character() {
        let p = ParabolicIndex::new(2, [1]).unwrap();
        let lam = e(2, 1);
        let pieces = kostant_cohomology(2, &p, &lam).unwrap();
        // wrong restriction: central character of a different weight
        let wrong = central_character(&e(2, 1).scale(3));
        assert!(truncate(&pieces, &wrong, &p, TruncationDirection::Above).is_err());
        // not supported on c
        assert!(truncate(&pieces, &e(2, 1), &p, TruncationDirection::Above).is_err());
    }

    #[test]
    fn central_character_restriction() {
        let lam = e(2, 1).scale(3).add(&e(2, 2)).add(&c(2));
        let l0 = central_character(&lam);
        // restriction exponent 2a_c + Σa_i must agree
        let k = |w: &Weight| w.0[0] + w.0[1..].iter().sum::<i64>();
        assert_eq!(k(&lam), k(&l0));
    }

    #[test]
    fn dimension_formula_examples() {
        // whole-group Levi: dim V_{e_1} = 4, dim V_{e_1+e_2} = 5 for rank 2
        let g = ParabolicIndex::new(2, []).unwrap();
        assert_eq!(levi_weyl_dimension(&g, &e(2, 1)).unwrap(), 4);
        assert_eq!(
            levi_weyl_dimension(&g, &e(2, 1).add(&e(2, 2))).unwrap(),
            5
        );
        assert_eq!(levi_weyl_dimension(&g, &e(2, 1).scale(2)).unwrap(), 10);
        // torus Levi: always 1
        let t = ParabolicIndex::new(2, [1, 2]).unwrap();
        assert_eq!(levi_weyl_dimension(&t, &e(2, 1)).unwrap(), 1);
    }

    #[test]
    fn kostant_matches_oracle_weight_by_weight() {
        use crate::ce_oracle::chevalley_eilenberg_oracle;
        let cases: Vec<(usize, Vec<usize>, Weight)> = vec![
            (1, vec![1], Weight::zero(1)),
            (1, vec![1], e(1, 1).scale(2)),
            (2, vec![1], e(2, 1)),
            (2, vec![2], Weight::zero(2)),
            (2, vec![2], e(2, 1).add(&e(2, 2))),
            (2, vec![1, 2], e(2, 1)),
        ];
        for (n, s, lam) in cases {
            let p = ParabolicIndex::new(n, s).unwrap();
            let predicted = kostant_weight_multisets(n, &p, &lam).unwrap();
            let oracle = chevalley_eilenberg_oracle(n, &p, &lam).unwrap();
            assert_eq!(
                predicted, oracle.by_degree,
                "n={n} S={:?} λ={lam}",
                p.s
            );
        }
    }

    #[test]
    fn euler_characteristic_vanishes() {
        for (n, s, lam) in [
            (1, vec![1], Weight::zero(1)),
            (2, vec![1], e(2, 1)),
            (2, vec![2], e(2, 1).add(&e(2, 2))),
            (2, vec![1, 2], e(2, 1).scale(2)),
        ] {
            let p = ParabolicIndex::new(n, s).unwrap();
            let pieces = kostant_cohomology(n, &p, &lam).unwrap();
            let euler: i64 = pieces
                .iter()
                .map(|pc| crate::arith::neg_one_pow(pc.degree) * pc.dimension as i64)
                .sum();
            assert_eq!(euler, 0, "n={n} S={:?}", p.s);
        }
    }
}
