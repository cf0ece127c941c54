//! Python bindings: the main enumerations, transforms, cohomology tables
//! and verification suites, exposed as plain functions. Exact rationals
//! cross the boundary as `(numerator, denominator)` pairs, structured
//! data as JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::collections::BTreeSet;

use gsp2n::arith::{rat, Rat};
use gsp2n::cohomology::{central_character, kostant_cohomology, truncate, TruncationDirection};
use gsp2n::endoscopy::{EndoscopicDatum, GTriple, LeviDatum};
use gsp2n::partitions::RationalVector;
use gsp2n::root_data::{ParabolicIndex, Weight};
use gsp2n::satake::SatakeFamily;
use gsp2n::verify::{enumation_view, run, RunConfig, Suite};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rat_pair(x: Rat) -> (i64, i64) {
    (*x.numer(), *x.denom())
}

/// Roots of the rank-`n` datum as doubled coefficient vectors
/// `(2a_c, 2a_1, ..., 2a_n)`.
#[pyfunction]
fn roots(n: usize) -> Vec<Vec<i64>> {
    gsp2n::root_data::roots(n).into_iter().map(|w| w.0).collect()
}

#[pyfunction]
fn weyl_group_order(n: usize) -> u64 {
    gsp2n::root_data::weyl_order(n)
}

/// `<rho, mu>` as an exact rational pair; equals `n(n+1)/2`.
#[pyfunction]
fn rho_mu_pairing(n: usize) -> PyResult<(i64, i64)> {
    let v = gsp2n::root_data::pairing(&gsp2n::root_data::rho(n), &gsp2n::root_data::mu(n))
        .map_err(err)?;
    Ok(rat_pair(v))
}

#[pyfunction]
fn l_packet_size(n: usize) -> u64 {
    gsp2n::endoscopy::l_packet_size(n)
}

#[pyfunction]
fn k_constant(n1: usize, n2: usize) -> PyResult<u64> {
    gsp2n::endoscopy::k_constant(n1, n2).map_err(err)
}

#[pyfunction]
fn tamagawa(n1: usize, n2: usize) -> PyResult<u64> {
    Ok(EndoscopicDatum::new(n1, n2).map_err(err)?.tamagawa())
}

/// The stabilization coefficient `ι` for the datum `(n1, n2)` of
/// `GSp(2(n1+n2))`, as an exact rational pair.
#[pyfunction]
fn iota(n1: usize, n2: usize) -> PyResult<(i64, i64)> {
    let d = EndoscopicDatum::new(n1, n2).map_err(err)?;
    Ok(rat_pair(gsp2n::endoscopy::iota(n1 + n2, &d)))
}

/// Elliptic data, cuspidal Levis and triples with derived constants,
/// as a JSON document.
#[pyfunction]
fn enumerate_json(n: usize) -> PyResult<String> {
    serde_json::to_string_pretty(&enumation_view(n)).map_err(err)
}

/// The sign-twisted transfer polynomial as a sorted monomial list.
#[pyfunction]
#[pyo3(signature = (n, a, k=vec![]))]
fn satake_transfer(n: usize, a: i64, k: Vec<usize>) -> PyResult<String> {
    if k.iter().any(|i| *i < 1 || *i > n) {
        return Err(PyValueError::new_err("K must be a subset of 1..=n"));
    }
    let kset: BTreeSet<usize> = k.into_iter().collect();
    Ok(gsp2n::satake::satake_transfer(n, a, &kset).to_string())
}

/// Build the transform family of a Levi `(r, t, m)` and triple
/// `(A, B, m1, m2)` at level `a`, returning a JSON document that includes
/// whether the factorization identities hold.
#[pyfunction]
#[pyo3(signature = (r, t, m, subset_a, subset_b, m1, m2, a=1))]
#[allow(clippy::too_many_arguments)]
fn satake_family_json(
    r: usize,
    t: usize,
    m: usize,
    subset_a: Vec<usize>,
    subset_b: Vec<usize>,
    m1: usize,
    m2: usize,
    a: i64,
) -> PyResult<String> {
    let levi = LeviDatum::new(r, t, m);
    let triple = GTriple::new(
        &levi,
        subset_a.into_iter().collect(),
        subset_b.into_iter().collect(),
        m1,
        m2,
    )
    .map_err(err)?;
    let fam = SatakeFamily::build(&levi, &triple, a).map_err(err)?;
    serde_json::to_string_pretty(&serde_json::json!({
        "k": fam.k,
        "k_prime": fam.k_prime,
        "f_h": fam.f_h,
        "f_m_prime": fam.f_m_prime,
        "psi_m_prime": fam.psi_m_prime,
        "factorizations_hold": fam.verify_factorizations(),
    }))
    .map_err(err)
}

/// Graded cohomology table for the parabolic index `s` and highest weight
/// `lambda` (doubled coefficients, basis `(c, e_1..e_n)`), with the
/// truncation flags for the requested direction.
#[pyfunction]
#[pyo3(signature = (n, s, lambda, direction="above"))]
fn kostant_table_json(
    n: usize,
    s: Vec<usize>,
    lambda: Vec<i64>,
    direction: &str,
) -> PyResult<String> {
    if lambda.len() != n + 1 {
        return Err(PyValueError::new_err(format!(
            "lambda needs {} doubled coefficients",
            n + 1
        )));
    }
    let parabolic = ParabolicIndex::new(n, s).map_err(err)?;
    let lam = Weight(lambda);
    let dir = match direction {
        "above" => TruncationDirection::Above,
        "below" => TruncationDirection::Below,
        other => return Err(PyValueError::new_err(format!("unknown direction {other}"))),
    };
    let pieces = kostant_cohomology(n, &parabolic, &lam).map_err(err)?;
    let pieces = truncate(&pieces, &central_character(&lam), &parabolic, dir).map_err(err)?;
    serde_json::to_string_pretty(&pieces).map_err(err)
}

/// Both sides of the matching-reduction identity for a rational vector
/// given as parallel numerator/denominator lists; returns
/// `(lhs, rhs)` as strings of exact rationals.
#[pyfunction]
fn matching_reduction(numerators: Vec<i64>, denominators: Vec<i64>) -> PyResult<(String, String)> {
    if numerators.len() != denominators.len() {
        return Err(PyValueError::new_err("length mismatch"));
    }
    let vals: Vec<Rat> = numerators
        .iter()
        .zip(&denominators)
        .map(|(n, d)| {
            if *d == 0 {
                Err(PyValueError::new_err("zero denominator"))
            } else {
                Ok(rat(*n, *d))
            }
        })
        .collect::<PyResult<_>>()?;
    let lam = RationalVector::from_values(&vals);
    let (l, r) = gsp2n::identities::check_prop_a3(&lam).map_err(err)?;
    Ok((l.to_string(), r.to_string()))
}

/// Run a verification suite and return the JSON report.
#[pyfunction]
#[pyo3(signature = (suite="all", n_max=3, samples=25, seed=42))]
fn run_suite(suite: &str, n_max: usize, samples: usize, seed: u64) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(PyValueError::new_err)?;
    let report = run(&RunConfig {
        suite,
        n_max,
        samples,
        seed,
        timings: false,
    });
    Ok(report.to_json())
}

#[pymodule]
fn gsp2n_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(roots, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_group_order, m)?)?;
    m.add_function(wrap_pyfunction!(rho_mu_pairing, m)?)?;
    m.add_function(wrap_pyfunction!(l_packet_size, m)?)?;
    m.add_function(wrap_pyfunction!(k_constant, m)?)?;
    m.add_function(wrap_pyfunction!(tamagawa, m)?)?;
    m.add_function(wrap_pyfunction!(iota, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_json, m)?)?;
    m.add_function(wrap_pyfunction!(satake_transfer, m)?)?;
    m.add_function(wrap_pyfunction!(satake_family_json, m)?)?;
    m.add_function(wrap_pyfunction!(kostant_table_json, m)?)?;
    m.add_function(wrap_pyfunction!(matching_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
