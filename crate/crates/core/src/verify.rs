//! Deterministic verification suites with machine-readable reports.
//!
//! A fixed seed fully determines the random corpus, and all iteration
//! orders are stable, so two runs with the same configuration produce
//! byte-identical JSON reports (timings are opt-in and excluded by
//! default).

use crate::arith::{rat, rint, Rat};
use crate::cohomology::{
    central_character, kostant_cohomology, kostant_weight_multisets, truncate,
    weyl_character_trace, weyl_character_trace_chambers, TruncationDirection,
};
use crate::endoscopy::{
    cuspidal_levis, double_counting_check, elliptic_data, g_triples, h_levi_shapes, iota,
    k_constant, k_tau_identity, l_packet_size, EndoscopicDatum, HLeviShape, LeviDatum,
    TripleFilters,
};
use crate::identities::*;
use crate::partitions::*;
use crate::root_data::{mu, pairing, rho, weyl_group, ParabolicIndex, TorusPoint, Weight};
use crate::satake::{satake_phi, twist_stabilizer, SatakeFamily};
use num::Zero;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Appendix,
    Endoscopy,
    Satake,
    Kostant,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "appendix" => Ok(Suite::Appendix),
            "endoscopy" => Ok(Suite::Endoscopy),
            "satake" => Ok(Suite::Satake),
            "kostant" => Ok(Suite::Kostant),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite: {other}")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub suite: Suite,
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    /// Include wall-clock timings in the report (breaks byte-for-byte
    /// reproducibility, hence opt-in).
    #[serde(skip)]
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suite: Suite::All,
            n_max: 4,
            samples: 100,
            seed: 42,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub statement: String,
    pub cases_run: u64,
    pub cases_passed: u64,
    pub first_counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: String,
    pub config: RunConfig,
    pub checks: Vec<CheckRecord>,
    pub passed: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<38} {:>10} {:>10}  {}",
            "check", "cases", "passed", "status"
        );
        for c in &self.checks {
            let status = if c.cases_passed == c.cases_run {
                "ok"
            } else {
                "FAIL"
            };
            let _ = writeln!(
                out,
                "{:<38} {:>10} {:>10}  {}",
                c.id, c.cases_run, c.cases_passed, status
            );
            if let Some(cex) = &c.first_counterexample {
                let _ = writeln!(out, "    first counterexample: {cex}");
            }
        }
        let _ = writeln!(out, "overall: {}", if self.passed { "ok" } else { "FAIL" });
        out
    }
}

struct Check {
    id: &'static str,
    statement: &'static str,
    cases_run: u64,
    cases_passed: u64,
    first_counterexample: Option<String>,
    start: Instant,
}

impl Check {
    fn new(id: &'static str, statement: &'static str) -> Self {
        Check {
            id,
            statement,
            cases_run: 0,
            cases_passed: 0,
            first_counterexample: None,
            start: Instant::now(),
        }
    }

    fn case(&mut self, pass: bool, describe: impl FnOnce() -> String) {
        self.cases_run += 1;
        if pass {
            self.cases_passed += 1;
        } else if self.first_counterexample.is_none() {
            self.first_counterexample = Some(describe());
        }
    }

    fn eq_case<T: PartialEq + std::fmt::Debug>(
        &mut self,
        lhs: T,
        rhs: T,
        describe: impl FnOnce() -> String,
    ) {
        let pass = lhs == rhs;
        self.case(pass, || format!("{}: {lhs:?} != {rhs:?}", describe()));
    }

    fn error_case(&mut self, err: impl std::fmt::Display) {
        self.cases_run += 1;
        if self.first_counterexample.is_none() {
            self.first_counterexample = Some(format!("error: {err}"));
        }
    }

    fn finish(self, timings: bool) -> CheckRecord {
        CheckRecord {
            id: self.id.to_string(),
            statement: self.statement.to_string(),
            cases_run: self.cases_run,
            cases_passed: self.cases_passed,
            first_counterexample: self.first_counterexample,
            wall_time_ms: timings.then(|| self.start.elapsed().as_millis()),
        }
    }
}

/// Stable per-check RNG so checks can run in any order.
fn check_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.gen_range(-6i64..=6);
    let den = [1i64, 2, 3][rng.gen_range(0..3usize)];
    rat(num, den)
}

fn rand_vector(rng: &mut ChaCha8Rng, n: usize) -> RationalVector {
    RationalVector::from_values(&(0..n).map(|_| rand_rat(rng)).collect::<Vec<_>>())
}

/// The tie-rich grid `{-3..3}/2` in `n` coordinates.
fn grid_vectors(n: usize) -> Vec<RationalVector> {
    let vals: Vec<Rat> = (-3..=3).map(|k| rat(k, 2)).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        out.push(RationalVector::from_values(
            &idx.iter().map(|i| vals[*i]).collect::<Vec<_>>(),
        ));
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < vals.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Small worked cases that every appendix run must include.
fn worked_cases() -> Vec<RationalVector> {
    [
        vec![1, 2],
        vec![2, -1],
        vec![-1, 2],
        vec![1, 1],
        vec![1, -2],
        vec![3, 1],
        vec![-1, -1, 3],
        vec![-2, 5, -1],
    ]
    .into_iter()
    .map(|v| RationalVector::from_ints(&v))
    .collect()
}

fn lambda_corpus(rng: &mut ChaCha8Rng, n_max: usize, samples: usize) -> Vec<RationalVector> {
    let mut corpus = worked_cases();
    for lam in grid_vectors(2) {
        corpus.push(lam);
    }
    if n_max >= 3 {
        for lam in grid_vectors(3) {
            corpus.push(lam);
        }
    }
    if n_max >= 4 {
        for lam in grid_vectors(4) {
            corpus.push(lam);
        }
    }
    for n in 2..=n_max.min(6) {
        for _ in 0..samples {
            corpus.push(rand_vector(rng, n));
        }
    }
    corpus
}

fn describe(lam: &RationalVector) -> String {
    format!(
        "λ = ({})",
        lam.values()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn deterministic_split(universe: &[usize], tag: u64) -> (Vec<usize>, Vec<usize>) {
    let k = universe.len();
    let mask = if k == 0 { 0 } else { tag % (1 << k) };
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, &x) in universe.iter().enumerate() {
        if mask & (1 << i) != 0 {
            a.push(x);
        } else {
            b.push(x);
        }
    }
    (a, b)
}

// ---------------------------------------------------------------------
// appendix suite
// ---------------------------------------------------------------------

fn run_appendix(cfg: &RunConfig, checks: &mut Vec<CheckRecord>) {
    let mut rng = check_rng(cfg.seed, "appendix");
    let corpus = lambda_corpus(&mut rng, cfg.n_max, cfg.samples);

    // product identity over the catalogued sign systems and their closures
    let mut ck = Check::new(
        "appendix.product_split",
        "signed sum over positive ordered partitions factors through any two-coloring",
    );
    let systems = SignSystem::catalogue();
    let pairs: Vec<(SignSystem, SignSystem)> = {
        let mut v: Vec<(SignSystem, SignSystem)> = systems
            .iter()
            .map(|s| (s.clone(), s.clone()))
            .collect();
        v.push((
            SignSystem::Product(Box::new(SignSystem::Eps), Box::new(SignSystem::EpsPrime)),
            SignSystem::One,
        ));
        v.push((SignSystem::Eps, SignSystem::EpsEpsPrime));
        v
    };
    for (ci, lam) in corpus.iter().enumerate() {
        let (ip, im) = deterministic_split(lam.indices(), ci as u64);
        for (sc, sd) in &pairs {
            match check_prop_a1(sc, sd, lam, &ip, &im) {
                Ok((l, r)) => ck.eq_case(l, r, || {
                    format!("{} with ({}, {}), I+ = {ip:?}", describe(lam), sc.name(), sd.name())
                }),
                Err(e) => ck.error_case(e),
            }
        }
    }
    checks.push(ck.finish(cfg.timings));

    // alternating sum and its closed form
    let mut ck = Check::new(
        "appendix.alternating_sum",
        "alternating count of positive ordered partitions matches its closed form",
    );
    for lam in &corpus {
        match check_cor_a2(lam) {
            Ok(v) => ck.eq_case(v, cor_a2_closed_form(lam), || describe(lam)),
            Err(e) => ck.error_case(e),
        }
    }
    checks.push(ck.finish(cfg.timings));

    // matching reduction
    let mut ck = Check::new(
        "appendix.matching_reduction",
        "signed ε ε' sum reduces to the near-matching c-sum",
    );
    for lam in &corpus {
        match check_prop_a3(lam) {
            Ok((l, r)) => ck.eq_case(l, r, || describe(lam)),
            Err(e) => ck.error_case(e),
        }
    }
    checks.push(ck.finish(cfg.timings));

    // paired corollary
    let mut ck = Check::new(
        "appendix.paired_matching_reduction",
        "glued-pair variant reduces to the two-sided c-product",
    );
    let mut a4_cases: Vec<(usize, usize, RationalVector)> = Vec::new();
    for n in 0..=cfg.n_max.min(4) {
        for m in 1..=2usize {
            if n + 2 * m > 4 {
                continue;
            }
            for lam in grid_vectors(n + 2 * m) {
                a4_cases.push((n, m, lam));
            }
        }
    }
    for _ in 0..cfg.samples {
        let n = rng.gen_range(0..=3usize);
        let m = rng.gen_range(1..=(7usize.saturating_sub(n)) / 2);
        a4_cases.push((n, m, rand_vector(&mut rng, n + 2 * m)));
    }
    for (ci, (n, m, lam)) in a4_cases.iter().enumerate() {
        let free: Vec<usize> = (1..=*n).collect();
        let (ip, im) = deterministic_split(&free, ci as u64);
        match check_cor_a4(*n, *m, lam, &ip, &im) {
            Ok((l, r)) => {
                ck.eq_case(l, r, || format!("n={n}, m={m}, {}", describe(lam)))
            }
            Err(e) => ck.error_case(e),
        }
    }
    checks.push(ck.finish(cfg.timings));

    // rotation lemma
    let mut ck = Check::new(
        "appendix.rotation",
        "canonical rotation into the positive cone; (n-1)! count without bipartitions",
    );
    for lam in &corpus {
        if lam.total() <= rint(0) {
            continue;
        }
        match rotation_lemma(lam) {
            Ok(rot) => {
                let mut pass = rot.k >= 1 && rot.k <= lam.len();
                if rot.no_bipartition {
                    pass &= rot.count == crate::arith::factorial(lam.len() - 1);
                    pass &= rot.positive_rotations == 1;
                } else {
                    pass &= rot.positive_rotations >= 1;
                }
                ck.case(pass, || format!("{} → {rot:?}", describe(lam)));
            }
            Err(e) => ck.error_case(e),
        }
    }
    checks.push(ck.finish(cfg.timings));

    // delta reduction
    let mut ck = Check::new(
        "appendix.delta_reduction",
        "minimal-average subtraction splits the positive families coherently",
    );
    for lam in &corpus {
        if lam.len() > 6 || lam.total() <= rint(0) {
            continue;
        }
        for j in lam.minimizing_subsets() {
            match verify_delta_assertions(lam, &j) {
                Ok(()) => ck.case(true, String::new),
                Err(e) => ck.case(false, || format!("{} J={j:?}: {e}", describe(lam))),
            }
        }
    }
    checks.push(ck.finish(cfg.timings));

    // block decompositions
    let mut ck = Check::new(
        "appendix.blocks",
        "unique centered block decomposition and unique positive rotation",
    );
    for lam in &corpus {
        if lam.len() > 6
            || lam.total() <= rint(0)
            || lam.delta_n().map(|(_, nn)| nn) != Some(lam.len())
        {
            continue;
        }
        let mut partitions = Vec::new();
        if for_each_positive_ordered_partition(lam, false, &mut |p| {
            partitions.push(p.clone())
        })
        .is_err()
        {
            continue;
        }
        for p in partitions.iter().take(40) {
            let k = p.num_blocks();
            let centers_choices: Vec<Vec<usize>> = if k == 1 {
                vec![vec![0]]
            } else {
                vec![
                    vec![0],
                    vec![k - 1],
                    vec![0, k - 1],
                    (0..k).collect::<Vec<_>>(),
                ]
            };
            for centers in centers_choices {
                let centers: Vec<usize> = centers.into_iter().collect();
                let deco = block_decomposition(lam, p, &centers);
                let cnt = count_block_decompositions(lam, p, &centers);
                let pass = deco.is_ok() && cnt == 1;
                ck.case(pass, || {
                    format!(
                        "{} P={:?} centers={centers:?}: result {:?}, {} decompositions",
                        describe(lam),
                        p.blocks,
                        deco.as_ref().err(),
                        cnt
                    )
                });
            }
            for s in 0..k {
                let shifted = p.rotate_blocks(s);
                match rotate_to_positive(lam, &shifted) {
                    Ok((_, q)) => ck.case(q.is_positive(lam, false), || {
                        format!("{} rotation of {:?}", describe(lam), p.blocks)
                    }),
                    Err(e) => ck.case(false, || format!("{}: {e}", describe(lam))),
                }
            }
        }
    }
    checks.push(ck.finish(cfg.timings));

    // parity vanishing family
    let mut ck = Check::new(
        "appendix.parity",
        "even-class identity (strict and weak) and the odd-class vanishing sums",
    );
    for lam in &corpus {
        match check_parity_lemmas(lam, 2) {
            Ok(outcomes) => {
                for o in outcomes {
                    if o.applicable {
                        ck.case(o.equal, || format!("{} [{}]", describe(lam), o.name));
                    }
                }
            }
            Err(e) => ck.error_case(e),
        }
    }
    checks.push(ck.finish(cfg.timings));

    // reduction of the pairing layer to the partition layer
    let mut ck = Check::new(
        "appendix.pairing_reduction",
        "product-sum coefficient of successive pairings equals the signed paired sum",
    );
    let mut rt_cases: Vec<(usize, usize)> = Vec::new();
    for r in 0..=5usize {
        for t in 0..=2usize {
            if r + 2 * t <= 5 {
                rt_cases.push((r, t));
            }
        }
    }
    for &(r, t) in &rt_cases {
        let len = r + 2 * t;
        let mut mus: Vec<Weight> = Vec::new();
        for g in grid_vectors(len) {
            // doubled coefficients: entries in {-3..3}/2 double to ints
            let mut coeffs = vec![0i64];
            coeffs.extend(g.values().iter().map(|v| (v * rint(2)).to_integer()));
            let mut w = Weight::zero(len);
            w.0 = coeffs;
            mus.push(w);
        }
        for _ in 0..100 {
            let mut w = Weight::zero(len);
            w.0[0] = rng.gen_range(-4i64..=4);
            for i in 1..=len {
                w.0[i] = rng.gen_range(-6i64..=6);
            }
            mus.push(w);
        }
        for (ci, m) in mus.iter().enumerate() {
            let free: Vec<usize> = (1..=r).collect();
            let (ip, im) = deterministic_split(&free, ci as u64);
            match verify_prop331_core(r, t, m, &ip, &im) {
                Ok((l, rr)) => ck.eq_case(l, rr, || format!("r={r}, t={t}, μ={m}")),
                Err(e) => ck.error_case(e),
            }
        }
    }
    checks.push(ck.finish(cfg.timings));
}

// ---------------------------------------------------------------------
// endoscopy suite
// ---------------------------------------------------------------------

fn run_endoscopy(cfg: &RunConfig, checks: &mut Vec<CheckRecord>) {
    let mut rng = check_rng(cfg.seed, "endoscopy");

    let mut ck = Check::new(
        "endoscopy.constants",
        "volume constants, torus-count table, packet sizes and pairings",
    );
    for n in 1..=cfg.n_max.max(3) {
        for d in elliptic_data(n) {
            ck.eq_case(d.tamagawa(), if d.n2 == 0 { 1 } else { 2 }, || d.label.clone());
            ck.eq_case(
                d.lambda_order,
                if d.n2 == 0 { 1 } else { 2 },
                || d.label.clone(),
            );
        }
        ck.eq_case(l_packet_size(n), crate::arith::pow2(n - 1), || {
            format!("packet size at rank {n}")
        });
        let v = pairing(&rho(n), &mu(n)).unwrap();
        ck.eq_case(v, rint((n * (n + 1) / 2) as i64), || {
            format!("<rho, mu> at rank {n}")
        });
    }
    for n in cfg.n_max.max(3)..=6 {
        let v = pairing(&rho(n), &mu(n)).unwrap();
        ck.eq_case(v, rint((n * (n + 1) / 2) as i64), || {
            format!("<rho, mu> at rank {n}")
        });
    }
    // pinned transfer constants
    ck.eq_case(iota(2, &EndoscopicDatum::new(0, 2).unwrap()), rat(1, 4), || {
        "iota(GSp(4), GSO(4))".into()
    });
    ck.eq_case(iota(3, &EndoscopicDatum::new(1, 2).unwrap()), rat(1, 4), || {
        "iota(GSp(6), G(Sp(2)xSO(4)))".into()
    });
    ck.eq_case(k_constant(2, 0).unwrap(), 2, || "k at (2,0)".into());
    ck.eq_case(k_constant(1, 2).unwrap(), 2, || "k at (1,2)".into());
    ck.eq_case(k_constant(1, 0).unwrap(), 1, || "k at (1,0)".into());
    ck.eq_case(k_constant(0, 4).unwrap(), 4, || "k at (0,4)".into());
    for n in 1..=cfg.n_max {
        for levi in cuspidal_levis(n) {
            let expect = crate::arith::pow2(levi.r)
                * crate::arith::factorial(levi.r)
                * crate::arith::pow2(levi.t)
                * crate::arith::factorial(levi.t);
            ck.eq_case(levi.n_m_g(), expect, || format!("normalizer of {}", levi.label()));
            for tr in g_triples(&levi, &TripleFilters::default()) {
                let expect = crate::arith::pow2(levi.r + levi.t)
                    * crate::arith::factorial(tr.r1)
                    * crate::arith::factorial(tr.t1)
                    * crate::arith::factorial(tr.r2)
                    * crate::arith::factorial(tr.t2);
                ck.eq_case(tr.n_m_prime_h, expect, || {
                    format!("normalizer constant of {}", tr.m_prime_label)
                });
            }
        }
    }
    checks.push(ck.finish(cfg.timings));

    let mut ck = Check::new(
        "endoscopy.double_counting",
        "the two enumerations of (datum, Levi) pairs weigh every test function equally",
    );
    for n in 2..=cfg.n_max.min(4).max(2) {
        let (l, r) = double_counting_check(n, |_, _| rint(0));
        ck.eq_case(l, r, || format!("zero function at rank {n}"));
        let (l, r) = double_counting_check(n, |_, _| rint(1));
        ck.eq_case(l, r, || format!("indicator at rank {n}"));
        for sample in 0..50usize {
            // a random rational function on cuspidal shapes
            let mut table: BTreeMap<(usize, usize, HLeviShapeKey), Rat> = BTreeMap::new();
            for d in elliptic_data(n) {
                for s in h_levi_shapes(&d) {
                    if s.is_cuspidal() {
                        table.insert((d.n1, d.n2, shape_key(&s)), rand_rat(&mut rng));
                    }
                }
            }
            let (l, r) = double_counting_check(n, |d, s| {
                table
                    .get(&(d.n1, d.n2, shape_key(s)))
                    .copied()
                    .unwrap_or_else(|| rint(0))
            });
            ck.eq_case(l, r, || format!("random function {sample} at rank {n}"));
        }
    }
    checks.push(ck.finish(cfg.timings));

    let mut ck = Check::new(
        "endoscopy.k_tau",
        "the four-term volume/torus-constant identity on cuspidal pairs",
    );
    for n in 1..=cfg.n_max.min(5).max(2) {
        for levi in cuspidal_levis(n) {
            for tr in g_triples(
                &levi,
                &TripleFilters {
                    cuspidal_only: true,
                    ell0_only: true,
                    ..Default::default()
                },
            ) {
                match k_tau_identity(&levi, &tr) {
                    Ok(ok) => ck.case(ok, || format!("{} / {}", levi.label(), tr.m_prime_label)),
                    Err(e) => ck.error_case(e),
                }
            }
        }
    }
    checks.push(ck.finish(cfg.timings));
}

type HLeviShapeKey = (usize, usize, usize, usize, usize, usize);

fn shape_key(s: &HLeviShape) -> HLeviShapeKey {
    (s.r1, s.t1, s.m1, s.r2, s.t2, s.m2)
}

// ---------------------------------------------------------------------
// satake suite
// ---------------------------------------------------------------------

fn run_satake(cfg: &RunConfig, checks: &mut Vec<CheckRecord>) {
    let n_top = cfg.n_max.min(4).max(2);

    let mut ck = Check::new(
        "satake.factorizations",
        "transfer polynomials factor into linear, block and hermitian parts",
    );
    for n in 1..=n_top {
        for levi in cuspidal_levis(n) {
            for tr in g_triples(&levi, &TripleFilters::default()) {
                for a in 1..=2i64 {
                    match SatakeFamily::build(&levi, &tr, a) {
                        Ok(fam) => ck.case(fam.verify_factorizations(), || {
                            format!("n={n}, {}, triple {:?}, a={a}", levi.label(), tr.a)
                        }),
                        Err(e) => ck.error_case(e),
                    }
                }
            }
        }
    }
    checks.push(ck.finish(cfg.timings));

    let mut ck = Check::new(
        "satake.invariance",
        "basic transform is Weyl-invariant; transfers are invariant under the twist stabilizer",
    );
    for n in 0..=n_top {
        for a in 1..=2i64 {
            let phi = satake_phi(n, a);
            let pass = weyl_group(n).all(|w| phi.weyl_act(&w).unwrap() == phi);
            ck.case(pass, || format!("basic transform n={n}, a={a}"));
        }
    }
    for n in 1..=n_top {
        for levi in cuspidal_levis(n) {
            for tr in g_triples(&levi, &TripleFilters::default()) {
                let fam = match SatakeFamily::build(&levi, &tr, 1) {
                    Ok(f) => f,
                    Err(e) => {
                        ck.error_case(e);
                        continue;
                    }
                };
                let stab = twist_stabilizer(n, &fam.k);
                let pass = stab
                    .iter()
                    .all(|w| fam.f_h.weyl_act(w).unwrap() == fam.f_h);
                ck.case(pass, || {
                    format!("transfer invariance n={n}, K={:?}", fam.k)
                });
            }
        }
    }
    checks.push(ck.finish(cfg.timings));
}

// ---------------------------------------------------------------------
// kostant suite
// ---------------------------------------------------------------------

/// Dominant weights of rank `n ≤ 2` whose module both fits the oracle's
/// tensor budget and has dimension at most 200.
fn oracle_lambdas(n: usize) -> Vec<Weight> {
    let g = ParabolicIndex::new(n, []).unwrap();
    let mut out = Vec::new();
    let max_sum = if n == 1 { 12 } else { 6 };
    match n {
        1 => {
            for a in 0..=max_sum {
                let mut w = Weight::zero(1);
                w.0[1] = 2 * a;
                out.push(w);
            }
        }
        2 => {
            for a1 in 0..=max_sum {
                for a2 in 0..=a1 {
                    if a1 + a2 > max_sum {
                        continue;
                    }
                    let mut w = Weight::zero(2);
                    w.0[1] = 2 * a1;
                    w.0[2] = 2 * a2;
                    out.push(w);
                }
            }
        }
        _ => panic!("oracle comparison is a rank ≤ 2 affair"),
    }
    out.retain(|w| {
        crate::cohomology::levi_weyl_dimension(&g, w)
            .map(|d| d <= 200)
            .unwrap_or(false)
    });
    out
}

fn run_kostant(cfg: &RunConfig, checks: &mut Vec<CheckRecord>) {
    let mut ck = Check::new(
        "kostant.oracle_agreement",
        "minimal-representative decomposition matches the coboundary-complex oracle",
    );
    let mut euler = Check::new(
        "kostant.euler",
        "Euler characteristic vanishes whenever the nilradical is nonzero",
    );
    for n in 1..=cfg.n_max.min(2) {
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let parabolic = ParabolicIndex::new(n, s).unwrap();
            let nil_dim = parabolic.nilradical_roots().len();
            for lam in oracle_lambdas(n) {
                let oracle = match crate::ce_oracle::chevalley_eilenberg_oracle(
                    n, &parabolic, &lam,
                ) {
                    Ok(h) => h,
                    Err(e) => {
                        ck.error_case(e);
                        continue;
                    }
                };
                if nil_dim == 0 {
                    // single piece: the module itself in degree 0
                    let pieces = kostant_cohomology(n, &parabolic, &lam).unwrap();
                    let pass = pieces.len() == 1
                        && pieces[0].degree == 0
                        && pieces[0].kostant_weight == lam
                        && oracle.dimension_of_degree(0) as u64 == pieces[0].dimension;
                    ck.case(pass, || format!("n={n}, S=∅, λ={lam}"));
                } else {
                    match kostant_weight_multisets(n, &parabolic, &lam) {
                        Ok(predicted) => ck.eq_case(predicted, oracle.by_degree.clone(), || {
                            format!("n={n}, S={:?}, λ={lam}", parabolic.s)
                        }),
                        Err(e) => ck.error_case(e),
                    }
                    euler.eq_case(oracle.euler_characteristic(), 0, || {
                        format!("n={n}, S={:?}, λ={lam}", parabolic.s)
                    });
                    // piece count and dimension bookkeeping
                    let pieces = kostant_cohomology(n, &parabolic, &lam).unwrap();
                    let expected =
                        crate::root_data::weyl_order(n) / parabolic.levi_weyl_order();
                    euler.eq_case(pieces.len() as u64, expected, || {
                        format!("piece count at n={n}, S={:?}", parabolic.s)
                    });
                    let total: u64 = pieces.iter().map(|p| p.dimension).sum();
                    euler.eq_case(total as usize, oracle.total_dimension(), || {
                        format!("total dimension at n={n}, S={:?}, λ={lam}", parabolic.s)
                    });
                }
            }
        }
    }
    checks.push(ck.finish(cfg.timings));
    checks.push(euler.finish(cfg.timings));

    let mut ck = Check::new(
        "kostant.truncation",
        "positivity truncation keeps everything on the empty index and splits otherwise",
    );
    for n in 1..=cfg.n_max.min(2) {
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let parabolic = ParabolicIndex::new(n, s).unwrap();
            for lam in oracle_lambdas(n).into_iter().take(6) {
                let pieces = kostant_cohomology(n, &parabolic, &lam).unwrap();
                let l0 = central_character(&lam);
                let above =
                    truncate(&pieces, &l0, &parabolic, TruncationDirection::Above).unwrap();
                let below =
                    truncate(&pieces, &l0, &parabolic, TruncationDirection::Below).unwrap();
                if parabolic.s.is_empty() {
                    ck.case(
                        above.iter().all(|p| p.kept_by_truncation)
                            && below.iter().all(|p| p.kept_by_truncation),
                        || format!("empty index keeps everything, λ={lam}"),
                    );
                } else {
                    let rho_w = rho(n);
                    for i in 0..pieces.len() {
                        // the two directions never keep the same piece
                        ck.case(
                            !(above[i].kept_by_truncation && below[i].kept_by_truncation),
                            || format!("directions overlap, λ={lam}, piece {i}"),
                        );
                        // for a single index with no zero pairing they
                        // partition the pieces
                        if parabolic.s.len() == 1 {
                            let shifted = pieces[i].kostant_weight.add(&rho_w).add(&l0);
                            let s = *parabolic.s.iter().next().unwrap();
                            let v = pairing(&shifted, &crate::root_data::varpi(n, s)).unwrap();
                            if !v.is_zero() {
                                ck.case(
                                    above[i].kept_by_truncation != below[i].kept_by_truncation,
                                    || format!("truncation trichotomy, λ={lam}, piece {i}"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    checks.push(ck.finish(cfg.timings));

    let mut ck = Check::new(
        "kostant.character",
        "the two character-formula evaluations agree and are Weyl-invariant",
    );
    let mut rng = check_rng(cfg.seed, "kostant.character");
    for n in 1..=cfg.n_max.min(2) {
        let lams = oracle_lambdas(n);
        let mut found = 0usize;
        let mut attempts = 0usize;
        while found < 8 && attempts < 200 {
            attempts += 1;
            let c = rat(rng.gen_range(2i64..=9), 1);
            let coords: Vec<Rat> = (0..n)
                .map(|_| rat(rng.gen_range(2i64..=9), rng.gen_range(1i64..=3)))
                .collect();
            let Ok(gamma) = TorusPoint::new(c, coords) else {
                continue;
            };
            if !gamma.is_regular() {
                continue;
            }
            found += 1;
            for lam in lams.iter().take(4) {
                let t1 = weyl_character_trace(lam, &gamma);
                let t2 = weyl_character_trace_chambers(lam, &gamma);
                match (t1, t2) {
                    (Ok(a), Ok(b)) => {
                        ck.eq_case(a, b, || format!("character routes at λ={lam}"));
                        if lam.is_zero() {
                            ck.eq_case(a, rint(1), || "trivial character".to_string());
                        }
                        for w in weyl_group(n) {
                            let moved = gamma.acted_by(&w).unwrap();
                            let tm = weyl_character_trace(lam, &moved).unwrap();
                            ck.eq_case(tm, a, || format!("invariance at λ={lam}"));
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => ck.error_case(e),
                }
            }
        }
    }
    checks.push(ck.finish(cfg.timings));
}

/// Run the selected suites and collect the report.
pub fn run(cfg: &RunConfig) -> Report {
    let mut checks = Vec::new();
    match cfg.suite {
        Suite::Appendix => run_appendix(cfg, &mut checks),
        Suite::Endoscopy => run_endoscopy(cfg, &mut checks),
        Suite::Satake => run_satake(cfg, &mut checks),
        Suite::Kostant => run_kostant(cfg, &mut checks),
        Suite::All => {
            run_appendix(cfg, &mut checks);
            run_endoscopy(cfg, &mut checks);
            run_satake(cfg, &mut checks);
            run_kostant(cfg, &mut checks);
        }
    }
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = checks
        .iter()
        .all(|c| c.cases_run == c.cases_passed && c.first_counterexample.is_none());
    Report {
        schema: "v1".into(),
        config: cfg.clone(),
        checks,
        passed,
    }
}

/// All identities behind the `enumerate` CLI view, bundled for JSON output.
#[derive(Serialize)]
pub struct EnumerationView {
    pub n: usize,
    pub elliptic_data: Vec<EndoscopicDatum>,
    pub cuspidal_levis: Vec<LeviView>,
}

#[derive(Serialize)]
pub struct LeviView {
    pub levi: LeviDatum,
    pub label: String,
    pub n_m_g: u64,
    pub triples: Vec<crate::endoscopy::GTriple>,
}

pub fn enumation_view(n: usize) -> EnumerationView {
    let cuspidal = cuspidal_levis(n)
        .into_iter()
        .map(|levi| LeviView {
            label: levi.label(),
            n_m_g: levi.n_m_g(),
            triples: g_triples(&levi, &TripleFilters::default()),
            levi,
        })
        .collect();
    EnumerationView {
        n,
        elliptic_data: elliptic_data(n),
        cuspidal_levis: cuspidal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_are_deterministic() {
        let cfg = RunConfig {
            suite: Suite::Endoscopy,
            n_max: 3,
            samples: 5,
            seed: 7,
            timings: false,
        };
        let a = run(&cfg).to_json();
        let b = run(&cfg).to_json();
        assert_eq!(a, b);
        assert!(serde_json::from_str::<serde_json::Value>(&a).is_ok());
    }

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Endoscopy, Suite::Satake, Suite::Kostant] {
            let cfg = RunConfig {
                suite,
                n_max: 2,
                samples: 3,
                seed: 1,
                timings: false,
            };
            let report = run(&cfg);
            assert!(report.passed, "{}", report.to_table());
        }
    }

    #[test]
    fn appendix_smoke() {
        let cfg = RunConfig {
            suite: Suite::Appendix,
            n_max: 2,
            samples: 3,
            seed: 1,
            timings: false,
        };
        let report = run(&cfg);
        assert!(report.passed, "{}", report.to_table());
    }

    #[test]
    fn enumeration_view_counts() {
        let view = enumation_view(3);
        assert_eq!(view.elliptic_data.len(), 3);
        assert_eq!(view.cuspidal_levis.len(), 6);
    }
}
