//! Independent cohomology oracle at small rank: build the irreducible
//! module inside a tensor power of the standard representation, then
//! compute the nilradical cohomology from the coboundary complex
//! `Λ•(n*) ⊗ V` by exact rank computations, graded by torus weight.
//!
//! Everything is done with explicit `2n x 2n` matrices for the Lie
//! algebra, so this path shares no theory with the minimal-length
//! representative computation it is used to check.

use crate::arith::neg_one_pow;
use crate::root_data::{positive_roots, ParabolicIndex, Weight};
use crate::{Error, Result};
use num::{BigInt, BigRational, One, Zero};
use std::collections::BTreeMap;

type TensorIdx = Vec<u8>;
type SparseVec = BTreeMap<TensorIdx, BigRational>;

/// Matrix of the root vector for `alpha` in the standard representation,
/// for the split symplectic form pairing `v_i` with `v_{2n+1-i}`.
pub fn gsp_root_matrix(n: usize, alpha: &Weight) -> Vec<Vec<i64>> {
    let dim = 2 * n;
    let mut m = vec![vec![0i64; dim]; dim];
    let support: Vec<(usize, i64)> = (1..=n)
        .filter(|i| alpha.0[*i] != 0)
        .map(|i| (i, alpha.0[i]))
        .collect();
    // entries use 1-based positions; E[a][b] sends v_b to v_a
    let mut set = |a: usize, b: usize, v: i64| m[a - 1][b - 1] = v;
    match support.as_slice() {
        [(i, 4)] => set(*i, 2 * n + 1 - i, 1),
        [(i, -4)] => set(2 * n + 1 - i, *i, 1),
        [(i, 2), (j, -2)] => {
            set(*i, *j, 1);
            set(2 * n + 1 - j, 2 * n + 1 - i, -1);
        }
        [(i, -2), (j, 2)] => {
            set(*j, *i, 1);
            set(2 * n + 1 - i, 2 * n + 1 - j, -1);
        }
        [(i, 2), (j, 2)] => {
            set(*i, 2 * n + 1 - j, 1);
            set(*j, 2 * n + 1 - i, 1);
        }
        [(i, -2), (j, -2)] => {
            set(2 * n + 1 - j, *i, 1);
            set(2 * n + 1 - i, *j, 1);
        }
        _ => panic!("not a root: {alpha}"),
    }
    m
}

/// Torus weight of the standard basis vector `v_b` (0-based): `e_{b+1}`
/// for `b < n` and `c - e_{2n-b}` for `b ≥ n`.
fn basis_weight(n: usize, b: usize) -> Weight {
    let mut w = Weight::zero(n);
    if b < n {
        w.0[b + 1] = 2;
    } else {
        w.0[0] = 2;
        w.0[2 * n - b] = -2;
    }
    w
}

fn commutator(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = a.len();
    let mut out = vec![vec![0i64; d]; d];
    for i in 0..d {
        for j in 0..d {
            let mut acc = 0i64;
            for k in 0..d {
                acc += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

fn apply_matrix_leibniz(n: usize, mat: &[Vec<i64>], v: &SparseVec) -> SparseVec {
    let dim = 2 * n;
    let mut out = SparseVec::new();
    for (idx, coef) in v {
        for f in 0..idx.len() {
            let b = idx[f] as usize;
            for (i, row) in mat.iter().enumerate().take(dim) {
                let entry = row[b];
                if entry != 0 {
                    let mut nidx = idx.clone();
                    nidx[f] = i as u8;
                    let c = out.entry(nidx).or_insert_with(BigRational::zero);
                    *c += BigRational::from_integer(BigInt::from(entry)) * coef;
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn tensor(a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (ia, ca) in a {
        for (ib, cb) in b {
            let mut idx = ia.clone();
            idx.extend_from_slice(ib);
            out.insert(idx, ca * cb);
        }
    }
    out
}

/// Reduce `v` against an echelon list of rows (distinct leading keys,
/// leading coefficient 1), returning the coordinates used and the
/// residual.
fn reduce_against(rows: &[SparseVec], v: SparseVec) -> (Vec<BigRational>, SparseVec) {
    let mut v = v;
    let mut coords = vec![BigRational::zero(); rows.len()];
    for (ri, row) in rows.iter().enumerate() {
        let lead = row.keys().next().expect("empty row");
        if let Some(c) = v.get(lead).cloned() {
            if !c.is_zero() {
                coords[ri] = c.clone();
                for (k, rc) in row {
                    let e = v.entry(k.clone()).or_insert_with(BigRational::zero);
                    *e -= &c * rc;
                }
                v.retain(|_, c| !c.is_zero());
            }
        }
    }
    (coords, v)
}

fn normalize(mut v: SparseVec) -> SparseVec {
    let lead = v.keys().next().cloned();
    if let Some(lead) = lead {
        let c = v[&lead].clone();
        for val in v.values_mut() {
            *val /= &c;
        }
    }
    v
}

/// The irreducible highest-weight module realized inside
/// `(standard)^{⊗N}`, with weight spaces kept as echelon bases.
pub struct TensorModule {
    pub n: usize,
    pub lambda: Weight,
    spaces: BTreeMap<Weight, Vec<SparseVec>>,
}

const MAX_TOTAL_WEIGHT_DIM: usize = 10_000;

impl TensorModule {
    /// Builds `V_λ` by closing the highest-weight vector under the
    /// negative root vectors. `λ` must be dominant and integral.
    pub fn build(n: usize, lambda: &Weight) -> Result<TensorModule> {
        if lambda.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: lambda.rank(),
            });
        }
        if !lambda.is_dominant() || !lambda.is_integral() {
            return Err(Error::NonDominant);
        }
        let coeffs: Vec<i64> = (1..=n).map(|i| lambda.0[i] / 2).collect();
        let big_n: i64 = coeffs.iter().sum();
        if n >= 1 && (2 * n as i64).pow(big_n as u32) > 4_000_000 {
            return Err(Error::SizeLimit(format!(
                "tensor space (2n)^{big_n} too large"
            )));
        }
        // highest-weight vector: product of antisymmetrized top wedges
        let mut hw: SparseVec = [(Vec::new(), BigRational::one())].into_iter().collect();
        for k in 1..=n {
            let mult = coeffs[k - 1] - coeffs.get(k).copied().unwrap_or(0);
            for _ in 0..mult {
                hw = tensor(&hw, &top_wedge(k));
            }
        }
        // the raising operators must kill it
        for alpha in positive_roots(n) {
            let mat = gsp_root_matrix(n, &alpha);
            if !apply_matrix_leibniz(n, &mat, &hw).is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "highest-weight vector not annihilated by {alpha}"
                )));
            }
        }

        let shift = {
            // the tensor realization has central coefficient 0; shift by λ's
            let mut s = Weight::zero(n);
            s.0[0] = lambda.0[0];
            s
        };
        let weight_of = |idx: &TensorIdx| -> Weight {
            let mut w = shift.clone();
            for b in idx {
                w = w.add(&basis_weight(n, *b as usize));
            }
            w
        };

        let lowering: Vec<Vec<Vec<i64>>> = positive_roots(n)
            .iter()
            .map(|a| gsp_root_matrix(n, &a.neg()))
            .collect();

        let mut spaces: BTreeMap<Weight, Vec<SparseVec>> = BTreeMap::new();
        let mut queue: Vec<SparseVec> = Vec::new();
        let mut total = 0usize;
        let push = |v: SparseVec,
                        spaces: &mut BTreeMap<Weight, Vec<SparseVec>>,
                        queue: &mut Vec<SparseVec>,
                        total: &mut usize|
         -> Result<()> {
            if v.is_empty() {
                return Ok(());
            }
            let w = weight_of(v.keys().next().unwrap());
            debug_assert!(v.keys().all(|k| weight_of(k) == w));
            let rows = spaces.entry(w).or_default();
            let (_, residual) = reduce_against(rows, v);
            if !residual.is_empty() {
                let vnorm = normalize(residual);
                // keep leading keys distinct and sorted for stable reduction
                let pos = rows
                    .binary_search_by(|r| r.keys().next().unwrap().cmp(vnorm.keys().next().unwrap()))
                    .unwrap_err();
                rows.insert(pos, vnorm.clone());
                queue.push(vnorm);
                *total += 1;
                if *total > MAX_TOTAL_WEIGHT_DIM {
                    return Err(Error::SizeLimit(
                        "module dimension exceeds the oracle limit".into(),
                    ));
                }
            }
            Ok(())
        };
        push(hw, &mut spaces, &mut queue, &mut total)?;
        while let Some(v) = queue.pop() {
            for mat in &lowering {
                push(
                    apply_matrix_leibniz(n, mat, &v),
                    &mut spaces,
                    &mut queue,
                    &mut total,
                )?;
            }
        }
        Ok(TensorModule {
            n,
            lambda: lambda.clone(),
            spaces,
        })
    }

    pub fn dimension(&self) -> usize {
        self.spaces.values().map(|r| r.len()).sum()
    }

    /// Weight multiset of the module.
    pub fn weights(&self) -> BTreeMap<Weight, usize> {
        self.spaces
            .iter()
            .map(|(w, rows)| (w.clone(), rows.len()))
            .collect()
    }

    fn space(&self, w: &Weight) -> &[SparseVec] {
        self.spaces.get(w).map(|r| r.as_slice()).unwrap_or(&[])
    }
}

fn top_wedge(k: usize) -> SparseVec {
    use itertools::Itertools;
    let mut out = SparseVec::new();
    for perm in (0..k as u8).permutations(k) {
        let mut inv = 0;
        for a in 0..k {
            for b in (a + 1)..k {
                if perm[a] > perm[b] {
                    inv += 1;
                }
            }
        }
        out.insert(perm, BigRational::from_integer(BigInt::from(neg_one_pow(inv))));
    }
    out
}

/// Graded, torus-weighted cohomology of `Lie(N_S)` acting on `V_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CeCohomology {
    /// `by_degree[k]` maps a torus weight to `dim H^k` in that weight.
    pub by_degree: Vec<BTreeMap<Weight, usize>>,
    pub module_dimension: usize,
}

impl CeCohomology {
    pub fn total_dimension(&self) -> usize {
        self.by_degree
            .iter()
            .map(|m| m.values().sum::<usize>())
            .sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_degree
            .iter()
            .enumerate()
            .map(|(k, m)| neg_one_pow(k) * m.values().sum::<usize>() as i64)
            .sum()
    }

    pub fn dimension_of_degree(&self, k: usize) -> usize {
        self.by_degree
            .get(k)
            .map(|m| m.values().sum())
            .unwrap_or(0)
    }
}

/// Compute `H^*(Lie(N_S), V_λ)` from the coboundary complex by exact rank
/// computations, blocked by torus weight.
pub fn chevalley_eilenberg_oracle(
    n: usize,
    parabolic: &ParabolicIndex,
    lambda: &Weight,
) -> Result<CeCohomology> {
    let module = TensorModule::build(n, lambda)?;
    let nil: Vec<Weight> = {
        let mut v = parabolic.nilradical_roots();
        v.sort();
        v
    };
    let d = nil.len();
    let mats: Vec<Vec<Vec<i64>>> = nil.iter().map(|a| gsp_root_matrix(n, a)).collect();

    // bracket table: [x_i, x_j] = scalar · x_k (or zero)
    let mut bracket: Vec<Vec<Option<(usize, i64)>>> = vec![vec![None; d]; d];
    for i in 0..d {
        for j in (i + 1)..d {
            let c = commutator(&mats[i], &mats[j]);
            if c.iter().all(|row| row.iter().all(|x| *x == 0)) {
                continue;
            }
            let gamma = nil[i].add(&nil[j]);
            let k = nil
                .binary_search(&gamma)
                .map_err(|_| Error::InvalidArgument("bracket escapes the nilradical".into()))?;
            let m = &mats[k];
            let mut scalar = None;
            'outer: for a in 0..2 * n {
                for b in 0..2 * n {
                    if m[a][b] != 0 {
                        scalar = Some(c[a][b] / m[a][b]);
                        break 'outer;
                    }
                }
            }
            let s = scalar.expect("nonzero root matrix");
            for a in 0..2 * n {
                for b in 0..2 * n {
                    if c[a][b] != s * m[a][b] {
                        return Err(Error::InvalidArgument(
                            "bracket is not a root-vector multiple".into(),
                        ));
                    }
                }
            }
            bracket[i][j] = Some((k, s));
        }
    }

    // subsets of the nilradical roots, grouped by size
    let mut subsets_by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for mask in 0u64..(1u64 << d) {
        let subset: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
        subsets_by_size[subset.len()].push(subset);
    }
    for v in &mut subsets_by_size {
        v.sort();
    }
    let sum_roots = |subset: &[usize]| -> Weight {
        let mut w = Weight::zero(n);
        for &i in subset {
            w = w.add(&nil[i]);
        }
        w
    };

    // collect the cochain weights ν = weight(V-space) - Σ_A
    let mut cochain_weights: std::collections::BTreeSet<Weight> = Default::default();
    for (mu, _) in module.weights() {
        for size in 0..=d {
            for a in &subsets_by_size[size] {
                cochain_weights.insert(mu.sub(&sum_roots(a)));
            }
        }
    }

    let mut by_degree: Vec<BTreeMap<Weight, usize>> = vec![BTreeMap::new(); d + 1];
    for nu in cochain_weights {
        // dimensions of C^k_ν
        let basis_of = |k: usize| -> Vec<(usize, usize)> {
            // (index into subsets_by_size[k], row)
            let mut out = Vec::new();
            for (ai, a) in subsets_by_size[k].iter().enumerate() {
                let mu = nu.add(&sum_roots(a));
                for r in 0..module.space(&mu).len() {
                    out.push((ai, r));
                }
            }
            out
        };
        let dims: Vec<usize> = (0..=d).map(|k| basis_of(k).len()).collect();
        if dims.iter().all(|x| *x == 0) {
            continue;
        }
        // boundary matrices and their ranks
        let mut ranks = vec![0usize; d + 1];
        for k in 0..d {
            if dims[k] == 0 || dims[k + 1] == 0 {
                continue;
            }
            let dom = basis_of(k);
            let cod = basis_of(k + 1);
            let cod_pos: BTreeMap<(usize, usize), usize> = cod
                .iter()
                .enumerate()
                .map(|(pos, key)| (*key, pos))
                .collect();
            let mut mat: Vec<Vec<BigRational>> =
                vec![vec![BigRational::zero(); dom.len()]; cod.len()];
            for (col, &(ai, r)) in dom.iter().enumerate() {
                let a = &subsets_by_size[k][ai];
                let mu = nu.add(&sum_roots(a));
                let v = &module.space(&mu)[r];
                for (bi, b) in subsets_by_size[k + 1].iter().enumerate() {
                    let value = differential_value(
                        n, &nil, &mats, &bracket, a, b, v, &module, &nu, &sum_roots,
                    )?;
                    if value.is_empty() {
                        continue;
                    }
                    let mu_b = nu.add(&sum_roots(b));
                    let rows = module.space(&mu_b);
                    let (coords, residual) = reduce_against(rows, value);
                    if !residual.is_empty() {
                        return Err(Error::InvalidArgument(
                            "differential leaves the module".into(),
                        ));
                    }
                    for (rr, cval) in coords.into_iter().enumerate() {
                        if !cval.is_zero() {
                            let row = cod_pos[&(bi, rr)];
                            mat[row][col] = cval;
                        }
                    }
                }
            }
            ranks[k] = rank(mat);
        }
        for k in 0..=d {
            let rk_out = if k < d { ranks[k] } else { 0 };
            let rk_in = if k > 0 { ranks[k - 1] } else { 0 };
            let h = dims[k] - rk_out - rk_in;
            if h > 0 {
                *by_degree[k].entry(nu.clone()).or_insert(0) += h;
            }
        }
    }

    Ok(CeCohomology {
        by_degree,
        module_dimension: module.dimension(),
    })
}

/// `(dφ)(x_B)` for `φ = x*_A ⊗ v`.
#[allow(clippy::too_many_arguments)]
fn differential_value(
    n: usize,
    nil: &[Weight],
    mats: &[Vec<Vec<i64>>],
    bracket: &[Vec<Option<(usize, i64)>>],
    a: &[usize],
    b: &[usize],
    v: &SparseVec,
    _module: &TensorModule,
    _nu: &Weight,
    _sum_roots: &dyn Fn(&[usize]) -> Weight,
) -> Result<SparseVec> {
    let _ = nil;
    let mut out = SparseVec::new();
    let add_scaled = |target: &mut SparseVec, src: SparseVec, scale: i64| {
        if scale == 0 {
            return;
        }
        let s = BigRational::from_integer(BigInt::from(scale));
        for (k, c) in src {
            let e = target.entry(k).or_insert_with(BigRational::zero);
            *e += &s * c;
        }
    };

    // action terms: B must contain A with exactly one extra element
    for (s, &beta) in b.iter().enumerate() {
        let rest: Vec<usize> = b
            .iter()
            .copied()
            .filter(|x| *x != beta)
            .collect();
        if rest == a {
            let moved = apply_matrix_leibniz(n, &mats[beta], v);
            add_scaled(&mut out, moved, neg_one_pow(s));
        }
    }

    // bracket terms
    for s in 0..b.len() {
        for t in (s + 1)..b.len() {
            let Some((gidx, scalar)) = bracket[b[s]][b[t]] else {
                continue;
            };
            let rest: Vec<usize> = b
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != s && *i != t)
                .map(|(_, x)| *x)
                .collect();
            if rest.contains(&gidx) {
                continue;
            }
            let mut merged = rest.clone();
            let pos = merged.partition_point(|x| *x < gidx);
            merged.insert(pos, gidx);
            if merged != a {
                continue;
            }
            let sign = neg_one_pow(s + t) * neg_one_pow(pos) * scalar;
            add_scaled(&mut out, v.clone(), sign);
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

fn rank(mut mat: Vec<Vec<BigRational>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        let pivot = (row..rows).find(|r| !mat[*r][col].is_zero());
        let Some(p) = pivot else { continue };
        mat.swap(row, p);
        let pv = mat[row][col].clone();
        for r in 0..rows {
            if r != row && !mat[r][col].is_zero() {
                let factor = &mat[r][col] / &pv;
                for c2 in col..cols {
                    let delta = &factor * &mat[row][c2];
                    mat[r][c2] -= delta;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}
