//! Dimension of the commutant `{X : XT = TX for every generator T}`.
//!
//! The commutant is the nullspace of the stacked Sylvester operator
//! `X -> (XT - TX)_T`. Singular values at or below `rel_cutoff * sigma_max`
//! count as null directions.
//!
//! When every generator is block diagonal with respect to `H_+ (+) H_-`, the
//! four blocks `X_ab` satisfy independent systems `X_ab T_b - T_a X_ab = 0`
//! and are solved separately.
//!
//! Two solvers are available. `Dense` takes the singular values of the
//! assembled system directly. `Banded` is for large sparse generator sets: it
//! factors the band Gram matrix `K*K + eps I`, runs shifted inverse subspace
//! iteration to isolate the near-null subspace, then reads the singular values
//! of `K` on that subspace. The subspace is widened until at least one of its
//! singular values clears the cutoff, so no null direction is missed.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::banded::SparseRows;
use super::block::{BlockOperator, CMatrix};
use super::config::Leg;

type C = Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CommutantMethod {
    /// Dense below `dense_limit` unknowns, banded above.
    Auto,
    Dense,
    Banded,
}

#[derive(Clone, Copy, Debug)]
pub struct CommutantOptions {
    pub rel_cutoff: f64,
    pub method: CommutantMethod,
    pub dense_limit: usize,
    /// Exploit block-diagonal generators.
    pub split_legs: bool,
}

impl Default for CommutantOptions {
    fn default() -> Self {
        CommutantOptions {
            rel_cutoff: 1e-8,
            method: CommutantMethod::Auto,
            dense_limit: 400,
            split_legs: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubproblemReport {
    pub label: String,
    pub unknowns: usize,
    pub equations: usize,
    pub method: CommutantMethod,
    pub sigma_max: f64,
    pub cutoff: f64,
    pub null_dimension: usize,
    /// Largest singular value counted as null.
    pub largest_null_sigma: Option<f64>,
    /// Smallest computed singular value above the cutoff; with the banded
    /// solver every uncomputed singular value is at least this large.
    pub smallest_retained_sigma: Option<f64>,
    pub bandwidth: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutantReport {
    pub dimension: usize,
    pub unknowns: usize,
    pub legs_split: bool,
    pub subproblems: Vec<SubproblemReport>,
}

impl CommutantReport {
    /// Ratio of the smallest retained to the largest singular value over all
    /// subproblems: a conditioning figure for the reported dimension.
    pub fn gap_ratio(&self) -> Option<f64> {
        self.subproblems
            .iter()
            .filter_map(|s| s.smallest_retained_sigma.map(|r| r / s.sigma_max))
            .reduce(f64::min)
    }
}

/// Dimension of the commutant with default options.
pub fn commutant_dimension(generators: &[BlockOperator]) -> usize {
    commutant(generators, &CommutantOptions::default()).dimension
}

pub fn commutant(generators: &[BlockOperator], opts: &CommutantOptions) -> CommutantReport {
    let m = generators.first().map_or(0, BlockOperator::m);
    let split = opts.split_legs && generators.iter().all(BlockOperator::is_block_diagonal);
    let subproblems: Vec<SubproblemReport> = if split {
        let mut out = Vec::with_capacity(4);
        for a in Leg::BOTH {
            for b in Leg::BOTH {
                let left: Vec<&CMatrix> = generators.iter().map(|g| g.block(a, a)).collect();
                let right: Vec<&CMatrix> = generators.iter().map(|g| g.block(b, b)).collect();
                let label = format!("{}{}", a.symbol(), b.symbol());
                out.push(solve_sylvester(label, &left, &right, m, m, opts));
            }
        }
        out
    } else {
        let fulls: Vec<CMatrix> = generators.iter().map(BlockOperator::to_full).collect();
        let refs: Vec<&CMatrix> = fulls.iter().collect();
        vec![solve_sylvester("full".into(), &refs, &refs, 2 * m, 2 * m, opts)]
    };
    CommutantReport {
        dimension: subproblems.iter().map(|s| s.null_dimension).sum(),
        unknowns: 4 * m * m,
        legs_split: split,
        subproblems,
    }
}

/// Rows of `X -> X R_k - L_k X` for an unknown `p x q` matrix `X`, with
/// unknown `X_ij` at column `i * q + j`.
fn sylvester_rows(left: &[&CMatrix], right: &[&CMatrix], p: usize, q: usize) -> SparseRows {
    let zero = C::new(0.0, 0.0);
    let mut k = SparseRows::new(p * q);
    for (l, r) in left.iter().zip(right) {
        // column-wise nonzeros of R and row-wise nonzeros of L
        let r_cols: Vec<Vec<(usize, C)>> = (0..q)
            .map(|j| (0..q).filter(|&i| r[(i, j)] != zero).map(|i| (i, r[(i, j)])).collect())
            .collect();
        let l_rows: Vec<Vec<(usize, C)>> = (0..p)
            .map(|i| (0..p).filter(|&j| l[(i, j)] != zero).map(|j| (j, l[(i, j)])).collect())
            .collect();
        for (i, l_row) in l_rows.iter().enumerate() {
            for (j, r_col) in r_cols.iter().enumerate() {
                let mut row = Vec::with_capacity(r_col.len() + l_row.len());
                row.extend(r_col.iter().map(|&(s, v)| (i * q + s, v)));
                row.extend(l_row.iter().map(|&(s, v)| (s * q + j, -v)));
                k.push_row(row);
            }
        }
    }
    k
}

fn solve_sylvester(
    label: String,
    left: &[&CMatrix],
    right: &[&CMatrix],
    p: usize,
    q: usize,
    opts: &CommutantOptions,
) -> SubproblemReport {
    let k = sylvester_rows(left, right, p, q);
    let n = p * q;
    let method = match opts.method {
        CommutantMethod::Auto if n <= opts.dense_limit => CommutantMethod::Dense,
        CommutantMethod::Auto => CommutantMethod::Banded,
        other => other,
    };
    let mut report = SubproblemReport {
        label,
        unknowns: n,
        equations: k.nrows(),
        method,
        sigma_max: 0.0,
        cutoff: 0.0,
        null_dimension: n,
        largest_null_sigma: None,
        smallest_retained_sigma: None,
        bandwidth: None,
    };
    if k.nrows() == 0 {
        return report;
    }
    match method {
        CommutantMethod::Dense | CommutantMethod::Auto => dense_null(&k, opts.rel_cutoff, &mut report),
        CommutantMethod::Banded => banded_null(&k, opts.rel_cutoff, &mut report),
    }
    report
}

fn dense_null(k: &SparseRows, rel_cutoff: f64, report: &mut SubproblemReport) {
    let n = k.ncols;
    let sv: Vec<f64> = k.to_dense().singular_values().iter().copied().collect();
    let sigma_max = sv.iter().copied().fold(0.0, f64::max);
    let cutoff = rel_cutoff * sigma_max;
    let rank = sv.iter().filter(|&&s| s > cutoff).count();
    report.sigma_max = sigma_max;
    report.cutoff = cutoff;
    report.null_dimension = n - rank;
    report.largest_null_sigma = sv.iter().copied().filter(|&s| s <= cutoff).reduce(f64::max);
    report.smallest_retained_sigma = sv.iter().copied().filter(|&s| s > cutoff).reduce(f64::min);
}

/// Largest singular value of `K` by power iteration on `K*K`.
fn sigma_max_estimate(k: &SparseRows) -> f64 {
    let n = k.ncols;
    let mut v: Vec<C> = (0..n)
        .map(|i| C::new(1.0 + 0.37 * ((i * 7919) % 101) as f64 / 101.0, 0.0))
        .collect();
    let mut lambda = 0.0;
    for _ in 0..500 {
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        v.iter_mut().for_each(|z| *z /= norm);
        let w = k.adjoint_mul_vec(&k.mul_vec(&v));
        let next: f64 = v.iter().zip(&w).map(|(a, b)| (a.conj() * b).re).sum();
        v = w;
        if (next - lambda).abs() <= 1e-13 * next {
            lambda = next;
            break;
        }
        lambda = next;
    }
    lambda.max(0.0).sqrt()
}

fn orthonormalize(y: DMatrix<C>) -> DMatrix<C> {
    y.qr().q()
}

fn banded_null(k: &SparseRows, rel_cutoff: f64, report: &mut SubproblemReport) {
    let n = k.ncols;
    let gram = k.gram();
    report.bandwidth = Some(gram.bandwidth());

    let sigma_max = sigma_max_estimate(k);
    let cutoff = rel_cutoff * sigma_max;
    report.sigma_max = sigma_max;
    report.cutoff = cutoff;
    if sigma_max == 0.0 {
        report.null_dimension = n;
        return;
    }

    let mut shift = 1e-10 * sigma_max * sigma_max;
    let chol = loop {
        if let Some(c) = gram.cholesky(shift) {
            break c;
        }
        shift *= 100.0;
    };

    let mut rng = StdRng::seed_from_u64(0x5eed_c0de);
    let mut width = 8.min(n);
    loop {
        let mut v = DMatrix::<C>::from_fn(n, width, |_, _| C::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5));
        v = orthonormalize(v);
        let mut previous: Option<Vec<f64>> = None;
        let mut sv = Vec::new();
        for iter in 0..60 {
            let mut y = DMatrix::<C>::zeros(n, width);
            for c in 0..width {
                let col: Vec<C> = v.column(c).iter().copied().collect();
                let x = chol.solve(&col);
                for (i, xi) in x.into_iter().enumerate() {
                    y[(i, c)] = xi;
                }
            }
            v = orthonormalize(y);
            sv = restricted_singular_values(k, &v);
            let settled = previous.as_ref().is_some_and(|prev| {
                prev.iter()
                    .zip(&sv)
                    .all(|(a, b)| (a - b).abs() <= 1e-9 * sigma_max)
            });
            if settled && iter >= 2 {
                break;
            }
            previous = Some(sv.clone());
        }
        let null = sv.iter().filter(|&&s| s <= cutoff).count();
        if null < width || width == n {
            report.null_dimension = null;
            report.largest_null_sigma = sv.iter().copied().filter(|&s| s <= cutoff).reduce(f64::max);
            report.smallest_retained_sigma = sv.iter().copied().filter(|&s| s > cutoff).reduce(f64::min);
            return;
        }
        width = (2 * width).min(n);
    }
}

/// Singular values of `K V` for a column block `V`.
fn restricted_singular_values(k: &SparseRows, v: &DMatrix<C>) -> Vec<f64> {
    let rows = k.nrows();
    let mut kv = DMatrix::<C>::zeros(rows, v.ncols());
    for c in 0..v.ncols() {
        let col: Vec<C> = v.column(c).iter().copied().collect();
        for (i, z) in k.mul_vec(&col).into_iter().enumerate() {
            kv[(i, c)] = z;
        }
    }
    // thin QR first so the SVD runs on a width x width matrix
    let r = kv.qr().r();
    let mut sv: Vec<f64> = r.singular_values().iter().copied().collect();
    sv.sort_by(f64::total_cmp);
    sv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::podles::config::TruncationConfig;
    use crate::podles::operators::build_pi;

    fn unit(m: usize, i: usize, j: usize) -> CMatrix {
        let mut e = CMatrix::zeros(m, m);
        e[(i, j)] = C::new(1.0, 0.0);
        e
    }

    fn opts(method: CommutantMethod) -> CommutantOptions {
        CommutantOptions {
            method,
            ..Default::default()
        }
    }

    #[test]
    fn identity_commutes_with_everything() {
        for m in [2, 3, 5] {
            let gens = vec![BlockOperator::identity(m)];
            assert_eq!(commutant_dimension(&gens), 4 * m * m);
            let r = commutant(&gens, &opts(CommutantMethod::Banded));
            assert_eq!(r.dimension, 4 * m * m);
        }
    }

    #[test]
    fn podles_generators_have_two_dimensional_commutant() {
        for m in [4, 6, 8] {
            let cfg = TruncationConfig::new(m, 0.5, 2.0).unwrap();
            let g = build_pi(&cfg).unwrap();
            for method in [CommutantMethod::Dense, CommutantMethod::Banded] {
                let r = commutant(&g.generating_set(), &opts(method));
                assert_eq!(r.dimension, 2, "m={m} {method:?}: {r:?}");
                assert!(r.legs_split);
            }
        }
    }

    #[test]
    fn unsplit_system_agrees() {
        let cfg = TruncationConfig::new(5, 0.3, 0.1).unwrap();
        let g = build_pi(&cfg).unwrap();
        let o = CommutantOptions {
            split_legs: false,
            ..Default::default()
        };
        let r = commutant(&g.generating_set(), &o);
        assert!(!r.legs_split);
        assert_eq!(r.dimension, 2);
    }

    #[test]
    fn matrix_units_on_one_leg() {
        // commutant of {E_ij (+) 0} is C (+) M_m
        let m = 3;
        let mut gens = Vec::new();
        for i in 0..m {
            for j in 0..m {
                gens.push(BlockOperator::block_diagonal(unit(m, i, j), CMatrix::zeros(m, m)));
            }
        }
        assert_eq!(commutant_dimension(&gens), 1 + m * m);
        assert_eq!(commutant(&gens, &opts(CommutantMethod::Banded)).dimension, 1 + m * m);

        // adding the matrix units of the other leg leaves the scalars on each leg
        for i in 0..m {
            for j in 0..m {
                gens.push(BlockOperator::block_diagonal(CMatrix::zeros(m, m), unit(m, i, j)));
            }
        }
        assert_eq!(commutant_dimension(&gens), 2);
    }

    #[test]
    fn sylvester_rows_match_kronecker_form() {
        let l = CMatrix::from_fn(2, 2, |i, j| C::new((i + 2 * j) as f64, 1.0));
        let r = CMatrix::from_fn(3, 3, |i, j| C::new(i as f64 - j as f64, 0.5));
        let k = sylvester_rows(&[&l], &[&r], 2, 3);
        let x = CMatrix::from_fn(2, 3, |i, j| C::new((i * 3 + j) as f64, -(i as f64)));
        let flat: Vec<C> = (0..2).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| x[(i, j)]).collect();
        let kx = k.mul_vec(&flat);
        let expected = &x * &r - &l * &x;
        let flat_expected: Vec<C> = (0..2).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| expected[(i, j)]).collect();
        assert_eq!(kx.len(), flat_expected.len());
        for (a, b) in kx.iter().zip(&flat_expected) {
            assert!((a - b).norm() < 1e-13);
        }
    }
}
