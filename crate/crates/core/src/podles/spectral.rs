//! Functional calculus for Hermitian matrices.

use nalgebra::DVector;
use num_complex::Complex64;

use super::block::{BlockOperator, CMatrix};
use super::config::Leg;

/// `f(H)` for Hermitian `H`, via `H = V diag(w) V*`.
pub fn hermitian_function<F>(h: &CMatrix, f: F) -> CMatrix
where
    F: Fn(f64) -> f64,
{
    let eig = h.clone().symmetric_eigen();
    let fw: DVector<Complex64> = eig.eigenvalues.map(|w| Complex64::new(f(w), 0.0));
    let v = &eig.eigenvectors;
    v * CMatrix::from_diagonal(&fw) * v.adjoint()
}

/// Applies [`hermitian_function`] to the full operator.
pub fn block_function<F>(x: &BlockOperator, f: F) -> BlockOperator
where
    F: Fn(f64) -> f64,
{
    BlockOperator::from_full(&hermitian_function(&x.to_full(), f))
        .expect("square input gives square output")
}

/// Ascending eigenvalues of a Hermitian matrix.
pub fn hermitian_eigenvalues(h: &CMatrix) -> Vec<f64> {
    let mut w: Vec<f64> = h.clone().symmetric_eigenvalues().iter().copied().collect();
    w.sort_by(f64::total_cmp);
    w
}

/// Ascending eigenvalues of the `(leg, leg)` block.
pub fn leg_spectrum(x: &BlockOperator, leg: Leg) -> Vec<f64> {
    hermitian_eigenvalues(x.block(leg, leg))
}

/// `x^p` on the positive spectrum, 0 elsewhere. Negative powers therefore act
/// as the Moore-Penrose pseudo-inverse power.
pub fn pseudo_power(p: f64, floor: f64) -> impl Fn(f64) -> f64 {
    move |w| if w > floor { w.powf(p) } else { 0.0 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_squares_back() {
        let h = CMatrix::from_fn(4, 4, |i, j| {
            let base = Complex64::new((i + j) as f64 * 0.1, (i as f64 - j as f64) * 0.2);
            if i == j {
                base + Complex64::new(3.0, 0.0)
            } else {
                base
            }
        });
        let s = hermitian_function(&h, f64::sqrt);
        assert!((&s * &s - &h).norm() < 1e-12);
    }

    #[test]
    fn pseudo_inverse_power_kills_kernel() {
        let h = CMatrix::from_diagonal(&DVector::from_vec(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(4.0, 0.0),
        ]));
        let r = hermitian_function(&h, pseudo_power(-0.5, 1e-14));
        assert_eq!(r[(0, 0)], Complex64::new(0.0, 0.0));
        assert!((r[(1, 1)] - Complex64::new(0.5, 0.0)).norm() < 1e-15);
    }
}
