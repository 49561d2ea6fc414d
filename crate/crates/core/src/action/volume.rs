//! Invariance of the trace under `ad_U`: `(Tr (x) id)(ad_U(X)) = Tr(X) e`.

use num_complex::Complex64;
use serde::Serialize;

use super::gaop::GAOperator;
use super::rep::EquivariantRep;
use super::unitary::build_u;
use crate::error::Result;
use crate::freeprod::GroupAlgebraElement;
use crate::podles::{full_index, Leg};

#[derive(Clone, Debug, Serialize)]
pub struct VolumeReport {
    /// Number of rank-one operators `|xi><eta|` checked.
    pub pairs: usize,
    /// Largest l1 norm of `(Tr (x) id)(ad_U(X)) - Tr(X) e` over the pairs.
    pub max_residual: f64,
    /// The same for `X = 1`.
    pub identity_residual: f64,
}

/// Entries of `(e_n, +-e_n)`, the unnormalized `D`-eigenvector of the given
/// sign; the factor `1/2` of `|xi><eta|` is applied separately so that all
/// coefficients stay exact.
fn mode_entries(m: usize, sign: Leg, n: usize) -> [(usize, f64); 2] {
    [(full_index(m, Leg::Plus, n), 1.0), (full_index(m, Leg::Minus, n), sign.sign())]
}

/// Checks the trace identity for every `|xi><eta|` with `xi`, `eta` among the
/// `2m` eigenvectors of `D`, and for the identity operator.
pub fn verify_volume_invariance(rep: &EquivariantRep, m: usize) -> Result<VolumeReport> {
    let u = build_u(rep, m)?;
    let u_star = u.adjoint();
    let modes: Vec<(Leg, usize)> = (0..m).flat_map(|n| Leg::BOTH.map(|s| (s, n))).collect();
    let mut max_residual = 0.0f64;
    for &(si, ni) in &modes {
        for &(sj, nj) in &modes {
            let mut x = GAOperator::zeros(m);
            for (i, a) in mode_entries(m, si, ni) {
                for (j, b) in mode_entries(m, sj, nj) {
                    x.add_to(i, j, &GroupAlgebraElement::scalar(Complex64::new(0.5 * a * b, 0.0)));
                }
            }
            let trace_x = x.partial_trace();
            let image = u.mul(&x).mul(&u_star);
            max_residual = max_residual.max((&image.partial_trace() - &trace_x).l1_norm());
        }
    }
    let id = GAOperator::identity(m);
    let identity_image = u.mul(&id).mul(&u_star);
    let identity_residual = (&identity_image.partial_trace() - &id.partial_trace()).l1_norm();
    Ok(VolumeReport {
        pairs: modes.len() * modes.len(),
        max_residual,
        identity_residual,
    })
}
