//! The non-compactness witness: a commutator built from `ad_U(tau)` and the
//! shift whose tail norms stay bounded away from zero.

use num_complex::Complex64;
use serde::Serialize;

use super::rep::EquivariantRep;
use super::unitary::{ad_u, build_u};
use crate::error::Result;
use crate::freeprod::{Character, Word};
use crate::podles::{build_pi, build_tau, compactness_profile, BlockOperator, CVector, CompactnessProfile, Leg, TruncationConfig};

/// `|lambda_{n-1} - lambda_n|` below this counts as a degenerate angle.
pub const DEGENERATE_GAP: f64 = 1e-12;

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub theta: f64,
    /// `e^{2 pi i theta} = 1`: every `lambda_n` equals 1 and the commutator vanishes.
    pub degenerate: bool,
    /// `|1 - e^{2 pi i theta}|`, the predicted constant tail norm.
    pub expected_gap: f64,
    /// Largest `|K (e_n, 0) - (lambda_{n-1} - lambda_n)(e_{n-2}, 0)|` over
    /// `2 <= n <= m - buffer`, for `K = [alpha_phi(tau) P_+, tau_1]`.
    pub plus_entry_error: f64,
    /// The same on the `-` leg for the full commutator `[alpha_phi(tau), tau]`.
    pub minus_entry_error: f64,
    /// Tail norms of `K` for `k = 0 ..= m - buffer`.
    pub profile: CompactnessProfile,
}

impl WitnessReport {
    /// Largest deviation of the profile from the predicted constant.
    pub fn profile_deviation(&self) -> f64 {
        self.profile
            .tail_norms
            .iter()
            .map(|t| (t - self.expected_gap).abs())
            .fold(0.0, f64::max)
    }
}

fn commutator(a: &BlockOperator, b: &BlockOperator) -> BlockOperator {
    &(a * b) - &(b * a)
}

fn unit(m: usize, leg: Leg, n: usize) -> CVector {
    let mut v = CVector::zeros(2 * m);
    v[crate::podles::full_index(m, leg, n)] = Complex64::new(1.0, 0.0);
    v
}

/// `alpha_phi(tau) = (id (x) phi_theta)(ad_U(tau))` for the given coefficients.
pub fn alpha_phi_tau(theta: f64, rep: &EquivariantRep, cfg: &TruncationConfig) -> Result<BlockOperator> {
    let u = build_u(rep, cfg.m)?;
    ad_u(&build_tau(cfg), &u).evaluate(&Character::phi(theta))
}

/// Builds `K = [alpha_phi(tau) P_+, tau_1]`, checks its action on the basis
/// against `(lambda_{n-1} - lambda_n) e_{n-2}` on both legs and returns its
/// tail-norm profile.
pub fn noncompact_witness(theta: f64, rep: &EquivariantRep, cfg: &TruncationConfig) -> Result<WitnessReport> {
    cfg.validate()?;
    let m = cfg.m;
    let phi = Character::phi(theta);
    let lambda = |n: usize| -> Result<Complex64> {
        phi.evaluate_word(&Word::r(n as u32 - 1).mul(&Word::r_pow(n as u32, -1)))
    };
    let a_tau = alpha_phi_tau(theta, rep, cfg)?;
    let tau = build_tau(cfg);
    let tau1 = tau.compress_to(Leg::Plus);
    let plus_part = &a_tau * &BlockOperator::identity(m).compress_to(Leg::Plus);
    let k_plus = commutator(&plus_part, &tau1);
    let k_full = commutator(&a_tau, &tau);

    let mut plus_err = 0.0f64;
    let mut minus_err = 0.0f64;
    for n in 2..=cfg.interior_max() {
        let gap = lambda(n - 1)? - lambda(n)?;
        let want_p = unit(m, Leg::Plus, n - 2) * gap;
        let want_m = unit(m, Leg::Minus, n - 2) * gap;
        plus_err = plus_err.max((k_plus.column(Leg::Plus, n) - want_p).norm());
        minus_err = minus_err.max((k_full.column(Leg::Minus, n) - want_m).norm());
    }
    let expected_gap = (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * theta)).norm();
    Ok(WitnessReport {
        theta,
        degenerate: expected_gap < DEGENERATE_GAP,
        expected_gap,
        plus_entry_error: plus_err,
        minus_entry_error: minus_err,
        profile: compactness_profile(&k_plus, cfg.interior_max()),
    })
}

/// Tail norms of `[tau_1, pi_+(A)]`, a compact commutator used as contrast.
pub fn toeplitz_contrast(cfg: &TruncationConfig) -> Result<CompactnessProfile> {
    let a = build_pi(cfg)?.a.compress_to(Leg::Plus);
    let tau1 = build_tau(cfg).compress_to(Leg::Plus);
    Ok(compactness_profile(&commutator(&tau1, &a), cfg.interior_max()))
}

/// Closed form of the contrast profile: `[tau_1, A] e_n = lambda_+ mu^{2n-2}(1 - mu^2) e_{n-1}`,
/// so the tail norm at `k` is `lambda_+ mu^{2 max(k,1) - 2} (1 - mu^2)`.
pub fn toeplitz_contrast_prediction(cfg: &TruncationConfig, k: usize) -> f64 {
    let k = k.max(1) as i32;
    cfg.lambda_plus() * cfg.mu.powi(2 * k - 2) * (1.0 - cfg.mu * cfg.mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turn_gives_root_two() {
        let cfg = TruncationConfig::new(16, 0.5, 2.0).unwrap();
        let r = noncompact_witness(0.25, &EquivariantRep::universal(16), &cfg).unwrap();
        assert!(!r.degenerate);
        assert!(r.plus_entry_error < 1e-12);
        assert!(r.minus_entry_error < 1e-12);
        assert!((r.expected_gap - 2f64.sqrt()).abs() < 1e-15);
        assert!(r.profile_deviation() < 1e-10);
        assert_eq!(r.profile.tail_norms.len(), 15);
    }

    #[test]
    fn half_turn_gives_two() {
        let cfg = TruncationConfig::new(12, 0.5, 2.0).unwrap();
        let r = noncompact_witness(0.5, &EquivariantRep::universal(12), &cfg).unwrap();
        assert!(r.profile_deviation() < 1e-10);
        assert!((r.expected_gap - 2.0).abs() < 1e-12);
    }

    #[test]
    fn zero_angle_is_degenerate() {
        let cfg = TruncationConfig::new(10, 0.5, 2.0).unwrap();
        let r = noncompact_witness(0.0, &EquivariantRep::universal(10), &cfg).unwrap();
        assert!(r.degenerate);
        assert!(r.profile.tail_norms.iter().all(|&t| t < 1e-14));
        assert_eq!(alpha_phi_tau(0.0, &EquivariantRep::universal(10), &cfg).unwrap(), build_tau(&cfg));
    }

    #[test]
    fn contrast_matches_prediction() {
        let cfg = TruncationConfig::new(16, 0.5, 2.0).unwrap();
        let p = toeplitz_contrast(&cfg).unwrap();
        for (k, t) in p.tail_norms.iter().enumerate() {
            let want = toeplitz_contrast_prediction(&cfg, k);
            assert!((t - want).abs() < 1e-12 * want.max(1.0), "k={k}: {t} vs {want}");
        }
    }
}
