//! Closed-form expressions for `ad_U(A)`, `ad_U(B)` and `ad_U(tau)` as finite
//! sums over the rank-one projections `P_n`, `Q_n`.

use super::gaop::GAOperator;
use super::rep::EquivariantRep;
use crate::error::{Error, Result};
use crate::freeprod::{GroupAlgebraElement, Word};
use crate::podles::{full_index, Leg, TruncationConfig};

fn e() -> GroupAlgebraElement {
    GroupAlgebraElement::one()
}

/// Coefficient of `A P_n` (leg `+`) or `A Q_n` (leg `-`):
/// `1/(2 l+) {l+ (1 + s) + l- (1 - s)}` and `1/(2 l-) {l+ (1 - s) + l- (1 + s)}`
/// with `s = q_n^+ (q_n^-)*`.
pub fn alpha_a_coefficient(rep: &EquivariantRep, cfg: &TruncationConfig, leg: Leg, n: usize) -> GroupAlgebraElement {
    let (lp, lm) = (cfg.lambda_plus(), cfg.lambda_minus());
    let s = rep.qplus[n].mul(&rep.qminus[n].star());
    let one_plus = &e() + &s;
    let one_minus = &e() - &s;
    match leg {
        Leg::Plus => (&one_plus.scale_real(lp) + &one_minus.scale_real(lm)).scale_real(0.5 / lp),
        Leg::Minus => (&one_minus.scale_real(lp) + &one_plus.scale_real(lm)).scale_real(0.5 / lm),
    }
}

/// Coefficient of `B P_n` (leg `+`) or `B Q_n` (leg `-`), `n >= 1`:
///
/// `1/(4 c_+(n)^(1/2)) [(s+ + s-)(q+_{n-1} q+_n* + q-_{n-1} q-_n*) + (s+ - s-)(q-_{n-1} q+_n* + q+_{n-1} q-_n*)]`
///
/// and the same with `c_-(n)` and the sign of the second bracket flipped, where
/// `s_pm = c_pm(n)^(1/2)`. The prefactor carries the square root of
/// `c_pm(n)`: `B P_n` already contributes the weight `c_+(n)^(1/2)`, and this is
/// the normalization under which the sum agrees with `ad_U(B)`.
pub fn alpha_b_coefficient(
    rep: &EquivariantRep,
    cfg: &TruncationConfig,
    leg: Leg,
    n: usize,
) -> Result<GroupAlgebraElement> {
    let c = cfg.c_coeff(leg, n);
    if n == 0 || c.is_nan() || c <= 0.0 {
        return Err(Error::ZeroDenominator(n));
    }
    let (sp, sm) = (cfg.shift_weight(Leg::Plus, n), cfg.shift_weight(Leg::Minus, n));
    let (pp, pm) = (&rep.qplus[n - 1], &rep.qminus[n - 1]);
    let (np, nm) = (rep.qplus[n].star(), rep.qminus[n].star());
    let same = &pp.mul(&np) + &pm.mul(&nm);
    let mixed = &pm.mul(&np) + &pp.mul(&nm);
    let mixed = match leg {
        Leg::Plus => mixed,
        Leg::Minus => -&mixed,
    };
    let bracket = &same.scale_real(sp + sm) + &mixed.scale_real(sp - sm);
    Ok(bracket.scale_real(1.0 / (4.0 * c.sqrt())))
}

/// `sum_{n < m} A P_n (x) a_n^+ + A Q_n (x) a_n^-`.
pub fn closed_form_alpha_a(rep: &EquivariantRep, cfg: &TruncationConfig) -> Result<GAOperator> {
    cfg.validate()?;
    let m = cfg.m;
    rep.require(m)?;
    let mut out = GAOperator::zeros(m);
    for n in 0..m {
        for leg in Leg::BOTH {
            let i = full_index(m, leg, n);
            let coef = alpha_a_coefficient(rep, cfg, leg, n).scale_real(cfg.a_eigenvalue(leg, n));
            out.set(i, i, coef);
        }
    }
    Ok(out)
}

/// `sum_{1 <= n < m} B P_n (x) b_n^+ + B Q_n (x) b_n^-`.
pub fn closed_form_alpha_b(rep: &EquivariantRep, cfg: &TruncationConfig) -> Result<GAOperator> {
    cfg.validate()?;
    let m = cfg.m;
    rep.require(m)?;
    let mut out = GAOperator::zeros(m);
    for n in 1..m {
        for leg in Leg::BOTH {
            let coef = alpha_b_coefficient(rep, cfg, leg, n)?.scale_real(cfg.shift_weight(leg, n));
            out.set(full_index(m, leg, n - 1), full_index(m, leg, n), coef);
        }
    }
    Ok(out)
}

/// `sum_{1 <= n < m} tau (P_n + Q_n) (x) r_{n-1} r_n^{-1}`.
pub fn alpha_tau(m: usize) -> GAOperator {
    let mut out = GAOperator::zeros(m);
    for n in 1..m {
        let w = Word::r(n as u32 - 1).mul(&Word::r_pow(n as u32, -1));
        for leg in Leg::BOTH {
            out.set(
                full_index(m, leg, n - 1),
                full_index(m, leg, n),
                GroupAlgebraElement::from_word(w.clone()),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::unitary::{ad_u, build_u};
    use crate::freeprod::Character;
    use crate::podles::{build_pi, build_tau};

    fn cfgs() -> Vec<TruncationConfig> {
        [(0.5, 2.0), (0.3, 0.1), (0.9, 10.0)]
            .iter()
            .map(|&(mu, c)| TruncationConfig::new(10, mu, c).unwrap())
            .collect()
    }

    #[test]
    fn closed_forms_match_brute_force() {
        for cfg in cfgs() {
            let rep = EquivariantRep::universal(cfg.m);
            let u = build_u(&rep, cfg.m).unwrap();
            let g = build_pi(&cfg).unwrap();
            let a = closed_form_alpha_a(&rep, &cfg).unwrap();
            let b = closed_form_alpha_b(&rep, &cfg).unwrap();
            assert!(ad_u(&g.a, &u).max_diff(&a) < 1e-12);
            assert!(ad_u(&g.b, &u).max_diff(&b) < 1e-12);
        }
    }

    #[test]
    fn trivial_rep_collapses_to_scalars() {
        let cfg = TruncationConfig::default();
        let rep = EquivariantRep::trivial(cfg.m);
        let g = build_pi(&cfg).unwrap();
        let a = closed_form_alpha_a(&rep, &cfg).unwrap();
        let b = closed_form_alpha_b(&rep, &cfg).unwrap();
        assert!(a.max_diff(&GAOperator::from_scalar_operator(&g.a)) < 1e-12);
        assert!(b.max_diff(&GAOperator::from_scalar_operator(&g.b)) < 1e-12);
    }

    #[test]
    fn unit_square_root_weighting_is_required() {
        // dividing by c_+(n) instead of its square root leaves a mismatch of
        // size |c_+(n)^(-1/2) - 1| relative to the brute-force action
        let cfg = TruncationConfig::default();
        let rep = EquivariantRep::trivial(cfg.m);
        let coef = alpha_b_coefficient(&rep, &cfg, Leg::Plus, 1).unwrap();
        let c1 = cfg.c_plus(1);
        let alt = coef.scale_real(c1.sqrt() / c1);
        assert!((coef.coefficient(&Word::identity()).re - 1.0).abs() < 1e-15);
        assert!((alt.coefficient(&Word::identity()).re - 1.0).abs() > 0.1);
    }

    #[test]
    fn a_coefficient_under_phi_is_one() {
        let cfg = TruncationConfig::default();
        let rep = EquivariantRep::universal(cfg.m);
        let phi = Character::phi(0.25);
        for n in 0..cfg.m {
            for leg in Leg::BOTH {
                let v = phi.evaluate(&alpha_a_coefficient(&rep, &cfg, leg, n)).unwrap();
                assert!((v - 1.0).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn zero_index_has_no_b_coefficient() {
        let cfg = TruncationConfig::default();
        let rep = EquivariantRep::universal(cfg.m);
        assert!(matches!(
            alpha_b_coefficient(&rep, &cfg, Leg::Plus, 0),
            Err(Error::ZeroDenominator(0))
        ));
    }

    #[test]
    fn tau_closed_form_matches_brute_force() {
        let cfg = TruncationConfig::new(12, 0.5, 2.0).unwrap();
        let u = build_u(&EquivariantRep::universal(cfg.m), cfg.m).unwrap();
        let tau = build_tau(&cfg);
        let brute = ad_u(&tau, &u);
        assert_eq!(brute.max_diff(&alpha_tau(cfg.m)), 0.0);
        let m = cfg.m;
        assert!(brute.get(full_index(m, Leg::Plus, 0), full_index(m, Leg::Plus, 0)).is_none());
        let trivial = build_u(&EquivariantRep::trivial(m), m).unwrap();
        assert_eq!(ad_u(&tau, &trivial), GAOperator::from_scalar_operator(&tau));
    }
}
