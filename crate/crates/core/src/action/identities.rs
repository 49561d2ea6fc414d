//! Word-level identities satisfied by the coefficients of an equivariant
//! unitary. Every identity is stated as an element that must vanish; its
//! residual is the l1 norm of that element after reduction.

use serde::Serialize;

use super::rep::EquivariantRep;
use crate::error::Result;
use crate::freeprod::{GroupAlgebraElement, Word};
use crate::podles::{Leg, TruncationConfig};

/// One identity instance at a fixed index.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub family: &'static str,
    pub n: usize,
    pub residual: f64,
}

impl IdentityCheck {
    fn new(family: &'static str, n: usize, element: &GroupAlgebraElement) -> Self {
        IdentityCheck {
            family,
            n,
            residual: element.l1_norm(),
        }
    }

    pub fn holds(&self, tol: f64) -> bool {
        self.residual <= tol
    }
}

/// Largest residual among `checks`.
pub fn max_residual(checks: &[IdentityCheck]) -> f64 {
    checks.iter().map(|c| c.residual).fold(0.0, f64::max)
}

/// The checks whose residual exceeds `tol`.
pub fn failures(checks: &[IdentityCheck], tol: f64) -> Vec<&IdentityCheck> {
    checks.iter().filter(|c| !c.holds(tol)).collect()
}

/// Names of the four families checked by [`verify_q_relations`].
pub const Q_RELATION_FAMILIES: [&str; 4] = [
    "q+ q-* = q- q+*",
    "(s+ + s-)(q+ q+* - q- q-*) + (s+ - s-)(q+ q-* - q- q+*) = 0",
    "(s+ + s-)(q+ q+* - q- q-*) + (s+ - s-)(q- q+* - q+ q-*) = 0",
    "(s+ + s-)(q+ q+* - q- q-*) = (s+ - s-)(q- q+* - q+ q-*), raised index",
];

fn pair(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> GroupAlgebraElement {
    a.mul(&b.star())
}

/// The four relations forced on the coefficients by `ad_U` preserving the
/// legs, with `s_pm = c_pm(n)^(1/2)`:
///
/// 1. `q_n^+ q_n^-* - q_n^- q_n^+*` for `n < m`;
/// 2. `(s+ + s-)(q+_{n-1} q+_n* - q-_{n-1} q-_n*) + (s+ - s-)(q+_{n-1} q-_n* - q-_{n-1} q+_n*)` for `1 <= n < m`;
/// 3. as 2 with the second bracket `q-_{n-1} q+_n* - q+_{n-1} q-_n*`;
/// 4. `(s+ + s-)(q+_{n+1} q+_n* - q-_{n+1} q-_n*) - (s+ - s-)(q-_{n+1} q+_n* - q+_{n+1} q-_n*)`
///    with `s_pm = c_pm(n+1)^(1/2)`, for `n + 1 < m`.
pub fn verify_q_relations(rep: &EquivariantRep, cfg: &TruncationConfig) -> Result<Vec<IdentityCheck>> {
    let m = cfg.m;
    rep.require(m)?;
    let (qp, qm) = (&rep.qplus, &rep.qminus);
    let weights = |n: usize| {
        let (sp, sm) = (cfg.shift_weight(Leg::Plus, n), cfg.shift_weight(Leg::Minus, n));
        (sp + sm, sp - sm)
    };
    let mut out = Vec::new();
    for n in 0..m {
        let r = &pair(&qp[n], &qm[n]) - &pair(&qm[n], &qp[n]);
        out.push(IdentityCheck::new(Q_RELATION_FAMILIES[0], n, &r));
    }
    for n in 1..m {
        let (s, d) = weights(n);
        let same = &pair(&qp[n - 1], &qp[n]) - &pair(&qm[n - 1], &qm[n]);
        let mixed = &pair(&qp[n - 1], &qm[n]) - &pair(&qm[n - 1], &qp[n]);
        let r2 = &same.scale_real(s) + &mixed.scale_real(d);
        let r3 = &same.scale_real(s) - &mixed.scale_real(d);
        out.push(IdentityCheck::new(Q_RELATION_FAMILIES[1], n, &r2));
        out.push(IdentityCheck::new(Q_RELATION_FAMILIES[2], n, &r3));
    }
    for n in 0..m.saturating_sub(1) {
        let (s, d) = weights(n + 1);
        let same = &pair(&qp[n + 1], &qp[n]) - &pair(&qm[n + 1], &qm[n]);
        let mixed = &pair(&qm[n + 1], &qp[n]) - &pair(&qp[n + 1], &qm[n]);
        let r4 = &same.scale_real(s) - &mixed.scale_real(d);
        out.push(IdentityCheck::new(Q_RELATION_FAMILIES[3], n, &r4));
    }
    Ok(out)
}

/// The generator identities implied by the relations: `q_n^- = q_n^+ y_{n-1}`,
/// `y_n = y_{n-1}`, `y_n` self-adjoint unitary, `q_n^pm` unitary,
/// `w_{n+1} = z_n* w_n z_{n+1}`, `w' = w_1* z_1` self-adjoint unitary and
/// `q_0^+ q_0^-* = w_1 z_1*`.
pub fn verify_generator_identities(rep: &EquivariantRep, m: usize) -> Result<Vec<IdentityCheck>> {
    rep.require(m)?;
    let e = GroupAlgebraElement::one();
    let mut out = Vec::new();
    for n in 0..m {
        let y = rep.y(n);
        out.push(IdentityCheck::new("y_n = y_n*", n, &(&y - &y.star())));
        out.push(IdentityCheck::new("y_n y_n* = e", n, &(&y.mul(&y.star()) - &e)));
        for leg in Leg::BOTH {
            let q = rep.q(leg, n);
            let family = match leg {
                Leg::Plus => "q+_n unitary",
                Leg::Minus => "q-_n unitary",
            };
            let res = (&q.mul(&q.star()) - &e).l1_norm().max((&q.star().mul(q) - &e).l1_norm());
            out.push(IdentityCheck { family, n, residual: res });
        }
        if n >= 1 {
            let factored = rep.qplus[n].mul(&rep.y(n - 1));
            out.push(IdentityCheck::new("q-_n = q+_n y_{n-1}", n, &(&rep.qminus[n] - &factored)));
            out.push(IdentityCheck::new("y_n = y_{n-1}", n, &(&y - &rep.y(n - 1))));
        }
        if n >= 1 && n + 1 < m {
            let rhs = rep.z(n).star().mul(&rep.w(n)).mul(&rep.z(n + 1));
            out.push(IdentityCheck::new("w_{n+1} = z_n* w_n z_{n+1}", n, &(&rep.w(n + 1) - &rhs)));
        }
    }
    if m >= 2 {
        let wp = rep.w_prime();
        out.push(IdentityCheck::new("w' = w'*", 1, &(&wp - &wp.star())));
        out.push(IdentityCheck::new("w' w'* = e", 1, &(&wp.mul(&wp.star()) - &e)));
        let lhs = pair(&rep.qplus[0], &rep.qminus[0]);
        let rhs = rep.w(1).mul(&rep.z(1).star());
        out.push(IdentityCheck::new("q+_0 q-_0* = w_1 z_1*", 0, &(&lhs - &rhs)));
    }
    Ok(out)
}

/// The three word identities of the universal family `r_n^+ = r_n`,
/// `r_n^- = r_n y`: `r+_n r-_n* = r-_n r+_n*`,
/// `r+_{n-1} r-_n* = r-_{n-1} r+_n*` and `r+_{n-1} r+_n* = r-_{n-1} r-_n*`.
pub fn verify_universal_word_identities(m: usize) -> Vec<IdentityCheck> {
    let rp = |n: usize| Word::r(n as u32);
    let rm = |n: usize| Word::r(n as u32).mul(&Word::y());
    let diff = |a: Word, b: Word| {
        let mut el = GroupAlgebraElement::from_word(a);
        el.add_term(b, num_complex::Complex64::new(-1.0, 0.0));
        el
    };
    let mut out = Vec::new();
    for n in 0..m {
        let r1 = diff(rp(n).mul(&rm(n).inverse()), rm(n).mul(&rp(n).inverse()));
        out.push(IdentityCheck::new("r+_n r-_n* = r-_n r+_n*", n, &r1));
        if n >= 1 {
            let r2 = diff(rp(n - 1).mul(&rm(n).inverse()), rm(n - 1).mul(&rp(n).inverse()));
            out.push(IdentityCheck::new("r+_{n-1} r-_n* = r-_{n-1} r+_n*", n, &r2));
            let r3 = diff(rp(n - 1).mul(&rp(n).inverse()), rm(n - 1).mul(&rm(n).inverse()));
            out.push(IdentityCheck::new("r+_{n-1} r+_n* = r-_{n-1} r-_n*", n, &r3));
        }
    }
    out
}

/// Per-index consistency residual
/// `max(|q+_n q-_n* - q-_n q+_n*|, |y_n - y_0|, |q-_n - q+_n y_0|)` (l1 norms).
///
/// It vanishes at every index exactly when the relations hold, and unlike the
/// pairwise relations, which couple neighbouring indices, a defect in the
/// coefficients at a single index shows up at that index alone.
pub fn index_consistency(rep: &EquivariantRep, m: usize) -> Result<Vec<f64>> {
    rep.require(m)?;
    let y0 = rep.y(0);
    Ok((0..m)
        .map(|n| {
            let (qp, qm) = (&rep.qplus[n], &rep.qminus[n]);
            let alg = (&pair(qp, qm) - &pair(qm, qp)).l1_norm();
            let y = (&rep.y(n) - &y0).l1_norm();
            let fac = (qm - &qp.mul(&y0)).l1_norm();
            alg.max(y).max(fac)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> TruncationConfig {
        TruncationConfig::new(16, 0.5, 2.0).unwrap()
    }

    #[test]
    fn universal_rep_satisfies_everything() {
        let c = cfg();
        let rep = EquivariantRep::universal(c.m);
        let q = verify_q_relations(&rep, &c).unwrap();
        assert_eq!(q.len(), 16 + 2 * 15 + 15);
        assert_eq!(max_residual(&q), 0.0);
        assert_eq!(max_residual(&verify_generator_identities(&rep, c.m).unwrap()), 0.0);
        assert_eq!(max_residual(&verify_universal_word_identities(c.m)), 0.0);
        assert!(index_consistency(&rep, c.m).unwrap().iter().all(|&r| r == 0.0));
    }

    #[test]
    fn trivial_rep_satisfies_relations() {
        let c = cfg();
        let rep = EquivariantRep::trivial(c.m);
        assert_eq!(max_residual(&verify_q_relations(&rep, &c).unwrap()), 0.0);
    }

    #[test]
    fn dropping_y_breaks_neighbouring_relations() {
        let c = cfg();
        let rep = EquivariantRep::without_y_at(c.m, 3).unwrap();
        let q = verify_q_relations(&rep, &c).unwrap();
        let bad: Vec<(&str, usize)> = failures(&q, 1e-12).iter().map(|f| (f.family, f.n)).collect();
        // the self-relation at n = 3 still holds: r3 r3^-1 = e on both sides
        assert!(!bad.iter().any(|&(f, _)| f == Q_RELATION_FAMILIES[0]));
        for (f, n) in &bad {
            if *f == Q_RELATION_FAMILIES[3] {
                assert!([2, 3].contains(n));
            } else {
                assert!([3, 4].contains(n));
            }
        }
        assert_eq!(bad.len(), 6);
        let r = index_consistency(&rep, c.m).unwrap();
        for (n, v) in r.iter().enumerate() {
            if n == 3 {
                assert!(*v >= 1.0);
            } else {
                assert_eq!(*v, 0.0);
            }
        }
    }

    #[test]
    fn w_recursion_example() {
        let rep = EquivariantRep::universal(4);
        let expected: Word = "r1*y*r2^-1".parse().unwrap();
        assert_eq!(rep.w(2), GroupAlgebraElement::from_word(expected));
    }
}
