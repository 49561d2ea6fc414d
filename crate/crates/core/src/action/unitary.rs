//! The equivariant unitary `U~` and the adjoint action `ad_U`.

use num_complex::Complex64;

use super::gaop::GAOperator;
use super::rep::EquivariantRep;
use crate::error::Result;
use crate::freeprod::{coproduct, GroupAlgebraElement, TensorElement};
use crate::podles::{full_index, BlockOperator, Leg};

/// `U~` in the standard basis. On the `D`-eigenvectors it acts by
/// `(e_n, e_n) -> (e_n, e_n) (x) q_n^+` and `(e_n, -e_n) -> (e_n, -e_n) (x) q_n^-`,
/// so each `n` contributes the 2x2 block
/// `1/2 [[q+ + q-, q+ - q-], [q+ - q-, q+ + q-]]`.
pub fn build_u(rep: &EquivariantRep, m: usize) -> Result<GAOperator> {
    rep.require(m)?;
    let mut u = GAOperator::zeros(m);
    for n in 0..m {
        let (qp, qm) = (&rep.qplus[n], &rep.qminus[n]);
        let sum = (qp + qm).scale_real(0.5);
        let diff = (qp - qm).scale_real(0.5);
        let (p, q) = (full_index(m, Leg::Plus, n), full_index(m, Leg::Minus, n));
        u.set(p, p, sum.clone());
        u.set(q, q, sum);
        u.set(p, q, diff.clone());
        u.set(q, p, diff);
    }
    Ok(u)
}

/// `ad_U(x) = U~ (x (x) 1) U~*`, multiplied out entry by entry.
pub fn ad_u(x: &BlockOperator, u: &GAOperator) -> GAOperator {
    u.mul(&GAOperator::from_scalar_operator(x)).mul(&u.adjoint())
}

/// The change of basis whose columns are the unnormalized `D`-eigenvectors
/// `(e_n, e_n)` (column `(+, n)`) and `(e_n, -e_n)` (column `(-, n)`);
/// `W* W = 2`.
pub fn eigenbasis_change(m: usize) -> BlockOperator {
    let one = Complex64::new(1.0, 0.0);
    let mut w = BlockOperator::zeros(m);
    for n in 0..m {
        w.set_entry((Leg::Plus, n), (Leg::Plus, n), one);
        w.set_entry((Leg::Minus, n), (Leg::Plus, n), one);
        w.set_entry((Leg::Plus, n), (Leg::Minus, n), one);
        w.set_entry((Leg::Minus, n), (Leg::Minus, n), -one);
    }
    w
}

/// `U~` expressed in the orthonormal `D`-eigenbasis, `W* U~ W / 2`. The
/// unnormalized `W` keeps every coefficient dyadic, so the result is exact.
pub fn u_in_eigenbasis(u: &GAOperator) -> GAOperator {
    let w = GAOperator::from_scalar_operator(&eigenbasis_change(u.m()));
    w.adjoint().mul(u).mul(&w).map_entries(|a| a.scale_real(0.5))
}

/// Largest entry norm of `U~ U~* - 1` and `U~* U~ - 1`.
pub fn unitarity_residual(u: &GAOperator) -> f64 {
    let id = GAOperator::identity(u.m());
    let left = u.mul(&u.adjoint()).max_diff(&id);
    let right = u.adjoint().mul(u).max_diff(&id);
    left.max(right)
}

/// Largest entry norm of `U~ (D (x) 1) - (D (x) 1) U~`.
pub fn dirac_commutator_residual(u: &GAOperator, d: &BlockOperator) -> f64 {
    let d = GAOperator::from_scalar_operator(d);
    u.mul(&d).max_diff(&d.mul(u))
}

/// Outcome of the corepresentation check in the eigenbasis.
#[derive(Clone, Debug, PartialEq)]
pub struct CorepresentationCheck {
    /// Largest entry norm of `W* U~ W` off the diagonal.
    pub off_diagonal: f64,
    /// Largest coefficient of `Delta(u_ii) - (u_ii (x) 1)(1 (x) u_ii)`.
    pub coproduct: f64,
}

/// In the eigenbasis `U~` is diagonal, and each diagonal entry `u` satisfies
/// `Delta(u) = (u (x) 1)(1 (x) u)`, the entrywise form of
/// `(id (x) Delta) U~ = U~_12 U~_13`.
pub fn corepresentation_check(u: &GAOperator) -> CorepresentationCheck {
    let diag = u_in_eigenbasis(u);
    let mut off_diagonal = 0.0f64;
    let mut coproduct_err = 0.0f64;
    let one = GroupAlgebraElement::one();
    for (i, j, a) in diag.entries() {
        if i != j {
            off_diagonal = off_diagonal.max(a.l1_norm());
            continue;
        }
        let lhs = coproduct(a);
        let rhs = TensorElement::tensor(a, &one).mul(&TensorElement::tensor(&one, a));
        coproduct_err = coproduct_err.max(lhs.max_abs_diff(&rhs));
    }
    CorepresentationCheck {
        off_diagonal,
        coproduct: coproduct_err,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeprod::Word;
    use crate::podles::{build_dirac, build_pi, build_projections, TruncationConfig};

    fn cfg(m: usize) -> TruncationConfig {
        TruncationConfig::new(m, 0.5, 2.0).unwrap()
    }

    #[test]
    fn trivial_rep_gives_identity() {
        let u = build_u(&EquivariantRep::trivial(5), 5).unwrap();
        assert_eq!(u, GAOperator::identity(5));
    }

    #[test]
    fn universal_u_on_first_basis_vector() {
        let m = 4;
        let u = build_u(&EquivariantRep::universal(m), m).unwrap();
        let r2 = GroupAlgebraElement::from_word(Word::r(2));
        let r2y = GroupAlgebraElement::from_word(Word::r(2).mul(&Word::y()));
        let col = full_index(m, Leg::Plus, 2);
        assert_eq!(u.entry(col, col), (&r2 + &r2y).scale_real(0.5));
        assert_eq!(u.entry(full_index(m, Leg::Minus, 2), col), (&r2 - &r2y).scale_real(0.5));
    }

    #[test]
    fn universal_u_is_unitary_and_commutes_with_d() {
        let c = cfg(8);
        let u = build_u(&EquivariantRep::universal(c.m), c.m).unwrap();
        assert_eq!(unitarity_residual(&u), 0.0);
        assert_eq!(dirac_commutator_residual(&u, &build_dirac(&c).operator), 0.0);
        let core = corepresentation_check(&u);
        assert_eq!(core.off_diagonal, 0.0);
        assert_eq!(core.coproduct, 0.0);
    }

    #[test]
    fn eigenbasis_diagonal_holds_q() {
        let m = 3;
        let rep = EquivariantRep::universal(m);
        let d = u_in_eigenbasis(&build_u(&rep, m).unwrap());
        for n in 0..m {
            for leg in Leg::BOTH {
                let i = full_index(m, leg, n);
                assert_eq!(&d.entry(i, i), rep.q(leg, n));
            }
        }
    }

    #[test]
    fn ad_u_fixes_identity_and_projection_pairs() {
        let c = cfg(6);
        let u = build_u(&EquivariantRep::universal(c.m), c.m).unwrap();
        assert_eq!(ad_u(&BlockOperator::identity(c.m), &u), GAOperator::identity(c.m));
        for n in 0..c.m {
            let (p, q) = build_projections(&c, n).unwrap();
            let sum = &p + &q;
            assert_eq!(ad_u(&sum, &u), GAOperator::from_scalar_operator(&sum));
        }
    }

    #[test]
    fn ad_u_of_generators_is_block_diagonal() {
        let c = cfg(8);
        let g = build_pi(&c).unwrap();
        let u = build_u(&EquivariantRep::universal(c.m), c.m).unwrap();
        assert_eq!(ad_u(&g.a, &u).off_diagonal_max(), 0.0);
        assert_eq!(ad_u(&g.b, &u).off_diagonal_max(), 0.0);
    }
}
