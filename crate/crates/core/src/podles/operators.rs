//! The representation `pi = pi_+ (+) pi_-` of the Podles sphere, the Dirac
//! operator, the shift `tau` and the spectral projections `P_n`, `Q_n`.

use num_complex::Complex64;
use serde::Serialize;

use super::block::{full_index, BlockOperator, CMatrix, CVector};
use super::config::{Leg, TruncationConfig};
use super::spectral::{block_function, hermitian_eigenvalues};
use crate::error::{Error, Result};

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `pi(A)` and `pi(B)` at a fixed truncation.
#[derive(Clone, Debug)]
pub struct PodlesGenerators {
    pub a: BlockOperator,
    pub b: BlockOperator,
}

impl PodlesGenerators {
    pub fn b_star(&self) -> BlockOperator {
        self.b.adjoint()
    }

    /// `[A, B, B*]`, the generating set used for commutant computations.
    pub fn generating_set(&self) -> Vec<BlockOperator> {
        vec![self.a.clone(), self.b.clone(), self.b_star()]
    }
}

/// `A e_n = lambda mu^(2n) e_n` and `B e_n = c(n)^(1/2) e_{n-1}` on each leg.
pub fn build_pi(cfg: &TruncationConfig) -> Result<PodlesGenerators> {
    cfg.validate()?;
    let m = cfg.m;
    let diag = |leg| CMatrix::from_fn(m, m, |i, j| if i == j { re(cfg.a_eigenvalue(leg, i)) } else { re(0.0) });
    let shift = |leg| {
        CMatrix::from_fn(m, m, |i, j| {
            if j == i + 1 {
                re(cfg.shift_weight(leg, j))
            } else {
                re(0.0)
            }
        })
    };
    Ok(PodlesGenerators {
        a: BlockOperator::block_diagonal(diag(Leg::Plus), diag(Leg::Minus)),
        b: BlockOperator::block_diagonal(shift(Leg::Plus), shift(Leg::Minus)),
    })
}

/// Unweighted down-shift `tau e_n = e_{n-1}` on both legs.
pub fn build_tau(cfg: &TruncationConfig) -> BlockOperator {
    let m = cfg.m;
    let s = CMatrix::from_fn(m, m, |i, j| if j == i + 1 { re(1.0) } else { re(0.0) });
    BlockOperator::block_diagonal(s.clone(), s)
}

/// Number operator `N e_n = n e_n` on one leg.
pub fn number_operator(m: usize) -> CMatrix {
    CMatrix::from_fn(m, m, |i, j| if i == j { re(i as f64) } else { re(0.0) })
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationResidual {
    pub name: &'static str,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub interior_max: usize,
    pub residuals: Vec<RelationResidual>,
}

impl RelationReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    pub fn all_within(&self, tol: f64) -> bool {
        self.residuals.iter().all(|r| r.residual <= tol)
    }
}

pub const RELATION_NAMES: [&str; 4] = [
    "A* = A",
    "AB = mu^-2 BA",
    "B*B = A - A^2 + cI",
    "BB* = mu^2 A - mu^4 A^2 + cI",
];

/// Residuals of the four defining relations on the interior vectors
/// `e_n`, `n <= m - buffer`.
pub fn verify_podles_relations(gens: &PodlesGenerators, cfg: &TruncationConfig) -> RelationReport {
    let m = cfg.m;
    let (a, b) = (&gens.a, &gens.b);
    let bs = b.adjoint();
    let id = BlockOperator::identity(m);
    let a2 = a * a;
    let mu2 = cfg.mu * cfg.mu;
    let cid = id.scale_real(cfg.c);

    let r1 = &a.adjoint() - a;
    let r2 = &(a * b) - &(b * a).scale_real(1.0 / mu2);
    let r3 = &(&bs * b) - &(&(a - &a2) + &cid);
    let r4 = &(b * &bs) - &(&(&a.scale_real(mu2) - &a2.scale_real(mu2 * mu2)) + &cid);

    let k = cfg.interior_max();
    RelationReport {
        interior_max: k,
        residuals: RELATION_NAMES
            .iter()
            .zip([r1, r2, r3, r4])
            .map(|(name, r)| RelationResidual {
                name,
                residual: r.interior_residual(k),
            })
            .collect(),
    }
}

/// An eigenvector of `D`: `(e_n, e_n)/sqrt 2` for `Leg::Plus`,
/// `(e_n, -e_n)/sqrt 2` for `Leg::Minus`, with eigenvalue `+n` or `-n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DiracMode {
    pub n: usize,
    pub sign: Leg,
}

impl DiracMode {
    pub fn eigenvalue(&self) -> i64 {
        match self.sign {
            Leg::Plus => self.n as i64,
            Leg::Minus => -(self.n as i64),
        }
    }

    pub fn vector(&self, m: usize) -> CVector {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = CVector::zeros(2 * m);
        v[full_index(m, Leg::Plus, self.n)] = re(h);
        v[full_index(m, Leg::Minus, self.n)] = re(h * self.sign.sign());
        v
    }
}

#[derive(Clone, Debug)]
pub struct Dirac {
    pub operator: BlockOperator,
    /// All `2m` modes; eigenvalue 0 occurs twice (`n = 0`, both signs).
    pub modes: Vec<DiracMode>,
}

/// `D = [[0, N], [N, 0]]` with its eigenbasis.
pub fn build_dirac(cfg: &TruncationConfig) -> Dirac {
    let m = cfg.m;
    let n_op = number_operator(m);
    let z = CMatrix::zeros(m, m);
    let operator = BlockOperator::from_blocks(z.clone(), n_op.clone(), n_op, z)
        .expect("blocks share a shape");
    let modes = (0..m)
        .flat_map(|n| Leg::BOTH.map(|sign| DiracMode { n, sign }))
        .collect();
    Dirac { operator, modes }
}

impl Dirac {
    /// Largest `|D v - lambda v|` over all modes.
    pub fn eigen_residual(&self) -> f64 {
        let m = self.operator.m();
        let full = self.operator.to_full();
        self.modes
            .iter()
            .map(|mode| {
                let v = mode.vector(m);
                (&full * &v - v.scale(mode.eigenvalue() as f64)).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// `|B| = (B*B)^(1/2)` computed by Hermitian functional calculus.
pub fn modulus(b: &BlockOperator) -> BlockOperator {
    block_function(&(&b.adjoint() * b), |w| w.max(0.0).sqrt())
}

/// Interior residual of `B - tau |B|`.
pub fn polar_residual(b: &BlockOperator, tau: &BlockOperator, cfg: &TruncationConfig) -> f64 {
    (b - &(tau * &modulus(b))).interior_residual(cfg.interior_max())
}

/// Rank-one projections `P_n` onto `(e_n, 0)` and `Q_n` onto `(0, e_n)`.
pub fn build_projections(cfg: &TruncationConfig, n: usize) -> Result<(BlockOperator, BlockOperator)> {
    if n >= cfg.m {
        return Err(Error::IndexOutOfRange {
            index: n,
            size: cfg.m,
        });
    }
    let mut p = BlockOperator::zeros(cfg.m);
    let mut q = BlockOperator::zeros(cfg.m);
    p.set_entry((Leg::Plus, n), (Leg::Plus, n), re(1.0));
    q.set_entry((Leg::Minus, n), (Leg::Minus, n), re(1.0));
    Ok((p, q))
}

/// Rank-one projection onto `e_n` of the given leg.
pub fn leg_projection(cfg: &TruncationConfig, leg: Leg, n: usize) -> Result<BlockOperator> {
    let (p, q) = build_projections(cfg, n)?;
    Ok(match leg {
        Leg::Plus => p,
        Leg::Minus => q,
    })
}

/// Outcome of comparing `P_n` (or `Q_n`) with the spectral projection of
/// `B*B` at `c_pm(n)`.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralProjectionCheck {
    pub leg: Leg,
    pub n: usize,
    pub eigenvalue: f64,
    /// `false` when another eigenvalue of `B*B` lies within the gap
    /// tolerance, in which case no comparison is made.
    pub simple: bool,
    pub residual: Option<f64>,
}

/// For every `n < m` and both legs, compares the rank-one projection with the
/// eigenprojection of `B*B` whenever `c_pm(n)` is a simple eigenvalue at
/// relative gap `gap_tol`.
pub fn spectral_projection_checks(
    gens: &PodlesGenerators,
    cfg: &TruncationConfig,
    gap_tol: f64,
) -> Vec<SpectralProjectionCheck> {
    let bsb = (&gens.b.adjoint() * &gens.b).to_full();
    let eig = bsb.clone().symmetric_eigen();
    let scale = eig.eigenvalues.iter().fold(0.0f64, |a, w| a.max(w.abs())).max(1.0);
    let mut out = Vec::new();
    for leg in Leg::BOTH {
        for n in 0..cfg.m {
            let target = cfg.c_coeff(leg, n);
            let near: Vec<usize> = (0..eig.eigenvalues.len())
                .filter(|&i| (eig.eigenvalues[i] - target).abs() <= gap_tol * scale)
                .collect();
            let simple = near.len() == 1;
            let residual = simple.then(|| {
                let v = eig.eigenvectors.column(near[0]);
                let spectral = v * v.adjoint();
                let rank_one = leg_projection(cfg, leg, n).expect("n < m").to_full();
                (spectral - rank_one).norm()
            });
            out.push(SpectralProjectionCheck {
                leg,
                n,
                eigenvalue: target,
                simple,
                residual,
            });
        }
    }
    out
}

/// Ascending spectrum of `B*B` restricted to one leg.
pub fn bsb_leg_spectrum(gens: &PodlesGenerators, leg: Leg) -> Vec<f64> {
    let bsb = &gens.b.adjoint() * &gens.b;
    hermitian_eigenvalues(bsb.block(leg, leg))
}
