//! Operators on the truncated `H_+ (+) H_-` as 2x2 arrays of `m x m` blocks.

use std::ops::{Add, Mul, Sub};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::config::Leg;
use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Position of `e_n` on `leg` in the stacked basis `(e_0,0) .. (e_{m-1},0),
/// (0,e_0) .. (0,e_{m-1})`.
pub fn full_index(m: usize, leg: Leg, n: usize) -> usize {
    match leg {
        Leg::Plus => n,
        Leg::Minus => m + n,
    }
}

/// Inverse of [`full_index`].
pub fn split_index(m: usize, i: usize) -> (Leg, usize) {
    if i < m {
        (Leg::Plus, i)
    } else {
        (Leg::Minus, i - m)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BlockOperator {
    pp: CMatrix,
    pm: CMatrix,
    mp: CMatrix,
    mm: CMatrix,
}

impl BlockOperator {
    pub fn zeros(m: usize) -> Self {
        let z = CMatrix::zeros(m, m);
        BlockOperator {
            pp: z.clone(),
            pm: z.clone(),
            mp: z.clone(),
            mm: z,
        }
    }

    pub fn identity(m: usize) -> Self {
        Self::block_diagonal(CMatrix::identity(m, m), CMatrix::identity(m, m))
    }

    pub fn block_diagonal(plus: CMatrix, minus: CMatrix) -> Self {
        let m = plus.nrows();
        assert_eq!(plus.shape(), (m, m));
        assert_eq!(minus.shape(), (m, m));
        BlockOperator {
            pp: plus,
            pm: CMatrix::zeros(m, m),
            mp: CMatrix::zeros(m, m),
            mm: minus,
        }
    }

    /// Blocks in the order `(++, +-, -+, --)`; row leg first.
    pub fn from_blocks(pp: CMatrix, pm: CMatrix, mp: CMatrix, mm: CMatrix) -> Result<Self> {
        let m = pp.nrows();
        for b in [&pp, &pm, &mp, &mm] {
            if b.nrows() != m || b.ncols() != m {
                return Err(Error::Shape {
                    expected: m,
                    got: b.nrows().max(b.ncols()),
                });
            }
        }
        Ok(BlockOperator { pp, pm, mp, mm })
    }

    pub fn from_full(full: &CMatrix) -> Result<Self> {
        let n = full.nrows();
        if !n.is_multiple_of(2) || full.ncols() != n {
            return Err(Error::Shape {
                expected: n,
                got: full.ncols(),
            });
        }
        let m = n / 2;
        Ok(BlockOperator {
            pp: full.view((0, 0), (m, m)).into_owned(),
            pm: full.view((0, m), (m, m)).into_owned(),
            mp: full.view((m, 0), (m, m)).into_owned(),
            mm: full.view((m, m), (m, m)).into_owned(),
        })
    }

    pub fn to_full(&self) -> CMatrix {
        let m = self.m();
        let mut full = CMatrix::zeros(2 * m, 2 * m);
        full.view_mut((0, 0), (m, m)).copy_from(&self.pp);
        full.view_mut((0, m), (m, m)).copy_from(&self.pm);
        full.view_mut((m, 0), (m, m)).copy_from(&self.mp);
        full.view_mut((m, m), (m, m)).copy_from(&self.mm);
        full
    }

    /// Per-leg dimension.
    pub fn m(&self) -> usize {
        self.pp.nrows()
    }

    pub fn block(&self, row: Leg, col: Leg) -> &CMatrix {
        match (row, col) {
            (Leg::Plus, Leg::Plus) => &self.pp,
            (Leg::Plus, Leg::Minus) => &self.pm,
            (Leg::Minus, Leg::Plus) => &self.mp,
            (Leg::Minus, Leg::Minus) => &self.mm,
        }
    }

    pub fn block_mut(&mut self, row: Leg, col: Leg) -> &mut CMatrix {
        match (row, col) {
            (Leg::Plus, Leg::Plus) => &mut self.pp,
            (Leg::Plus, Leg::Minus) => &mut self.pm,
            (Leg::Minus, Leg::Plus) => &mut self.mp,
            (Leg::Minus, Leg::Minus) => &mut self.mm,
        }
    }

    pub fn entry(&self, row: (Leg, usize), col: (Leg, usize)) -> Complex64 {
        self.block(row.0, col.0)[(row.1, col.1)]
    }

    pub fn set_entry(&mut self, row: (Leg, usize), col: (Leg, usize), v: Complex64) {
        self.block_mut(row.0, col.0)[(row.1, col.1)] = v;
    }

    pub fn adjoint(&self) -> Self {
        BlockOperator {
            pp: self.pp.adjoint(),
            pm: self.mp.adjoint(),
            mp: self.pm.adjoint(),
            mm: self.mm.adjoint(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        BlockOperator {
            pp: &self.pp * s,
            pm: &self.pm * s,
            mp: &self.mp * s,
            mm: &self.mm * s,
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Keeps only the `H_+ -> H_+` block (`P_+ X P_+`).
    pub fn compress_to(&self, leg: Leg) -> Self {
        let mut out = Self::zeros(self.m());
        *out.block_mut(leg, leg) = self.block(leg, leg).clone();
        out
    }

    /// Image of the basis vector `e_n` on `leg`, in the stacked basis.
    pub fn column(&self, leg: Leg, n: usize) -> CVector {
        let m = self.m();
        let mut v = CVector::zeros(2 * m);
        for (row_leg, offset) in [(Leg::Plus, 0), (Leg::Minus, m)] {
            let b = self.block(row_leg, leg);
            for i in 0..m {
                v[offset + i] = b[(i, n)];
            }
        }
        v
    }

    pub fn apply(&self, v: &CVector) -> CVector {
        self.to_full() * v
    }

    /// Largest entry modulus in the off-diagonal blocks.
    pub fn off_diagonal_max(&self) -> f64 {
        self.pm
            .iter()
            .chain(self.mp.iter())
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_block_diagonal(&self) -> bool {
        self.off_diagonal_max() == 0.0
    }

    pub fn max_abs(&self) -> f64 {
        [&self.pp, &self.pm, &self.mp, &self.mm]
            .iter()
            .flat_map(|b| b.iter())
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Largest Euclidean norm of `X e_n` over `n <= max_index` on both legs.
    pub fn interior_residual(&self, max_index: usize) -> f64 {
        let top = max_index.min(self.m() - 1);
        Leg::BOTH
            .iter()
            .flat_map(|&leg| (0..=top).map(move |n| (leg, n)))
            .map(|(leg, n)| self.column(leg, n).norm())
            .fold(0.0, f64::max)
    }

    /// Largest singular value of the full matrix.
    pub fn operator_norm(&self) -> f64 {
        largest_singular_value(&self.to_full())
    }

    pub fn trace(&self) -> Complex64 {
        self.pp.trace() + self.mm.trace()
    }

    /// Iterator over entries whose modulus exceeds zero, as
    /// `((row leg, row n), (col leg, col n), value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = ((Leg, usize), (Leg, usize), Complex64)> + '_ {
        let m = self.m();
        Leg::BOTH.into_iter().flat_map(move |rl| {
            Leg::BOTH.into_iter().flat_map(move |cl| {
                let b = self.block(rl, cl);
                (0..m).flat_map(move |i| {
                    (0..m).filter_map(move |j| {
                        let v = b[(i, j)];
                        (v != Complex64::new(0.0, 0.0)).then_some(((rl, i), (cl, j), v))
                    })
                })
            })
        })
    }
}

pub fn largest_singular_value(mat: &CMatrix) -> f64 {
    if mat.is_empty() {
        return 0.0;
    }
    mat.clone()
        .singular_values()
        .iter()
        .copied()
        .fold(0.0, f64::max)
}

impl Add for &BlockOperator {
    type Output = BlockOperator;

    fn add(self, rhs: &BlockOperator) -> BlockOperator {
        BlockOperator {
            pp: &self.pp + &rhs.pp,
            pm: &self.pm + &rhs.pm,
            mp: &self.mp + &rhs.mp,
            mm: &self.mm + &rhs.mm,
        }
    }
}

impl Sub for &BlockOperator {
    type Output = BlockOperator;

    fn sub(self, rhs: &BlockOperator) -> BlockOperator {
        BlockOperator {
            pp: &self.pp - &rhs.pp,
            pm: &self.pm - &rhs.pm,
            mp: &self.mp - &rhs.mp,
            mm: &self.mm - &rhs.mm,
        }
    }
}

impl Mul for &BlockOperator {
    type Output = BlockOperator;

    fn mul(self, rhs: &BlockOperator) -> BlockOperator {
        BlockOperator {
            pp: &self.pp * &rhs.pp + &self.pm * &rhs.mp,
            pm: &self.pp * &rhs.pm + &self.pm * &rhs.mm,
            mp: &self.mp * &rhs.pp + &self.mm * &rhs.mp,
            mm: &self.mp * &rhs.pm + &self.mm * &rhs.mm,
        }
    }
}

impl Add for BlockOperator {
    type Output = BlockOperator;

    fn add(self, rhs: BlockOperator) -> BlockOperator {
        &self + &rhs
    }
}

impl Sub for BlockOperator {
    type Output = BlockOperator;

    fn sub(self, rhs: BlockOperator) -> BlockOperator {
        &self - &rhs
    }
}

impl Mul for BlockOperator {
    type Output = BlockOperator;

    fn mul(self, rhs: BlockOperator) -> BlockOperator {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn sample(m: usize, seed: f64) -> BlockOperator {
        let full = CMatrix::from_fn(2 * m, 2 * m, |i, j| {
            Complex64::new((seed * (i * 7 + j * 3 + 1) as f64).sin(), (seed * (i + 2 * j) as f64).cos())
        });
        BlockOperator::from_full(&full).unwrap()
    }

    #[test]
    fn block_product_matches_full_product() {
        let a = sample(3, 0.7);
        let b = sample(3, 1.3);
        let lhs = (&a * &b).to_full();
        let rhs = a.to_full() * b.to_full();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn adjoint_matches_full_adjoint() {
        let a = sample(4, 0.3);
        assert!((a.adjoint().to_full() - a.to_full().adjoint()).norm() == 0.0);
    }

    #[test]
    fn index_round_trip() {
        for i in 0..10 {
            let (leg, n) = split_index(5, i);
            assert_eq!(full_index(5, leg, n), i);
        }
    }

    #[test]
    fn interior_residual_ignores_boundary_columns() {
        let mut x = BlockOperator::zeros(4);
        x.set_entry((Leg::Plus, 0), (Leg::Minus, 3), c(5.0));
        assert_eq!(x.interior_residual(2), 0.0);
        assert_eq!(x.interior_residual(3), 5.0);
    }

    #[test]
    fn nonzeros_enumerates_entries() {
        let mut x = BlockOperator::zeros(3);
        x.set_entry((Leg::Minus, 2), (Leg::Plus, 1), c(2.0));
        x.set_entry((Leg::Plus, 0), (Leg::Plus, 0), c(-1.0));
        let nz: Vec<_> = x.nonzeros().collect();
        assert_eq!(nz.len(), 2);
        assert!(!x.is_block_diagonal());
    }
}
