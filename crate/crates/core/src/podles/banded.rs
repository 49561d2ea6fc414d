//! Hermitian band storage, Cholesky factorization and a sparse row matrix.

use num_complex::Complex64;

type C = Complex64;

/// Rows of a sparse matrix, each a list of `(column, value)` with distinct
/// columns.
#[derive(Clone, Debug, Default)]
pub struct SparseRows {
    pub ncols: usize,
    pub rows: Vec<Vec<(usize, C)>>,
}

impl SparseRows {
    pub fn new(ncols: usize) -> Self {
        SparseRows {
            ncols,
            rows: Vec::new(),
        }
    }

    /// Adds a row, merging repeated columns and dropping exact zeros.
    pub fn push_row(&mut self, mut entries: Vec<(usize, C)>) {
        entries.sort_by_key(|e| e.0);
        let mut merged: Vec<(usize, C)> = Vec::with_capacity(entries.len());
        for (col, v) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == col => last.1 += v,
                _ => merged.push((col, v)),
            }
        }
        merged.retain(|e| e.1 != C::new(0.0, 0.0));
        if !merged.is_empty() {
            self.rows.push(merged);
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Largest column distance within a row; the half-bandwidth of `K* K`.
    pub fn gram_bandwidth(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.last().map_or(0, |l| l.0) - r.first().map_or(0, |f| f.0))
            .max()
            .unwrap_or(0)
    }

    pub fn mul_vec(&self, x: &[C]) -> Vec<C> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&(j, v)| v * x[j]).sum())
            .collect()
    }

    pub fn adjoint_mul_vec(&self, y: &[C]) -> Vec<C> {
        let mut out = vec![C::new(0.0, 0.0); self.ncols];
        for (r, yi) in self.rows.iter().zip(y) {
            for &(j, v) in r {
                out[j] += v.conj() * yi;
            }
        }
        out
    }

    pub fn to_dense(&self) -> nalgebra::DMatrix<C> {
        let mut d = nalgebra::DMatrix::zeros(self.rows.len(), self.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            for &(j, v) in r {
                d[(i, j)] = v;
            }
        }
        d
    }

    /// `K* K` in lower band storage.
    pub fn gram(&self) -> HermitianBand {
        let w = self.gram_bandwidth();
        let mut g = HermitianBand::zeros(self.ncols, w);
        for r in &self.rows {
            for &(i, vi) in r {
                for &(j, vj) in r {
                    if j <= i {
                        *g.get_mut(i, j) += vi.conj() * vj;
                    }
                }
            }
        }
        g
    }
}

/// Lower band of a Hermitian matrix: entry `(i, j)` for `i - w <= j <= i`.
#[derive(Clone, Debug)]
pub struct HermitianBand {
    n: usize,
    w: usize,
    data: Vec<C>,
}

impl HermitianBand {
    pub fn zeros(n: usize, w: usize) -> Self {
        HermitianBand {
            n,
            w,
            data: vec![C::new(0.0, 0.0); n * (w + 1)],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn bandwidth(&self) -> usize {
        self.w
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(j <= i && i - j <= self.w);
        i * (self.w + 1) + (i - j)
    }

    pub fn get(&self, i: usize, j: usize) -> C {
        if j > i {
            return self.get(j, i).conj();
        }
        if i - j > self.w {
            return C::new(0.0, 0.0);
        }
        self.data[self.slot(i, j)]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut C {
        let s = self.slot(i, j);
        &mut self.data[s]
    }

    /// Cholesky factor of `self + shift * I`, or `None` if a pivot is not
    /// positive.
    pub fn cholesky(&self, shift: f64) -> Option<BandCholesky> {
        let (n, w) = (self.n, self.w);
        let mut l = HermitianBand::zeros(n, w);
        for j in 0..n {
            let lo = j.saturating_sub(w);
            let mut s = self.get(j, j).re + shift;
            for k in lo..j {
                s -= l.get(j, k).norm_sqr();
            }
            if s.is_nan() || s <= 0.0 || !s.is_finite() {
                return None;
            }
            let d = s.sqrt();
            *l.get_mut(j, j) = C::new(d, 0.0);
            for i in (j + 1)..n.min(j + w + 1) {
                let lo_i = i.saturating_sub(w);
                let mut t = self.get(i, j);
                for k in lo_i.max(lo)..j {
                    t -= l.get(i, k) * l.get(j, k).conj();
                }
                *l.get_mut(i, j) = t / d;
            }
        }
        Some(BandCholesky { l })
    }
}

/// `L` with `L L* = G + shift I`, stored in the same band layout.
#[derive(Clone, Debug)]
pub struct BandCholesky {
    l: HermitianBand,
}

impl BandCholesky {
    pub fn solve(&self, b: &[C]) -> Vec<C> {
        let (n, w) = (self.l.n, self.l.w);
        let mut y = b.to_vec();
        for i in 0..n {
            let lo = i.saturating_sub(w);
            let s = (lo..i).zip(&y[lo..i]).fold(y[i], |s, (k, yk)| s - self.l.get(i, k) * yk);
            y[i] = s / self.l.get(i, i);
        }
        for i in (0..n).rev() {
            let hi = n.min(i + w + 1);
            let s = ((i + 1)..hi)
                .zip(&y[i + 1..hi])
                .fold(y[i], |s, (k, yk)| s - self.l.get(k, i).conj() * yk);
            y[i] = s / self.l.get(i, i);
        }
        y
    }
}
