//! Tail-norm profiles: `k -> ||X restricted to span{e_n : n >= k}||`.
//!
//! A compact operator has tail norms tending to zero; a profile bounded
//! below on the trusted range is the finite-truncation witness of
//! non-compactness.

use serde::Serialize;

use super::block::{largest_singular_value, BlockOperator, CMatrix};
use super::config::Leg;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompactnessProfile {
    /// `tail_norms[k]` for `k = 0 ..= kmax`.
    pub tail_norms: Vec<f64>,
}

impl CompactnessProfile {
    pub fn min(&self) -> f64 {
        self.tail_norms.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn is_non_increasing(&self, tol: f64) -> bool {
        self.tail_norms.windows(2).all(|w| w[1] <= w[0] + tol)
    }

    /// True when every tail norm on the profile is at least `delta`.
    pub fn non_compact_witness(&self, delta: f64) -> bool {
        !self.tail_norms.is_empty() && self.min() >= delta
    }

    /// First `k` with `tail_norms[k] < threshold`.
    pub fn decay_index(&self, threshold: f64) -> Option<usize> {
        self.tail_norms.iter().position(|&t| t < threshold)
    }
}

/// Profile for `k = 0 ..= kmax` (normally `m - buffer`).
pub fn compactness_profile(x: &BlockOperator, kmax: usize) -> CompactnessProfile {
    let m = x.m();
    let full = x.to_full();
    let kmax = kmax.min(m - 1);
    let tail_norms = (0..=kmax)
        .map(|k| {
            let cols: Vec<usize> = Leg::BOTH
                .iter()
                .flat_map(|&leg| (k..m).map(move |n| super::block::full_index(m, leg, n)))
                .collect();
            let sub = CMatrix::from_fn(2 * m, cols.len(), |i, j| full[(i, cols[j])]);
            largest_singular_value(&sub)
        })
        .collect();
    CompactnessProfile { tail_norms }
}
