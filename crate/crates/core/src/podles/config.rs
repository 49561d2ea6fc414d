use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the two irreducible legs `H_+`, `H_-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Leg {
    Plus,
    Minus,
}

impl Leg {
    pub const BOTH: [Leg; 2] = [Leg::Plus, Leg::Minus];

    pub fn sign(self) -> f64 {
        match self {
            Leg::Plus => 1.0,
            Leg::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Leg::Plus => '+',
            Leg::Minus => '-',
        }
    }
}

/// Parameters of a finite truncation: basis `e_0 .. e_{m-1}` on each leg.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TruncationConfig {
    pub m: usize,
    pub mu: f64,
    pub c: f64,
    pub buffer: usize,
}

impl Default for TruncationConfig {
    fn default() -> Self {
        TruncationConfig {
            m: 32,
            mu: 0.5,
            c: 2.0,
            buffer: 2,
        }
    }
}

impl TruncationConfig {
    pub fn new(m: usize, mu: f64, c: f64) -> Result<Self> {
        let cfg = TruncationConfig {
            m,
            mu,
            c,
            ..Default::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_buffer(mut self, buffer: usize) -> Result<Self> {
        self.buffer = buffer;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.mu.is_finite() || self.mu <= 0.0 || self.mu >= 1.0 {
            return Err(Error::InvalidConfig(format!(
                "mu must lie in (0, 1), got {}",
                self.mu
            )));
        }
        if !self.c.is_finite() || self.c <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "c must be positive, got {}",
                self.c
            )));
        }
        if self.buffer < 2 {
            return Err(Error::InvalidConfig(format!(
                "boundary buffer must be at least 2, got {}",
                self.buffer
            )));
        }
        if self.m < 4 || self.m <= self.buffer {
            return Err(Error::InvalidConfig(format!(
                "truncation size {} too small for buffer {} (need m >= 4 and m > buffer)",
                self.m, self.buffer
            )));
        }
        Ok(())
    }

    /// `1/2 + (c + 1/4)^(1/2)`.
    pub fn lambda_plus(&self) -> f64 {
        0.5 + (self.c + 0.25).sqrt()
    }

    /// `1/2 - (c + 1/4)^(1/2)`.
    pub fn lambda_minus(&self) -> f64 {
        0.5 - (self.c + 0.25).sqrt()
    }

    pub fn lambda(&self, leg: Leg) -> f64 {
        match leg {
            Leg::Plus => self.lambda_plus(),
            Leg::Minus => self.lambda_minus(),
        }
    }

    /// Eigenvalue of `A` on `e_n` of the given leg: `lambda mu^(2n)`.
    pub fn a_eigenvalue(&self, leg: Leg, n: usize) -> f64 {
        self.lambda(leg) * self.mu.powi(2 * n as i32)
    }

    /// `c_pm(n) = x - x^2 + c` with `x = lambda_pm mu^(2n)`.
    ///
    /// Vanishes at `n = 0` since `lambda_pm` are the roots of `x - x^2 + c`.
    pub fn c_coeff(&self, leg: Leg, n: usize) -> f64 {
        if n == 0 {
            return 0.0;
        }
        let x = self.a_eigenvalue(leg, n);
        x - x * x + self.c
    }

    pub fn c_plus(&self, n: usize) -> f64 {
        self.c_coeff(Leg::Plus, n)
    }

    pub fn c_minus(&self, n: usize) -> f64 {
        self.c_coeff(Leg::Minus, n)
    }

    /// Weight of the down-shift `B e_n = c(n)^(1/2) e_{n-1}`.
    pub fn shift_weight(&self, leg: Leg, n: usize) -> f64 {
        self.c_coeff(leg, n).max(0.0).sqrt()
    }

    /// Largest index at which verifications are trusted: `m - buffer`.
    pub fn interior_max(&self) -> usize {
        self.m - self.buffer
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_constants() {
        let cfg = TruncationConfig::default();
        assert_eq!(cfg.lambda_plus(), 2.0);
        assert_eq!(cfg.lambda_minus(), -1.0);
        assert_eq!(cfg.c_plus(1), 2.25);
        assert_eq!(cfg.c_minus(1), 1.6875);
    }

    #[test]
    fn lambda_relations_hold() {
        for &mu in &[0.1, 0.3, 0.5, 0.9, 0.99] {
            for &c in &[1e-3, 0.1, 2.0, 10.0, 1e3] {
                let cfg = TruncationConfig::new(16, mu, c).unwrap();
                let (lp, lm) = (cfg.lambda_plus(), cfg.lambda_minus());
                assert!((lp + lm - 1.0).abs() < 1e-12);
                assert!((lp * lm + c).abs() < 1e-9 * c.max(1.0));
                assert_eq!(cfg.c_plus(0), 0.0);
                assert_eq!(cfg.c_minus(0), 0.0);
                // the unclamped formula also vanishes at n = 0
                for lam in [lp, lm] {
                    assert!((lam - lam * lam + c).abs() < 1e-9 * c.max(1.0));
                }
            }
        }
    }

    #[test]
    fn legs_have_distinct_weights() {
        let cfg = TruncationConfig::default();
        for n in 1..20 {
            assert!(cfg.c_plus(n) > cfg.c_minus(n));
            assert!(cfg.c_minus(n) > 0.0);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(TruncationConfig::new(16, 1.0, 2.0).is_err());
        assert!(TruncationConfig::new(16, 0.0, 2.0).is_err());
        assert!(TruncationConfig::new(16, 0.5, 0.0).is_err());
        assert!(TruncationConfig::new(16, 0.5, -1.0).is_err());
        assert!(TruncationConfig::new(3, 0.5, 2.0).is_err());
        assert!(TruncationConfig::new(16, 0.5, f64::NAN).is_err());
        assert!(TruncationConfig::default().with_buffer(1).is_err());
    }
}
