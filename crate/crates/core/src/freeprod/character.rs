//! Characters: unital *-homomorphisms from the group algebra to `C`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use super::element::GroupAlgebraElement;
use super::word::{Generator, Word};
use crate::error::{Error, Result};

const UNIT_TOL: f64 = 1e-12;

/// Value assigned to `r_k` when `k` has no explicit entry.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TailRule {
    /// Indices without an explicit value are an error.
    Undefined,
    Constant(Complex64),
    /// `r_k -> exp(-i pi k (k + 1) theta)`, so that
    /// `r_{k-1} r_k^{-1} -> exp(2 pi i k theta)`.
    QuadraticPhase { theta: f64 },
}

impl TailRule {
    fn value(&self, k: u32) -> Option<Complex64> {
        match *self {
            TailRule::Undefined => None,
            TailRule::Constant(c) => Some(c),
            TailRule::QuadraticPhase { theta } => {
                // k (k + 1) is an exact integer; split the product into its
                // rounded value and rounding error so the phase survives the
                // reduction mod 2 turns for large k
                let m = (u64::from(k) * (u64::from(k) + 1)) as f64;
                let t = theta.rem_euclid(2.0);
                let p = m * t;
                let err = m.mul_add(t, -p);
                let turns = (p.rem_euclid(2.0) + err).rem_euclid(2.0);
                Some(Complex64::from_polar(1.0, -PI * turns))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    y_value: Complex64,
    r_values: BTreeMap<u32, Complex64>,
    tail: TailRule,
}

fn check_unit(generator: &str, v: Complex64) -> Result<()> {
    if !v.re.is_finite() || !v.im.is_finite() || (v.norm() - 1.0).abs() > UNIT_TOL {
        return Err(Error::InvalidCharacter {
            generator: generator.to_string(),
            reason: format!("|{v}| != 1"),
        });
    }
    Ok(())
}

impl Character {
    /// Character with the given value on `y`, which must be `+1` or `-1`,
    /// and no assignment for any `r_k`.
    pub fn new(y_value: Complex64) -> Result<Self> {
        check_unit("y", y_value)?;
        if (y_value * y_value - 1.0).norm() > UNIT_TOL {
            return Err(Error::InvalidCharacter {
                generator: "y".into(),
                reason: format!("({y_value})^2 != 1"),
            });
        }
        Ok(Character {
            y_value,
            r_values: BTreeMap::new(),
            tail: TailRule::Undefined,
        })
    }

    /// The counit: every generator goes to 1.
    pub fn trivial() -> Self {
        Character {
            y_value: Complex64::new(1.0, 0.0),
            r_values: BTreeMap::new(),
            tail: TailRule::Constant(Complex64::new(1.0, 0.0)),
        }
    }

    /// The state used in the non-compactness argument: `y -> 1` and
    /// `r_k -> exp(-i pi k (k + 1) theta)`, which sends `r_{k-1} r_k^{-1}` to
    /// `lambda_k = exp(2 pi i k theta)`.
    pub fn phi(theta: f64) -> Self {
        Character {
            y_value: Complex64::new(1.0, 0.0),
            r_values: BTreeMap::new(),
            tail: TailRule::QuadraticPhase { theta },
        }
    }

    pub fn with_r(mut self, k: u32, value: Complex64) -> Result<Self> {
        check_unit(&format!("r{k}"), value)?;
        self.r_values.insert(k, value);
        Ok(self)
    }

    pub fn with_tail(mut self, tail: TailRule) -> Result<Self> {
        if let TailRule::Constant(c) = tail {
            check_unit("tail", c)?;
        }
        self.tail = tail;
        Ok(self)
    }

    pub fn y_value(&self) -> Complex64 {
        self.y_value
    }

    pub fn r_value(&self, k: u32) -> Result<Complex64> {
        self.r_values
            .get(&k)
            .copied()
            .or_else(|| self.tail.value(k))
            .ok_or(Error::MissingGenerator(k))
    }

    pub fn evaluate_word(&self, w: &Word) -> Result<Complex64> {
        let mut acc = Complex64::new(1.0, 0.0);
        for s in w.syllables() {
            let v = match s.generator {
                Generator::Y => self.y_value,
                Generator::R(k) => self.r_value(k)?,
            };
            acc *= unit_pow(v, s.exponent);
        }
        Ok(acc)
    }

    pub fn evaluate(&self, a: &GroupAlgebraElement) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (w, c) in a.terms() {
            acc += c * self.evaluate_word(w)?;
        }
        Ok(acc)
    }
}

/// `v^exp` for `|v| = 1`; negative powers use the conjugate.
fn unit_pow(v: Complex64, exp: i64) -> Complex64 {
    let base = if exp < 0 { v.conj() } else { v };
    let mut e = exp.unsigned_abs();
    let mut b = base;
    let mut acc = Complex64::new(1.0, 0.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= b;
        }
        b *= b;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    fn lambda(chi: &Character, n: u32) -> Complex64 {
        let w = Word::r(n - 1).mul(&Word::r_pow(n, -1));
        chi.evaluate_word(&w).unwrap()
    }

    #[test]
    fn phi_sends_y_to_one() {
        let phi = Character::phi(0.3);
        let y = GroupAlgebraElement::from_word(Word::y());
        assert!(close(phi.evaluate(&y).unwrap(), Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn phi_realizes_lambda_n() {
        for &theta in &[0.0, 0.25, 0.5, 0.137, -1.3] {
            let phi = Character::phi(theta);
            for n in 1..80u32 {
                let expected = Complex64::from_polar(1.0, 2.0 * PI * f64::from(n) * theta);
                assert!(close(lambda(&phi, n), expected), "theta={theta} n={n}");
            }
        }
    }

    #[test]
    fn quarter_turn_gives_powers_of_i() {
        let phi = Character::phi(0.25);
        let i = Complex64::new(0.0, 1.0);
        for n in 1..40u32 {
            assert!(close(lambda(&phi, n), i.powu(n)));
            let gap = (lambda(&phi, n) - if n > 1 { lambda(&phi, n - 1) } else { Complex64::new(1.0, 0.0) }).norm();
            assert!((gap - 2f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn half_turn_alternates() {
        let phi = Character::phi(0.5);
        for n in 1..40u32 {
            let expected = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!(close(lambda(&phi, n), Complex64::new(expected, 0.0)));
        }
    }

    #[test]
    fn zero_theta_is_trivial_on_generators() {
        let phi = Character::phi(0.0);
        for k in 0..20 {
            assert!(close(phi.r_value(k).unwrap(), Complex64::new(1.0, 0.0)));
        }
    }

    #[test]
    fn identity_evaluates_to_one() {
        let chi = Character::new(Complex64::new(-1.0, 0.0)).unwrap();
        assert_eq!(
            chi.evaluate(&GroupAlgebraElement::one()).unwrap(),
            Complex64::new(1.0, 0.0)
        );
    }

    #[test]
    fn missing_generator_is_an_error() {
        let chi = Character::new(Complex64::new(1.0, 0.0))
            .unwrap()
            .with_r(0, Complex64::new(0.0, 1.0))
            .unwrap();
        let a = GroupAlgebraElement::from_word(Word::r(0).mul(&Word::r(7)));
        assert!(matches!(chi.evaluate(&a), Err(Error::MissingGenerator(7))));
    }

    #[test]
    fn rejects_non_unit_values() {
        assert!(Character::new(Complex64::new(0.0, 1.0)).is_err());
        assert!(Character::trivial().with_r(1, Complex64::new(2.0, 0.0)).is_err());
    }

    #[test]
    fn negative_powers_conjugate() {
        let chi = Character::trivial()
            .with_r(2, Complex64::from_polar(1.0, 0.7))
            .unwrap();
        let v = chi.evaluate_word(&Word::r_pow(2, -3)).unwrap();
        assert!(close(v, Complex64::from_polar(1.0, -2.1)));
    }
}
