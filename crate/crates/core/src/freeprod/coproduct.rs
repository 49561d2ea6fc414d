//! Coproduct on group-like elements and the algebraic tensor square.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::element::{GroupAlgebraElement, PRUNE_THRESHOLD};
use super::word::Word;

/// `Delta(w) = w (x) w` for a group element `w`.
pub fn coproduct_grouplike(w: &Word) -> (Word, Word) {
    (w.clone(), w.clone())
}

/// Element of the algebraic tensor product of two copies of the group algebra.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TensorElement {
    terms: BTreeMap<(Word, Word), Complex64>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    fn add_term(&mut self, key: (Word, Word), c: Complex64) {
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.norm() <= PRUNE_THRESHOLD {
            self.terms.remove(&key);
        }
    }

    /// `a (x) b`.
    pub fn tensor(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                out.add_term((wa.clone(), wb.clone()), ca * cb);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a1, a2), ca) in &self.terms {
            for ((b1, b2), cb) in &other.terms {
                out.add_term((a1.mul(b1), a2.mul(b2)), ca * cb);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Complex64)> {
        self.terms.iter()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut diff = self.clone();
        for (k, c) in &other.terms {
            diff.add_term(k.clone(), -c);
        }
        diff.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Linear extension of [`coproduct_grouplike`] to the group algebra.
pub fn coproduct(a: &GroupAlgebraElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (w, c) in a.terms() {
        out.add_term(coproduct_grouplike(w), *c);
    }
    out
}
