//! Finite complex linear combinations of reduced words.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use super::word::Word;

/// Coefficients at or below this modulus are dropped after every operation.
pub const PRUNE_THRESHOLD: f64 = 1e-15;

/// An element of the complex group algebra, stored as `word -> coefficient`.
///
/// No stored coefficient has modulus at or below [`PRUNE_THRESHOLD`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GroupAlgebraElement {
    terms: BTreeMap<Word, Complex64>,
}

fn negligible(c: Complex64) -> bool {
    c.norm() <= PRUNE_THRESHOLD
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(Complex64::new(1.0, 0.0), w)
    }

    /// `c * w`.
    pub fn term(c: Complex64, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !negligible(c) {
            terms.insert(w, c);
        }
        GroupAlgebraElement { terms }
    }

    pub fn real_term(c: f64, w: Word) -> Self {
        Self::term(Complex64::new(c, 0.0), w)
    }

    /// Scalar multiple of the identity.
    pub fn scalar(c: Complex64) -> Self {
        Self::term(c, Word::identity())
    }

    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Word, Complex64)>,
    {
        let mut out = Self::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }

    /// Adds `c * w` in place, pruning the slot if it cancels.
    pub fn add_term(&mut self, w: Word, c: Complex64) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                if !negligible(c) {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if negligible(s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Complex64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> Complex64 {
        self.terms.get(w).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The l1 norm `sum |c_w|`, an upper bound for every C*-norm.
    pub fn l1_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, |acc, x| acc + x)
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// True when every coefficient of `self - other` has modulus `<= tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self - other).max_abs() <= tol
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x * c)))
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    /// Antilinear involution `(c w)* = conj(c) w^{-1}`.
    pub fn star(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.inverse(), c.conj())))
    }

    /// Bilinear extension of the word product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    /// If the element is `c w` with `|c| = 1`, returns `(w, c)`.
    pub fn as_unitary_word(&self) -> Option<(&Word, Complex64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (w, c) = self.terms.iter().next()?;
        ((c.norm() - 1.0).abs() <= 1e-12).then_some((w, *c))
    }

    /// Applies a word-level map term by term and re-collects.
    pub fn map_words<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Word) -> Word,
    {
        Self::from_terms(self.terms.iter().map(|(w, c)| (f(w), *c)))
    }

    pub fn max_r_index(&self) -> Option<u32> {
        self.terms.keys().filter_map(Word::max_r_index).max()
    }
}

impl From<Word> for GroupAlgebraElement {
    fn from(w: Word) -> Self {
        Self::from_word(w)
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn add(mut self, rhs: GroupAlgebraElement) -> GroupAlgebraElement {
        self += &rhs;
        self
    }
}

impl AddAssign<&GroupAlgebraElement> for GroupAlgebraElement {
    fn add_assign(&mut self, rhs: &GroupAlgebraElement) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), *c);
        }
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Sub for GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn sub(self, rhs: GroupAlgebraElement) -> GroupAlgebraElement {
        &self - &rhs
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn neg(self) -> GroupAlgebraElement {
        self.scale_real(-1.0)
    }
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        GroupAlgebraElement::mul(self, rhs)
    }
}

impl Mul for GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn mul(self, rhs: GroupAlgebraElement) -> GroupAlgebraElement {
        GroupAlgebraElement::mul(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn y_times_y_is_identity() {
        let y = GroupAlgebraElement::from_word(Word::y());
        assert_eq!(&y * &y, GroupAlgebraElement::one());
    }

    #[test]
    fn r_times_inverse_is_identity() {
        let r = GroupAlgebraElement::from_word(Word::r(0));
        let ri = GroupAlgebraElement::from_word(Word::r_pow(0, -1));
        assert_eq!(&r * &ri, GroupAlgebraElement::one());
    }

    #[test]
    fn product_distributes() {
        let a = GroupAlgebraElement::from_word(Word::r(0)) + GroupAlgebraElement::from_word(Word::y());
        let y = GroupAlgebraElement::from_word(Word::y());
        let expected = GroupAlgebraElement::from_word(Word::r(0).mul(&Word::y()))
            + GroupAlgebraElement::one();
        assert_eq!(&a * &y, expected);
    }

    #[test]
    fn star_examples() {
        let r = GroupAlgebraElement::from_word(Word::r(0));
        assert_eq!(r.star(), GroupAlgebraElement::from_word(Word::r_pow(0, -1)));

        let iy = GroupAlgebraElement::term(Complex64::new(0.0, 1.0), Word::y());
        assert_eq!(iy.star(), GroupAlgebraElement::term(Complex64::new(0.0, -1.0), Word::y()));

        let w = Word::r(0).mul(&Word::y()).mul(&Word::r_pow(1, -1));
        let expected = Word::r(1).mul(&Word::y()).mul(&Word::r_pow(0, -1));
        assert_eq!(
            GroupAlgebraElement::from_word(w).star(),
            GroupAlgebraElement::from_word(expected)
        );
    }

    #[test]
    fn cancellation_prunes_entries() {
        let a = GroupAlgebraElement::term(one(), Word::r(2));
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
        assert_eq!(GroupAlgebraElement::real_term(0.0, Word::y()).num_terms(), 0);
    }

    #[test]
    fn norms() {
        let a = GroupAlgebraElement::real_term(3.0, Word::r(1))
            + GroupAlgebraElement::term(Complex64::new(0.0, -4.0), Word::y());
        assert_eq!(a.l1_norm(), 7.0);
        assert_eq!(a.max_abs(), 4.0);
        assert!(a.as_unitary_word().is_none());
        let u = GroupAlgebraElement::term(Complex64::new(0.0, 1.0), Word::r(4));
        assert_eq!(u.as_unitary_word().map(|(w, _)| w.clone()), Some(Word::r(4)));
    }
}
