//! Sparse square matrices with group-algebra entries, acting on
//! `H (x) Q` with the stacked basis of [`crate::podles::full_index`].

use std::collections::BTreeMap;

use crate::error::Result;
use crate::freeprod::{Character, GroupAlgebraElement, Word};
use crate::podles::{full_index, split_index, BlockOperator, Leg};

#[derive(Clone, Debug, PartialEq)]
pub struct GAOperator {
    m: usize,
    rows: Vec<BTreeMap<usize, GroupAlgebraElement>>,
}

impl GAOperator {
    pub fn zeros(m: usize) -> Self {
        GAOperator {
            m,
            rows: vec![BTreeMap::new(); 2 * m],
        }
    }

    pub fn identity(m: usize) -> Self {
        let mut out = Self::zeros(m);
        for i in 0..2 * m {
            out.rows[i].insert(i, GroupAlgebraElement::one());
        }
        out
    }

    /// `x (x) a`: every scalar entry of `x` multiplied by `a`.
    pub fn tensor(x: &BlockOperator, a: &GroupAlgebraElement) -> Self {
        let m = x.m();
        let mut out = Self::zeros(m);
        if a.is_zero() {
            return out;
        }
        for ((rl, rn), (cl, cn), v) in x.nonzeros() {
            out.add_to(full_index(m, rl, rn), full_index(m, cl, cn), &a.scale(v));
        }
        out
    }

    /// `x (x) 1`.
    pub fn from_scalar_operator(x: &BlockOperator) -> Self {
        Self::tensor(x, &GroupAlgebraElement::one())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        2 * self.m
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&GroupAlgebraElement> {
        self.rows[i].get(&j)
    }

    /// Entry `(i, j)`, the zero element when absent.
    pub fn entry(&self, i: usize, j: usize) -> GroupAlgebraElement {
        self.get(i, j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, a: GroupAlgebraElement) {
        if a.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, a);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, a: &GroupAlgebraElement) {
        let slot = self.rows[i].entry(j).or_default();
        *slot += a;
        if slot.is_zero() {
            self.rows[i].remove(&j);
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &GroupAlgebraElement)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(&j, a)| (i, j, a)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn mul(&self, other: &GAOperator) -> GAOperator {
        assert_eq!(self.m, other.m, "operator sizes differ");
        let mut out = Self::zeros(self.m);
        for (i, row) in self.rows.iter().enumerate() {
            for (&k, a) in row {
                for (&j, b) in &other.rows[k] {
                    out.add_to(i, j, &(a * b));
                }
            }
        }
        out
    }

    /// Conjugate transpose with the involution applied entrywise.
    pub fn adjoint(&self) -> GAOperator {
        let mut out = Self::zeros(self.m);
        for (i, j, a) in self.entries() {
            out.rows[j].insert(i, a.star());
        }
        out
    }

    pub fn add(&self, other: &GAOperator) -> GAOperator {
        let mut out = self.clone();
        for (i, j, a) in other.entries() {
            out.add_to(i, j, a);
        }
        out
    }

    pub fn sub(&self, other: &GAOperator) -> GAOperator {
        let mut out = self.clone();
        for (i, j, a) in other.entries() {
            out.add_to(i, j, &(-a));
        }
        out
    }

    /// Applies `f` to every entry.
    pub fn map_entries<F>(&self, mut f: F) -> GAOperator
    where
        F: FnMut(&GroupAlgebraElement) -> GroupAlgebraElement,
    {
        let mut out = Self::zeros(self.m);
        for (i, j, a) in self.entries() {
            out.set(i, j, f(a));
        }
        out
    }

    /// `(id (x) chi)`: evaluates every entry under a character.
    pub fn evaluate(&self, chi: &Character) -> Result<BlockOperator> {
        let m = self.m;
        let mut out = BlockOperator::zeros(m);
        for (i, j, a) in self.entries() {
            out.set_entry(split_index(m, i), split_index(m, j), chi.evaluate(a)?);
        }
        Ok(out)
    }

    /// The scalar operator formed by the coefficient of `w` in every entry.
    pub fn word_component(&self, w: &Word) -> BlockOperator {
        let m = self.m;
        let mut out = BlockOperator::zeros(m);
        for (i, j, a) in self.entries() {
            out.set_entry(split_index(m, i), split_index(m, j), a.coefficient(w));
        }
        out
    }

    /// Largest l1 norm of an entry.
    pub fn max_entry_norm(&self) -> f64 {
        self.entries().map(|(_, _, a)| a.l1_norm()).fold(0.0, f64::max)
    }

    /// Largest l1 norm of an entry of `self - other`.
    pub fn max_diff(&self, other: &GAOperator) -> f64 {
        self.sub(other).max_entry_norm()
    }

    /// As [`GAOperator::max_diff`], restricted to columns accepted by `keep`.
    pub fn max_diff_on_columns<F>(&self, other: &GAOperator, keep: F) -> f64
    where
        F: Fn(Leg, usize) -> bool,
    {
        let m = self.m;
        self.sub(other)
            .entries()
            .filter(|(_, j, _)| {
                let (leg, n) = split_index(m, *j);
                keep(leg, n)
            })
            .map(|(_, _, a)| a.l1_norm())
            .fold(0.0, f64::max)
    }

    /// Largest l1 norm among entries connecting different legs.
    pub fn off_diagonal_max(&self) -> f64 {
        let m = self.m;
        self.entries()
            .filter(|(i, j, _)| split_index(m, *i).0 != split_index(m, *j).0)
            .map(|(_, _, a)| a.l1_norm())
            .fold(0.0, f64::max)
    }

    /// `(Tr (x) id)`: sum of the diagonal entries.
    pub fn partial_trace(&self) -> GroupAlgebraElement {
        let mut acc = GroupAlgebraElement::zero();
        for i in 0..self.dim() {
            if let Some(a) = self.get(i, i) {
                acc += a;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::podles::CMatrix;
    use num_complex::Complex64;

    fn ga(w: Word) -> GroupAlgebraElement {
        GroupAlgebraElement::from_word(w)
    }

    #[test]
    fn identity_is_neutral() {
        let mut x = GAOperator::zeros(2);
        x.set(0, 3, ga(Word::r(1)));
        x.set(2, 1, ga(Word::y()).scale_real(0.5));
        let id = GAOperator::identity(2);
        assert_eq!(id.mul(&x), x);
        assert_eq!(x.mul(&id), x);
    }

    #[test]
    fn adjoint_reverses_products() {
        let mut a = GAOperator::zeros(1);
        a.set(0, 1, ga(Word::r(0)));
        a.set(1, 1, ga(Word::y()));
        let mut b = GAOperator::zeros(1);
        b.set(1, 0, ga(Word::r(2)));
        b.set(0, 0, GroupAlgebraElement::term(Complex64::new(0.0, 1.0), Word::r(3)));
        let lhs = a.mul(&b).adjoint();
        let rhs = b.adjoint().mul(&a.adjoint());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_then_evaluate_recovers_scaled_operator() {
        let x = BlockOperator::from_full(&CMatrix::from_fn(4, 4, |i, j| Complex64::new(i as f64, j as f64))).unwrap();
        let t = GAOperator::tensor(&x, &ga(Word::r(1)).scale_real(2.0));
        let chi = Character::trivial();
        let back = t.evaluate(&chi).unwrap();
        assert!((&back - &x.scale_real(2.0)).max_abs() < 1e-15);
        assert_eq!(t.word_component(&Word::r(1)), x.scale_real(2.0));
    }

    #[test]
    fn partial_trace_sums_diagonal() {
        let mut x = GAOperator::zeros(1);
        x.set(0, 0, ga(Word::r(0)));
        x.set(1, 1, ga(Word::r(0)).scale_real(-1.0));
        x.set(0, 1, ga(Word::y()));
        assert!(x.partial_trace().is_zero());
        assert_eq!(x.off_diagonal_max(), 1.0);
    }
}
