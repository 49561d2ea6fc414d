//! Coefficient families `q_n^+`, `q_n^-` of an equivariant unitary.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freeprod::{GroupAlgebraElement, Word};
use crate::podles::Leg;

/// `q_n^+` and `q_n^-` for `n < m`: the group-algebra elements by which the
/// unitary acts on the `D`-eigenvectors `(e_n, e_n)` and `(e_n, -e_n)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivariantRep {
    pub qplus: Vec<GroupAlgebraElement>,
    pub qminus: Vec<GroupAlgebraElement>,
}

impl EquivariantRep {
    /// The universal choice `q_n^+ = r_n`, `q_n^- = r_n y`.
    pub fn universal(m: usize) -> Self {
        let qplus = (0..m)
            .map(|n| GroupAlgebraElement::from_word(Word::r(n as u32)))
            .collect();
        let qminus = (0..m)
            .map(|n| GroupAlgebraElement::from_word(Word::r(n as u32).mul(&Word::y())))
            .collect();
        EquivariantRep { qplus, qminus }
    }

    /// Every coefficient equal to the identity `e`.
    pub fn trivial(m: usize) -> Self {
        EquivariantRep {
            qplus: vec![GroupAlgebraElement::one(); m],
            qminus: vec![GroupAlgebraElement::one(); m],
        }
    }

    /// The universal choice with `y` dropped from `q_index^-`, i.e.
    /// `q_index^- = r_index`; used as a negative control.
    pub fn without_y_at(m: usize, index: usize) -> Result<Self> {
        let mut rep = Self::universal(m);
        if index >= m {
            return Err(Error::IndexOutOfRange { index, size: m });
        }
        rep.qminus[index] = GroupAlgebraElement::from_word(Word::r(index as u32));
        Ok(rep)
    }

    /// A user-supplied family; both legs must have the same length.
    pub fn new(qplus: Vec<GroupAlgebraElement>, qminus: Vec<GroupAlgebraElement>) -> Result<Self> {
        if qplus.len() != qminus.len() {
            return Err(Error::Shape {
                expected: qplus.len(),
                got: qminus.len(),
            });
        }
        Ok(EquivariantRep { qplus, qminus })
    }

    pub fn len(&self) -> usize {
        self.qplus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.qplus.is_empty()
    }

    /// Checks that coefficients exist for every `n < m`.
    pub fn require(&self, m: usize) -> Result<()> {
        for (sign, v) in [('+', &self.qplus), ('-', &self.qminus)] {
            if v.len() < m {
                return Err(Error::MissingRepEntry { sign, index: v.len() });
            }
        }
        Ok(())
    }

    pub fn q(&self, sign: Leg, n: usize) -> &GroupAlgebraElement {
        match sign {
            Leg::Plus => &self.qplus[n],
            Leg::Minus => &self.qminus[n],
        }
    }

    /// `y_n = (q_n^-)* q_n^+`.
    pub fn y(&self, n: usize) -> GroupAlgebraElement {
        self.qminus[n].star().mul(&self.qplus[n])
    }

    /// `z_n = q_{n-1}^+ (q_n^+)*`, `n >= 1`.
    pub fn z(&self, n: usize) -> GroupAlgebraElement {
        self.qplus[n - 1].mul(&self.qplus[n].star())
    }

    /// `w_n = q_{n-1}^+ y_0 (q_n^+)*`, `n >= 1`.
    pub fn w(&self, n: usize) -> GroupAlgebraElement {
        self.qplus[n - 1].mul(&self.y(0)).mul(&self.qplus[n].star())
    }

    /// `w' = w_1* z_1`.
    pub fn w_prime(&self) -> GroupAlgebraElement {
        self.w(1).star().mul(&self.z(1))
    }
}
