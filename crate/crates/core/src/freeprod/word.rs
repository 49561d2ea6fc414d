//! Reduced words in the free product `Z_2 * Z * Z * ...`.
//!
//! A word is stored as a run-length encoded list of syllables. Two adjacent
//! syllables never share a generator, every `y` syllable carries exponent 1,
//! and the empty list is the identity. All constructors go through
//! [`Word::reduce`], so every `Word` value is in normal form.

use std::fmt;

/// A free generator: the order-two generator `y` or one of the infinite-order
/// generators `r_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Y,
    R(u32),
}

impl Generator {
    /// Reduces an exponent according to the order of the generator.
    /// `y^k` collapses to `y^(k mod 2)`; `r_k` exponents are untouched.
    fn normalize_exponent(self, exp: i64) -> i64 {
        match self {
            Generator::Y => exp.rem_euclid(2),
            Generator::R(_) => exp,
        }
    }

    pub fn r_index(self) -> Option<u32> {
        match self {
            Generator::Y => None,
            Generator::R(k) => Some(k),
        }
    }
}

/// One syllable `g^exp` of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: i64,
}

impl Syllable {
    pub fn new(generator: Generator, exponent: i64) -> Self {
        Syllable {
            generator,
            exponent,
        }
    }
}

/// A reduced word. Ordering is lexicographic on syllables, which gives the
/// deterministic iteration order used by group-algebra elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    /// The identity `e`.
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn y() -> Self {
        Word {
            syllables: vec![Syllable::new(Generator::Y, 1)],
        }
    }

    /// `r_k^exp`, reduced (so `exp == 0` gives `e`).
    pub fn r_pow(k: u32, exp: i64) -> Self {
        Word::reduce([Syllable::new(Generator::R(k), exp)])
    }

    pub fn r(k: u32) -> Self {
        Word::r_pow(k, 1)
    }

    /// Normalizes an arbitrary syllable list.
    ///
    /// Single left-to-right pass with a stack: each incoming syllable merges
    /// with the top of the stack when the generators agree, and a syllable
    /// whose exponent vanishes is popped, exposing the previous one to the
    /// next merge.
    pub fn reduce<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = Syllable>,
    {
        let mut stack: Vec<Syllable> = Vec::new();
        for s in raw {
            let exp = s.generator.normalize_exponent(s.exponent);
            if exp == 0 {
                continue;
            }
            match stack.last_mut() {
                Some(top) if top.generator == s.generator => {
                    let merged = s.generator.normalize_exponent(top.exponent + exp);
                    if merged == 0 {
                        stack.pop();
                    } else {
                        top.exponent = merged;
                    }
                }
                _ => stack.push(Syllable::new(s.generator, exp)),
            }
        }
        Word { syllables: stack }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of syllables (not the letter length).
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn letter_length(&self) -> u64 {
        self.syllables.iter().map(|s| s.exponent.unsigned_abs()).sum()
    }

    pub fn mul(&self, other: &Word) -> Word {
        // Only the junction can cancel, but reusing `reduce` keeps one code path.
        Word::reduce(self.syllables.iter().chain(other.syllables.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable::new(s.generator, s.generator.normalize_exponent(-s.exponent)))
                .collect(),
        }
    }

    /// Largest `r` index occurring in the word.
    pub fn max_r_index(&self) -> Option<u32> {
        self.syllables
            .iter()
            .filter_map(|s| s.generator.r_index())
            .max()
    }

    /// Replaces every syllable by the word returned from `f` and reduces.
    pub fn substitute<F>(&self, mut f: F) -> Word
    where
        F: FnMut(Syllable) -> Word,
    {
        Word::reduce(
            self.syllables
                .iter()
                .flat_map(|&s| f(s).syllables.into_iter()),
        )
    }
}

impl std::ops::Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        Word::mul(self, rhs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("e");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match s.generator {
                Generator::Y => f.write_str("y")?,
                Generator::R(k) => write!(f, "r{}^{}", k, s.exponent)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syl(g: Generator, e: i64) -> Syllable {
        Syllable::new(g, e)
    }

    #[test]
    fn y_squared_is_identity() {
        let w = Word::reduce([syl(Generator::Y, 1), syl(Generator::Y, 1)]);
        assert!(w.is_identity());
    }

    #[test]
    fn inverse_powers_cancel() {
        let w = Word::reduce([syl(Generator::R(3), 2), syl(Generator::R(3), -2)]);
        assert!(w.is_identity());
    }

    #[test]
    fn cascading_cancellation() {
        let w = Word::reduce([
            syl(Generator::R(0), 1),
            syl(Generator::Y, 1),
            syl(Generator::Y, 1),
            syl(Generator::R(0), -1),
            syl(Generator::R(1), 1),
        ]);
        assert_eq!(w.syllables(), &[syl(Generator::R(1), 1)]);
    }

    #[test]
    fn y_exponents_fold_mod_two() {
        assert!(Word::reduce([syl(Generator::Y, -4)]).is_identity());
        assert_eq!(Word::reduce([syl(Generator::Y, -1)]), Word::y());
        assert_eq!(Word::reduce([syl(Generator::Y, 3)]), Word::y());
    }

    #[test]
    fn merging_powers() {
        let w = Word::reduce([syl(Generator::R(2), 2), syl(Generator::R(2), 3)]);
        assert_eq!(w.syllables(), &[syl(Generator::R(2), 5)]);
        assert_eq!(w.letter_length(), 5);
    }

    #[test]
    fn inverse_reverses_syllables() {
        let w = Word::reduce([
            syl(Generator::R(0), 1),
            syl(Generator::Y, 1),
            syl(Generator::R(1), -1),
        ]);
        let expected = Word::reduce([
            syl(Generator::R(1), 1),
            syl(Generator::Y, 1),
            syl(Generator::R(0), -1),
        ]);
        assert_eq!(w.inverse(), expected);
        assert!(w.mul(&w.inverse()).is_identity());
    }

    #[test]
    fn display_matches_text_grammar() {
        let w = Word::reduce([
            syl(Generator::R(0), 1),
            syl(Generator::Y, 1),
            syl(Generator::R(1), -1),
        ]);
        assert_eq!(w.to_string(), "r0^1*y*r1^-1");
        assert_eq!(Word::identity().to_string(), "e");
    }

    #[test]
    fn substitution_drops_generators() {
        let w = Word::reduce([
            syl(Generator::R(1), 1),
            syl(Generator::R(5), 2),
            syl(Generator::R(1), 1),
        ]);
        let s = w.substitute(|s| match s.generator {
            Generator::R(k) if k > 2 => Word::identity(),
            _ => Word::reduce([s]),
        });
        assert_eq!(s, Word::r_pow(1, 2));
    }
}
