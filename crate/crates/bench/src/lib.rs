//! Fixtures shared by the benchmarks.

use qiso_core::freeprod::{Generator, Syllable};
use qiso_core::podles::TruncationConfig;

/// Default parameters at truncation size `m`.
pub fn truncation(m: usize) -> TruncationConfig {
    TruncationConfig::new(m, 0.5, 2.0).expect("benchmark parameters are valid")
}

/// An unreduced word of `len` syllables that cancels down to about half its
/// length: `r_k^2 r_k^-2` pairs interleaved with surviving `y r_k` blocks.
pub fn cancelling_syllables(len: usize) -> Vec<Syllable> {
    (0..len)
        .map(|i| {
            let k = (i / 4) as u32 % 8;
            match i % 4 {
                0 => Syllable::new(Generator::R(k), 2),
                1 => Syllable::new(Generator::R(k), -2),
                2 => Syllable::new(Generator::Y, 1),
                _ => Syllable::new(Generator::R(k + 1), 1),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qiso_core::freeprod::Word;

    #[test]
    fn fixture_words_reduce_by_half() {
        let w = Word::reduce(cancelling_syllables(400));
        assert_eq!(w.len(), 200);
    }
}
