//! Exact symbolic arithmetic in `Z_2 * Z^inf` and its complex group algebra.

mod character;
mod coproduct;
mod element;
mod text;
mod word;

pub use character::{Character, TailRule};
pub use coproduct::{coproduct, coproduct_grouplike, TensorElement};
pub use element::{GroupAlgebraElement, PRUNE_THRESHOLD};
pub use word::{Generator, Syllable, Word};

/// Default number of `r` generators exercised by the symbolic checks.
pub const DEFAULT_INDEX_BOUND: usize = 64;
