//! Verification workbench for the quantum isometry group of a spectral
//! triple on the Podles sphere.
//!
//! * [`freeprod`]: words in `Z_2 * Z^inf`, the complex group algebra,
//!   characters and the group-like coproduct.
//! * [`podles`]: truncated operators `pi(A)`, `pi(B)`, `D`, `tau`, spectral
//!   projections, the commutant solver and tail-norm profiles.
//! * [`action`]: the equivariant unitary with group-algebra entries, the
//!   brute-force adjoint action and every identity checked against it.
//! * [`report`]: JSON records for individual checks.

pub mod action;
pub mod error;
pub mod freeprod;
pub mod podles;
pub mod report;

pub use error::{Error, Result};
pub use num_complex::Complex64;
