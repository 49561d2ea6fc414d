//! Finite truncations of the Podles sphere representation and the numerical
//! diagnostics built on them.

mod banded;
mod block;
mod commutant;
mod compactness;
mod config;
mod operators;
mod spectral;

pub use banded::{BandCholesky, HermitianBand, SparseRows};
pub use block::{full_index, largest_singular_value, split_index, BlockOperator, CMatrix, CVector};
pub use commutant::{
    commutant, commutant_dimension, CommutantMethod, CommutantOptions, CommutantReport,
    SubproblemReport,
};
pub use compactness::{compactness_profile, CompactnessProfile};
pub use config::{Leg, TruncationConfig};
pub use operators::{
    bsb_leg_spectrum, build_dirac, build_pi, build_projections, build_tau, leg_projection,
    modulus, number_operator, polar_residual, spectral_projection_checks, verify_podles_relations,
    Dirac, DiracMode, PodlesGenerators, RelationReport, RelationResidual, SpectralProjectionCheck,
    RELATION_NAMES,
};
pub use spectral::{block_function, hermitian_eigenvalues, hermitian_function, leg_spectrum, pseudo_power};
