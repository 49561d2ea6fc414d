//! The equivariant unitary with group-algebra coefficients, the adjoint
//! action it induces on the truncated operators, and the checks built on it.

mod closed_form;
mod gaop;
mod identities;
mod quotient;
mod rep;
mod unitary;
mod volume;
mod witness;

pub use closed_form::{alpha_a_coefficient, alpha_b_coefficient, alpha_tau, closed_form_alpha_a, closed_form_alpha_b};
pub use gaop::GAOperator;
pub use identities::{
    failures, index_consistency, max_residual, verify_generator_identities, verify_q_relations,
    verify_universal_word_identities, IdentityCheck, Q_RELATION_FAMILIES,
};
pub use quotient::{
    quotient_alpha_a_collapsed, quotient_alpha_a_four_summands, quotient_alpha_b_tail, quotient_alpha_tau,
    verify_quotient, BTailPrediction, QuotientMorphism, QuotientReport,
};
pub use rep::EquivariantRep;
pub use unitary::{
    ad_u, build_u, corepresentation_check, dirac_commutator_residual, eigenbasis_change, u_in_eigenbasis,
    unitarity_residual, CorepresentationCheck,
};
pub use volume::{verify_volume_invariance, VolumeReport};
pub use witness::{
    alpha_phi_tau, noncompact_witness, toeplitz_contrast, toeplitz_contrast_prediction, WitnessReport,
    DEGENERATE_GAP,
};
