//! The staged maximal-contact construction: flags of hypersurfaces of
//! maximal contact, the ideal `J_k` with its markers `(d_i, e_i)`, the
//! modified coefficient ideal, the invariant it yields and the center it
//! suggests.

mod descent;
mod frame;
mod lemma;
mod staging;

pub use descent::{
    hybrid_invariant, hybrid_invariant_of, modified_coeff_ideal, suggest_center, suggest_center_of, CenterSuggestion,
    HybridInvariant, InvariantEntry, DESCENT_BUDGET,
};
pub use frame::maximal_contact_frame;
pub use lemma::{lemma_equivalence_check, lemma_equivalence_check_of, ChartCheck, LemmaReport};
pub use staging::{staged_build, staged_build_with, HybridData, Stage};
