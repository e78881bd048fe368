//! Lie algebras from structure constants: series, derivations,
//! nil-independence and a text table format.

mod derivation;
mod lie;
mod nilindep;
mod series;
mod subspace;
mod table;

pub use derivation::{
    derivation_constraints, derivation_space, inner_derivation_space, inner_derivations,
    is_derivation, split_inner, verify_lemma1_pattern, verify_lemma1_printed_pattern,
};
pub use lie::LieAlgebra;
pub use nilindep::{nil_independent, restricted_adjoint};
pub use series::{
    bracket_span, center, centralizer, centralizer_modulo, derived_series, is_ideal,
    is_nilpotent, is_nilpotent_subalgebra, is_solvable, lower_central_series, nilpotency_degree,
    series_signature, solvability_depth, upper_central_series, SeriesSignature,
};
pub use subspace::Subspace;
pub use table::{format_combination, format_table, parse_table};
