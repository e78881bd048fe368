//! The algebra `n(n,1)`, its solvable extensions, the changes of basis that
//! bring an extension to canonical form, and a classifier.

mod build;
mod classify;
mod label;
mod report;
mod spec;
mod transform;

pub use build::{
    abelian_subalgebra_bound, build, build_nilradical, canonical_derivation, jordan_matrix,
    kernel_in_image, outer_derivations, validate,
};
pub use classify::{classify_algebra, classify_extension, Classification};
pub use label::{normalize_s6, FamilyKind, FamilyLabel, FieldTag};
pub use report::{derivation_report, DerivationReport};
pub use spec::ExtensionSpec;
pub use transform::{
    apply_basis_change, canonical_parameters, outer_derivation, reduce_to_canonical, BasisChange,
};
