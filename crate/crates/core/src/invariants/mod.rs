//! Coadjoint operators, generalized Casimir invariants and their exact
//! verification.

mod coadjoint;
mod expr;
mod family;
mod verify;
mod xi;

pub use coadjoint::{
    coadjoint_operators, evaluate_matrix, generic_rank, invariant_count, random_integer_point,
    structure_matrix,
};
pub use expr::InvariantExpr;
pub use family::{
    chi, expected_count, invariant_family, truncated_from_coadjoint, truncated_operators,
    weighted_eigenvalue,
};
pub use verify::{
    expected_signature, functional_independence, verify_annihilation, verify_theorem, Check,
    Report, Sampling,
};
pub use xi::{xi, xi_in};
