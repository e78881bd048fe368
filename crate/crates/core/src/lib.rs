//! Exact construction of the nilpotent Lie algebra n(n,1), its solvable
//! extensions, and their generalized Casimir invariants.

pub mod algebra;
pub mod error;
pub mod exact;
pub mod families;
pub mod invariants;

pub use error::{Error, Result};
