use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parameter value is excluded: {0}")]
    ExcludedParameter(String),
    #[error("basis change does not preserve the brackets of n(n,1): {0}")]
    BracketNotPreserved(String),
    #[error("outer derivations are not nil-independent: {0}")]
    NotNilIndependent(String),
    #[error("input derivation is nilpotent (alpha = beta = 0)")]
    NilpotentInput,
    #[error("commutator of outer derivations is not inner")]
    CommutatorNotInner,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("matrix is not a derivation: {0}")]
    NotADerivation(String),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("exponent denominator vanishes: {0}")]
    DivergentExponent(String),
    #[error("operator image is not proportional to the polynomial")]
    NotEigenvector,
    #[error("all {0} sample points hit a denominator zero")]
    DegeneratePoint(usize),
    #[error("normalized parameters are not rational: {0}")]
    IrrationalNormalization(String),
    #[error("Jacobi identity fails on {0} basis triple(s)")]
    JacobiViolation(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
