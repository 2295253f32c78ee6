//! Exact structure theory for compact and unitary Lie superalgebras.

pub mod algebra;
pub mod decomp;
pub mod exact;
pub mod families;
pub mod fock;
pub mod unitar;

pub use algebra::{Parity, SuperAlgebra, SuperSpace};
pub use exact::{Rational, Scalar};

/// Failures reported by the library. Verification failures carry the
/// offending basis indices so that the claim can be checked by hand.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("super Jacobi identity fails at basis triple {triple:?}")]
    Jacobi { triple: (usize, usize, usize), lhs: Vec<Rational>, rhs: Vec<Rational> },
    #[error("span not closed under the bracket: [{}, {}] leaves the span", pair.0, pair.1)]
    NotClosed { pair: (usize, usize), residual: Vec<Rational> },
    #[error("subspace is not central")]
    NotCentral,
    #[error("not a derivation at basis pair ({0}, {1})")]
    NotDerivation(usize, usize),
    #[error("odd derivation does not square to zero")]
    OddSquareNonzero,
    #[error("form is not symmetric")]
    NotSymmetric,
    #[error("form is not invariant at basis triple ({0}, {1}, {2})")]
    NotInvariant(usize, usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
