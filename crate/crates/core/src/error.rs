use thiserror::Error;

use crate::scalar::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("associativity fails for basis triple ({i}, {j}, {k})")]
    AssociativityViolation { i: usize, j: usize, k: usize },

    #[error("unit law fails at basis element {index}")]
    UnitViolation { index: usize },

    #[error("idempotent family invalid: {0}")]
    IdempotentViolation(String),

    #[error("algebra is not basic: {0}")]
    NotBasic(String),

    #[error("relations are inconsistent: the trivial path at vertex {vertex:?} lies in the ideal")]
    InconsistentRelations { vertex: String },

    #[error("invalid quiver presentation: {0}")]
    InvalidPresentation(String),

    #[error("radical computation unsupported over {field} without a quiver presentation or radical basis")]
    UnsupportedField { field: Field },

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("modules or bimodules live over different algebras")]
    AlgebraMismatch,

    #[error("algebra is not self-injective")]
    NotSelfInjective,

    #[error("module dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    /// The finite search space for a generic element was too large to
    /// enumerate and sampling found no witness. Distinct from a negative
    /// answer.
    #[error("search over {field} inconclusive after {tried} sample points ({space} total)")]
    FiniteFieldInconclusive {
        field: Field,
        tried: usize,
        space: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by how the tool was invoked (bad arguments,
    /// unreadable or malformed files) rather than by the mathematics of
    /// the input.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::InvalidInput(_) | Error::UnknownFixture(_) | Error::Parse(_))
    }
}
