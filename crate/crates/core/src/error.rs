use thiserror::Error;

use crate::projective::ProjSubspace;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} out of range")]
    OutOfRange(String),

    #[error("matrix is singular")]
    Singular,

    #[error("parameter must be nonzero")]
    ZeroParameter,

    #[error("invalid exponent tuple: {0}")]
    InvalidTuple(String),

    #[error("exponent tuple {0:?} is not proper (entries share a common factor)")]
    NotProper(Vec<u32>),

    /// The curve (or its wedge) lies in a proper subspace.
    #[error("curve is degenerate: spans a {}-dimensional subspace", span.dim())]
    Degenerate { span: Box<ProjSubspace> },

    #[error("Plücker identity inconsistent: {0}")]
    PluckerInconsistency(String),

    #[error("transform does not fix the projection center")]
    NotFixed,

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("ambiguous inversion: {0}")]
    AmbiguousInversion(String),

    #[error("not a monomial curve: {0}")]
    NotMonomial(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
