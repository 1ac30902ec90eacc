//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Root isolation or factorization of the zero polynomial.
    #[error("indeterminate root set: zero polynomial")]
    ZeroPolynomial,

    /// An argument left the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented capability bound was exceeded (degree caps, k_max, ...).
    #[error("capability bound exceeded: {0}")]
    Capability(String),

    /// Signature evaluation at a jump of the step function.
    #[error("evaluation at a discontinuity (x = {0})")]
    JumpDiscontinuity(String),

    /// Vectors or module elements of mismatched rank.
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    /// A Seifert matrix failed validation.
    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifert(String),

    /// The derived depth of the identity word is undefined.
    #[error("depth undefined (identity)")]
    TrivialWord,

    /// An infection-term leaf is missing the data an operation needs.
    #[error("missing data on leaf '{0}'")]
    MissingLeafData(String),

    /// A term of the wrong shape (e.g. a link where a knot is required).
    #[error("unsupported term: {0}")]
    UnsupportedTerm(String),

    /// A rho-expansion scenario does not match the pattern's curves.
    #[error("scenario mismatch: {0}")]
    ScenarioMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
