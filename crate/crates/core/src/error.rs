use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("malformed path at step {index}: {reason}")]
    MalformedPath { index: usize, reason: String },

    #[error("permutation is not in the avoidance class: {0}")]
    NotInClass(String),

    #[error("decomposition undefined: {0}")]
    UndefinedDecomposition(String),

    #[error("resource limit exceeded: n = {n} is above the configured limit {limit}")]
    ResourceLimit { n: usize, limit: usize },

    #[error("series is not invertible: constant term is not a unit")]
    NonInvertibleSeries,

    #[error("truncation configuration mismatch between series operands")]
    TruncationMismatch,

    #[error("degenerate continued fraction: {0}")]
    DegenerateCf(String),

    #[error("continued-fraction level {level} has grading exponent {exponent}; must be >= 1")]
    InvalidGrading { level: usize, exponent: i64 },

    #[error("denominator vanishes at the origin; power-series expansion undefined")]
    PoleAtOrigin,

    #[error("argument out of range: {0}")]
    Range(String),

    #[error("height index out of range: {0}")]
    HeightRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
