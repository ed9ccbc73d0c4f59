use thiserror::Error;

pub type Result<T, E = F4mError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum F4mError {
    #[error("empty solution set")]
    EmptySet,
    #[error("inconsistent objective dimension: expected {expected}, found {found}")]
    InconsistentDimension { expected: usize, found: usize },
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("negative weight {value} at index {index}")]
    NegativeWeight { index: usize, value: f64 },
    #[error("weight {index} must be strictly positive, got {value}")]
    NonPositiveWeight { index: usize, value: f64 },
    #[error("weight row {row} sums to {sum}, expected 1")]
    WeightNotNormalized { row: usize, sum: f64 },
    #[error("decision value {value} at index {index} outside [{lo}, {hi}]")]
    OutOfBounds {
        index: usize,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("unsupported {family} variant {variant}")]
    UnsupportedVariant { family: &'static str, variant: usize },
    #[error("invalid weight configuration: {0}")]
    InvalidWeights(String),
    #[error("invalid problem configuration: {0}")]
    InvalidProblem(String),
    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown problem '{0}'")]
    UnknownProblem(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("non-finite objective value at index {0}")]
    NonFinite(usize),
}
