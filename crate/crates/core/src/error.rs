use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group spec `{spec}`: {reason}")]
    InvalidGroupSpec { spec: String, reason: String },

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("element index {index} out of range 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("tuple index {index} out of range 1..={max}")]
    TupleOutOfRange { index: usize, max: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("degree {degree} out of range for this model ({min}..={max})")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },

    #[error("model not provided by paper: {family} in degree {degree}")]
    ModelNotProvided { family: String, degree: usize },

    #[error("model file {}: {message}", path.display())]
    ModelFormat { path: PathBuf, message: String },

    #[error("codifferentials do not compose to zero (d^{lower} followed by d^{upper})")]
    NotAComplex { lower: usize, upper: usize },

    #[error("oracle input too large: v^(n+1) = {size} exceeds 2^20")]
    OracleTooLarge { size: u128 },

    #[error("span of {dim} generators is too large for exhaustive search (limit {limit} combinations)")]
    SpanTooLarge { dim: usize, limit: u64 },

    #[error("predicate {predicate} requires arity {required}, got {actual}")]
    PredicateArity { predicate: &'static str, required: usize, actual: usize },

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("invalid tensor data: {0}")]
    TensorFormat(String),

    #[error("basis elements are not independent: {0}")]
    Dependent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
