use thiserror::Error;

use crate::exact::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("not covered by the known classification: {0}")]
    NotCovered(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("field too small: {0}")]
    FieldTooSmall(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("projection center meets the secant locus: {0}")]
    SecantLocus(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("refused: {0}")]
    Complexity(String),

    #[error("rank did not stabilize: {0}")]
    NotStabilized(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, Error>;
