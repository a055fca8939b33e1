//! Error type shared by the whole engine.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("axis dimension mismatch: {left} (dim {left_dim}) vs {right} (dim {right_dim})")]
    AxisMismatch { left: String, left_dim: usize, right: String, right_dim: usize },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("no solution: inconsistent row {certificate}")]
    NoSolution { certificate: String },

    #[error("solution not unique: free column {column}")]
    NotUnique { column: usize },

    #[error("{construction} refused: {reason}")]
    Refused { construction: String, reason: String },

    #[error("axiom {label} failed at basis tuple {witness}")]
    AxiomFailure { label: String, witness: String },

    #[error("condition {label} violated at {witness}")]
    ConditionViolated { label: String, witness: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("parse error at line {line}: {msg}")]
    ParseAt { line: usize, msg: String },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn refused(construction: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Refused { construction: construction.into(), reason: reason.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
