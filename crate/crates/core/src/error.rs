use thiserror::Error;

/// Errors raised by the algebra engines and the harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} variables vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("exponent vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what}: limit {limit} exceeded (got {got})")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
