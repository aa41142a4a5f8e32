use thiserror::Error;

use crate::exactmath::scalar::ScalarKind;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("scalar kind mismatch: {left} vs {right}")]
    KindMismatch { left: ScalarKind, right: ScalarKind },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("vector is not in the span of the basis: {0}")]
    NotInSpan(String),

    #[error("construction failure: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
