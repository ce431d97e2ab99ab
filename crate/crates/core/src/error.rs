//! Error type shared by all modules.

use crate::exact_poly::ExponentVec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("need at least {needed} nodes, got {got}")]
    InsufficientNodes { needed: usize, got: usize },

    #[error("node grid is missing index {0:?}")]
    IncompleteGrid(ExponentVec),

    #[error(
        "weights are not monotone in coordinate {coord}: \
         u[{lower:?}] = {lower_value} > u[{upper:?}] = {upper_value}"
    )]
    NonMonotoneWeights {
        coord: usize,
        lower: ExponentVec,
        upper: ExponentVec,
        lower_value: u64,
        upper_value: u64,
    },

    #[error("sequence in coordinate {coord} is not non-decreasing")]
    NonMonotoneSequence { coord: usize },

    #[error("expected a non-negative integer count, got {value}")]
    NonIntegerCount { value: String },

    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
