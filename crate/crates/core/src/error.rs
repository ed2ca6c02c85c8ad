//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by matrix, channel, and protocol operations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: String, actual: String },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:.3e} exceeds {tolerance:.3e})")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("trace is {trace:.12} but must be 1 within {tolerance:.3e}")]
    TraceNotOne { trace: f64, tolerance: f64 },

    #[error("matrix is not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },

    #[error("channel is not mixedness-preserving (deviation {deviation:.3e})")]
    NotMixednessPreserving { deviation: f64 },

    #[error("insufficient copies: need at least {required}, got {actual}")]
    InsufficientCopies { required: usize, actual: usize },

    #[error("message exceeds communication budget: {detail}")]
    BudgetViolation { detail: String },

    #[error("node count {actual} below protocol requirement {required}")]
    TooFewNodes { required: usize, actual: usize },

    #[error("enumeration over {size} sign assignments is too large (limit {limit}); use sampling mode")]
    EnumerationTooLarge { size: u128, limit: u128 },

    #[error("perturbation count {ell} outside valid range [{min}, {max}]")]
    EllOutOfRange { ell: usize, min: usize, max: usize },

    #[error("empty sample list")]
    EmptySamples,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
