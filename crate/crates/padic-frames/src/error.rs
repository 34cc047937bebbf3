//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by construction, arithmetic, and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    /// The p-adic valuation of zero is not a finite integer.
    #[error("valuation of zero undefined")]
    ZeroValuation,

    /// Two values built over different primes were combined.
    #[error("mismatched primes: {left} vs {right}")]
    PrimeMismatch { left: u64, right: u64 },

    /// A parameter failed validation (non-prime p, bad level, malformed input).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An operation would need a finer grid than the context allows.
    #[error("resolution overflow: operation needs level {required} but the context caps at {max_level}")]
    ResolutionOverflow { required: u32, max_level: u32 },

    /// `refine` only moves to finer grids; averaging down is a separate, lossy step.
    #[error("cannot coarsen from level {from} to {to}: refine only increases resolution")]
    CoarseningNotSupported { from: u32, to: u32 },

    /// Frame analysis of the zero symbol is meaningless.
    #[error("zero function generates the zero system")]
    ZeroSymbol,

    /// The requested Gram matrix is larger than the configured cap.
    #[error("matrix of size {size} exceeds the configured cap {cap}")]
    MatrixCapExceeded { size: usize, cap: usize },

    /// A matrix handed to the eigensolver is not Hermitian within tolerance.
    #[error("matrix is not Hermitian: max asymmetry {max_asymmetry:e}")]
    NotHermitian { max_asymmetry: f64 },

    /// Malformed serialized input (JSON schema violations, length mismatches).
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
