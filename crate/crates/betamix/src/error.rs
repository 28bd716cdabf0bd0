//! Error type shared across the crate.

/// Errors produced by estimation, oracle, and bound evaluation routines.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Input file could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The series is too short for the requested configuration.
    #[error("insufficient data: need at least {needed} observations, got {got}")]
    InsufficientData { needed: usize, got: usize },

    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Incompatible or invalid configuration (e.g. mismatched grids).
    #[error("configuration error: {0}")]
    Config(String),

    /// The transition matrix does not admit a unique stationary distribution.
    #[error("non-ergodic chain: {0}")]
    NonErgodic(String),

    /// Brute-force enumeration would exceed the capacity guard.
    #[error("state space too large: {0}")]
    Capacity(String),

    /// A bound was requested with a hypothesis term that is not positive.
    #[error("bound hypothesis violated: {term} = {value} must be > 0")]
    Hypothesis { term: &'static str, value: f64 },

    /// The requested block length does not tile the sample.
    #[error("invalid blocking: {0}")]
    Partition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
