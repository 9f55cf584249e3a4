use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("non-finite value at position {index}")]
    NonFiniteValue { index: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A pivot fell below tolerance during factorization. `pivot_index` is 1-based.
    #[error("singular system: pivot {pivot_index} has magnitude {magnitude:e} (tolerance {tolerance:e})")]
    SingularSystem {
        pivot_index: usize,
        magnitude: f64,
        tolerance: f64,
    },

    #[error("n = {n} exceeds the dense materialization cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),
}
