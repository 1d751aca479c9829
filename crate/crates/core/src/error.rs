use thiserror::Error;

/// Everything that can go wrong while building or checking a construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ill-formed data: {0}")]
    Invalid(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("missing data: {0}")]
    Missing(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! invalid {
    ($($arg:tt)*) => { $crate::error::Error::Invalid(format!($($arg)*)) };
}

macro_rules! mismatch {
    ($($arg:tt)*) => { $crate::error::Error::DimensionMismatch(format!($($arg)*)) };
}

pub(crate) use invalid;
pub(crate) use mismatch;
