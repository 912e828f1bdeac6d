use thiserror::Error;

/// Errors raised by the library. Every precondition failure is reported
/// through this type; nothing in the public API panics on bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Lie type {0:?}")]
    InvalidType(String),

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not a positive root")]
    NotARoot(String),

    #[error("Weyl group of order {size} exceeds the configured bound {bound}")]
    GroupTooLarge { size: u128, bound: u64 },

    #[error("invalid word {word:?}: {reason}")]
    InvalidWord { word: String, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("objects belong to different root systems")]
    Mismatch,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no Peterson lift found with corrections bounded by {0}")]
    LiftBound(i64),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
