use thiserror::Error;

/// Errors surfaced by oracle evaluation, instance handling, and reductions.
///
/// `FuelExhausted` is deliberately separate from every other variant: running
/// out of fuel must become an `Unknown` verdict upstream, never a boolean.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("fuel exhausted: query at index {index} exceeds fuel limit {limit}")]
    FuelExhausted { index: u64, limit: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("payload shape does not match problem {0}")]
    ShapeMismatch(String),

    #[error("solution shape does not match problem {0}")]
    SolutionShape(String),

    #[error("certificate mismatch: {0}")]
    CertificateMismatch(String),

    #[error("instance carries no certificate, required for {0}")]
    MissingCertificate(String),

    #[error("reduction mismatch: {0}")]
    ReductionMismatch(String),

    #[error("sequence code overflow at length {0}")]
    CodeOverflow(u64),

    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
