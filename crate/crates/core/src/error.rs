use thiserror::Error;

/// Errors raised by the exact and numeric layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("non-generic configuration: {0}")]
    NonGeneric(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("singular extension: {0}")]
    SingularExtension(String),
    #[error("equivalence unavailable: {0}")]
    EquivalenceUnavailable(String),
    #[error("internal consistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
