//! Error kinds shared across the crate.

/// Errors raised by constructors, bijections and generators.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed input: wrong shape, out-of-range entries, unparsable text.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Structurally well-formed input outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A size cutoff was exceeded.
    #[error("cutoff exceeded: {0}")]
    ResourceLimit(String),
    /// An internal invariant failed; indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid_input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource_limit(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Internal(format!("io failure: {e}"))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
