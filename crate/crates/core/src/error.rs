//! Shared error type for every module in this crate.

/// Errors produced by graph construction, searches, and solvers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter is outside its documented domain (e.g. `cycle(2)`).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// Structurally malformed input (duplicate events, mismatched graphs, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A size or time guardrail was hit before the computation finished.
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    /// A graph descriptor or input file failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
    /// The linear program has no finite optimum.
    #[error("linear program is unbounded")]
    Unbounded,
    /// An internal consistency check failed; this is a bug.
    #[error("internal error: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid_parameter(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn resource_cap(msg: impl Into<String>) -> Self {
        Error::ResourceCap(msg.into())
    }
}
