use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A table would not fit in memory. Never a wrong answer: callers
    /// either retry smaller or report the failure.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    /// The requested extremum ranges over an empty set.
    #[error("empty set: {0}")]
    EmptySet(String),
    /// An internal cross-check (e.g. the D(n) = L(n) + D0(n-1) identity)
    /// failed. Indicates a bug, surfaced rather than silently ignored.
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
