use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `position` is 1-based.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error(
        "unsupported pattern {pattern:?}: the stack machine needs a pattern of length at least 2"
    )]
    UnsupportedPattern { pattern: String },

    #[error("cannot decompose an empty sequence")]
    EmptySequence,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search space too large: {size} arrangements exceeds the cap of {cap}")]
    TooLarge { size: String, cap: u64 },

    #[error("series error: {0}")]
    Series(String),
}

pub type Result<T> = std::result::Result<T, Error>;
