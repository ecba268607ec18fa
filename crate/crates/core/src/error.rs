use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {input:?}: {reason}")]
    InvalidPartition { input: String, reason: String },

    #[error("size mismatch: |mu| = {mu} but |lambda| = {lambda}")]
    SizeMismatch { mu: usize, lambda: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("cache file {path}, line {line}: {reason}")]
    CacheCorrupt {
        path: String,
        line: usize,
        reason: String,
    },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
