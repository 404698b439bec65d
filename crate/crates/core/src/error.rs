use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the library. The CLI maps each category onto an exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    #[error("cache I/O error at {path}: {source}")]
    CacheIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cache integrity error in {path}: {reason}")]
    CacheIntegrity { path: PathBuf, reason: String },

    #[error("numerical stability error: rho <= 0 at s={s}, n={n}, k={k}")]
    Stability { s: u64, n: usize, k: usize },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown generator `{name}` at position {position}")]
    UnknownGenerator { name: String, position: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
