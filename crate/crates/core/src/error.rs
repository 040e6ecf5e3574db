use thiserror::Error;

/// Errors raised by the library. Verdicts and findings are data, never errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed rational literal {0:?}")]
    Parse(String),

    #[error("mismatched radicands: {left} vs {right}")]
    MismatchedRadicand { left: String, right: String },

    #[error("negative radicand {0}")]
    NegativeRadicand(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0}")]
    Usage(String),

    #[error("unknown stratum {0:?}")]
    UnknownStratum(String),

    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
