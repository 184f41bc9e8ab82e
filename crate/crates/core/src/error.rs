use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inputs that violate an operation's preconditions.
    #[error("usage error: {0}")]
    Usage(String),
    /// Text that does not follow one of the documented formats.
    #[error("parse error: {0}")]
    Parse(String),
    /// A size cap (determinant expansion, Hilbert table degree) was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
    /// An internal invariant was found broken on the given input.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    pub fn message(&self) -> &str {
        match self {
            Error::Usage(m) | Error::Parse(m) | Error::Resource(m) | Error::Invariant(m) => m,
        }
    }

    /// The same message reclassified as a parse error.
    pub fn into_parse(self) -> Error {
        match self {
            Error::Parse(_) => self,
            other => Error::Parse(other.message().to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

pub(crate) fn parse_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}
