use alloc::string::String;
use core::fmt;

/// Failures reported by the core operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument outside the operation's domain, e.g. `k > n`.
    Domain(String),
    /// A text encoding that could not be parsed.
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
