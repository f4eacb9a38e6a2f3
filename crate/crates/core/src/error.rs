use thiserror::Error;

/// Errors raised by the codec, the census engine, the oracle and the report layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A graph index does not fit in 2^lambda - 1.
    #[error("index {index} out of range for n = {n} (must be < 2^{lambda})")]
    IndexOutOfRange { n: usize, lambda: usize, index: u128 },

    /// Malformed cycle notation.
    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    /// A run would exceed the configured time or memory bound.
    #[error("resource limit: {0}")]
    Resource(String),

    /// An internal identity failed; this is an engine bug, never a user error.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    /// The engine disagreed with the brute-force oracle.
    #[error("verification mismatch: {0}")]
    Verification(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::IndexOutOfRange { .. } | Error::Parse { .. } => 2,
            Error::Resource(_) => 3,
            Error::Consistency(_) => 4,
            Error::Verification(_) => 5,
            Error::Io(_) => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
