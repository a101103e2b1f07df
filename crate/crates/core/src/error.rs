use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid radial index (n={n}, m={m}): {reason}")]
    InvalidIndex { n: i64, m: i64, reason: &'static str },

    #[error("degree {n} exceeds the supported maximum of {max}")]
    DegreeTooLarge { n: u32, max: u32 },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    #[error("bandwidth {requested} exceeds the limit of {limit}")]
    BandwidthExceeded { requested: usize, limit: usize },

    #[error("unsupported commutator pair ({0}, {1}); supported: {2}")]
    UnsupportedPair(String, String, String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("image error: {0}")]
    Image(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
