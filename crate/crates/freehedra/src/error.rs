//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("d∘d is nonzero in degree {degree}: entry ({row},{col}) = {value}")]
    NotAComplex {
        degree: i64,
        row: usize,
        col: usize,
        value: String,
    },
    #[error("face index out of range: eps={eps}, i={i}, type=({m},{n})")]
    FaceRange { eps: u8, i: usize, m: usize, n: usize },
    #[error("degeneracy index {i} out of range for cube dimension {n}")]
    DegeneracyRange { i: usize, n: usize },
    #[error("bound exceeded: {0}")]
    Bound(String),
    #[error("input is not 1-reduced: {0}")]
    NotOneReduced(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
