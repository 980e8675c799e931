//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("ideal is not admissible: no nilpotency bound found below path length {cap}")]
    NonAdmissible { cap: usize },

    #[error("algebra shape: {0}")]
    Shape(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("module is not Gorenstein projective: {0}")]
    NotGorensteinProjective(String),

    #[error("projective input: {0}")]
    Projective(String),

    #[error("injective input: {0}")]
    Injective(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("computation failed: {0}")]
    Degenerate(String),

    #[error("serialization: {0}")]
    Serde(String),
}

pub type Result<T> = std::result::Result<T, Error>;
