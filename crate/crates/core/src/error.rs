use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in fixed-width arithmetic")]
    Overflow,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not a chain complex: boundary composite nonzero at position {position}")]
    NotAComplex { position: usize },
    #[error("boundary at position {position} does not respect relations")]
    IllDefinedMap { position: usize },
    #[error("base ring mismatch: {0}")]
    BaseMismatch(String),
    #[error("lie bracket check failed: {0}")]
    BracketCheck(String),
    #[error("complex is not acyclic: homology at position {position} is {homology}")]
    NotAcyclic { position: usize, homology: String },
    #[error("exactness failure at weight {weight}, position {position}: {homology}")]
    Exactness {
        weight: usize,
        position: usize,
        homology: String,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
