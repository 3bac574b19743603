use thiserror::Error;

use crate::mpoly::PairVar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand index {index} out of range 1..={k}")]
    StrandOutOfRange { index: usize, k: usize },

    #[error("strand pair ({0},{0}) is degenerate, indices must differ")]
    EqualStrands(usize),

    #[error("need at least {min} strands, got {k}")]
    TooFewStrands { k: usize, min: usize },

    #[error("no value assigned to variable {0}")]
    MissingVariable(PairVar),

    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("matrix shape {rows}x{cols} is invalid here: {reason}")]
    Shape { rows: usize, cols: usize, reason: &'static str },

    #[error("modulus {0} rejected: must be a prime of at least 2^20")]
    BadPrime(u64),

    #[error("cofactor vector is identically zero (rows are dependent)")]
    ZeroCofactor,

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("letter {pair} is not on the triple ({r},{s},{t})")]
    LetterOutsideTriple { pair: PairVar, r: usize, s: usize, t: usize },

    #[error("integer overflow while collecting a braid word")]
    Overflow,

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("{0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
