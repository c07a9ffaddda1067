use thiserror::Error;

/// Errors raised by the algebra kernel and the identity checkers built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible rings: {0}")]
    IncompatibleRing(String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("not a permutation of [{n}]: {images:?}")]
    NotAPermutation { n: usize, images: Vec<usize> },

    #[error("{name} = {value} is out of range ({allowed})")]
    OutOfRange {
        name: &'static str,
        value: i64,
        allowed: String,
    },

    #[error("column {column} must be in the negative-kill set")]
    MissingKill { column: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("element is not multilinear: {0}")]
    NotMultilinear(String),

    #[error("element is not antisymmetric")]
    NotAntisymmetric,

    #[error(
        "set is not invariant under the right action: {beta} acted on by {sigma} leaves the set"
    )]
    NotInvariant { beta: String, sigma: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
