use thiserror::Error;

/// Errors raised by the algebraic constructions and deciders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient ring mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("ambient variable count {0} outside the supported range 1..=4")]
    UnsupportedVariableCount(usize),

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("denominator ideal is not Artinian")]
    NotArtinian,

    #[error("the zero module has no socle degree")]
    ZeroModule,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sequence is not strictly increasing")]
    NotAscending,

    #[error("sequence lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("series is not symmetric")]
    NotSymmetric,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at column {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
