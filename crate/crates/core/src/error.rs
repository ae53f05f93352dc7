use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not hermitian: {0}")]
    NotHermitian(String),

    #[error("matrix is singular: {0}")]
    Singular(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    #[error("constant polynomial has no discriminant")]
    ConstantPolynomial,

    #[error("characteristic polynomial has a nonreal coefficient")]
    NonrealCoefficient,

    #[error("entry ({row},{col}) has irrational modulus; Gershgorin radii must be rational")]
    IrrationalModulus { row: usize, col: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("closure cap {cap} exceeded at dimension {dim}")]
    CapExceeded { cap: usize, dim: usize },

    #[error("internal arithmetic fault: {0}")]
    InternalFault(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
