use thiserror::Error;

/// Errors raised by code construction, distance computation, encoding and decoding.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("invalid code parameters: {0}")]
    InvalidParams(String),

    #[error("length {got} does not match the expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("vector is not in the row space of the generator")]
    NotInRowSpace,

    #[error("dimension {dim} exceeds the enumeration budget {budget}")]
    BudgetExceeded { dim: usize, budget: usize },

    #[error("decoder requires a frozen set built for kernel {expected}, got {got}")]
    KernelMismatch { expected: String, got: String },

    #[error("received word is inconsistent with every codeword")]
    InconsistentReceived,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
