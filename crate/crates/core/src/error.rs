use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Restricted X-check `x_check` and Z-check `z_check` overlap on an odd
    /// number of qubits.
    #[error("X-check {x_check} and Z-check {z_check} anticommute")]
    Commutation { x_check: usize, z_check: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("parse error at line {line}: {message}")]
    ParseAt { line: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("index {index} out of range for {len} qubits")]
    QubitIndex { index: usize, len: usize },

    #[error("permutation is not an involution")]
    NotInvolution,

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
