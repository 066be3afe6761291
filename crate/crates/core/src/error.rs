use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Which Lagrangian condition a spanning set failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LagrangianDefect {
    /// The span does not have half the ambient dimension.
    Rank { expected: usize, found: usize },
    /// Two spanning vectors pair nontrivially.
    Isotropy { first: usize, second: usize },
}

impl fmt::Display for LagrangianDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LagrangianDefect::Rank { expected, found } => {
                write!(f, "rank condition failed: span has dimension {found}, expected {expected}")
            }
            LagrangianDefect::Isotropy { first, second } => write!(
                f,
                "isotropy condition failed: vectors {first} and {second} pair nontrivially"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },

    #[error("{context}: matrix must be square, got {rows}x{cols}")]
    NotSquare { context: &'static str, rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not symplectic")]
    NotSymplectic,

    #[error("not a Lagrangian subspace: {0}")]
    NotLagrangian(LagrangianDefect),

    #[error("index {index} out of range (valid: {min}..={max})")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A result that the mathematics guarantees failed to hold. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by the caller's data rather than by this crate.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}
