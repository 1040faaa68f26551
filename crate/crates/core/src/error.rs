use thiserror::Error;

/// Errors raised by the algebraic operations and the document layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("cochain is not arity-homogeneous")]
    NotHomogeneous,

    #[error("slot {k} out of range for arity {arity}")]
    SlotOutOfRange { k: usize, arity: usize },

    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("semigroup membership of {0} is inconclusive within the search cap")]
    Inconclusive(String),

    #[error("cochain has no filtration index: {0}")]
    NoFiltrationIndex(String),

    #[error("block {bigrade} is inconsistent: the cochain is not a coboundary")]
    NotCoboundary { bigrade: String },

    #[error("order {order}: slot order {found} exceeds cap {cap}")]
    OrderCapExceeded { order: usize, found: u64, cap: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
