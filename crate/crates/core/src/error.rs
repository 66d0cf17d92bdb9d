use thiserror::Error;

use crate::kernel::CellRef;

/// Errors produced while building, transforming or reading cell complexes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A cell violates the structural rules of an incidence complex.
    #[error("malformed complex at {cell}: {reason}")]
    Malformed { cell: CellRef, reason: String },

    /// The operation needs a closed manifold complex.
    #[error("complex is not closed: {0}")]
    NotClosed(String),

    /// A flag system could not be turned back into a regular complex.
    #[error("non-regular complex: {0}")]
    NonRegular(String),

    /// Flag system adjacencies are inconsistent.
    #[error("invalid flag system: {0}")]
    InvalidFlags(String),

    /// A quotient or gluing did not produce a manifold.
    #[error("not a manifold: {0}")]
    NotManifold(String),

    /// A supplied map is not a combinatorial isomorphism or automorphism.
    #[error("not an isomorphism: {0}")]
    NotIsomorphism(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A merge pass or floor construction failed.
    #[error("construction failed: {0}")]
    Construction(String),

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn malformed(rank: usize, id: usize, reason: impl Into<String>) -> Self {
        Error::Malformed {
            cell: CellRef::new(rank, id),
            reason: reason.into(),
        }
    }
}
