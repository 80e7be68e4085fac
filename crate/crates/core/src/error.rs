use thiserror::Error;

use crate::hypergraph::Violation;
use crate::scalar::Ring;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid hypergraph: {}", format_violations(.0))]
    InvalidHypergraph(Vec<Violation>),

    #[error("index {index} out of range for a basis of size {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: Ring, found: Ring },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("chain degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("coefficient {0} is not an integer")]
    NotIntegral(String),

    #[error("search limit of {limit} candidate subsets exceeded")]
    SearchLimitExceeded { limit: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
