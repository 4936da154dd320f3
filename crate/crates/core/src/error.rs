use thiserror::Error;

use crate::topology::Violation;

/// Errors raised by the soft-set, topology and function layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown point label `{0}`")]
    UnknownPoint(String),
    #[error("unknown parameter label `{0}`")]
    UnknownParameter(String),
    #[error("duplicate {kind} label `{label}`")]
    DuplicateLabel { kind: &'static str, label: String },
    #[error("the {0} list is empty")]
    EmptyLabels(&'static str),
    #[error("universe has {cells} cells, above the cap of {cap}")]
    TooManyCells { cells: usize, cap: usize },
    #[error("operands live in different universes")]
    UniverseMismatch,
    #[error("bit pattern {bits:#x} does not fit a {cells}-cell universe")]
    OutOfBounds { bits: u32, cells: usize },
    #[error("a subspace carrier must be non-null")]
    NullCarrier,
    #[error("soft set is not contained in the carrier of the space")]
    OutsideCarrier,
    #[error("not a soft topology: {0}")]
    NotATopology(Violation),
    #[error("map is not total: {0}")]
    PartialMap(String),
    #[error("{cells} cells exceed the exhaustive budget of {limit}; use sampled mode instead")]
    BudgetExceeded { cells: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
