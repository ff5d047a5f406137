use thiserror::Error;

use crate::diagram::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input failed validation; the message names the violated invariant.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A diagram could not be read back into a partition.
    #[error("malformed diagram at {cell}: {reason}")]
    MalformedDiagram { cell: Cell, reason: String },

    /// One of the single-color staircases (or the empty partition).
    #[error("transformation not applicable to {0}")]
    ExceptionalPartition(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
