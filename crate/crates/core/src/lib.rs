//! Two-color partitions with even parts blue, odd overpartitions, and the
//! two-modular diagram involution that splits `E(n)` evenly by parity.
//!
//! * [`partition`]: value types, enumerators and parity classes.
//! * [`glaisher`]: the odd-overpartition bijection.
//! * [`diagram`]: two-modular diagrams and their strip edits.
//! * [`involution`]: the parity-flipping transformation.
//! * [`series`] and [`verify`]: independent counting oracle and exhaustive audits.

pub mod diagram;
pub mod error;
pub mod exec;
pub mod glaisher;
pub mod involution;
pub mod partition;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
pub use partition::{OddOverpartition, Part, TwoColorPartition};
