//! Logical entropy of partitions and of quantum observables.
//!
//! The crate is organised bottom-up: [`partition`] holds partitions and their
//! ditsets, [`logic`] a small formula language over partitions, [`classical`]
//! the logical and Shannon entropies of partitions under a distribution,
//! [`density`] density matrices and measurement, and [`quantum`] the entropies
//! of observables in states.

pub mod classical;
pub mod density;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod logic;
pub mod partition;
pub mod quantum;
pub mod random;
pub mod weight;

pub use error::{Error, Result};
pub use exec::Execution;
pub use partition::{Partition, PairSet, Universe};
pub use weight::Weight;
