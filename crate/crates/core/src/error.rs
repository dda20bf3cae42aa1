use thiserror::Error;

/// Errors produced by the partition, entropy, and density-matrix operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,

    #[error("element {element} is out of range for a universe of size {size}")]
    IndexOutOfRange { element: usize, size: usize },

    #[error("element {0} appears in more than one block")]
    OverlappingBlocks(usize),

    #[error("element {0} is not covered by any block")]
    UncoveredElement(usize),

    #[error("partition contains an empty block")]
    EmptyBlock,

    #[error("universe mismatch: {0} vs {1}")]
    UniverseMismatch(usize, usize),

    #[error("bound exceeded: {requested} > {limit}")]
    BoundExceeded { requested: u128, limit: u128 },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("event has zero probability")]
    ZeroProbabilityEvent,

    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),

    #[error("not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    TraceNotOne(f64),

    #[error("not positive semidefinite (min eigenvalue {0:e})")]
    NotPsd(f64),

    #[error("state vector is not normalized (norm² = {0})")]
    NotNormalized(f64),

    #[error("invalid projector set: {0}")]
    InvalidProjectorSet(String),

    #[error("eigenbasis columns are not orthonormal (deviation {0:e})")]
    NotOrthonormal(f64),

    #[error("observables do not commute (commutator max entry {0:e})")]
    NotCommuting(f64),

    #[error("internal inconsistency in {what}: residual {residual:e}")]
    InternalInconsistency { what: &'static str, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
