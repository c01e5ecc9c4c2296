//! Shared error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),

    #[error("spec mismatch: operands belong to different triple systems")]
    SpecMismatch,

    #[error("coordinate vector has length {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("element is not a primitive tripotent: {0}")]
    NotPrimitiveTripotent(String),

    #[error("point lies outside the bounded domain")]
    OutOfDomain,

    #[error("point lies outside the declared source region of the map")]
    OutsideSourceRegion,

    #[error("spectral decomposition failed internal validation: {0}")]
    InternalConsistency(String),

    #[error("partition {0} does not fit the {1}x{2} box")]
    PartitionOutsideBox(String, i64, i64),

    #[error("search exhausted without a nonvanishing invariant")]
    SearchExhausted,

    #[error("malformed insertion pattern: {0}")]
    MalformedInsertion(String),

    #[error("unknown catalog factor: {0}")]
    UnknownFactor(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
