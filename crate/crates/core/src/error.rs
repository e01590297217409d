use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("partition {partition} has no part equal to {part}")]
    NoSuchPart { partition: Partition, part: usize },

    #[error("invalid part {0}: parts must be positive")]
    InvalidPart(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    /// An exhaustive expansion was refused because it exceeds the configured bound.
    #[error("resource guard: {what} = {value} exceeds the configured limit {limit}")]
    ResourceGuard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("element is not central: cycle type {cycle_type} carries both {first} and {second}")]
    NotCentral {
        cycle_type: Partition,
        first: String,
        second: String,
    },

    #[error("element is not bi-invariant: coset type {coset_type} carries both {first} and {second}")]
    NotBiInvariant {
        coset_type: Partition,
        first: String,
        second: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate Gram-Schmidt pivot at alpha = {alpha}")]
    DegenerateGram { alpha: String },

    #[error("theta matrix is singular at alpha = {alpha}")]
    SingularTheta { alpha: String },

    #[error("cache file: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
