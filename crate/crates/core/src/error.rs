use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not allowed here (need p >= 2)")]
    InvalidModulus(u64),

    #[error("characteristic {0} is not supported (need 0 or an odd prime)")]
    InvalidCharacteristic(u64),

    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("cannot parse partition {0:?}")]
    Parse(String),

    #[error("partition {partition} has more than {limit} parts")]
    TooManyParts { partition: Partition, limit: usize },

    #[error("partition {partition} is not {p}-restricted")]
    NotRestricted { partition: Partition, p: u64 },

    #[error("partition {partition} is not {p}-regular")]
    NotRegular { partition: Partition, p: u64 },

    #[error("inconsistent Mullineux symbol: {0}")]
    InconsistentSymbol(String),

    #[error("invalid odd-root ordering: {0}")]
    InvalidOrdering(String),

    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),

    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("double index is not strict")]
    NotStrict,

    #[error("degree {d} exceeds the even rank {m}")]
    DegreeExceedsRank { d: usize, m: usize },

    #[error("tensor space of dimension {0} exceeds the dense-matrix guard")]
    TooLarge(usize),

    #[error("representation has dimension zero")]
    ZeroDimension,

    #[error("representation check failed: {0}")]
    InvalidRepresentation(String),
}
