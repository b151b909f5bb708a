use thiserror::Error;

use crate::graph::PartitionKind;
use crate::utility::UtilityModel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{model} utilities need {expected} groups, but the partition has {got} groups")]
    ModelMismatch { model: UtilityModel, expected: PartitionKind, got: PartitionKind },

    #[error("{model} utilities are undefined on a graph with maximum degree 0")]
    DegreeZero { model: UtilityModel },

    #[error("graph has {vertices} vertices; exact enumeration is limited to {limit}")]
    TooLarge { vertices: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("group oracle failed on group {group}: {reason}")]
    Oracle { group: usize, reason: String },

    #[error("maximin certificate mismatch: primal {primal}, dual {dual}")]
    Certificate { primal: String, dual: String },
}
