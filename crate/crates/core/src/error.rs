use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid simple type {letter}{rank}: {reason}")]
    InvalidType {
        letter: char,
        rank: usize,
        reason: String,
    },
    #[error("weight {weight:?} does not match rank {rank}")]
    WeightShape { weight: Vec<i64>, rank: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("the zero weight has no minimal orbit")]
    ZeroWeight,
    #[error("{0} is simply laced and has a single root length")]
    SimplyLaced(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("partition {partition:?} is not valid for {algebra}: {reason}")]
    InvalidPartition {
        algebra: String,
        partition: Vec<usize>,
        reason: String,
    },
    #[error("no curated orbit data for {0}")]
    NoData(String),
    #[error("catalog {source_name} line {line}: {reason}")]
    Catalog {
        source_name: String,
        line: usize,
        reason: String,
    },
    #[error("module dimension {weyl_dim} exceeds the cap {cap}")]
    DimensionCap { weyl_dim: u128, cap: usize },
    #[error("pair {0} is not supported here: {1}")]
    Unsupported(String, String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("soundness failure: {0}")]
    Soundness(String),
}

pub type Result<T> = std::result::Result<T, Error>;
