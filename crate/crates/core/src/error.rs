use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {n} outside supported range {min}..={max}")]
    InvalidRank { n: usize, min: usize, max: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not a root: {0}")]
    InvalidRoot(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weight is not integral: {0}")]
    NonIntegral(String),
    #[error("weight is not dominant: {0}")]
    NonDominant(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown reduction point `{0}`")]
    UnknownPoint(String),
    #[error("unknown catalog vector `{0}`")]
    UnknownVector(String),
    #[error("interpolation inconsistent with degree bound {0}")]
    Interpolation(usize),
    #[error("anomaly: {0}")]
    Anomaly(String),
}

pub type Result<T> = std::result::Result<T, Error>;
