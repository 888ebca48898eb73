use thiserror::Error;

use crate::bouquets::{BouquetViolation, SsdViolation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },

    /// `subset` and `superset` are positions in the input edge list.
    #[error("edges are not an antichain: edge {subset} is contained in edge {superset}")]
    NotAntichain { subset: usize, superset: usize },

    #[error("edge on line {subset_line} is contained in edge on line {superset_line}")]
    NotAntichainAt { subset_line: usize, superset_line: usize },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("edge index {index} out of range (hypergraph has {len} edges)")]
    BadEdgeIndex { index: usize, len: usize },

    #[error("bouquet lists {edges} edges but {flowers} flowers")]
    LengthMismatch { edges: usize, flowers: usize },

    #[error("not a minimal vertex cover: {0}")]
    NotMinimalCover(String),

    #[error("bouquet {index} is invalid: {violation}")]
    InvalidBouquet { index: usize, violation: BouquetViolation },

    #[error("bouquet set is not semi-strongly disjoint: {0}")]
    NotSemiStronglyDisjoint(SsdViolation),

    #[error("size guard: {what} is {actual}, limit {limit}")]
    SizeGuard { what: &'static str, actual: usize, limit: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("bad parameters: {0}")]
    BadParams(String),
}

impl Error {
    pub fn is_size_guard(&self) -> bool {
        matches!(self, Error::SizeGuard { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
