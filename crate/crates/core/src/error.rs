use thiserror::Error;

use crate::tree::EdgeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("duplicate edge name `{0}`")]
    DuplicateEdge(EdgeId),
    #[error("invalid edge name `{0}`")]
    InvalidName(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(EdgeId),
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("edge `{0}` is not a leaf")]
    NotLeaf(EdgeId),
    #[error("edge `{0}` is not an inner edge")]
    NotInner(EdgeId),
    #[error("grafting requires the upper tree to be rooted at `{expected}`, found `{found}`")]
    GraftRoot { expected: EdgeId, found: EdgeId },
    #[error("composition boundary mismatch: {0}")]
    Boundary(String),
    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),
    #[error("invalid simplicial operator: {0}")]
    InvalidOperator(String),
    #[error("level mismatch: operator lands in [{operator}], simplex has top level {simplex}")]
    LevelMismatch { operator: usize, simplex: usize },
    #[error("invalid pointed map: {0}")]
    InvalidPointedMap(String),
    #[error("invalid operad: {0}")]
    InvalidOperad(String),
    #[error("object/morphism mismatch: {0}")]
    Mismatch(String),
    #[error("malformed bracketing: {0}")]
    Bracketing(String),
    #[error("empty shuffle subset")]
    EmptySubset,
    #[error("recoloring is not surjective: color `{0}` is missed")]
    NotSurjective(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
