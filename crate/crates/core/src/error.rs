use thiserror::Error;

use crate::graph::VertexLabel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexLabel),

    #[error("unknown edge {0}-{1}")]
    UnknownEdge(VertexLabel, VertexLabel),

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction invariant broken: {0}")]
    ConstructionInvariant(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
