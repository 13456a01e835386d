use thiserror::Error;

use crate::graph::MAX_VERTICES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("{0} vertices exceeds the capacity of {MAX_VERTICES}")]
    Capacity(usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("{what} guard exceeded: n = {n}, limit is {limit}")]
    Guard {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not connected")]
    NotConnected,

    #[error("k={k} unsupported by {what} (requires k >= {min})")]
    DegreeTooSmall {
        what: &'static str,
        k: usize,
        min: usize,
    },

    #[error("excluded graph K_{{k,k}} (k = {0})")]
    ExcludedCompleteBipartite(usize),

    #[error("vertex set is not dominating")]
    NotDominating,

    #[error("vertex set is not independent")]
    NotIndependent,

    #[error("vertex set is not an independent dominating set")]
    NotIndependentDominating,

    #[error("rejection budget exhausted after {0} attempts")]
    RejectionBudget(usize),

    #[error("unknown bound `{0}`")]
    UnknownBound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
