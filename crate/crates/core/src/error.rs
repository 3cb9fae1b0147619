use thiserror::Error;

/// Errors raised by graph construction, parsing and invariant computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list (line {line}): {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("not a tree")]
    NotATree,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("exhaustive bound exceeded: n = {n} > {max}")]
    ExhaustiveBound { n: usize, max: usize },

    #[error("sampling stalled after {rejections} consecutive rejections (n = {n})")]
    SamplingStalled { n: usize, rejections: u64 },

    #[error("({u}, {v}) is not a diametrical pair")]
    NotDiametrical { u: usize, v: usize },

    #[error("({u}, {v}) is not a universally diametrical pair")]
    NotUdPair { u: usize, v: usize },

    #[error("invalid spec {spec:?}: {msg}")]
    Spec { spec: String, msg: String },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("{theorem}: bookkeeping identity violated: {detail}")]
    Identity { theorem: &'static str, detail: String },

    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn spec_err(spec: &str, msg: impl Into<String>) -> Error {
    Error::Spec {
        spec: spec.to_string(),
        msg: msg.into(),
    }
}
