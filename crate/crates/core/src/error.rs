use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {n} out of range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge ({u}, {v}) is not present")]
    EdgeNotPresent { u: usize, v: usize },
    #[error("product of orders {0} x {1} exceeds the 62-vertex limit")]
    ProductTooLarge(usize, usize),
    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
    #[error("invalid graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("no mixed resolving set found in the pruned search space")]
    SearchExhausted,
}

pub type Result<T> = std::result::Result<T, Error>;
