use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{what} is {got}, above the supported limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("subset size k = {k} out of range 2..={n}")]
    SubsetSizeOutOfRange { k: usize, n: usize },
    #[error("{family}: {reason}")]
    ParameterOutOfRange {
        family: &'static str,
        reason: String,
    },
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    ColoringLength { expected: usize, got: usize },
    #[error("colors[{index}] = {color} lies outside 1..={palette}")]
    InvalidColor {
        index: usize,
        color: u32,
        palette: u32,
    },
    #[error("supplied wheel coloring is not 3-rainbow: subset {0:?} has no rainbow tree")]
    InvalidWheelColoring(Vec<usize>),
    #[error("family {0} has no stated edge-count formula")]
    NoFormula(&'static str),
    #[error("t(n,k,l) increases from l = {} to l = {l}", l - 1)]
    NotMonotone { l: usize },
    #[error("search budget of {0} nodes exhausted before a decision was reached")]
    ResourceCap(u64),
}
