use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("lambda must have at least one entry")]
    EmptyShape,
    #[error("lambda and mu have different lengths ({lambda} vs {mu})")]
    LengthMismatch { lambda: usize, mu: usize },
    #[error("{which} must be nonincreasing, entry {index} exceeds the previous entry")]
    NotNonincreasing { which: &'static str, index: usize },
    #[error("lambda entries must be positive, entry {index} is 0")]
    NonPositiveLambda { index: usize },
    #[error("mu[{index}] = {mu} exceeds lambda[{index}] = {lambda}")]
    MuExceedsLambda { index: usize, lambda: u32, mu: u32 },
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("{what} has {got} elements, limit is {limit}")]
    TooLarge {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("graph has no edges")]
    Edgeless,
    #[error("diagram has no cells")]
    EmptyDiagram,
    #[error("diagram is not a Ferrers shape (mu must be zero and no row may be empty)")]
    SkewShape,
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("cannot parse vertex {0:?} (expected 3, x3 or y3)")]
    BadVertex(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not closed{0}")]
    NotClosed(String),
    #[error("labeling is not a permutation of the vertex set")]
    InvalidLabeling,
    #[error("no Betti tables given")]
    EmptyInput,
    #[error("Betti table is zero")]
    ZeroTable,
}
