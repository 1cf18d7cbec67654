use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("hyperedge {edge:?} repeats vertex {vertex} (loops are not allowed)")]
    Loop { edge: Vec<usize>, vertex: usize },

    #[error("hyperedge {0:?} has fewer than two vertices")]
    EdgeTooSmall(Vec<usize>),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("distance is only defined between distinct vertices (got {0} twice)")]
    SameVertex(usize),

    #[error("the hypergraph must be connected")]
    Disconnected,

    #[error("the hypergraph must have at least one vertex")]
    Empty,

    #[error("{what} has length {got}, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        got: usize,
        expected: usize,
    },

    #[error("vector function must have at least one coordinate")]
    NoParts,

    #[error("part index {part} out of range 1..={p}")]
    PartOutOfRange { part: usize, p: usize },

    #[error("vertex {vertex}: budget sum {budget} is below its degree {degree}")]
    Hypothesis {
        vertex: usize,
        budget: usize,
        degree: usize,
    },

    #[error("the hypergraph is not strictly degenerate; stuck core {core:?}")]
    NotDegenerate { core: Vec<usize> },

    #[error("input has a cut vertex at {0}; expected a block")]
    NotABlock(usize),

    #[error("search budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("the given partition is not a valid f-partition")]
    InvalidPartition,

    #[error("{0}")]
    Precondition(String),

    /// A guarantee of the underlying theory failed to hold at runtime.
    /// Always an implementation defect.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
