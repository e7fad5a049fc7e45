use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty universe")]
    EmptyUniverse,
    #[error("no partitions")]
    NoPartitions,
    #[error("universe mismatch: expected {expected} elements, got {found}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("element index {index} out of range for universe of {n}")]
    OutOfRange { index: usize, n: usize },
    #[error("pair ({0}, {0}) is not a pair of distinct elements")]
    DegeneratePair(usize),
    #[error("too many input partitions: {0} (at most {max})", max = u16::MAX)]
    TooManyPartitions(usize),
    #[error("enumeration budget exceeded: {needed} candidates, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("bisection cap exceeded: {vertices} vertices, cap {cap}")]
    BisectionCapExceeded { vertices: usize, cap: usize },
    #[error("empty context")]
    EmptyContext,
    #[error("invalid block index {block} (assignment has {blocks} blocks)")]
    InvalidBlock { block: usize, blocks: usize },
    #[error("sample not a subset: {0}")]
    SampleNotSubset(String),
    #[error("empty sample")]
    EmptySample,
    #[error("MIN-BIS requires even n (got {0})")]
    OddVertexCount(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unbalanced bisection: {true_count} of {n} vertices on one side")]
    UnbalancedBisection { true_count: usize, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
