use thiserror::Error;

/// Errors across parsing, construction, computation, and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph too large for graph6 encoding: n = {0} (limit 258047)")]
    GraphTooLarge(usize),
    #[error("edge list parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex label {label} out of range for n = {n}")]
    VertexOutOfRange { label: usize, n: usize },
    #[error("graph is not connected: vertex {0} cannot reach vertex {1}")]
    GraphNotConnected(usize, usize),
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
    #[error("power iteration did not converge within {0} sweeps")]
    IterationBudgetExceeded(usize),
    #[error("enumeration of order {n} exceeds the supported cap {cap}")]
    EnumerationTooLarge { n: usize, cap: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("symmetry search exceeded its node budget of {0}")]
    SymmetrySearchBudgetExceeded(u64),
    #[error("arithmetic overflow in exact computation")]
    ArithmeticOverflow,
    #[error("unknown index id: {0}")]
    UnknownIndexId(String),
    #[error("stream item {index}: {source}")]
    Stream {
        index: u64,
        #[source]
        source: Box<Error>,
    },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Wraps an error with the position of the offending item in a stream.
    pub fn at_stream_index(self, index: u64) -> Self {
        Error::Stream {
            index,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
