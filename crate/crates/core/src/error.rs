use thiserror::Error;

/// Errors produced by graph construction, analysis and (de)serialization.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty record set")]
    EmptyRecordSet,
    #[error("empty graph")]
    EmptyGraph,
    #[error("empty label")]
    EmptyLabel,
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("self-loop rejected: {0}")]
    SelfLoop(String),
    #[error("parallel edge rejected: {0}")]
    ParallelEdge(String),
    #[error("edge weight must be at least 1: {0}")]
    ZeroWeight(String),
    #[error("degenerate graph: {0}")]
    DegenerateGraph(String),
    #[error("{operation} requires a connected graph; analyze per component")]
    Disconnected { operation: &'static str },
    #[error("edgeless graph")]
    EdgelessGraph,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("missing column {0:?}")]
    MissingColumn(String),
    #[error("line {line}: {message}")]
    MalformedRow { line: u64, message: String },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
