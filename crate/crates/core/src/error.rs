use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: self-loop on vertex {label}")]
    SelfLoop { line: usize, label: u64 },

    #[error("line {line}: `{token}` is not a non-negative integer label")]
    InvalidToken { line: usize, token: String },

    #[error("line {line}: expected `u v` or a single vertex label, found {count} tokens")]
    TokenCount { line: usize, count: usize },

    #[error("vertex index {index} out of range for graph with {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("matrix format error at line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("not a valid neighbourhood matrix: {0}")]
    NotNeighborhoodMatrix(String),

    #[error("row {row} is not a neighbourhood matrix row: {reason}")]
    NotNeighborhoodRow { row: usize, reason: String },

    #[error("column {column}: summed {summed} but degree formula gives {formula}")]
    ColumnSumMismatch {
        column: usize,
        summed: i64,
        formula: i64,
    },

    #[error("matrix has dimension {matrix} but graph has {graph} vertices")]
    DimensionMismatch { matrix: usize, graph: usize },

    #[error("subset enumeration refused: {n} vertices exceeds the limit of {limit}")]
    EnumerationLimit { n: usize, limit: usize },
}
