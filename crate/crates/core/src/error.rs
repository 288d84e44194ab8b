use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    Dimension { rows: usize, cols: usize },

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("evaluation at a pole: {0}")]
    Pole(String),

    #[error("substitution leaves an irrational coefficient: {0}")]
    Irrational(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degree {n} is not admissible for partition {partition}")]
    Inadmissible { partition: String, n: i64 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("numerical check failed: {0}")]
    Numeric(String),

    #[error("structural failure: {0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;
