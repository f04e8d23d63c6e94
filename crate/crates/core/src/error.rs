use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported point: {0}")]
    UnsupportedPoint(String),
    #[error("no rational map A satisfies A o X = X o B")]
    NotSemiconjugate,
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("the symmetry group is infinite (map is mu-equivalent to z^d)")]
    InfiniteGroup,
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unresolved: {0}")]
    Unresolved(String),
}

pub type Result<T> = std::result::Result<T, Error>;
