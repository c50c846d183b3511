use thiserror::Error;

/// Errors raised by the exact and analytic evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("sequence has {len} elements but a difference of order {order} needs {}", order + 1)]
    InsufficientLength { len: usize, order: usize },

    #[error("table bounds exceeded: requested (n={n}, k={k}) but table holds n <= {max_n}, k <= {max_k}")]
    TableBounds {
        n: usize,
        k: usize,
        max_n: usize,
        max_k: usize,
    },

    #[error("Euler numbers are only served at even indices, got {0}")]
    OddEulerIndex(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot parse number {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
