use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid edge ({u}, {v}) for a graph of order {order}: {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        order: usize,
        reason: &'static str,
    },

    #[error("graph is disconnected; the distance matrix is undefined")]
    Disconnected,

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not equitable (worst block row-sum spread {spread:e} > tol {tol:e})")]
    NotEquitable { spread: f64, tol: f64 },

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps \
         (off-diagonal norm {off_norm:e}, target {target:e})"
    )]
    NoConvergence {
        sweeps: usize,
        off_norm: f64,
        target: f64,
    },

    #[error("multiset cardinality mismatch: {left} vs {right}")]
    CardinalityMismatch { left: usize, right: usize },

    #[error("Laplacian spectrum has no zero eigenvalue (smallest |value| = {smallest:e})")]
    MissingZeroEigenvalue { smallest: f64 },

    #[error("{0}")]
    Parse(String),
}
