use std::io;

use thiserror::Error;

/// Errors produced by graph construction, the operator routines and the
/// partition machinery.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex `{label}`")]
    SelfLoop { line: usize, label: String },

    #[error("negative weight {weight} on edge ({u}, {v})")]
    NegativeWeight { u: String, v: String, weight: f64 },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported graph: {0}")]
    Unsupported(&'static str),

    #[error("{what} = {requested} exceeds the cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("vertex {0} is not dominated")]
    NotDominating(usize),

    #[error("vertex {0} is not clustered and cannot be a dominator")]
    DominatorNotClustered(usize),

    #[error("traversing vertex {0} has no route to an ego block")]
    Assignment(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
