//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the arcwave library.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument is outside the documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Kernel evaluated at coincident points.
    #[error("kernel singularity: {0}")]
    Singularity(String),

    /// Geometry violates the admissibility preconditions (vanishing tangent,
    /// touching arcs, zero separation).
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    /// The principal log branch was left; the complexified geometry lies
    /// outside the admissible tube.
    #[error("branch cut crossed: {0}")]
    BranchCut(String),

    /// A kernel sample was non-finite.
    #[error("invalid kernel: {0}")]
    InvalidKernel(String),

    /// Evaluation point too close to an arc for the smooth quadrature path.
    #[error("near-singular evaluation: {0}")]
    NearSingularEvaluation(String),

    /// Truncated Galerkin matrix is numerically singular.
    #[error("non-unique solution: {0}")]
    Nonuniqueness(String),

    /// Requested (m, alpha, s) triple violates the smoothness condition
    /// required for the operator mapping bounds.
    #[error("smoothness condition violated: {0}")]
    SmoothnessCondition(String),

    /// Problems reading or writing files / serialized payloads.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed JSON payload.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
