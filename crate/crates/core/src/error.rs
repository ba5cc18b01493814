use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension must be at least {min}, got {d}")]
    InvalidDimension { d: usize, min: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid multi-index {index}: {reason}")]
    InvalidIndex { index: String, reason: String },

    #[error("invalid angle: {0}")]
    InvalidAngle(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("point too close to a coordinate axis singularity (sin θ = {sin_theta:e})")]
    AxisSingularity { sin_theta: f64 },

    #[error("singular evaluation: {0}")]
    SingularEvaluation(String),

    #[error("singular system for {index}: determinant {det:e}")]
    SingularSystem { index: String, det: f64 },

    #[error("expansion does not converge: |x| = |y| = {radius}")]
    NonConvergent { radius: f64 },
}
