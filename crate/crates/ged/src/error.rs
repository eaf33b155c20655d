use thiserror::Error;

use crate::matching::MatchingViolations;

/// Errors reported by construction and algorithm entry points.
#[derive(Debug, Clone, Error)]
#[non_exhaustive]
pub enum GedError {
    #[error("point has no coordinates")]
    EmptyPoint,
    #[error("coordinate {index} is not finite")]
    NonFiniteCoordinate { index: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("input sequence is empty")]
    EmptyInput,
    #[error("sequences have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("gap penalty must be finite and positive, got {value}")]
    InvalidGapPenalty { value: f64 },
    #[error("band half-width must be at least 1, got {got}")]
    InvalidBand { got: usize },
    #[error("grid cell size must be finite and positive, got {value}")]
    InvalidDelta { value: f64 },
    #[error("grid dimension must be at least 1")]
    ZeroDimension,
    #[error("sequences were snapped on different grids")]
    GridMismatch,
    #[error("distance threshold must be finite and non-negative, got {value}")]
    InvalidThreshold { value: f64 },
    #[error("alpha must be finite and positive, got {value}")]
    InvalidAlpha { value: f64 },
    #[error("alpha is required for this algorithm")]
    AlphaRequired,
    #[error("repetition multiplier c must be finite and positive, got {value}")]
    InvalidC { value: f64 },
    #[error("input of size {n} exceeds the cap of {cap} for this debug helper")]
    SizeCap { n: usize, cap: usize },
    #[error(transparent)]
    InvalidMatching(#[from] MatchingViolations),
}
