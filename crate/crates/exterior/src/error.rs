//! Error types for pointwise operations.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ExteriorError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("operation needs degree >= 1")]
    DegreeTooLow,

    #[error("bilinear form is not positive-definite")]
    NotPositiveDefinite,

    #[error("bilinear form is degenerate")]
    Degenerate,

    #[error("volume normalization is not exactly representable in this scalar field")]
    InexactRoot,

    #[error("not a positive three-form: {reason}")]
    NotPositiveG2 { reason: String },

    #[error("three-form is not stable of complex type (lambda = {lambda} >= 0)")]
    NotStableComplex { lambda: f64 },

    #[error("SU(3) validation failed: {0}")]
    InvalidSu3(String),

    #[error("decomposition direction is degenerate: |z-component| = {magnitude} too small")]
    DegenerateDirection { magnitude: f64 },
}
