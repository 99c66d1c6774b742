use thiserror::Error;

use crate::numerics::Backend;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("expected a square matrix, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("backend mismatch: {left} vs {right}")]
    BackendMismatch { left: Backend, right: Backend },
    #[error("matrix exponential requires the float backend; exponentials leave the exact field")]
    ExactExponential,
    #[error("non-finite matrix entries")]
    NonFinite,
    #[error("singular linear system")]
    Singular,
    #[error("generators fail the normalization tr(J^i J^j) = δ^ij/2 (residual {0:e})")]
    NotNormalized(f64),
    #[error("commutator not in the momentum span (residual {0:e})")]
    NotInSpan(f64),
    #[error("alpha must be nonzero: the branch solutions assume α ≠ 0")]
    ZeroAlpha,
    #[error("transformation is not real: largest imaginary part {0:e}")]
    NonReal(f64),
    #[error("generator set lacks {0} matrices")]
    MissingGenerators(&'static str),
    #[error("index {0} out of range {1}")]
    Index(usize, &'static str),
    #[error("parse error: {0}")]
    Parse(String),
}
