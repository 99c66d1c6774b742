//! Scalar and dense-matrix arithmetic with an exact and a floating backend.

mod dynamic;
mod exact;
mod expm;
mod matrix;
mod scalar;

pub use dynamic::AnyMatrix;
pub use exact::{ExactScalar, RealSurd};
pub use expm::matrix_exp;
pub use matrix::{anticommutator, commutator, solve, Matrix};
pub use num_complex::Complex64;
pub use scalar::{Backend, Scalar};

/// Residual tolerances for the float backend.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Tolerances {
    /// Pure algebra: commutators, identities, linear solves.
    pub algebraic: f64,
    /// Anything downstream of a matrix exponential.
    pub exponential: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            algebraic: 1e-12,
            exponential: 1e-9,
        }
    }
}

impl Tolerances {
    /// Algebraic tolerance for a backend: exact checks demand a structural zero.
    pub fn algebraic_for(&self, backend: Backend) -> f64 {
        match backend {
            Backend::Exact => 0.0,
            Backend::Float => self.algebraic,
        }
    }
}

/// Largest entry modulus of `m`, the residual measure used throughout.
pub fn residual<S: Scalar>(m: &Matrix<S>) -> f64 {
    m.max_modulus()
}

/// Pointwise maximum over residuals, propagating NaN as failure.
pub fn max_residual(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |acc, v| if v.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(v) })
}
