use num_complex::Complex64;

use super::exact::ExactScalar;
use super::expm::matrix_exp;
use super::matrix::{self, Matrix};
use super::scalar::Backend;
use crate::error::AlgebraError;

/// A matrix whose backend is only known at runtime (parsed input, CLI).
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Exact(Matrix<ExactScalar>),
    Float(Matrix<Complex64>),
}

impl AnyMatrix {
    pub fn backend(&self) -> Backend {
        match self {
            AnyMatrix::Exact(_) => Backend::Exact,
            AnyMatrix::Float(_) => Backend::Float,
        }
    }

    pub fn commutator(&self, other: &Self) -> Result<Self, AlgebraError> {
        match (self, other) {
            (AnyMatrix::Exact(a), AnyMatrix::Exact(b)) => Ok(AnyMatrix::Exact(matrix::commutator(a, b)?)),
            (AnyMatrix::Float(a), AnyMatrix::Float(b)) => Ok(AnyMatrix::Float(matrix::commutator(a, b)?)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn anticommutator(&self, other: &Self) -> Result<Self, AlgebraError> {
        match (self, other) {
            (AnyMatrix::Exact(a), AnyMatrix::Exact(b)) => {
                Ok(AnyMatrix::Exact(matrix::anticommutator(a, b)?))
            }
            (AnyMatrix::Float(a), AnyMatrix::Float(b)) => {
                Ok(AnyMatrix::Float(matrix::anticommutator(a, b)?))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    /// Exponentials leave the exact field, so only floats are accepted.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        match self {
            AnyMatrix::Exact(_) => Err(AlgebraError::ExactExponential),
            AnyMatrix::Float(m) => Ok(AnyMatrix::Float(matrix_exp(m)?)),
        }
    }

    pub fn to_c64(&self) -> Matrix<Complex64> {
        match self {
            AnyMatrix::Exact(m) => m.to_c64(),
            AnyMatrix::Float(m) => m.clone(),
        }
    }

    fn mismatch(&self, other: &Self) -> AlgebraError {
        AlgebraError::BackendMismatch {
            left: self.backend(),
            right: other.backend(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_backends_rejected() {
        let e = AnyMatrix::Exact(Matrix::identity(2));
        let f = AnyMatrix::Float(Matrix::identity(2));
        assert!(matches!(e.commutator(&f), Err(AlgebraError::BackendMismatch { .. })));
        assert!(matches!(f.anticommutator(&e), Err(AlgebraError::BackendMismatch { .. })));
        assert!(e.commutator(&e).is_ok());
    }

    #[test]
    fn exact_exponential_rejected() {
        let e = AnyMatrix::Exact(Matrix::identity(2));
        assert!(matches!(e.exp(), Err(AlgebraError::ExactExponential)));
        let f = AnyMatrix::Float(Matrix::zeros(2, 2));
        assert_eq!(f.exp().unwrap(), AnyMatrix::Float(Matrix::identity(2)));
    }
}
