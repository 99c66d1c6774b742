use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::exact::{ExactScalar, RealSurd};

/// Which arithmetic a value is computed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

impl std::str::FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(format!("unknown backend {other:?} (expected exact or float)")),
        }
    }
}

/// Complex scalar field shared by both backends.
///
/// Arithmetic takes references so the exact backend does not clone
/// big rationals on every operation.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn imag_unit() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn sqrt2() -> Self;
    fn sqrt3() -> Self;

    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn conj(&self) -> Self;
    fn real_part(&self) -> Self;
    fn recip(&self) -> Option<Self>;

    /// Structural zero for the exact backend, `== 0.0` for floats.
    fn is_zero(&self) -> bool;
    fn to_c64(&self) -> Complex64;

    /// |z| as f64. Never returns 0 for a nonzero exact value.
    fn modulus(&self) -> f64;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn sqrt6() -> Self {
        Self::sqrt2().times(&Self::sqrt3())
    }

    /// √(2/3) = √6/3
    fn sqrt_two_thirds() -> Self {
        Self::sqrt6().times(&Self::from_ratio(1, 3))
    }

    /// √(3/2) = √6/2
    fn sqrt_three_halves() -> Self {
        Self::sqrt6().times(&Self::from_ratio(1, 2))
    }

    /// 1/√6 = √6/6
    fn inv_sqrt6() -> Self {
        Self::sqrt6().times(&Self::from_ratio(1, 6))
    }

    fn times_i(&self) -> Self {
        self.times(&Self::imag_unit())
    }
}

impl Scalar for ExactScalar {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        ExactScalar::default()
    }
    fn one() -> Self {
        ExactScalar::real(RealSurd::one())
    }
    fn imag_unit() -> Self {
        ExactScalar::new(RealSurd::zero(), RealSurd::one())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        ExactScalar::real(RealSurd::rational(num, den))
    }
    fn sqrt2() -> Self {
        ExactScalar::real(RealSurd::sqrt2())
    }
    fn sqrt3() -> Self {
        ExactScalar::real(RealSurd::sqrt3())
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn conj(&self) -> Self {
        ExactScalar::conj(self)
    }
    fn real_part(&self) -> Self {
        ExactScalar::real(self.re.clone())
    }
    fn recip(&self) -> Option<Self> {
        ExactScalar::recip(self)
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn to_c64(&self) -> Complex64 {
        ExactScalar::to_c64(self)
    }
    fn modulus(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.to_c64().norm().max(f64::MIN_POSITIVE)
        }
    }
}

impl Scalar for Complex64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn sqrt2() -> Self {
        Complex64::new(std::f64::consts::SQRT_2, 0.0)
    }
    fn sqrt3() -> Self {
        Complex64::new(3f64.sqrt(), 0.0)
    }
    fn sqrt6() -> Self {
        Complex64::new(6f64.sqrt(), 0.0)
    }
    fn sqrt_two_thirds() -> Self {
        Complex64::new((2.0f64 / 3.0).sqrt(), 0.0)
    }
    fn sqrt_three_halves() -> Self {
        Complex64::new(1.5f64.sqrt(), 0.0)
    }
    fn inv_sqrt6() -> Self {
        Complex64::new(1.0 / 6f64.sqrt(), 0.0)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn real_part(&self) -> Self {
        Complex64::new(self.re, 0.0)
    }
    fn recip(&self) -> Option<Self> {
        if *self == Complex64::new(0.0, 0.0) {
            None
        } else {
            Some(self.inv())
        }
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
}
