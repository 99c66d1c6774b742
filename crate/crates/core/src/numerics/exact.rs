//! Exact complex arithmetic over the biquadratic field Q(√2, √3).
//!
//! A real element is stored as `a + b√2 + c√3 + d√6` with rational
//! coefficients; a complex element is a pair of those. Every number the
//! SU(3) construction needs (½, 1/(2√3), √(2/3), 1/√6, √(3/2)) lives here,
//! so algebraic residuals come out as structural zeros rather than rounding
//! noise.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

const SQRT2: f64 = std::f64::consts::SQRT_2;
const SQRT3: f64 = 1.732_050_807_568_877_2;
const SQRT6: f64 = 2.449_489_742_783_178;

/// Radicals spanning the field, in storage order.
const RADICALS: [u8; 4] = [1, 2, 3, 6];

/// `PRODUCT[i][j] = (k, m)` means basis_i · basis_j = m · basis_k.
const PRODUCT: [[(usize, i64); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, 2), (3, 1), (2, 2)],
    [(2, 1), (3, 1), (0, 3), (1, 3)],
    [(3, 1), (2, 2), (1, 3), (0, 6)],
];

/// Real element of Q(√2, √3).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RealSurd {
    coeffs: [BigRational; 4],
}

impl RealSurd {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(1, 1)
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Self::from_coeffs([
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ])
    }

    /// `coeff · √radical` for radical ∈ {1, 2, 3, 6}.
    pub fn term(coeff: BigRational, radical: u8) -> Result<Self, AlgebraError> {
        let slot = RADICALS
            .iter()
            .position(|&r| r == radical)
            .ok_or_else(|| AlgebraError::Parse(format!("√{radical} is not in Q(√2,√3)")))?;
        let mut coeffs: [BigRational; 4] = Default::default();
        coeffs[slot] = coeff;
        Ok(Self { coeffs })
    }

    pub fn sqrt2() -> Self {
        Self::term(BigRational::one(), 2).expect("√2 is a basis radical")
    }

    pub fn sqrt3() -> Self {
        Self::term(BigRational::one(), 3).expect("√3 is a basis radical")
    }

    pub fn from_coeffs(coeffs: [BigRational; 4]) -> Self {
        // BigRational::new already normalizes to lowest terms with positive denominator
        Self { coeffs }
    }

    /// Coefficients of (1, √2, √3, √6).
    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when the value is rational (no radical components).
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (o, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !r.is_zero() {
                *o += r;
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (o, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !r.is_zero() {
                *o -= r;
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.clone().map(|c| -c),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (slot, mult) = PRODUCT[i][j];
                let mut p = a * b;
                if mult != 1 {
                    p *= BigRational::from_integer(BigInt::from(mult));
                }
                out.coeffs[slot] += p;
            }
        }
        out
    }

    /// Conjugate under √2 → −√2.
    fn conj_sqrt2(&self) -> Self {
        let [a, b, c, d] = self.coeffs.clone();
        Self::from_coeffs([a, -b, c, -d])
    }

    /// Conjugate under √3 → −√3.
    fn conj_sqrt3(&self) -> Self {
        let [a, b, c, d] = self.coeffs.clone();
        Self::from_coeffs([a, b, -c, -d])
    }

    /// Multiplicative inverse via the two Galois conjugations.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // x · σ₂(x) lies in Q(√3); times its √3-conjugate lands in Q.
        let s2 = self.conj_sqrt2();
        let n1 = self.mul(&s2);
        let s3 = n1.conj_sqrt3();
        let n2 = n1.mul(&s3);
        debug_assert!(n2.is_rational());
        let inv_norm = n2.coeffs[0].recip();
        let numer = s2.mul(&s3);
        Some(Self {
            coeffs: numer.coeffs.map(|c| c * &inv_norm),
        })
    }

    pub fn to_f64(&self) -> f64 {
        let w = [1.0, SQRT2, SQRT3, SQRT6];
        self.coeffs
            .iter()
            .zip(w)
            .map(|(c, w)| c.to_f64().unwrap_or(f64::NAN) * w)
            .sum()
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.clone().map(|c| c * r),
        }
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for RealSurd {
    /// Renders as signed terms, e.g. `1/2+1/6√6` or `-√3`; zero is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (c, rad) in self.coeffs.iter().zip(RADICALS) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let abs = c.abs();
            if rad == 1 {
                f.write_str(&fmt_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    f.write_str(&fmt_rational(&abs))?;
                }
                write!(f, "√{rad}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for RealSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RealSurd {
    type Err = AlgebraError;

    /// Inverse of `Display`: a sequence of signed terms `[±][p[/q]][√r]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse(format!("malformed exact value {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut out = Self::zero();
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        while pos < chars.len() {
            let mut sign = 1;
            if chars[pos] == '+' || chars[pos] == '-' {
                if chars[pos] == '-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(bad());
            }
            let start = pos;
            while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
                pos += 1;
            }
            let coeff_str: String = chars[start..pos].iter().collect();
            let mut radical = 1u8;
            if pos < chars.len() && chars[pos] == '√' {
                pos += 1;
                let d = chars.get(pos).and_then(|c| c.to_digit(10)).ok_or_else(bad)?;
                radical = d as u8;
                pos += 1;
            }
            let coeff = if coeff_str.is_empty() {
                if radical == 1 {
                    return Err(bad());
                }
                BigRational::one()
            } else {
                let mut parts = coeff_str.splitn(2, '/');
                let n: BigInt = parts.next().unwrap_or("").parse().map_err(|_| bad())?;
                let d: BigInt = match parts.next() {
                    Some(d) => d.parse().map_err(|_| bad())?,
                    None => BigInt::one(),
                };
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            };
            let coeff = if sign < 0 { -coeff } else { coeff };
            out = out.add(&Self::term(coeff, radical)?);
        }
        Ok(out)
    }
}

/// Complex element of Q(√2, √3)(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    pub re: RealSurd,
    pub im: RealSurd,
}

impl ExactScalar {
    pub fn new(re: RealSurd, im: RealSurd) -> Self {
        Self { re, im }
    }

    pub fn real(re: RealSurd) -> Self {
        Self {
            re,
            im: RealSurd::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(self.re.add(&rhs.re), self.im.add(&rhs.im))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(self.re.sub(&rhs.re), self.im.sub(&rhs.im))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::real(self.re.mul(&rhs.re));
        }
        let re = self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im));
        let im = self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re));
        Self::new(re, im)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg())
    }

    pub fn recip(&self) -> Option<Self> {
        let norm = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let inv = norm.recip()?;
        Some(Self::new(self.re.mul(&inv), self.im.neg().mul(&inv)))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "({})i", self.im),
            (false, false) => write!(f, "{} + ({})i", self.re, self.im),
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> RealSurd {
        RealSurd::rational(n, d)
    }

    #[test]
    fn radical_products() {
        let s2 = RealSurd::sqrt2();
        let s3 = RealSurd::sqrt3();
        assert_eq!(s2.mul(&s2), r(2, 1));
        assert_eq!(s3.mul(&s3), r(3, 1));
        let s6 = s2.mul(&s3);
        assert_eq!(s6.mul(&s6), r(6, 1));
        assert_eq!(s6.mul(&s3), s2.mul(&r(3, 1)));
        assert_eq!(s6.mul(&s2), s3.mul(&r(2, 1)));
    }

    #[test]
    fn reciprocal_of_mixed_surd() {
        let x: RealSurd = "1/2+3√2-2/5√3+√6".parse().unwrap();
        let inv = x.recip().unwrap();
        assert_eq!(x.mul(&inv), RealSurd::one());
        assert!(RealSurd::zero().recip().is_none());
    }

    #[test]
    fn complex_reciprocal() {
        let z = ExactScalar::new("1/3√3".parse().unwrap(), "-2+√6".parse().unwrap());
        let w = z.recip().unwrap();
        assert_eq!(z.mul(&w), ExactScalar::real(RealSurd::one()));
    }

    #[test]
    fn lowest_terms() {
        let x = r(6, -4);
        assert_eq!(x.coeffs()[0].numer(), &BigInt::from(-3));
        assert_eq!(x.coeffs()[0].denom(), &BigInt::from(2));
    }

    #[test]
    fn display_and_parse() {
        let cases = ["0", "1/2", "-√3", "1/2+1/6√6", "-1/2√3", "2√2-3/7√6", "5"];
        for c in cases {
            let x: RealSurd = c.parse().unwrap();
            assert_eq!(x.to_string(), c);
        }
        assert!("1/0".parse::<RealSurd>().is_err());
        assert!("√5".parse::<RealSurd>().is_err());
        assert!("abc".parse::<RealSurd>().is_err());
        assert!("".parse::<RealSurd>().is_err());
    }

    #[test]
    fn float_value() {
        let x: RealSurd = "1/2+1/6√6".parse().unwrap();
        assert!((x.to_f64() - (0.5 + 6f64.sqrt() / 6.0)).abs() < 1e-15);
    }
}
