use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::scalar::Scalar;
use crate::error::AlgebraError;

/// Dense row-major complex matrix over one backend.
///
/// Values are immutable; every operation returns a fresh matrix. The
/// operator impls panic on shape mismatch (as `nalgebra` does); the
/// checked entry points are [`commutator`], [`anticommutator`] and
/// [`Matrix::matmul`].
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self, AlgebraError> {
        if rows * cols != data.len() {
            return Err(AlgebraError::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { S::one() } else { S::zero() })
    }

    /// Builds from a 0-based entry function.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::Shape("ragged rows".into()));
        }
        Self::new(nrows, ncols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    /// 0-based entry.
    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn with_entry(&self, r: usize, c: usize, value: S) -> Self {
        let mut out = self.clone();
        out.data[r * self.cols + c] = value;
        out
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Result<Self, AlgebraError> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    fn same_shape(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgebraError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.data[r * rhs.cols + c];
                    *slot = slot.plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        self.map(|x| if x.is_zero() { S::zero() } else { x.times(s) })
    }

    pub fn times_i(&self) -> Self {
        self.scale(&S::imag_unit())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn conj(&self) -> Self {
        self.map(Scalar::conj)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn trace(&self) -> Result<S, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare(self.rows, self.cols));
        }
        Ok((0..self.rows).fold(S::zero(), |acc, i| acc.plus(self.get(i, i))))
    }

    /// Largest entry modulus; exactly 0.0 iff every entry is zero.
    pub fn max_modulus(&self) -> f64 {
        self.data.iter().map(Scalar::modulus).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn frobenius_distance(&self, other: &Self) -> Result<f64, AlgebraError> {
        self.same_shape(other)?;
        let sum: f64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let m = a.minus(b).modulus();
                m * m
            })
            .sum();
        Ok(sum.sqrt())
    }

    /// Σ coeffs[k]·mats[k], skipping zero coefficients.
    pub fn linear_combination(coeffs: &[S], mats: &[Self]) -> Result<Self, AlgebraError> {
        let first = mats
            .first()
            .ok_or_else(|| AlgebraError::Shape("empty linear combination".into()))?;
        if coeffs.len() != mats.len() {
            return Err(AlgebraError::Shape(format!(
                "{} coefficients for {} matrices",
                coeffs.len(),
                mats.len()
            )));
        }
        let mut out = Self::zeros(first.rows, first.cols);
        for (c, m) in coeffs.iter().zip(mats) {
            if c.is_zero() {
                continue;
            }
            out.same_shape(m)?;
            for (o, x) in out.data.iter_mut().zip(&m.data) {
                if !x.is_zero() {
                    *o = o.plus(&x.times(c));
                }
            }
        }
        Ok(out)
    }

    /// 0-based sub-block copy.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// `[[a, b], [c, d]]` from four blocks with compatible shapes.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self, AlgebraError> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(AlgebraError::Shape("incompatible 2x2 block layout".into()));
        }
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        Ok(Self::from_fn(rows, cols, |r, col| {
            let (blk, rr) = if r < a.rows { ((a, b), r) } else { ((c, d), r - a.rows) };
            if col < a.cols {
                blk.0.get(rr, col).clone()
            } else {
                blk.1.get(rr, col - a.cols).clone()
            }
        }))
    }

    /// Places `self` in the top-left corner of an n×n zero matrix.
    pub fn embed(&self, n: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r < self.rows && c < self.cols {
                self.get(r, c).clone()
            } else {
                S::zero()
            }
        })
    }

    pub fn to_c64(&self) -> Matrix<Complex64> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::to_c64).collect(),
        }
    }
}

impl Matrix<Complex64> {
    /// 1-norm (max column sum), used for exponential scaling.
    pub fn norm1(&self) -> f64 {
        (0..self.cols)
            .map(|c| (0..self.rows).map(|r| self.get(r, c).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest imaginary-part magnitude.
    pub fn max_imag(&self) -> f64 {
        self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }
}

/// `AB − BA`.
pub fn commutator<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Result<Matrix<S>, AlgebraError> {
    check_square_pair(a, b)?;
    let ab = a.matmul(b)?;
    let ba = b.matmul(a)?;
    ab.zip_with(&ba, |x, y| x.minus(y))
}

/// `AB + BA`.
pub fn anticommutator<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Result<Matrix<S>, AlgebraError> {
    check_square_pair(a, b)?;
    let ab = a.matmul(b)?;
    let ba = b.matmul(a)?;
    ab.zip_with(&ba, |x, y| x.plus(y))
}

fn check_square_pair<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Result<(), AlgebraError> {
    if !a.is_square() {
        return Err(AlgebraError::NotSquare(a.rows, a.cols));
    }
    if a.rows != b.rows || a.cols != b.cols {
        return Err(AlgebraError::DimensionMismatch {
            left: (a.rows, a.cols),
            right: (b.rows, b.cols),
        });
    }
    Ok(())
}

/// Solves `A X = B` by Gaussian elimination with partial pivoting.
///
/// Pivots on the largest-modulus nonzero entry, which for the exact
/// backend just means "any structurally nonzero entry".
pub fn solve<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Result<Matrix<S>, AlgebraError> {
    if !a.is_square() {
        return Err(AlgebraError::NotSquare(a.rows, a.cols));
    }
    if b.rows != a.rows {
        return Err(AlgebraError::DimensionMismatch {
            left: (a.rows, a.cols),
            right: (b.rows, b.cols),
        });
    }
    let n = a.rows;
    let m = b.cols;
    let mut lhs: Vec<Vec<S>> = (0..n).map(|r| a.data[r * n..(r + 1) * n].to_vec()).collect();
    let mut rhs: Vec<Vec<S>> = (0..n).map(|r| b.data[r * m..(r + 1) * m].to_vec()).collect();

    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !lhs[r][col].is_zero())
            .max_by(|&x, &y| lhs[x][col].modulus().total_cmp(&lhs[y][col].modulus()))
            .ok_or(AlgebraError::Singular)?;
        lhs.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = lhs[col][col].recip().ok_or(AlgebraError::Singular)?;
        for r in (col + 1)..n {
            if lhs[r][col].is_zero() {
                continue;
            }
            let factor = lhs[r][col].times(&inv);
            let (top, bottom) = lhs.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst = dst.minus(&factor.times(src));
            }
            let (top, bottom) = rhs.split_at_mut(r);
            for (dst, src) in bottom[0].iter_mut().zip(&top[col]) {
                *dst = dst.minus(&factor.times(src));
            }
        }
    }
    let mut x = vec![vec![S::zero(); m]; n];
    for r in (0..n).rev() {
        let inv = lhs[r][r].recip().ok_or(AlgebraError::Singular)?;
        for c in 0..m {
            let mut acc = rhs[r][c].clone();
            for k in (r + 1)..n {
                if !lhs[r][k].is_zero() {
                    acc = acc.minus(&lhs[r][k].times(&x[k][c]));
                }
            }
            x[r][c] = acc.times(&inv);
        }
    }
    Matrix::new(n, m, x.concat())
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: Self) -> Matrix<S> {
        self.zip_with(rhs, |a, b| a.plus(b)).expect("matrix add: shape mismatch")
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: Self) -> Matrix<S> {
        self.zip_with(rhs, |a, b| a.minus(b)).expect("matrix sub: shape mismatch")
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: Self) -> Matrix<S> {
        self.matmul(rhs).expect("matrix mul: shape mismatch")
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        self.map(Scalar::negated)
    }
}
