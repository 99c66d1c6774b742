//! Matrix exponential by scaling and squaring.
//!
//! Uses the degree-13 diagonal Padé approximant with Higham's (2005)
//! threshold θ₁₃ ≈ 5.37: the input is scaled by 2⁻ˢ until its 1-norm is
//! below θ₁₃, the approximant `(V − U)⁻¹(V + U)` is formed, and the result
//! is squared `s` times. The order is fixed; no lower-degree shortcuts.

use num_complex::Complex64;

use super::matrix::{solve, Matrix};
use crate::error::AlgebraError;

const THETA_13: f64 = 5.371_920_351_148_152;

const PADE_13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `exp(M)` for a square float matrix.
pub fn matrix_exp(m: &Matrix<Complex64>) -> Result<Matrix<Complex64>, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    let norm = m.norm1();
    if norm == 0.0 {
        return Ok(Matrix::identity(n));
    }
    if !norm.is_finite() {
        return Err(AlgebraError::NonFinite);
    }
    let squarings = if norm > THETA_13 {
        (norm / THETA_13).log2().ceil() as u32
    } else {
        0
    };
    let a = m.scale(&c(0.5f64.powi(squarings as i32)));
    let b = &PADE_13;
    let ident = Matrix::identity(n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;

    let comb = |c6: f64, c4: f64, c2: f64, c0: f64| -> Matrix<Complex64> {
        Matrix::linear_combination(
            &[c(c6), c(c4), c(c2), c(c0)],
            &[a6.clone(), a4.clone(), a2.clone(), ident.clone()],
        )
        .expect("same shapes")
    };
    let inner_u = &a6 * &comb(b[13], b[11], b[9], 0.0);
    let u = &a * &(&inner_u + &comb(b[7], b[5], b[3], b[1]));
    let inner_v = &a6 * &comb(b[12], b[10], b[8], 0.0);
    let v = &inner_v + &comb(b[6], b[4], b[2], b[0]);

    let mut r = solve(&(&v - &u), &(&v + &u))?;
    for _ in 0..squarings {
        r = &r * &r;
    }
    Ok(r)
}
