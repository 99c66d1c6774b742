//! Finite rotations, boosts and translations of nine-component vectors.
//!
//! `D(θ, φ) = exp(iφᵢK⁹ⁱ) exp(iθᵢJ⁹ⁱ)`: rotate first, then boost. Translations
//! use the 10×10 affine form `[[Λ, a], [0, 1]]` acting on `(x, 1)`.

use std::sync::OnceLock;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::ninerep;
use crate::numerics::{matrix_exp, Complex64, Matrix};
use crate::relations::Signature;
use crate::su3::{Branch, GeneratorSet, Rep, StructureConstants};

/// Imaginary parts up to this fraction of the largest entry are discarded.
pub const REAL_TOLERANCE: f64 = 1e-12;

/// Nine real components; index 9 is time.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NineVector(pub [f64; 9]);

impl NineVector {
    pub fn new(components: [f64; 9]) -> Self {
        Self(components)
    }

    /// Unit vector along axis `mu` (1-based).
    pub fn unit(mu: usize) -> Self {
        let mut v = [0.0; 9];
        v[mu - 1] = 1.0;
        Self(v)
    }

    pub fn zero() -> Self {
        Self([0.0; 9])
    }

    /// Component `mu` in 1..=9.
    pub fn get(&self, mu: usize) -> f64 {
        self.0[mu - 1]
    }

    pub fn spatial(&self) -> &[f64] {
        &self.0[..8]
    }

    pub fn time(&self) -> f64 {
        self.0[8]
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - other.0[i]))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    pub fn from_slice(values: &[f64]) -> Result<Self, AlgebraError> {
        let arr: [f64; 9] = values
            .try_into()
            .map_err(|_| AlgebraError::DimensionMismatch { left: (9, 1), right: (values.len(), 1) })?;
        Ok(Self(arr))
    }
}

/// Rotation angles θ, boost parameters φ, translation a, and the boost branch.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransformParams {
    pub theta: [f64; 8],
    pub phi: [f64; 8],
    pub a: [f64; 9],
    pub branch: Branch,
}

impl TransformParams {
    pub fn identity(branch: Branch) -> Self {
        Self {
            theta: [0.0; 8],
            phi: [0.0; 8],
            a: [0.0; 9],
            branch,
        }
    }

    pub fn rotation(theta: [f64; 8]) -> Self {
        Self {
            theta,
            ..Self::identity(Branch::Plus)
        }
    }

    pub fn boost(phi: [f64; 8], branch: Branch) -> Self {
        Self {
            phi,
            ..Self::identity(branch)
        }
    }

    pub fn translation(a: [f64; 9]) -> Self {
        Self {
            a,
            ..Self::identity(Branch::Plus)
        }
    }

    pub fn is_finite(&self) -> bool {
        self.theta.iter().chain(&self.phi).chain(&self.a).all(|v| v.is_finite())
    }
}

/// J⁹ and K⁹ for every signature, converted to floats once.
#[derive(Clone, Debug)]
pub struct SpacetimeGenerators {
    pub j: Vec<Matrix<Complex64>>,
    k: Vec<(Signature, Vec<Matrix<Complex64>>)>,
}

impl SpacetimeGenerators {
    pub fn new(sc: &StructureConstants<Complex64>) -> Self {
        Self {
            j: ninerep::j9(sc),
            k: Signature::ALL
                .iter()
                .map(|&s| (s, ninerep::k9_signature(sc, s)))
                .collect(),
        }
    }

    /// Generators from the standard structure constants, built on first use.
    pub fn standard() -> &'static Self {
        static CACHE: OnceLock<SpacetimeGenerators> = OnceLock::new();
        CACHE.get_or_init(|| Self::new(&StructureConstants::fundamental()))
    }

    pub fn k_signature(&self, sig: Signature) -> &[Matrix<Complex64>] {
        &self
            .k
            .iter()
            .find(|(s, _)| *s == sig)
            .expect("all four signatures are cached")
            .1
    }

    pub fn k(&self, branch: Branch) -> &[Matrix<Complex64>] {
        self.k_signature(Signature::new(1, branch.sign()))
    }

    /// `exp(iφK) exp(iθJ)` with the boosts of `sig`, as a complex matrix.
    pub fn lorentz9_complex(&self, theta: &[f64; 8], phi: &[f64; 8], sig: Signature) -> Result<Matrix<Complex64>, AlgebraError> {
        Ok(&boost_exp(self.k_signature(sig), phi, 1.0)? * &boost_exp(&self.j, theta, 1.0)?)
    }

    /// `exp(iφK±) exp(iθJ)` with K from the branch in `p`.
    pub fn lorentz9(&self, p: &TransformParams) -> Result<DMatrix<f64>, AlgebraError> {
        self.lorentz9_signature(p, Signature::new(1, p.branch.sign()))
    }

    pub fn lorentz9_signature(&self, p: &TransformParams, sig: Signature) -> Result<DMatrix<f64>, AlgebraError> {
        if !p.is_finite() {
            return Err(AlgebraError::NonFinite);
        }
        to_real(&self.lorentz9_complex(&p.theta, &p.phi, sig)?)
    }

    /// `exp(a·P) · (Λ ⊕ 1)`: the affine form with Λ in the upper-left block.
    pub fn poincare10(&self, p: &TransformParams) -> Result<DMatrix<f64>, AlgebraError> {
        let lambda = self.lorentz9(p)?;
        let mut translate = Matrix::<Complex64>::zeros(10, 10);
        for (mu, a) in p.a.iter().enumerate() {
            translate = translate.with_entry(mu, 9, Complex64::new(*a, 0.0));
        }
        let shift = to_real(&matrix_exp(&translate)?)?;
        let mut block = DMatrix::<f64>::identity(10, 10);
        block.view_mut((0, 0), (9, 9)).copy_from(&lambda);
        Ok(shift * block)
    }
}

fn boost_exp(gens: &[Matrix<Complex64>], params: &[f64], sign: f64) -> Result<Matrix<Complex64>, AlgebraError> {
    let coeffs: Vec<Complex64> = params.iter().map(|t| Complex64::new(0.0, sign * t)).collect();
    matrix_exp(&Matrix::linear_combination(&coeffs, gens)?)
}

/// Drops imaginary parts after checking they are negligible.
pub fn to_real(m: &Matrix<Complex64>) -> Result<DMatrix<f64>, AlgebraError> {
    let scale = m.max_modulus().max(1.0);
    let imag = m.max_imag();
    if !imag.is_finite() || imag > REAL_TOLERANCE * scale {
        return Err(AlgebraError::NonReal(imag));
    }
    Ok(DMatrix::from_fn(m.rows(), m.cols(), |r, c| m.get(r, c).re))
}

/// `lorentz9` with the standard generators.
pub fn lorentz9(p: &TransformParams) -> Result<DMatrix<f64>, AlgebraError> {
    SpacetimeGenerators::standard().lorentz9(p)
}

/// `poincare10` with the standard generators.
pub fn poincare10(p: &TransformParams) -> Result<DMatrix<f64>, AlgebraError> {
    SpacetimeGenerators::standard().poincare10(p)
}

/// `D·x` for a 9×9 D, or `D·(x, 1)` with the last coordinate dropped for 10×10.
pub fn apply(d: &DMatrix<f64>, x: &NineVector) -> Result<NineVector, AlgebraError> {
    match (d.nrows(), d.ncols()) {
        (9, 9) => {
            let y = d * DVector::from_row_slice(&x.0);
            NineVector::from_slice(y.as_slice())
        }
        (10, 10) => {
            let mut h = x.0.to_vec();
            h.push(1.0);
            let y = d * DVector::from_vec(h);
            NineVector::from_slice(&y.as_slice()[..9])
        }
        (r, c) if r != c => Err(AlgebraError::NotSquare(r, c)),
        (r, _) => Err(AlgebraError::DimensionMismatch { left: (r, r), right: (9, 1) }),
    }
}

/// How far `D V^μ D⁻¹` is from a Λ-rotation of the vector matrices.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntertwineResidual {
    /// `max_μ ‖D V^μ D⁻¹ − (Λ⁻¹)_{μν} V^ν‖_F`.
    pub contragredient: f64,
    /// Same with `Λ_{μν}` in place of `(Λ⁻¹)_{μν}`.
    pub literal: f64,
}

/// Signature whose Λ intertwines the vector matrices of `rep`.
///
/// The 6-rep momenta follow (α = 1, s = ±); the 10-rep built from branch ±
/// follows (α = −1, s = ∓).
pub fn rep_signature(rep: &GeneratorSet<Complex64>) -> Result<Signature, AlgebraError> {
    let branch = rep.branch.ok_or(AlgebraError::MissingGenerators("branch"))?;
    match rep.rep {
        Rep::Six => Ok(Signature::new(1, branch.sign())),
        Rep::Ten => Ok(ninerep::expected_ten_signature(branch)),
        other => Err(AlgebraError::Shape(format!("no vector matrices in the {other} rep"))),
    }
}

/// Conjugates the vector matrices of `rep` by `D(θ, φ)` and compares with
/// the 9×9 transform of the matching signature. θ and φ come from `p`;
/// translations are ignored.
pub fn intertwine_residual(
    gens: &SpacetimeGenerators,
    rep: &GeneratorSet<Complex64>,
    p: &TransformParams,
) -> Result<IntertwineResidual, AlgebraError> {
    let k = rep.boosts()?;
    let v = rep.vectors()?;
    let sig = rep_signature(rep)?;
    let d = &boost_exp(k, &p.phi, 1.0)? * &boost_exp(&rep.j, &p.theta, 1.0)?;
    let d_inv = &boost_exp(&rep.j, &p.theta, -1.0)? * &boost_exp(k, &p.phi, -1.0)?;
    let lambda = gens.lorentz9_signature(p, sig)?;
    let lambda_inv = lambda.clone().try_inverse().ok_or(AlgebraError::Singular)?;

    let mut out = IntertwineResidual {
        contragredient: 0.0,
        literal: 0.0,
    };
    for (mu, vm) in v.iter().enumerate() {
        let lhs = &(&d * vm) * &d_inv;
        let combo = |l: &DMatrix<f64>| -> Result<f64, AlgebraError> {
            let coeffs: Vec<Complex64> = (0..9).map(|nu| Complex64::new(l[(mu, nu)], 0.0)).collect();
            lhs.frobenius_distance(&Matrix::linear_combination(&coeffs, v)?)
        };
        out.contragredient = out.contragredient.max(combo(&lambda_inv)?);
        out.literal = out.literal.max(combo(&lambda)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sixrep;

    fn close(a: &DMatrix<f64>, b: &DMatrix<f64>, tol: f64) -> bool {
        (a - b).abs().max() <= tol
    }

    #[test]
    fn zero_params_give_identity() {
        let p = TransformParams::identity(Branch::Plus);
        assert!(close(&lorentz9(&p).unwrap(), &DMatrix::identity(9, 9), 1e-15));
        assert!(close(&poincare10(&p).unwrap(), &DMatrix::identity(10, 10), 1e-15));
    }

    #[test]
    fn rotation_fixes_time_axis() {
        let mut theta = [0.0; 8];
        theta[1] = std::f64::consts::PI;
        theta[6] = 0.4;
        let d = lorentz9(&TransformParams::rotation(theta)).unwrap();
        let e9 = apply(&d, &NineVector::unit(9)).unwrap();
        for mu in 1..=8 {
            assert!(e9.get(mu).abs() < 1e-14);
        }
        assert!((e9.time() - 1.0).abs() < 1e-14);
        assert!(close(&(d.transpose() * &d), &DMatrix::identity(9, 9), 1e-13));
    }

    #[test]
    fn first_order_boost() {
        let eps = 1e-7;
        let mut phi = [0.0; 8];
        phi[0] = eps;
        let d = lorentz9(&TransformParams::boost(phi, Branch::Minus)).unwrap();
        let ik = SpacetimeGenerators::standard().k(Branch::Minus)[0].times_i();
        let want = DMatrix::from_fn(9, 9, |r, c| if r == c { 1.0 } else { 0.0 } + eps * ik.get(r, c).re);
        assert!(close(&d, &want, 1e-13));
    }

    #[test]
    fn translation_shifts() {
        let a = [1.0, -2.0, 0.5, 0.0, 3.0, 0.0, 0.0, 1.5, -4.0];
        let d = poincare10(&TransformParams::translation(a)).unwrap();
        let x = NineVector::new([0.3; 9]);
        let y = apply(&d, &x).unwrap();
        for ((yi, xi), ai) in y.0.iter().zip(&x.0).zip(&a) {
            assert!((yi - (xi + ai)).abs() < 1e-14);
        }
    }

    #[test]
    fn apply_rejects_wrong_shape() {
        assert!(apply(&DMatrix::identity(8, 8), &NineVector::zero()).is_err());
        assert!(apply(&DMatrix::zeros(9, 10), &NineVector::zero()).is_err());
    }

    #[test]
    fn non_finite_params_rejected() {
        let mut p = TransformParams::identity(Branch::Plus);
        p.phi[3] = f64::NAN;
        assert!(lorentz9(&p).is_err());
    }

    #[test]
    fn intertwining_uses_inverse_lambda() {
        let gens = SpacetimeGenerators::standard();
        let sc = StructureConstants::<Complex64>::fundamental();
        let mut p = TransformParams::identity(Branch::Plus);
        p.theta = [0.3, -0.2, 0.1, 0.05, 0.2, -0.1, 0.15, 0.25];
        p.phi = [0.1, 0.2, -0.3, 0.05, -0.15, 0.1, 0.2, -0.05];
        for b in Branch::BOTH {
            let one = Complex64::new(1.0, 0.0);
            let six = sixrep::six_with_momentum(b, &one, &one).unwrap();
            let r = intertwine_residual(gens, &six, &p).unwrap();
            assert!(r.contragredient < 1e-12, "{r:?}");
            assert!(r.literal > 1e-3);
            let ten = ninerep::ten_rep(&sc, b);
            let r = intertwine_residual(gens, &ten, &p).unwrap();
            assert!(r.contragredient < 1e-12, "{r:?}");
        }
    }
}
