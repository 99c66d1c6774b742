//! Rotation and boost generators acting on nine-component vectors.
//!
//! The momentum matrices of a 6-rep branch span an abelian ideal, so
//! `[P^μ, X] = A(X)_{μν} P^ν` defines 9×9 matrices `A(X)` with
//! `A([X,Y]) = [A(X), A(Y)]`. For X = Jⁱ, Kⁱ this gives
//!
//! ```text
//! (J⁹ⁱ)_{μν}  = i f^{μiν}
//! (K⁹±ⁱ)_{μν} = −i(√(2/3)(δ^{μi}δ^{ν9} + δ^{μ9}δ^{νi}) ± d^{μiν})
//! ```
//!
//! Appending a tenth row/column with `P¹⁰^μ = E_{μ,10}` turns these into
//! affine maps; translations then act as `exp(a·P)`.

use serde::{Deserialize, Serialize};

use crate::check::Relation;
use crate::error::AlgebraError;
use crate::numerics::{commutator, max_residual, residual, solve, Matrix, Scalar};
use crate::par::ExecMode;
use crate::relations::{self, Signature};
use crate::sixrep;
use crate::su3::{Branch, GeneratorSet, Rep, StructureConstants, VectorKind};

/// `(J⁹ⁱ)_{μν} = i f^{μiν}`, i in 1..=8.
pub fn j9<S: Scalar>(sc: &StructureConstants<S>) -> Vec<Matrix<S>> {
    (1..=8)
        .map(|i| Matrix::from_fn(9, 9, |mu, nu| sc.f(mu + 1, i, nu + 1).times_i()))
        .collect()
}

/// K⁹ for a general (α, s): entry (i,9) carries α, entry (9,i) carries 1/α.
pub fn k9_signature<S: Scalar>(sc: &StructureConstants<S>, sig: Signature) -> Vec<Matrix<S>> {
    let alpha = S::from_i64(sig.alpha);
    let inv_alpha = alpha.recip().expect("signature alpha is ±1");
    let s = S::from_i64(sig.d_sign);
    let r23 = S::sqrt_two_thirds();
    let minus_i = S::imag_unit().negated();
    (1..=8)
        .map(|i| {
            Matrix::from_fn(9, 9, |r, c| {
                let (mu, nu) = (r + 1, c + 1);
                let mut v = sc.d(mu, i, nu).times(&s);
                if mu == i && nu == 9 {
                    v = v.plus(&r23.times(&alpha));
                }
                if mu == 9 && nu == i {
                    v = v.plus(&r23.times(&inv_alpha));
                }
                v.times(&minus_i)
            })
        })
        .collect()
}

/// K⁹± (α = 1, d sign from the branch).
pub fn k9<S: Scalar>(sc: &StructureConstants<S>, branch: Branch) -> Vec<Matrix<S>> {
    k9_signature(sc, Signature::new(1, branch.sign()))
}

/// The 9-rep rotation/boost set for one branch.
pub fn nine_rep<S: Scalar>(sc: &StructureConstants<S>, branch: Branch) -> GeneratorSet<S> {
    GeneratorSet {
        rep: Rep::Nine,
        j: j9(sc),
        k: Some(k9(sc, branch)),
        v: None,
        vector_kind: None,
        branch: Some(branch),
    }
}

/// Coefficients of `m` over `basis` (least squares via the normal equations)
/// and the reconstruction residual.
pub fn span_coefficients<S: Scalar>(basis: &[Matrix<S>], m: &Matrix<S>) -> Result<(Vec<S>, f64), AlgebraError> {
    let n = basis.len();
    let inner = |a: &Matrix<S>, b: &Matrix<S>| {
        a.entries()
            .iter()
            .zip(b.entries())
            .filter(|(x, y)| !x.is_zero() && !y.is_zero())
            .fold(S::zero(), |acc, (x, y)| acc.plus(&x.conj().times(y)))
    };
    let gram = Matrix::from_fn(n, n, |r, c| inner(&basis[r], &basis[c]));
    let rhs = Matrix::from_fn(n, 1, |r, _| inner(&basis[r], m));
    let x = solve(&gram, &rhs)?;
    let coeffs = x.entries().to_vec();
    let rebuilt = Matrix::linear_combination(&coeffs, basis)?;
    let res = residual(&(m - &rebuilt));
    Ok((coeffs, res))
}

/// `A(X)` recovered from `[P^μ, X] = A_{μν} P^ν`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointAction<S> {
    pub source_label: String,
    pub coeff: Matrix<S>,
}

/// Builds `A(X)` row by row; fails with `NotInSpan` when some `[P^μ, X]`
/// leaves the momentum span by more than `tol`.
pub fn extract_adjoint_action<S: Scalar>(
    p: &[Matrix<S>],
    x: &Matrix<S>,
    label: &str,
    tol: f64,
) -> Result<AdjointAction<S>, AlgebraError> {
    let n = p.len();
    let mut data = Vec::with_capacity(n * n);
    for pm in p {
        let (coeffs, res) = span_coefficients(p, &commutator(pm, x)?)?;
        if res > tol {
            return Err(AlgebraError::NotInSpan(res));
        }
        data.extend(coeffs);
    }
    Ok(AdjointAction {
        source_label: label.to_string(),
        coeff: Matrix::new(n, n, data)?,
    })
}

/// Adjoint actions of the 6-rep J and K on one branch's momenta.
pub fn extracted_nine<S: Scalar>(branch: Branch, tol: f64) -> Result<GeneratorSet<S>, AlgebraError> {
    let one = S::one();
    let six = sixrep::six_with_momentum::<S>(branch, &one, &one)?;
    let p = six.vectors()?;
    let grab = |xs: &[Matrix<S>], name: &str| -> Result<Vec<Matrix<S>>, AlgebraError> {
        xs.iter()
            .enumerate()
            .map(|(i, x)| extract_adjoint_action(p, x, &format!("{name}{}", i + 1), tol).map(|a| a.coeff))
            .collect()
    };
    Ok(GeneratorSet {
        rep: Rep::Nine,
        j: grab(&six.j, "J")?,
        k: Some(grab(six.boosts()?, "K")?),
        v: None,
        vector_kind: None,
        branch: Some(branch),
    })
}

/// Lorentz-type relations for J⁹, K⁹±, agreement with the 6-rep adjoint
/// action, and the shape facts (J⁹ imaginary antisymmetric, K⁹ imaginary
/// symmetric, J⁹ leaves the time slot alone).
pub fn verify_lorentz9<S: Scalar>(
    sc: &StructureConstants<S>,
    branch: Branch,
    mode: ExecMode,
) -> Result<Vec<Relation>, AlgebraError> {
    let tol = crate::numerics::Tolerances::default().algebraic_for(S::BACKEND);
    let nine = nine_rep(sc, branch);
    let k = nine.boosts()?;
    let label = format!("9{branch}");
    let mut out = relations::lorentz_relations(&nine.j, k, sc, &label, mode);

    let ext = extracted_nine::<S>(branch, tol)?;
    let ext_res = max_residual(
        ext.j
            .iter()
            .zip(&nine.j)
            .chain(ext.boosts()?.iter().zip(k))
            .map(|(a, b)| residual(&(a - b))),
    );
    out.push(Relation::new(
        format!("{label}:adjoint-extraction"),
        "coefficients of [P^mu, X] over P^nu equal the closed-form J9, K9",
        ext_res,
        16,
    ));

    let real_part = |m: &Matrix<S>| residual(&m.map(|z| z.real_part()));
    let j_shape = max_residual(
        nine.j
            .iter()
            .map(|m| real_part(m).max(residual(&(m + &m.transpose())))),
    );
    let k_shape = max_residual(k.iter().map(|m| real_part(m).max(residual(&(m - &m.transpose())))));
    let j_time = max_residual(
        nine.j
            .iter()
            .flat_map(|m| (0..9).map(move |a| m.get(8, a).modulus().max(m.get(a, 8).modulus()))),
    );
    out.push(Relation::new(
        format!("{label}:J-antisymmetric"),
        "J9 is imaginary and antisymmetric",
        j_shape,
        8,
    ));
    out.push(Relation::new(
        format!("{label}:K-symmetric"),
        "K9 is imaginary and symmetric",
        k_shape,
        8,
    ));
    out.push(Relation::new(
        format!("{label}:J-time-slot"),
        "row and column 9 of J9 vanish",
        j_time,
        8,
    ));
    Ok(out)
}

/// 10×10 affine generators built from the 9-rep of `branch`, with
/// `P¹⁰^μ = E_{μ,10}`.
pub fn ten_rep<S: Scalar>(sc: &StructureConstants<S>, branch: Branch) -> GeneratorSet<S> {
    let nine = nine_rep(sc, branch);
    let embed = |v: &[Matrix<S>]| v.iter().map(|m| m.embed(10)).collect::<Vec<_>>();
    let p = (0..9)
        .map(|mu| Matrix::zeros(10, 10).with_entry(mu, 9, S::one()))
        .collect();
    GeneratorSet {
        rep: Rep::Ten,
        j: embed(&nine.j),
        k: Some(embed(nine.boosts().expect("nine_rep sets K"))),
        v: Some(p),
        vector_kind: Some(VectorKind::Momentum),
        branch: Some(branch),
    }
}

/// Worst Poincaré-type residual of the 10-rep under one signature.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SignatureFit {
    pub signature: Signature,
    pub residual: f64,
    pub relations: Vec<Relation>,
}

/// Outcome of testing the 10-rep of one branch against all four signatures.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TenRepReport {
    pub branch: Branch,
    pub fits: Vec<SignatureFit>,
    pub matched: Vec<Signature>,
}

impl TenRepReport {
    /// The single matching signature, if exactly one fits.
    pub fn unique_match(&self) -> Option<Signature> {
        match self.matched.as_slice() {
            [s] => Some(*s),
            _ => None,
        }
    }
}

/// Checks the 10-rep of `branch` against every (α, s) in {±1}².
pub fn verify_poincare10<S: Scalar>(
    sc: &StructureConstants<S>,
    branch: Branch,
    tol: f64,
    mode: ExecMode,
) -> Result<TenRepReport, AlgebraError> {
    let ten = ten_rep(sc, branch);
    let k = ten.boosts()?;
    let p = ten.vectors()?;
    let label = format!("10{branch}");
    let fits: Vec<SignatureFit> = Signature::ALL
        .iter()
        .map(|&sig| {
            let rels = relations::poincare_relations(&ten.j, k, p, sc, sig, &label, mode);
            SignatureFit {
                signature: sig,
                residual: relations::worst_of(&rels),
                relations: rels,
            }
        })
        .collect();
    let matched = fits.iter().filter(|f| f.residual <= tol).map(|f| f.signature).collect();
    Ok(TenRepReport { branch, fits, matched })
}

/// The signature the 10-rep of `branch` is expected to satisfy:
/// α = −1 with the d sign opposite to the branch.
pub fn expected_ten_signature(branch: Branch) -> Signature {
    Signature::new(-1, -branch.sign())
}
