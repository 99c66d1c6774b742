//! Fundamental and antitriplet representations of SU(3) and the f/d
//! structure constants.
//!
//! With the normalization `tr(Jⁱ Jʲ) = δⁱʲ/2` and tracelessness, the
//! commutation and anticommutation relations
//!
//! ```text
//! [Jⁱ, Jʲ] = i fⁱʲᵏ Jᵏ        {Jⁱ, Jʲ} = δⁱʲ/3 · 1 + dⁱʲᵏ Jᵏ
//! ```
//!
//! can be inverted by multiplying with `Jˡ` and tracing:
//!
//! ```text
//! fⁱʲˡ = −2i · tr([Jⁱ, Jʲ] Jˡ)      dⁱʲˡ = 2 · tr({Jⁱ, Jʲ} Jˡ)
//! ```
//!
//! Tensors live on the extended index range 1..=9 (9 = time); every slot
//! touching index 9 is zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::check::Relation;
use crate::error::AlgebraError;
use crate::numerics::{anticommutator, commutator, residual, Matrix, Scalar, Tolerances};
use crate::par::{self, ExecMode};

/// Representation label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rep {
    #[serde(rename = "3")]
    Triplet,
    #[serde(rename = "3bar")]
    Antitriplet,
    #[serde(rename = "6")]
    Six,
    #[serde(rename = "9")]
    Nine,
    #[serde(rename = "10")]
    Ten,
}

impl Rep {
    pub fn dim(self) -> usize {
        match self {
            Rep::Triplet | Rep::Antitriplet => 3,
            Rep::Six => 6,
            Rep::Nine => 9,
            Rep::Ten => 10,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Rep::Triplet => "3",
            Rep::Antitriplet => "3bar",
            Rep::Six => "6",
            Rep::Nine => "9",
            Rep::Ten => "10",
        }
    }
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Rep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "3" => Ok(Rep::Triplet),
            "3bar" => Ok(Rep::Antitriplet),
            "6" => Ok(Rep::Six),
            "9" => Ok(Rep::Nine),
            "10" => Ok(Rep::Ten),
            other => Err(format!("unknown rep {other:?} (expected 3, 3bar, 6, 9, 10)")),
        }
    }
}

/// The ± choice that runs from the momentum branches through the boosts
/// and the cubic invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Plus, Branch::Minus];

    pub fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Branch::Plus => Branch::Minus,
            Branch::Minus => Branch::Plus,
        }
    }

    pub fn sign_scalar<S: Scalar>(self) -> S {
        S::from_i64(self.sign())
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        })
    }
}

impl FromStr for Branch {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" | "plus" | "p" => Ok(Branch::Plus),
            "-" | "minus" | "m" => Ok(Branch::Minus),
            other => Err(format!("unknown branch {other:?} (expected + or -)")),
        }
    }
}

/// Whether the nine extra matrices are general vector matrices or
/// commuting momentum matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VectorKind {
    Vector,
    Momentum,
}

/// A labeled family {J, K, V/P} for one representation.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet<S> {
    pub rep: Rep,
    pub j: Vec<Matrix<S>>,
    pub k: Option<Vec<Matrix<S>>>,
    pub v: Option<Vec<Matrix<S>>>,
    pub vector_kind: Option<VectorKind>,
    pub branch: Option<Branch>,
}

impl<S: Scalar> GeneratorSet<S> {
    pub fn rotations(rep: Rep, j: Vec<Matrix<S>>) -> Self {
        Self {
            rep,
            j,
            k: None,
            v: None,
            vector_kind: None,
            branch: None,
        }
    }

    /// Jⁱ for i in 1..=8.
    pub fn j(&self, i: usize) -> &Matrix<S> {
        &self.j[i - 1]
    }

    pub fn boosts(&self) -> Result<&[Matrix<S>], AlgebraError> {
        self.k.as_deref().ok_or(AlgebraError::MissingGenerators("K"))
    }

    pub fn vectors(&self) -> Result<&[Matrix<S>], AlgebraError> {
        self.v.as_deref().ok_or(AlgebraError::MissingGenerators("V/P"))
    }

    /// Every member matrix is `dim × dim` for the rep label.
    pub fn dimensions_consistent(&self) -> bool {
        let n = self.rep.dim();
        let all = self
            .j
            .iter()
            .chain(self.k.iter().flatten())
            .chain(self.v.iter().flatten());
        self.j.len() == 8
            && self.k.as_ref().is_none_or(|k| k.len() == 8)
            && self.v.as_ref().is_none_or(|v| v.len() == 9)
            && all.into_iter().all(|m| m.rows() == n && m.cols() == n)
    }

    pub fn to_c64(&self) -> GeneratorSet<crate::numerics::Complex64> {
        let conv = |v: &Vec<Matrix<S>>| v.iter().map(Matrix::to_c64).collect::<Vec<_>>();
        GeneratorSet {
            rep: self.rep,
            j: conv(&self.j),
            k: self.k.as_ref().map(conv),
            v: self.v.as_ref().map(conv),
            vector_kind: self.vector_kind,
            branch: self.branch,
        }
    }
}

/// Dense 9×9×9 tensor addressed with 1-based indices.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3<S> {
    data: Vec<S>,
}

impl<S: Scalar> Tensor3<S> {
    pub const DIM: usize = 9;

    pub fn zeros() -> Self {
        Self {
            data: vec![S::zero(); 729],
        }
    }

    fn offset(i: usize, j: usize, k: usize) -> usize {
        assert!(
            (1..=9).contains(&i) && (1..=9).contains(&j) && (1..=9).contains(&k),
            "tensor index ({i},{j},{k}) outside 1..=9"
        );
        ((i - 1) * 9 + (j - 1)) * 9 + (k - 1)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &S {
        &self.data[Self::offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: S) {
        self.data[Self::offset(i, j, k)] = value;
    }

    pub fn negated(&self) -> Self {
        Self {
            data: self.data.iter().map(Scalar::negated).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self {
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Largest |T − other| entry.
    pub fn max_difference(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.minus(b).modulus())
            .fold(0.0, f64::max)
    }

    /// Nonzero entries with (i, j, k) filtered by `keep`.
    pub fn nonzero_entries(&self, keep: impl Fn(usize, usize, usize) -> bool) -> Vec<(usize, usize, usize, S)> {
        let mut out = Vec::new();
        for i in 1..=9 {
            for j in 1..=9 {
                for k in 1..=9 {
                    let v = self.get(i, j, k);
                    if !v.is_zero() && keep(i, j, k) {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Which structure-constant tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorKind {
    F,
    D,
}

impl FromStr for TensorKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "f" => Ok(TensorKind::F),
            "d" => Ok(TensorKind::D),
            other => Err(format!("unknown tensor {other:?} (expected f or d)")),
        }
    }
}

/// The antisymmetric f and symmetric d tensors on extended indices.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants<S> {
    pub f: Tensor3<S>,
    pub d: Tensor3<S>,
}

impl<S: Scalar> StructureConstants<S> {
    /// Extracts f and d from the Gell-Mann generators.
    pub fn fundamental() -> Self {
        Self::from_generators(&gellmann()).expect("Gell-Mann matrices are normalized")
    }

    pub fn from_generators(gens: &GeneratorSet<S>) -> Result<Self, AlgebraError> {
        Ok(Self {
            f: extract_f(gens)?,
            d: extract_d(gens)?,
        })
    }

    pub fn f(&self, i: usize, j: usize, k: usize) -> &S {
        self.f.get(i, j, k)
    }

    pub fn d(&self, i: usize, j: usize, k: usize) -> &S {
        self.d.get(i, j, k)
    }

    /// Same tensors with one entry shifted by `delta`.
    pub fn perturbed(&self, which: TensorKind, (i, j, k): (usize, usize, usize), delta: &S) -> Self {
        let mut out = self.clone();
        let t = match which {
            TensorKind::F => &mut out.f,
            TensorKind::D => &mut out.d,
        };
        let v = t.get(i, j, k).plus(delta);
        t.set(i, j, k, v);
        out
    }

    pub fn to_c64(&self) -> StructureConstants<crate::numerics::Complex64> {
        StructureConstants {
            f: Tensor3 {
                data: self.f.data.iter().map(Scalar::to_c64).collect(),
            },
            d: Tensor3 {
                data: self.d.data.iter().map(Scalar::to_c64).collect(),
            },
        }
    }

    /// Exhaustive permutation checks plus the vanishing time slots.
    pub fn symmetry_relations(&self) -> Vec<Relation> {
        let mut f_anti: f64 = 0.0;
        let mut d_sym: f64 = 0.0;
        let mut time: f64 = 0.0;
        for i in 1..=9 {
            for j in 1..=9 {
                for k in 1..=9 {
                    let f = self.f(i, j, k);
                    let d = self.d(i, j, k);
                    f_anti = f_anti
                        .max(f.plus(self.f(j, i, k)).modulus())
                        .max(f.plus(self.f(i, k, j)).modulus());
                    for (a, b, c) in [(j, i, k), (i, k, j), (k, j, i), (j, k, i), (k, i, j)] {
                        d_sym = d_sym.max(d.minus(self.d(a, b, c)).modulus());
                    }
                    if i == 9 || j == 9 || k == 9 {
                        time = time.max(f.modulus()).max(d.modulus());
                    }
                }
            }
        }
        vec![
            Relation::new("f-antisymmetric", "f^{ijk} = -f^{jik} = -f^{ikj}", f_anti, 729),
            Relation::new("d-symmetric", "d^{ijk} invariant under all index permutations", d_sym, 729),
            Relation::new("time-slots-vanish", "f and d vanish whenever an index is 9", time, 729),
        ]
    }
}

fn half<S: Scalar>() -> S {
    S::from_ratio(1, 2)
}

fn entry_matrix<S: Scalar>(entries: &[(usize, usize, S)]) -> Matrix<S> {
    let mut m = Matrix::zeros(3, 3);
    for (r, c, v) in entries {
        m = m.with_entry(*r, *c, v.clone());
    }
    m
}

/// The eight Gell-Mann generators Jⁱ = λⁱ/2 of the fundamental 3-rep.
pub fn gellmann<S: Scalar>() -> GeneratorSet<S> {
    let h = half::<S>();
    let ih = h.times_i();
    let mih = ih.negated();
    let mh = h.negated();
    // 1/(2√3) and −1/√3
    let e8 = S::sqrt3().times(&S::from_ratio(1, 6));
    let e8_low = S::sqrt3().times(&S::from_ratio(-1, 3));
    let j = vec![
        entry_matrix(&[(0, 1, h.clone()), (1, 0, h.clone())]),
        entry_matrix(&[(0, 1, mih.clone()), (1, 0, ih.clone())]),
        entry_matrix(&[(0, 0, h.clone()), (1, 1, mh)]),
        entry_matrix(&[(0, 2, h.clone()), (2, 0, h.clone())]),
        entry_matrix(&[(0, 2, mih.clone()), (2, 0, ih.clone())]),
        entry_matrix(&[(1, 2, h.clone()), (2, 1, h)]),
        entry_matrix(&[(1, 2, mih), (2, 1, ih)]),
        entry_matrix(&[(0, 0, e8.clone()), (1, 1, e8), (2, 2, e8_low)]),
    ];
    GeneratorSet::rotations(Rep::Triplet, j)
}

/// The antitriplet: J̄ⁱ = −(Jⁱ)*.
pub fn antitriplet<S: Scalar>() -> GeneratorSet<S> {
    let j = gellmann::<S>().j.iter().map(|m| -&m.conj()).collect();
    GeneratorSet::rotations(Rep::Antitriplet, j)
}

fn normalization_residual<S: Scalar>(gens: &GeneratorSet<S>) -> Result<f64, AlgebraError> {
    let mut worst: f64 = 0.0;
    for a in 1..=8 {
        for b in 1..=8 {
            let tr = gens.j(a).matmul(gens.j(b))?.trace()?;
            let want = if a == b { half::<S>() } else { S::zero() };
            worst = worst.max(tr.minus(&want).modulus());
        }
        worst = worst.max(gens.j(a).trace()?.modulus());
    }
    Ok(worst)
}

fn require_normalized<S: Scalar>(gens: &GeneratorSet<S>) -> Result<(), AlgebraError> {
    if gens.j.len() != 8 {
        return Err(AlgebraError::MissingGenerators("J (eight required)"));
    }
    let r = normalization_residual(gens)?;
    if r > Tolerances::default().algebraic_for(S::BACKEND) {
        return Err(AlgebraError::NotNormalized(r));
    }
    Ok(())
}

type Bracket<S> = fn(&Matrix<S>, &Matrix<S>) -> Result<Matrix<S>, AlgebraError>;

fn extract_with<S: Scalar>(
    gens: &GeneratorSet<S>,
    bracket: Bracket<S>,
    coeff: S,
) -> Result<Tensor3<S>, AlgebraError> {
    require_normalized(gens)?;
    let mut t = Tensor3::zeros();
    for i in 1..=8 {
        for j in 1..=8 {
            let br = bracket(gens.j(i), gens.j(j))?;
            for k in 1..=8 {
                let v = br.matmul(gens.j(k))?.trace()?.times(&coeff).real_part();
                t.set(i, j, k, v);
            }
        }
    }
    Ok(t)
}

/// fⁱʲᵏ = −2i · tr([Jⁱ, Jʲ] Jᵏ) on 1..=8, zero on time slots.
pub fn extract_f<S: Scalar>(gens: &GeneratorSet<S>) -> Result<Tensor3<S>, AlgebraError> {
    extract_with(gens, commutator, S::from_i64(-2).times_i())
}

/// dⁱʲᵏ = 2 · tr({Jⁱ, Jʲ} Jᵏ) on 1..=8, zero on time slots.
pub fn extract_d<S: Scalar>(gens: &GeneratorSet<S>) -> Result<Tensor3<S>, AlgebraError> {
    extract_with(gens, anticommutator, S::from_i64(2))
}

/// Hermiticity, tracelessness and the trace normalization of a rep's J set.
pub fn generator_relations<S: Scalar>(gens: &GeneratorSet<S>) -> Result<Vec<Relation>, AlgebraError> {
    let mut herm: f64 = 0.0;
    let mut tr: f64 = 0.0;
    for m in &gens.j {
        herm = herm.max(residual(&(m - &m.dagger())));
        tr = tr.max(m.trace()?.modulus());
    }
    let mut out = vec![
        Relation::new("hermitian", "every J equals its conjugate transpose", herm, 8),
        Relation::new("traceless", "tr J^i = 0", tr, 8),
    ];
    if gens.rep.dim() == 3 {
        out.push(Relation::new(
            "normalized",
            "tr(J^i J^j) = delta^ij / 2",
            normalization_residual(gens)?,
            64,
        ));
    }
    Ok(out)
}

/// Σₖ cₖ Mₖ over k = 1..=8 with coefficients from `coeff(k)`.
pub(crate) fn contract<S: Scalar>(mats: &[Matrix<S>], coeff: impl Fn(usize) -> S) -> Matrix<S> {
    let coeffs: Vec<S> = (1..=mats.len()).map(coeff).collect();
    Matrix::linear_combination(&coeffs, mats).expect("uniform generator shapes")
}

/// Closure of a rep's J set under commutators and anticommutators:
/// `[Jⁱ,Jʲ] = i fⁱʲᵏ Jᵏ` and `{Jⁱ,Jʲ} = δⁱʲ/3 + s·dⁱʲᵏ Jᵏ` where `s = d_sign`.
/// The anticommutator relation is only meaningful for 3-dimensional reps.
pub fn closure_relations<S: Scalar>(
    gens: &GeneratorSet<S>,
    sc: &StructureConstants<S>,
    d_sign: i64,
    mode: ExecMode,
) -> Vec<Relation> {
    let n = gens.rep.dim();
    let third = Matrix::identity(n).scale(&S::from_ratio(1, 3));
    let s = S::from_i64(d_sign);
    let pairs = par::tuples(2);
    let results = par::map_indices(pairs.len(), mode, |idx| {
        let (i, j) = (pairs[idx][0], pairs[idx][1]);
        let comm = commutator(gens.j(i), gens.j(j)).expect("square");
        let rhs = contract(&gens.j, |k| sc.f(i, j, k).times_i());
        let c = residual(&(&comm - &rhs));
        let anti = anticommutator(gens.j(i), gens.j(j)).expect("square");
        let mut rhs = contract(&gens.j, |k| sc.d(i, j, k).times(&s));
        if i == j {
            rhs = &rhs + &third;
        }
        let a = residual(&(&anti - &rhs));
        (c, a)
    });
    let label = gens.rep.label();
    let sign = if d_sign >= 0 { "+" } else { "-" };
    vec![
        Relation::new(
            format!("commutator-closure-{label}"),
            format!("[J^i, J^j] = i f^ijk J^k in the {label}-rep"),
            crate::numerics::max_residual(results.iter().map(|r| r.0)),
            64,
        ),
        Relation::new(
            format!("anticommutator-closure-{label}"),
            format!("{{J^i, J^j}} = delta^ij/3 + ({sign}d^ijk) J^k in the {label}-rep"),
            crate::numerics::max_residual(results.iter().map(|r| r.1)),
            64,
        ),
    ]
}

/// The three quadratic f/d identities, each over all 4096 (i,j,k,l) tuples.
pub fn verify_fd_identities<S: Scalar>(sc: &StructureConstants<S>, mode: ExecMode) -> Vec<Relation> {
    let tuples = par::tuples(4);
    let third = S::from_ratio(1, 3);
    let delta = |a: usize, b: usize| a == b;
    let sum = |g: &dyn Fn(usize) -> S| (1..=8).fold(S::zero(), |acc, s| acc.plus(&g(s)));
    let prod = |a: &S, b: &S| if a.is_zero() || b.is_zero() { S::zero() } else { a.times(b) };
    let results = par::map_indices(tuples.len(), mode, |idx| {
        let (i, j, k, l) = (tuples[idx][0], tuples[idx][1], tuples[idx][2], tuples[idx][3]);
        let f = |a, b, c| sc.f(a, b, c);
        let d = |a, b, c| sc.d(a, b, c);
        let jacobi = sum(&|s| {
            prod(f(i, j, s), f(s, k, l))
                .plus(&prod(f(k, j, s), f(s, l, i)))
                .plus(&prod(f(i, k, s), f(s, l, j)))
        });
        let mixed = sum(&|s| {
            prod(f(i, j, s), d(s, k, l))
                .plus(&prod(f(l, j, s), d(s, k, i)))
                .plus(&prod(f(k, j, s), d(s, i, l)))
        });
        let dd = sum(&|s| {
            prod(d(i, j, s), d(s, k, l))
                .plus(&prod(d(l, j, s), d(s, k, i)))
                .plus(&prod(d(l, i, s), d(s, k, j)))
        });
        let count = [delta(k, i) && delta(l, j), delta(k, l) && delta(i, j), delta(k, j) && delta(i, l)]
            .iter()
            .filter(|&&b| b)
            .count() as i64;
        let dd_rhs = third.times(&S::from_i64(count));
        (jacobi.modulus(), mixed.modulus(), dd.minus(&dd_rhs).modulus())
    });
    vec![
        Relation::new(
            "fd-jacobi",
            "f^ijs f^skl + f^kjs f^sli + f^iks f^slj = 0",
            crate::numerics::max_residual(results.iter().map(|r| r.0)),
            4096,
        ),
        Relation::new(
            "fd-mixed",
            "f^ijs d^skl + f^ljs d^ski + f^kjs d^sil = 0",
            crate::numerics::max_residual(results.iter().map(|r| r.1)),
            4096,
        ),
        Relation::new(
            "fd-dd",
            "d^ijs d^skl + d^ljs d^ski + d^lis d^skj = (1/3)(d^ki d^lj + d^kl d^ij + d^kj d^il)",
            crate::numerics::max_residual(results.iter().map(|r| r.2)),
            4096,
        ),
    ]
}
