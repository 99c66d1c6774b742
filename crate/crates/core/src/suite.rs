//! Named verification suites and the JSON-serializable report they produce.
//!
//! Algebraic checks run in the requested backend. Checks downstream of a
//! matrix exponential always run in floats and are labeled as such.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::check::Relation;
use crate::error::AlgebraError;
use crate::invariants::{self, Invariants, TrilinearForm};
use crate::ninerep;
use crate::numerics::{max_residual, Backend, Complex64, ExactScalar, RealSurd, Scalar, Tolerances};
use crate::par::{self, ExecMode};
use crate::relations::Signature;
use crate::sixrep::{self, SixRepConfig};
use crate::su3::{self, Branch, StructureConstants, TensorKind};
use crate::transforms::{self, NineVector, SpacetimeGenerators, TransformParams};

pub const DEFAULT_SEED: u64 = 20240917;

/// Size of the `--corrupt` perturbation (exactly 1/1000000 in the exact backend).
pub const CORRUPTION_SIZE: f64 = 1e-6;

pub const FD_FLOAT_TOL: f64 = 1e-13;
pub const EXP_SANITY_TOL: f64 = 1e-10;
pub const ROTATION_QUAD_TOL: f64 = 1e-10;
pub const ROTATION_CUBIC_TOL: f64 = 1e-9;
pub const ROTATION_TIME_TOL: f64 = 1e-12;
pub const BOOST_INVARIANT_TOL: f64 = 1e-8;
pub const CROSS_BRANCH_MIN_DRIFT: f64 = 1e-4;
pub const DEFECT_STEP: f64 = 0.01;
/// Allowed distance of r(h)/r(h/2) from 4.
pub const DEFECT_RATIO_BAND: f64 = 0.4;
pub const EX1_TOL: f64 = 1e-10;
pub const EX2_TOL: f64 = 1e-9;
pub const EX4_TOL: f64 = 1e-9;

pub const EXP_SANITY_PROBES: usize = 200;
pub const ROTATION_PROBES: usize = 500;
pub const BOOST_PROBES: usize = 500;
pub const TRANSLATION_PROBES: usize = 100;
pub const DEFECT_PROBES: usize = 100;
pub const EX1_PROBES: usize = 100;
pub const EX2_PROBES: usize = 100;
pub const EX2_EXACT_PROBES: usize = 10;
pub const EX4_PROBES: usize = 50;
/// Largest boost norm drawn for invariance probes.
pub const MAX_BOOST_NORM: f64 = 2.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Fundamental,
    Sixrep,
    Ninerep,
    Invariants,
    Exercises,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["fundamental", "sixrep", "ninerep", "invariants", "exercises", "all"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Fundamental,
                Suite::Sixrep,
                Suite::Ninerep,
                Suite::Invariants,
                Suite::Exercises,
            ],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            Suite::Fundamental => 0,
            Suite::Sixrep => 1,
            Suite::Ninerep => 2,
            Suite::Invariants => 3,
            Suite::Exercises => 4,
            Suite::All => 5,
        };
        f.write_str(Self::NAMES[i])
    }
}

impl FromStr for Suite {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "fundamental" => Suite::Fundamental,
            "sixrep" => Suite::Sixrep,
            "ninerep" => Suite::Ninerep,
            "invariants" => Suite::Invariants,
            "exercises" => Suite::Exercises,
            "all" => Suite::All,
            other => {
                return Err(AlgebraError::Parse(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }
}

/// One structure-constant entry to shift by [`CORRUPTION_SIZE`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corruption {
    pub kind: TensorKind,
    pub index: (usize, usize, usize),
}

impl Corruption {
    /// Every possible single-entry corruption of f and d.
    pub fn all() -> Vec<Corruption> {
        let mut out = Vec::with_capacity(2 * 729);
        for kind in [TensorKind::F, TensorKind::D] {
            for i in 1..=9 {
                for j in 1..=9 {
                    for k in 1..=9 {
                        out.push(Corruption { kind, index: (i, j, k) });
                    }
                }
            }
        }
        out
    }

    pub fn apply<S: Scalar>(&self, sc: &StructureConstants<S>, delta: &S) -> StructureConstants<S> {
        sc.perturbed(self.kind, self.index, delta)
    }
}

impl fmt::Display for Corruption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            TensorKind::F => "f",
            TensorKind::D => "d",
        };
        let (i, j, l) = self.index;
        write!(f, "{k}:{i},{j},{l}")
    }
}

impl FromStr for Corruption {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse(format!("corruption {s:?} must look like f:1,2,3 or d:4,4,8 (indices 1..=9)"));
        let (kind, idx) = s.split_once(':').ok_or_else(bad)?;
        let kind: TensorKind = kind.trim().parse().map_err(|_| bad())?;
        let parts: Vec<usize> = idx
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        match parts.as_slice() {
            &[i, j, k] if [i, j, k].iter().all(|v| (1..=9).contains(v)) => Ok(Corruption { kind, index: (i, j, k) }),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub backend: Backend,
    pub seed: u64,
    /// Replaces the algebraic tolerance of the chosen backend.
    pub tolerance: Option<f64>,
    pub corrupt: Option<Corruption>,
    pub mode: ExecMode,
}

impl SuiteConfig {
    pub fn new(suite: Suite, backend: Backend) -> Self {
        Self {
            suite,
            backend,
            seed: DEFAULT_SEED,
            tolerance: None,
            corrupt: None,
            mode: ExecMode::default(),
        }
    }

    fn algebraic(&self, backend: Backend) -> f64 {
        self.tolerance
            .unwrap_or_else(|| Tolerances::default().algebraic_for(backend))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Passes when `residual <= tolerance`.
    AtMost,
    /// Passes when `residual > tolerance` (a quantity that must not vanish).
    Exceeds,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub relation: String,
    pub backend: Backend,
    pub residual: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub cases: usize,
    pub passed: bool,
    /// Reported for reference; does not affect the overall verdict.
    pub informational: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub seed: u64,
    pub backend: Backend,
    pub corrupt: Option<String>,
    pub records: Vec<CheckRecord>,
    pub elapsed_seconds: f64,
    pub passed: bool,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed && !r.informational)
    }

    pub fn record(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// Records whose id starts with `prefix`.
    pub fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a CheckRecord> + 'a {
        self.records.iter().filter(move |r| r.id.starts_with(prefix))
    }
}

struct Collector {
    records: Vec<CheckRecord>,
}

impl Collector {
    fn push(&mut self, rel: Relation, backend: Backend, tolerance: f64, bound: Bound, informational: bool) {
        let passed = match bound {
            Bound::AtMost => rel.residual <= tolerance,
            Bound::Exceeds => rel.residual > tolerance,
        };
        self.records.push(CheckRecord {
            id: rel.id,
            relation: rel.statement,
            backend,
            residual: rel.residual,
            tolerance,
            bound,
            cases: rel.cases,
            passed,
            informational,
        });
    }

    fn at_most(&mut self, rels: impl IntoIterator<Item = Relation>, backend: Backend, tol: f64) {
        for r in rels {
            self.push(r, backend, tol, Bound::AtMost, false);
        }
    }

    /// Records an error from a check that could not complete as a failure.
    fn attempt(&mut self, id: &str, backend: Backend, tol: f64, res: Result<Vec<Relation>, AlgebraError>) {
        match res {
            Ok(rels) => self.at_most(rels, backend, tol),
            Err(e) => self.push(Relation::new(id, e.to_string(), f64::INFINITY, 0), backend, tol, Bound::AtMost, false),
        }
    }
}

/// Deterministic RNG for probe `index` of check `stream` under `seed`.
pub fn probe_rng(seed: u64, stream: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream.wrapping_mul(1 << 20).wrapping_add(index as u64));
    rng
}

/// Components uniform in [−1, 1].
pub fn random_vector(rng: &mut impl Rng) -> NineVector {
    NineVector::new(std::array::from_fn(|_| rng.random_range(-1.0..=1.0)))
}

pub fn random_angles(rng: &mut impl Rng) -> [f64; 8] {
    std::array::from_fn(|_| rng.random_range(-std::f64::consts::PI..=std::f64::consts::PI))
}

/// A uniformly random direction scaled to a norm uniform in [0, max_norm].
pub fn random_ball(rng: &mut impl Rng, max_norm: f64) -> [f64; 8] {
    let dir = random_unit(rng);
    let r = rng.random_range(0.0..=max_norm);
    dir.map(|v| v * r)
}

pub fn random_unit(rng: &mut impl Rng) -> [f64; 8] {
    loop {
        let v: [f64; 8] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 {
            return v.map(|x| x / n);
        }
    }
}

/// A random rational in the exact backend: p/q with |p| ≤ 9, 1 ≤ q ≤ 9.
pub fn random_rational(rng: &mut impl Rng) -> ExactScalar {
    let p = rng.random_range(-9..=9);
    let q = rng.random_range(1..=9);
    ExactScalar::real(RealSurd::rational(p, q))
}

fn rows_cols_deviation(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).abs().max()
}

// Probe stream tags.
const S_ROT: u64 = 1;
const S_BOOSTSPD: u64 = 2;
const S_ADD: u64 = 3;
const S_AFFINE: u64 = 4;
const S_ROTINV: u64 = 5;
const S_BOOSTINV: u64 = 6;
const S_TRANS: u64 = 7;
const S_DEFECT: u64 = 8;
const S_EX1: u64 = 9;
const S_EX2: u64 = 10;
const S_EX2X: u64 = 11;
const S_EX4: u64 = 12;

/// Runs the configured suite.
pub fn run(cfg: &SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let mut col = Collector { records: Vec::new() };
    let sc_exact = StructureConstants::<ExactScalar>::fundamental();
    let sc_float = StructureConstants::<Complex64>::fundamental();
    let (sc_exact, sc_float) = match cfg.corrupt {
        Some(c) => (
            c.apply(&sc_exact, &ExactScalar::real(RealSurd::rational(1, 1_000_000))),
            c.apply(&sc_float, &Complex64::new(CORRUPTION_SIZE, 0.0)),
        ),
        None => (sc_exact, sc_float),
    };
    let float = FloatContext::new(&sc_float);
    for part in cfg.suite.parts() {
        match cfg.backend {
            Backend::Exact => algebraic_part(part, &sc_exact, cfg, &mut col),
            Backend::Float => algebraic_part(part, &sc_float, cfg, &mut col),
        }
        numeric_part(part, &float, cfg, &mut col);
    }
    let passed = col.records.iter().all(|r| r.passed || r.informational);
    VerificationReport {
        suite: cfg.suite,
        seed: cfg.seed,
        backend: cfg.backend,
        corrupt: cfg.corrupt.map(|c| c.to_string()),
        records: col.records,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        passed,
    }
}

fn algebraic_part<S: Scalar>(part: Suite, sc: &StructureConstants<S>, cfg: &SuiteConfig, col: &mut Collector) {
    let b = S::BACKEND;
    let tol = cfg.algebraic(b);
    let mode = cfg.mode;
    match part {
        Suite::Fundamental => fundamental(sc, tol, mode, col),
        Suite::Sixrep => six(sc, tol, mode, col),
        Suite::Ninerep => {
            for branch in Branch::BOTH {
                col.attempt(&format!("9{branch}:lorentz"), b, tol, ninerep::verify_lorentz9(sc, branch, mode));
            }
        }
        Suite::Invariants => {
            for branch in Branch::BOTH {
                col.at_most(invariants::lie_invariance_relations(sc, branch, branch), b, tol);
                let cross = invariants::lie_invariance_relations(sc, branch, branch.flipped());
                col.push(cross[2].clone(), b, tol, Bound::Exceeds, true);
            }
        }
        Suite::Exercises => exercises_algebraic(sc, cfg, tol, col),
        Suite::All => unreachable!("expanded by Suite::parts"),
    }
}

fn fundamental<S: Scalar>(sc: &StructureConstants<S>, tol: f64, mode: ExecMode, col: &mut Collector) {
    let b = S::BACKEND;
    let g = su3::gellmann::<S>();
    let bar = su3::antitriplet::<S>();
    col.attempt("generators-3", b, tol, su3::generator_relations(&g));
    col.at_most(sc.symmetry_relations(), b, tol);
    col.at_most(su3::closure_relations(&g, sc, 1, mode), b, tol);
    col.at_most(su3::closure_relations(&bar, sc, -1, mode), b, tol);
    col.at_most(su3::verify_fd_identities(sc, mode), b, tol);
    let extracted = StructureConstants::<S>::from_generators(&g).map(|e| {
        vec![Relation::new(
            "extraction-matches",
            "f and d extracted from the Gell-Mann generators equal the tensors in use",
            e.f.max_difference(&sc.f).max(e.d.max_difference(&sc.d)),
            1458,
        )]
    });
    col.attempt("extraction-matches", b, tol, extracted);
}

fn six<S: Scalar>(sc: &StructureConstants<S>, tol: f64, mode: ExecMode, col: &mut Collector) {
    let b = S::BACKEND;
    let trip = sixrep::triplet_vk(&S::one(), &S::one());
    col.attempt("3:relations", b, tol, sixrep::triplet_relations(&trip, sc, mode));
    col.attempt("3:[V,K]", b, tol, sixrep::triplet_failure_check(&trip));

    let one = S::one();
    for branch in Branch::BOTH {
        let label = format!("6{branch}");
        match SixRepConfig::branch(branch, &one, &one) {
            Ok(cfg) => {
                let dm = sixrep::delta_mismatch(&cfg, sc, mode);
                col.at_most(
                    [
                        Relation::new(format!("{label}:constraints"), "branch constants satisfy the four Delta = 0 constraints", cfg.constraint_residual(), 4),
                        Relation::new(format!("{label}:delta-zero"), "Delta^ij = 0 for all i, j", dm.max_norm(), 64),
                        Relation::new(
                            format!("{label}:delta-forms-agree"),
                            "closed-form Delta equals -i([V,K] + i sqrt(2/3) alpha delta V^9 + i beta d V)",
                            dm.disagreement(),
                            64,
                        ),
                    ],
                    b,
                    tol,
                );
            }
            Err(e) => col.push(Relation::new(format!("{label}:constraints"), e.to_string(), f64::INFINITY, 0), b, tol, Bound::AtMost, false),
        }
        col.attempt(&format!("{label}:poincare"), b, tol, sixrep::verify_poincare6(sc, branch, &one, &one, mode));
    }

    // c₊ = c₋ = 1 with no time component violates both branches at once.
    let bad = SixRepConfig {
        c_plus: one.clone(),
        c9_plus: S::zero(),
        c_minus: one.clone(),
        c9_minus: S::zero(),
        alpha: one.clone(),
        beta: one.clone(),
    };
    let dm = sixrep::delta_mismatch(&bad, sc, mode);
    col.push(
        Relation::new("6:delta-nonzero-off-branch", "Delta is nonzero for c+ = c- = 1, c9 = 0, beta = 1", dm.max_norm(), 64),
        b,
        0.0,
        Bound::Exceeds,
        false,
    );
    col.at_most(
        [Relation::new(
            "6:delta-forms-agree-off-branch",
            "closed-form and commutator Delta agree off the branches",
            dm.disagreement(),
            64,
        )],
        b,
        tol,
    );
    col.attempt("6:branch-exchange", b, tol, sixrep::branch_exchange_relation(sc).map(|r| vec![r]));
    if let Ok(mixed) = sixrep::mixed_momentum_commutator::<S>() {
        col.push(
            Relation::new("6:[P+,P-]", "largest entry of [P+^mu, P-^nu] (not required to vanish)", mixed, 81),
            b,
            0.0,
            Bound::Exceeds,
            true,
        );
    }
}

fn exercises_algebraic<S: Scalar>(sc: &StructureConstants<S>, cfg: &SuiteConfig, tol: f64, col: &mut Collector) {
    let b = S::BACKEND;
    for branch in Branch::BOTH {
        let label = format!("ex3:10{branch}");
        match ninerep::verify_poincare10(sc, branch, tol, cfg.mode) {
            Ok(rep) => {
                let want = ninerep::expected_ten_signature(branch);
                let fit = rep.fits.iter().find(|f| f.signature == want).expect("all signatures tried");
                for r in &fit.relations {
                    let mut r = r.clone();
                    r.id = format!("ex3:{}", r.id);
                    r.statement = format!("{} ({want})", r.statement);
                    col.push(r, b, tol, Bound::AtMost, false);
                }
                let others = rep
                    .fits
                    .iter()
                    .filter(|f| f.signature != want)
                    .map(|f| f.residual)
                    .fold(f64::INFINITY, f64::min);
                col.push(
                    Relation::new(
                        format!("{label}:other-signatures-fail"),
                        format!("no signature other than {want} fits the 10-rep"),
                        others,
                        3,
                    ),
                    b,
                    tol,
                    Bound::Exceeds,
                    false,
                );
            }
            Err(e) => col.push(Relation::new(label, e.to_string(), f64::INFINITY, 0), b, tol, Bound::AtMost, false),
        }
    }

    // g(x,x,x) = I(x) for rational probes (or float probes in the float backend)
    for branch in Branch::BOTH {
        let form = TrilinearForm::build(sc, branch);
        let worst = max_residual((0..EX2_EXACT_PROBES).map(|i| {
            let mut rng = probe_rng(cfg.seed, S_EX2X, i);
            let x: Vec<S> = (0..9).map(|_| probe_scalar::<S>(&mut rng)).collect();
            form.eval(&x, &x, &x).minus(&invariants::cubic_invariant_in(sc, &x, branch)).modulus()
        }));
        col.push(
            Relation::new(format!("ex2:g{branch}(x,x,x)=I{branch}(x)"), "g(x,x,x) equals the cubic invariant", worst, EX2_EXACT_PROBES),
            b,
            tol,
            Bound::AtMost,
            false,
        );
        col.push(
            Relation::new(format!("ex2:g{branch}-symmetric"), "g is totally symmetric", form.symmetry_residual(), 729),
            b,
            tol,
            Bound::AtMost,
            false,
        );
    }
}

fn probe_scalar<S: Scalar>(rng: &mut impl Rng) -> S {
    let p: i64 = rng.random_range(-9..=9);
    let q: i64 = rng.random_range(1..=9);
    S::from_ratio(p, q)
}

/// Float-side objects built from (possibly corrupted) structure constants.
pub struct FloatContext {
    pub gens: SpacetimeGenerators,
    pub inv: Invariants,
    pub sc: StructureConstants<Complex64>,
}

impl FloatContext {
    pub fn new(sc: &StructureConstants<Complex64>) -> Self {
        Self {
            gens: SpacetimeGenerators::new(sc),
            inv: Invariants::new(sc),
            sc: sc.clone(),
        }
    }
}

fn numeric_part(part: Suite, ctx: &FloatContext, cfg: &SuiteConfig, col: &mut Collector) {
    let f = Backend::Float;
    match part {
        Suite::Ninerep => {
            for r in exponential_sanity(ctx, cfg.seed, cfg.mode) {
                col.push(r.0, f, r.1, r.2, false);
            }
        }
        Suite::Invariants => {
            for r in invariance_probes(ctx, cfg.seed, cfg.mode) {
                col.push(r.0, f, r.1, r.2, false);
            }
        }
        Suite::Exercises => {
            for r in exercise_probes(ctx, cfg.seed, cfg.mode) {
                col.push(r.0, f, r.1, r.2, r.3);
            }
        }
        _ => {}
    }
}

type Check = (Relation, f64, Bound);

fn fail(id: &str, e: &AlgebraError) -> Relation {
    Relation::new(id, e.to_string(), f64::INFINITY, 0)
}

/// Worst value of a fallible probe; any error becomes +∞.
fn probe_max(n: usize, mode: ExecMode, f: impl Fn(usize) -> Result<f64, AlgebraError> + Sync + Send) -> f64 {
    par::max_over(n, mode, |i| f(i).unwrap_or(f64::INFINITY))
}

/// Rotations orthogonal and time-fixing, boosts symmetric positive-definite,
/// one-parameter additivity, and affine composition.
pub fn exponential_sanity(ctx: &FloatContext, seed: u64, mode: ExecMode) -> Vec<Check> {
    let g = &ctx.gens;
    let n = EXP_SANITY_PROBES;
    let id9 = DMatrix::<f64>::identity(9, 9);
    let rot = probe_max(n, mode, |i| {
        let mut rng = probe_rng(seed, S_ROT, i);
        let r = g.lorentz9(&TransformParams::rotation(random_angles(&mut rng)))?;
        let mut time = 0.0f64;
        for a in 0..8 {
            time = time.max(r[(a, 8)].abs()).max(r[(8, a)].abs());
        }
        time = time.max((r[(8, 8)] - 1.0).abs());
        Ok(rows_cols_deviation(&(r.transpose() * &r), &id9).max(time))
    });
    let boosts: Vec<Result<(f64, f64), AlgebraError>> = par::map_indices(n, mode, |i| {
        let mut rng = probe_rng(seed, S_BOOSTSPD, i);
        let branch = if i % 2 == 0 { Branch::Plus } else { Branch::Minus };
        let bm = g.lorentz9(&TransformParams::boost(random_ball(&mut rng, MAX_BOOST_NORM), branch))?;
        let asym = rows_cols_deviation(&bm, &bm.transpose());
        let sym = (&bm + bm.transpose()) * 0.5;
        let min_eig = SymmetricEigen::new(sym).eigenvalues.min();
        Ok((asym, min_eig))
    });
    let asym = max_residual(boosts.iter().map(|r| r.as_ref().map_or(f64::INFINITY, |v| v.0)));
    let min_eig = boosts
        .iter()
        .map(|r| r.as_ref().map_or(f64::NEG_INFINITY, |v| v.1))
        .fold(f64::INFINITY, f64::min);
    let additive = probe_max(n, mode, |i| {
        let mut rng = probe_rng(seed, S_ADD, i);
        let u = random_unit(&mut rng);
        let s: f64 = rng.random_range(-1.0..=1.0);
        let t: f64 = rng.random_range(-1.0..=1.0);
        let branch = if i % 2 == 0 { Branch::Plus } else { Branch::Minus };
        let at = |c: f64| g.lorentz9(&TransformParams::boost(u.map(|v| v * c), branch));
        Ok(rows_cols_deviation(&at(s + t)?, &(at(s)? * at(t)?)))
    });
    let affine = probe_max(n, mode, |i| {
        let mut rng = probe_rng(seed, S_AFFINE, i);
        let branch = if i % 2 == 0 { Branch::Plus } else { Branch::Minus };
        let mut draw = || TransformParams {
            theta: random_angles(&mut rng),
            phi: random_ball(&mut rng, 1.0),
            a: random_vector(&mut rng).0,
            branch,
        };
        let (p1, p2) = (draw(), draw());
        let prod = g.poincare10(&p2)? * g.poincare10(&p1)?;
        let l1 = g.lorentz9(&p1)?;
        let l2 = g.lorentz9(&p2)?;
        let a1 = nalgebra::DVector::from_row_slice(&p1.a);
        let a2 = nalgebra::DVector::from_row_slice(&p2.a);
        let mut want = DMatrix::<f64>::identity(10, 10);
        want.view_mut((0, 0), (9, 9)).copy_from(&(&l2 * &l1));
        want.view_mut((0, 9), (9, 1)).copy_from(&(&l2 * a1 + a2));
        Ok(rows_cols_deviation(&prod, &want))
    });
    vec![
        (
            Relation::new("exp:rotation-orthogonal", "lorentz9(theta, 0) is orthogonal and fixes the time axis", rot, n),
            EXP_SANITY_TOL,
            Bound::AtMost,
        ),
        (
            Relation::new("exp:boost-symmetric", "lorentz9(0, phi) is symmetric", asym, n),
            EXP_SANITY_TOL,
            Bound::AtMost,
        ),
        (
            Relation::new("exp:boost-positive", "smallest eigenvalue of lorentz9(0, phi) is positive", min_eig, n),
            0.0,
            Bound::Exceeds,
        ),
        (
            Relation::new("exp:one-parameter", "lorentz9(0,(s+t)u) = lorentz9(0,su) lorentz9(0,tu)", additive, n),
            EXP_SANITY_TOL,
            Bound::AtMost,
        ),
        (
            Relation::new("exp:affine-composition", "poincare10(p2) poincare10(p1) = [[L2 L1, L2 a1 + a2], [0, 1]]", affine, n),
            EXP_SANITY_TOL,
            Bound::AtMost,
        ),
    ]
}

/// Rotation invariants, matched-branch boost invariance of I±, the
/// cross-branch drift, translations of coordinate differences, and the
/// second-order boost defect of the interval.
pub fn invariance_probes(ctx: &FloatContext, seed: u64, mode: ExecMode) -> Vec<Check> {
    let (g, inv) = (&ctx.gens, &ctx.inv);
    let rot: Vec<Result<[f64; 3], AlgebraError>> = par::map_indices(ROTATION_PROBES, mode, |i| {
        let mut rng = probe_rng(seed, S_ROTINV, i);
        let x = random_vector(&mut rng);
        let d = g.lorentz9(&TransformParams::rotation(random_angles(&mut rng)))?;
        let y = transforms::apply(&d, &x)?;
        let n = x.norm();
        Ok([
            (inv.quad_space(&y) - inv.quad_space(&x)).abs() / (1.0 + n * n),
            (inv.cubic_sym(&y) - inv.cubic_sym(&x)).abs() / (1.0 + n * n * n),
            (y.time() - x.time()).abs(),
        ])
    });
    let pick = |k: usize| max_residual(rot.iter().map(|r| r.as_ref().map_or(f64::INFINITY, |v| v[k])));

    let mut out = vec![
        (
            Relation::new("rot:quad-space", "sum (x^i)^2 is rotation invariant (drift / (1 + |x|^2))", pick(0), ROTATION_PROBES),
            ROTATION_QUAD_TOL,
            Bound::AtMost,
        ),
        (
            Relation::new("rot:cubic-sym", "d_ijk x^i x^j x^k is rotation invariant (drift / (1 + |x|^3))", pick(1), ROTATION_PROBES),
            ROTATION_CUBIC_TOL,
            Bound::AtMost,
        ),
        (
            Relation::new("rot:time", "x^9 is rotation invariant", pick(2), ROTATION_PROBES),
            ROTATION_TIME_TOL,
            Bound::AtMost,
        ),
    ];

    let boost_drift = |i: usize, form: Branch, boost: Branch| -> Result<f64, AlgebraError> {
        let mut rng = probe_rng(seed, S_BOOSTINV, i);
        let x = random_vector(&mut rng);
        let p = TransformParams {
            theta: random_angles(&mut rng),
            phi: random_ball(&mut rng, MAX_BOOST_NORM),
            a: [0.0; 9],
            branch: boost,
        };
        let y = transforms::apply(&g.lorentz9(&p)?, &x)?;
        let n = x.norm();
        Ok((inv.cubic_invariant(&y, form) - inv.cubic_invariant(&x, form)).abs() / (1.0 + n * n * n))
    };
    for branch in Branch::BOTH {
        let worst = probe_max(BOOST_PROBES, mode, |i| boost_drift(i, branch, branch));
        out.push((
            Relation::new(
                format!("boost:I{branch}"),
                format!("I{branch} is invariant under rotation-then-{branch} boost (drift / (1 + |x|^3))"),
                worst,
                BOOST_PROBES,
            ),
            BOOST_INVARIANT_TOL,
            Bound::AtMost,
        ));
    }
    let cross = par::map_indices(BOOST_PROBES, mode, |i| boost_drift(i, Branch::Plus, Branch::Minus).unwrap_or(0.0));
    out.push((
        Relation::new(
            "boost:I+-under-minus",
            "largest I+ drift under (-)-branch boosts must be visible",
            cross.into_iter().fold(0.0, f64::max),
            BOOST_PROBES,
        ),
        CROSS_BRANCH_MIN_DRIFT,
        Bound::Exceeds,
    ));

    for branch in Branch::BOTH {
        let worst = probe_max(TRANSLATION_PROBES, mode, |i| {
            let mut rng = probe_rng(seed, S_TRANS, i);
            let (p0, q0) = (random_vector(&mut rng), random_vector(&mut rng));
            let params = TransformParams {
                theta: random_angles(&mut rng),
                phi: random_ball(&mut rng, MAX_BOOST_NORM),
                a: random_vector(&mut rng).0,
                branch,
            };
            let d = g.poincare10(&params)?;
            let diff = q0.sub(&p0);
            let moved = transforms::apply(&d, &q0)?.sub(&transforms::apply(&d, &p0)?);
            let n = diff.norm();
            Ok((inv.cubic_invariant(&moved, branch) - inv.cubic_invariant(&diff, branch)).abs() / (1.0 + n * n * n))
        });
        out.push((
            Relation::new(
                format!("poincare:I{branch}-differences"),
                format!("I{branch}(q - p) is unchanged when both endpoints move by the same poincare10 transform"),
                worst,
                TRANSLATION_PROBES,
            ),
            BOOST_INVARIANT_TOL,
            Bound::AtMost,
        ));
    }

    let defect = probe_max(DEFECT_PROBES, mode, |i| {
        let mut rng = probe_rng(seed, S_DEFECT, i);
        let x = random_vector(&mut rng);
        let m = rng.random_range(1..=8);
        let mut worst: f64 = 0.0;
        for branch in Branch::BOTH {
            let d = inv.boost_defect(g, &x, m, DEFECT_STEP, branch)?;
            worst = worst.max((d.ratio - 4.0).abs());
        }
        Ok(worst)
    });
    out.push((
        Relation::new(
            "boost:interval-defect-order",
            "after removing +-2 h d^jmk x^j x^k the interval change is O(h^2): |r(h)/r(h/2) - 4|",
            defect,
            2 * DEFECT_PROBES,
        ),
        DEFECT_RATIO_BAND,
        Bound::AtMost,
    ));
    out
}

/// Exercises 1, 2 (float side) and 4. The fourth element marks informational checks.
pub fn exercise_probes(ctx: &FloatContext, seed: u64, mode: ExecMode) -> Vec<(Relation, f64, Bound, bool)> {
    let (g, inv) = (&ctx.gens, &ctx.inv);
    let ex1 = probe_max(EX1_PROBES, mode, |i| {
        let mut rng = probe_rng(seed, S_EX1, i);
        let (x, y, z) = (random_vector(&mut rng), random_vector(&mut rng), random_vector(&mut rng));
        let r = g.lorentz9(&TransformParams::rotation(random_angles(&mut rng)))?;
        Ok(inv.rotation_scalar_products(&r, &x, &y, &z)?.max_drift())
    });
    let mut out = vec![(
        Relation::new(
            "ex1:scalar-products",
            "x.y and d_ijk x^i y^j z^k survive a shared rotation (direct and via polarization)",
            ex1,
            EX1_PROBES,
        ),
        EX1_TOL,
        Bound::AtMost,
        false,
    )];

    for branch in Branch::BOTH {
        let worst = probe_max(EX2_PROBES, mode, |i| {
            let mut rng = probe_rng(seed, S_EX2, i);
            let (x, y, z) = (random_vector(&mut rng), random_vector(&mut rng), random_vector(&mut rng));
            let p = TransformParams {
                theta: random_angles(&mut rng),
                phi: random_ball(&mut rng, MAX_BOOST_NORM),
                a: [0.0; 9],
                branch,
            };
            let d = g.lorentz9(&p)?;
            let (dx, dy, dz) = (transforms::apply(&d, &x)?, transforms::apply(&d, &y)?, transforms::apply(&d, &z)?);
            Ok((inv.trilinear(&dx, &dy, &dz, branch) - inv.trilinear(&x, &y, &z, branch)).abs())
        });
        out.push((
            Relation::new(
                format!("ex2:g{branch}-invariant"),
                format!("g{branch}(Dx, Dy, Dz) = g{branch}(x, y, z) for rotation-then-{branch} boost D"),
                worst,
                EX2_PROBES,
            ),
            EX2_TOL,
            Bound::AtMost,
            false,
        ));
    }

    let one = Complex64::new(1.0, 0.0);
    let mut reps = Vec::new();
    for branch in Branch::BOTH {
        match sixrep::six_with_momentum(branch, &one, &one) {
            Ok(r) => reps.push((format!("6{branch}"), r)),
            Err(e) => out.push((fail(&format!("ex4:6{branch}"), &e), EX4_TOL, Bound::AtMost, false)),
        }
    }
    for branch in Branch::BOTH {
        reps.push((format!("10{branch}"), ninerep::ten_rep(&ctx.sc, branch)));
    }
    for (label, rep) in &reps {
        let res: Vec<Result<transforms::IntertwineResidual, AlgebraError>> = par::map_indices(EX4_PROBES, mode, |i| {
            let mut rng = probe_rng(seed, S_EX4, i);
            let p = TransformParams {
                theta: random_ball(&mut rng, 1.0),
                phi: random_ball(&mut rng, 1.0),
                a: [0.0; 9],
                branch: rep.branch.unwrap_or(Branch::Plus),
            };
            transforms::intertwine_residual(g, rep, &p)
        });
        let sig = transforms::rep_signature(rep).map(|s| s.to_string()).unwrap_or_default();
        let contra = max_residual(res.iter().map(|r| r.as_ref().map_or(f64::INFINITY, |v| v.contragredient)));
        let literal = max_residual(res.iter().map(|r| r.as_ref().map_or(f64::INFINITY, |v| v.literal)));
        out.push((
            Relation::new(
                format!("ex4:{label}"),
                format!("D V^mu D^-1 = (Lambda^-1)_mu_nu V^nu with Lambda built for ({sig})"),
                contra,
                EX4_PROBES,
            ),
            EX4_TOL,
            Bound::AtMost,
            false,
        ));
        out.push((
            Relation::new(
                format!("ex4:{label}-literal"),
                "D V^mu D^-1 = Lambda_mu_nu V^nu with Lambda in place of its inverse",
                literal,
                EX4_PROBES,
            ),
            EX4_TOL,
            Bound::AtMost,
            true,
        ));
    }
    out
}

#[allow(dead_code)]
fn _assert_send_sync() {
    fn check<T: Send + Sync>() {}
    check::<FloatContext>();
    check::<Signature>();
}
