//! Residual checks for the Lorentz-type and Poincaré-type bracket relations,
//! shared by every representation that carries them.

use serde::{Deserialize, Serialize};

use crate::check::Relation;
use crate::numerics::{commutator, max_residual, residual, Matrix, Scalar};
use crate::par::{self, ExecMode};
use crate::su3::{contract, StructureConstants};

/// Parameters of the momentum/boost bracket
/// `[Pⁱ, Kʲ] = −i(√(2/3) δⁱʲ α P⁹ + s·dⁱʲᵏ Pᵏ)`, `[α P⁹, Kʲ] = −i √(2/3) Pʲ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub alpha: i64,
    pub d_sign: i64,
}

impl Signature {
    pub const ALL: [Signature; 4] = [
        Signature { alpha: 1, d_sign: 1 },
        Signature { alpha: 1, d_sign: -1 },
        Signature { alpha: -1, d_sign: 1 },
        Signature { alpha: -1, d_sign: -1 },
    ];

    pub fn new(alpha: i64, d_sign: i64) -> Self {
        Self { alpha, d_sign }
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = if self.d_sign >= 0 { "+d" } else { "-d" };
        write!(f, "alpha={}, {s}", self.alpha)
    }
}

fn pairs_max<S: Scalar>(
    rows: usize,
    cols: usize,
    mode: ExecMode,
    f: impl Fn(usize, usize) -> Matrix<S> + Sync + Send,
) -> f64 {
    par::max_over(rows * cols, mode, |idx| residual(&f(idx / cols + 1, idx % cols + 1)))
}

/// `[J,J] = i f J`, `[J,K] = i f K`, `[K,K] = −i f J` over all 64 pairs.
pub fn lorentz_relations<S: Scalar>(
    j: &[Matrix<S>],
    k: &[Matrix<S>],
    sc: &StructureConstants<S>,
    label: &str,
    mode: ExecMode,
) -> Vec<Relation> {
    let jj = pairs_max(8, 8, mode, |a, b| {
        &commutator(&j[a - 1], &j[b - 1]).expect("square") - &contract(j, |c| sc.f(a, b, c).times_i())
    });
    let jk = pairs_max(8, 8, mode, |a, b| {
        &commutator(&j[a - 1], &k[b - 1]).expect("square") - &contract(k, |c| sc.f(a, b, c).times_i())
    });
    let kk = pairs_max(8, 8, mode, |a, b| {
        &commutator(&k[a - 1], &k[b - 1]).expect("square")
            + &contract(j, |c| sc.f(a, b, c).times_i())
    });
    vec![
        Relation::new(format!("{label}:[J,J]"), "[J^i, J^j] = i f^ijk J^k", jj, 64),
        Relation::new(format!("{label}:[J,K]"), "[J^i, K^j] = i f^ijk K^k", jk, 64),
        Relation::new(format!("{label}:[K,K]"), "[K^i, K^j] = -i f^ijk J^k", kk, 64),
    ]
}

/// `[V^μ, Jʲ] = i f^{μjk} Vᵏ` for μ in 1..=9 (f vanishes on the time slot).
pub fn vector_rotation_relation<S: Scalar>(
    v: &[Matrix<S>],
    j: &[Matrix<S>],
    sc: &StructureConstants<S>,
    label: &str,
    mode: ExecMode,
) -> Relation {
    let r = pairs_max(9, 8, mode, |mu, b| {
        &commutator(&v[mu - 1], &j[b - 1]).expect("square") - &contract(v, |c| sc.f(mu, b, c).times_i())
    });
    Relation::new(format!("{label}:[V,J]"), "[V^mu, J^j] = i f^mujk V^k", r, 72)
}

/// `[P^μ, P^ν] = 0`.
pub fn momenta_commute<S: Scalar>(p: &[Matrix<S>], label: &str, mode: ExecMode) -> Relation {
    let r = pairs_max(9, 9, mode, |a, b| commutator(&p[a - 1], &p[b - 1]).expect("square"));
    Relation::new(format!("{label}:[P,P]"), "[P^mu, P^nu] = 0", r, 81)
}

/// Residuals of the two momentum/boost brackets under `sig`.
pub fn momentum_boost_relations<S: Scalar>(
    p: &[Matrix<S>],
    k: &[Matrix<S>],
    sc: &StructureConstants<S>,
    sig: Signature,
    label: &str,
    mode: ExecMode,
) -> [Relation; 2] {
    let alpha = S::from_i64(sig.alpha);
    let s = S::from_i64(sig.d_sign);
    let r23 = S::sqrt_two_thirds();
    let minus_i = S::imag_unit().negated();
    let pk = pairs_max(8, 8, mode, |a, b| {
        let mut inner = contract(&p[..8], |c| sc.d(a, b, c).times(&s));
        if a == b {
            inner = &inner + &p[8].scale(&r23.times(&alpha));
        }
        &commutator(&p[a - 1], &k[b - 1]).expect("square") - &inner.scale(&minus_i)
    });
    let p9k = pairs_max(1, 8, mode, |_, b| {
        let lhs = commutator(&p[8].scale(&alpha), &k[b - 1]).expect("square");
        &lhs - &p[b - 1].scale(&r23.times(&minus_i))
    });
    let sign = if sig.d_sign >= 0 { "+" } else { "-" };
    [
        Relation::new(
            format!("{label}:[P,K]"),
            format!("[P^i, K^j] = -i(sqrt(2/3) delta^ij alpha P^9 {sign} d^ijk P^k), alpha={}", sig.alpha),
            pk,
            64,
        ),
        Relation::new(
            format!("{label}:[aP9,K]"),
            format!("[alpha P^9, K^j] = -i sqrt(2/3) P^j, alpha={}", sig.alpha),
            p9k,
            8,
        ),
    ]
}

/// Full Poincaré-type relation set for (J, K, P).
pub fn poincare_relations<S: Scalar>(
    j: &[Matrix<S>],
    k: &[Matrix<S>],
    p: &[Matrix<S>],
    sc: &StructureConstants<S>,
    sig: Signature,
    label: &str,
    mode: ExecMode,
) -> Vec<Relation> {
    let mut out = lorentz_relations(j, k, sc, label, mode);
    out.extend(momentum_boost_relations(p, k, sc, sig, label, mode));
    let mut pj = vector_rotation_relation(p, j, sc, label, mode);
    pj.id = format!("{label}:[P,J]");
    pj.statement = "[P^mu, J^j] = i f^mujk P^k".into();
    out.push(pj);
    out.push(momenta_commute(p, label, mode));
    out
}

/// Largest residual among a relation list (NaN-propagating).
pub fn worst_of(rels: &[Relation]) -> f64 {
    max_residual(rels.iter().map(|r| r.residual))
}
