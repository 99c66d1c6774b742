//! Quantities preserved (or not) by the nine-dimensional transforms:
//! the rotation invariants `Σ(xⁱ)²`, `dᵢⱼₖxⁱxʲxᵏ`, `x⁹`, the interval
//! `Σ(xⁱ)² − (x⁹)²`, the cubic invariants
//!
//! ```text
//! I±(x) = ∓√(3/2) dᵢⱼₖxⁱxʲxᵏ + (3/2) Σ(xⁱ)² x⁹ − (x⁹)³
//! ```
//!
//! and their symmetric trilinear polarizations g±.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::check::Relation;
use crate::error::AlgebraError;
use crate::ninerep;
use crate::numerics::{max_residual, Complex64, Matrix, Scalar};
use crate::su3::{Branch, StructureConstants, Tensor3};
use crate::transforms::{apply, NineVector, SpacetimeGenerators, TransformParams};

/// Spatial d entries as a sparse list, for fast float contractions.
#[derive(Clone, Debug)]
pub struct Invariants {
    d: Vec<(usize, usize, usize, f64)>,
}

impl Invariants {
    pub fn new(sc: &StructureConstants<Complex64>) -> Self {
        let mut d = Vec::new();
        for i in 1..=8 {
            for j in 1..=8 {
                for k in 1..=8 {
                    let v = sc.d(i, j, k).re;
                    if v != 0.0 {
                        d.push((i - 1, j - 1, k - 1, v));
                    }
                }
            }
        }
        Self { d }
    }

    pub fn standard() -> &'static Self {
        static CACHE: OnceLock<Invariants> = OnceLock::new();
        CACHE.get_or_init(|| Self::new(&StructureConstants::fundamental()))
    }

    pub fn quad_space(&self, x: &NineVector) -> f64 {
        x.spatial().iter().map(|v| v * v).sum()
    }

    /// `dᵢⱼₖ xⁱ yʲ zᵏ` over spatial indices.
    pub fn d_contract(&self, x: &NineVector, y: &NineVector, z: &NineVector) -> f64 {
        self.d.iter().map(|&(i, j, k, v)| v * x.0[i] * y.0[j] * z.0[k]).sum()
    }

    pub fn cubic_sym(&self, x: &NineVector) -> f64 {
        self.d_contract(x, x, x)
    }

    pub fn time_component(&self, x: &NineVector) -> f64 {
        x.time()
    }

    pub fn interval(&self, x: &NineVector) -> f64 {
        self.quad_space(x) - x.time() * x.time()
    }

    pub fn cubic_invariant(&self, x: &NineVector, branch: Branch) -> f64 {
        let t = x.time();
        -(branch.sign() as f64) * 1.5f64.sqrt() * self.cubic_sym(x) + 1.5 * self.quad_space(x) * t - t * t * t
    }

    /// `g±(x, y, z)`.
    pub fn trilinear(&self, x: &NineVector, y: &NineVector, z: &NineVector, branch: Branch) -> f64 {
        let dot = |a: &NineVector, b: &NineVector| a.spatial().iter().zip(b.spatial()).map(|(p, q)| p * q).sum::<f64>();
        -(branch.sign() as f64) * 1.5f64.sqrt() * self.d_contract(x, y, z)
            + 0.5 * (dot(x, y) * z.time() + dot(z, x) * y.time() + dot(y, z) * x.time())
            - x.time() * y.time() * z.time()
    }

    /// The quadratic defect of a single boost along axis `m` by `h`.
    pub fn boost_defect(
        &self,
        gens: &SpacetimeGenerators,
        x: &NineVector,
        m: usize,
        h: f64,
        branch: Branch,
    ) -> Result<BoostDefect, AlgebraError> {
        if !(1..=8).contains(&m) {
            return Err(AlgebraError::Index(m, "boost axis must be in 1..=8"));
        }
        let em = NineVector::unit(m);
        let first_order_per_h = 2.0 * branch.sign() as f64 * self.d_contract(x, &em, x);
        let r = |step: f64| -> Result<f64, AlgebraError> {
            let mut phi = [0.0; 8];
            phi[m - 1] = step;
            let d = gens.lorentz9(&TransformParams::boost(phi, branch))?;
            let moved = apply(&d, x)?;
            Ok(self.interval(&moved) - self.interval(x) - step * first_order_per_h)
        };
        let r_h = r(h)?;
        let r_half = r(h / 2.0)?;
        Ok(BoostDefect {
            m,
            h,
            branch,
            first_order: h * first_order_per_h,
            r_h,
            r_half,
            ratio: r_h / r_half,
        })
    }

    /// Rotation drift of `x·y` and `d(x,y,z)`, measured both directly and
    /// through the polarization of `Σ(xⁱ)²` and `dᵢⱼₖxⁱxʲxᵏ`.
    pub fn rotation_scalar_products(
        &self,
        rotation: &nalgebra::DMatrix<f64>,
        x: &NineVector,
        y: &NineVector,
        z: &NineVector,
    ) -> Result<ScalarProducts, AlgebraError> {
        let spatial = |v: &NineVector| {
            let mut s = *v;
            s.0[8] = 0.0;
            s
        };
        let (x, y, z) = (spatial(x), spatial(y), spatial(z));
        let (rx, ry, rz) = (apply(rotation, &x)?, apply(rotation, &y)?, apply(rotation, &z)?);
        let dot_polar = |a: &NineVector, b: &NineVector| 0.5 * (self.quad_space(&a.add(b)) - self.quad_space(a) - self.quad_space(b));
        let triple_polar = |a: &NineVector, b: &NineVector, c: &NineVector| {
            let cs = |v: &NineVector| self.cubic_sym(v);
            (cs(&a.add(b).add(c)) - cs(&a.add(b)) - cs(&b.add(c)) - cs(&a.add(c)) + cs(a) + cs(b) + cs(c)) / 6.0
        };
        let dot = |a: &NineVector, b: &NineVector| a.spatial().iter().zip(b.spatial()).map(|(p, q)| p * q).sum::<f64>();
        let dot_before = dot(&x, &y);
        let triple_before = self.d_contract(&x, &y, &z);
        Ok(ScalarProducts {
            dot_before,
            dot_after: dot(&rx, &ry),
            dot_after_polarized: dot_polar(&rx, &ry),
            triple_before,
            triple_after: self.d_contract(&rx, &ry, &rz),
            triple_after_polarized: triple_polar(&rx, &ry, &rz),
            time_leak: max_residual([rx.time().abs(), ry.time().abs(), rz.time().abs()]),
        })
    }
}

/// Second-order remainder of the interval under a boost along one axis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoostDefect {
    pub m: usize,
    pub h: f64,
    pub branch: Branch,
    /// `±2h dʲᵐᵏxʲxᵏ`.
    pub first_order: f64,
    pub r_h: f64,
    pub r_half: f64,
    /// `r(h)/r(h/2)`, near 4 when the remainder is O(h²).
    pub ratio: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarProducts {
    pub dot_before: f64,
    pub dot_after: f64,
    pub dot_after_polarized: f64,
    pub triple_before: f64,
    pub triple_after: f64,
    pub triple_after_polarized: f64,
    pub time_leak: f64,
}

impl ScalarProducts {
    pub fn max_drift(&self) -> f64 {
        max_residual([
            (self.dot_after - self.dot_before).abs(),
            (self.dot_after_polarized - self.dot_before).abs(),
            (self.triple_after - self.triple_before).abs(),
            (self.triple_after_polarized - self.triple_before).abs(),
            self.time_leak,
        ])
    }
}

pub fn quad_space(x: &NineVector) -> f64 {
    Invariants::standard().quad_space(x)
}

pub fn cubic_sym(x: &NineVector) -> f64 {
    Invariants::standard().cubic_sym(x)
}

pub fn time_component(x: &NineVector) -> f64 {
    x.time()
}

pub fn interval(x: &NineVector) -> f64 {
    Invariants::standard().interval(x)
}

pub fn cubic_invariant(x: &NineVector, branch: Branch) -> f64 {
    Invariants::standard().cubic_invariant(x, branch)
}

pub fn trilinear(x: &NineVector, y: &NineVector, z: &NineVector, branch: Branch) -> f64 {
    Invariants::standard().trilinear(x, y, z, branch)
}

pub fn boost_defect_check(x: &NineVector, m: usize, h: f64, branch: Branch) -> Result<BoostDefect, AlgebraError> {
    Invariants::standard().boost_defect(SpacetimeGenerators::standard(), x, m, h, branch)
}

/// g± as a 9×9×9 tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct TrilinearForm<S> {
    pub branch: Branch,
    pub g: Tensor3<S>,
}

impl<S: Scalar> TrilinearForm<S> {
    pub fn build(sc: &StructureConstants<S>, branch: Branch) -> Self {
        let mut g = Tensor3::zeros();
        let c = S::sqrt_three_halves().times(&S::from_i64(-branch.sign()));
        let half = S::from_ratio(1, 2);
        for i in 1..=8 {
            for j in 1..=8 {
                for k in 1..=8 {
                    let d = sc.d(i, j, k);
                    if !d.is_zero() {
                        g.set(i, j, k, c.times(d));
                    }
                }
            }
            for (a, b, t) in [(i, i, 9), (i, 9, i), (9, i, i)] {
                g.set(a, b, t, half.clone());
            }
        }
        g.set(9, 9, 9, S::from_i64(-1));
        Self { branch, g }
    }

    /// `g_{αβγ} xᵅ yᵝ zᵞ`.
    pub fn eval(&self, x: &[S], y: &[S], z: &[S]) -> S {
        let mut acc = S::zero();
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xa.times(yb);
                for (c, zc) in z.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    let g = self.g.get(a + 1, b + 1, c + 1);
                    if !g.is_zero() {
                        acc = acc.plus(&g.times(&xy).times(zc));
                    }
                }
            }
        }
        acc
    }

    /// Largest `|g_{αβγ} − g_{σ(αβγ)}|` over all permutations.
    pub fn symmetry_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for a in 1..=9 {
            for b in 1..=9 {
                for c in 1..=9 {
                    let g = self.g.get(a, b, c);
                    for (p, q, r) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                        worst = worst.max(g.minus(self.g.get(p, q, r)).modulus());
                    }
                }
            }
        }
        worst
    }

    /// First-order invariance under `x → x + ε G x`: the totally symmetrized
    /// `Σ_σ g_{σβγ} G_{σα}` must vanish.
    pub fn lie_residual(&self, gen: &Matrix<S>) -> f64 {
        let mut t = vec![S::zero(); 729];
        let at = |a: usize, b: usize, c: usize| (a * 9 + b) * 9 + c;
        for a in 0..9 {
            for s in 0..9 {
                let gsa = gen.get(s, a);
                if gsa.is_zero() {
                    continue;
                }
                for b in 0..9 {
                    for c in 0..9 {
                        let g = self.g.get(s + 1, b + 1, c + 1);
                        if !g.is_zero() {
                            t[at(a, b, c)] = t[at(a, b, c)].plus(&g.times(gsa));
                        }
                    }
                }
            }
        }
        let mut worst: f64 = 0.0;
        for a in 0..9 {
            for b in 0..9 {
                for c in 0..9 {
                    let sym = t[at(a, b, c)].plus(&t[at(b, c, a)]).plus(&t[at(c, a, b)]);
                    worst = worst.max(sym.modulus());
                }
            }
        }
        worst
    }
}

/// `g±` with the standard float constants.
pub fn build_g(branch: Branch) -> TrilinearForm<Complex64> {
    TrilinearForm::build(&StructureConstants::fundamental(), branch)
}

/// Exact `I±(x)` for a 9-component vector in any backend.
pub fn cubic_invariant_in<S: Scalar>(sc: &StructureConstants<S>, x: &[S], branch: Branch) -> S {
    let mut dxxx = S::zero();
    for i in 1..=8 {
        for j in 1..=8 {
            for k in 1..=8 {
                let d = sc.d(i, j, k);
                if !d.is_zero() {
                    dxxx = dxxx.plus(&d.times(&x[i - 1]).times(&x[j - 1]).times(&x[k - 1]));
                }
            }
        }
    }
    let t = &x[8];
    let quad = x[..8].iter().fold(S::zero(), |acc, v| acc.plus(&v.times(v)));
    S::sqrt_three_halves()
        .times(&S::from_i64(-branch.sign()))
        .times(&dxxx)
        .plus(&S::from_ratio(3, 2).times(&quad).times(t))
        .minus(&t.times(t).times(t))
}

/// Lie-derivative residuals of g± under every J⁹ⁱ and K⁹±ⁱ, plus the
/// symmetry of g. With `boost_branch` different from `form_branch` the boost
/// residual is expected to be nonzero.
pub fn lie_invariance_relations<S: Scalar>(
    sc: &StructureConstants<S>,
    form_branch: Branch,
    boost_branch: Branch,
) -> Vec<Relation> {
    let form = TrilinearForm::build(sc, form_branch);
    let rot = max_residual(ninerep::j9(sc).iter().map(|j| form.lie_residual(&j.times_i())));
    let boost = max_residual(ninerep::k9(sc, boost_branch).iter().map(|k| form.lie_residual(&k.times_i())));
    let label = format!("g{form_branch}");
    vec![
        Relation::new(format!("{label}:symmetric"), "g is totally symmetric", form.symmetry_residual(), 729),
        Relation::new(
            format!("{label}:lie-rotation"),
            "symmetrized g_(s b c) (iJ9)_(s a) = 0 for every rotation generator",
            rot,
            8,
        ),
        Relation::new(
            format!("{label}:lie-boost{boost_branch}"),
            format!("symmetrized g_(s b c) (iK9{boost_branch})_(s a) = 0 for every boost generator"),
            boost,
            8,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ExactScalar;

    type E = ExactScalar;

    #[test]
    fn basic_values() {
        let e9 = NineVector::unit(9);
        assert_eq!(quad_space(&e9), 0.0);
        assert_eq!(cubic_sym(&e9), 0.0);
        assert_eq!(time_component(&e9), 1.0);
        assert_eq!(interval(&e9), -1.0);
        assert!((cubic_sym(&NineVector::unit(8)) + 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(quad_space(&NineVector::unit(1)), 1.0);
        assert_eq!(interval(&NineVector::unit(1).add(&e9)), 0.0);
    }

    #[test]
    fn cubic_examples() {
        let e9 = NineVector::unit(9);
        for b in Branch::BOTH {
            assert_eq!(cubic_invariant(&e9, b), -1.0);
            assert!((cubic_invariant(&NineVector::unit(1).add(&e9), b) - 0.5).abs() < 1e-15);
            assert_eq!(trilinear(&e9, &e9, &e9, b), -1.0);
        }
    }

    #[test]
    fn boost_defect_first_order_and_ratio() {
        let d = boost_defect_check(&NineVector::unit(1), 8, 0.01, Branch::Plus).unwrap();
        assert!((d.first_order - 0.02 / 3f64.sqrt()).abs() < 1e-15);
        assert!((d.ratio - 4.008).abs() < 1e-3, "{d:?}");
        let minus = boost_defect_check(&NineVector::unit(1), 8, 0.01, Branch::Minus).unwrap();
        assert_eq!(minus.first_order, -d.first_order);
        let t = boost_defect_check(&NineVector::unit(9), 3, 0.01, Branch::Plus).unwrap();
        assert_eq!(t.first_order, 0.0);
        assert!(boost_defect_check(&NineVector::unit(1), 9, 0.01, Branch::Plus).is_err());
    }

    #[test]
    fn exact_lie_conditions() {
        let sc = StructureConstants::<E>::fundamental();
        for b in Branch::BOTH {
            for r in lie_invariance_relations(&sc, b, b) {
                assert_eq!(r.residual, 0.0, "{}", r.id);
            }
            let cross = lie_invariance_relations(&sc, b, b.flipped());
            assert!(cross[2].residual > 0.0);
        }
    }

    #[test]
    fn polarization_matches_cubic_exactly() {
        let sc = StructureConstants::<E>::fundamental();
        let x: Vec<E> = (1..=9).map(|n| E::from_ratio(n - 4, n + 1)).collect();
        for b in Branch::BOTH {
            let g = TrilinearForm::build(&sc, b);
            assert_eq!(g.eval(&x, &x, &x), cubic_invariant_in(&sc, &x, b));
        }
    }

    #[test]
    fn float_trilinear_agrees_with_tensor() {
        let g = build_g(Branch::Minus);
        let x = NineVector::new([0.1, -0.4, 0.3, 0.9, -0.2, 0.5, 0.7, -0.6, 0.8]);
        let y = NineVector::new([0.3, 0.2, -0.1, 0.4, 0.6, -0.5, 0.1, 0.2, -0.3]);
        let z = NineVector::new([-0.7, 0.1, 0.5, -0.2, 0.3, 0.4, -0.8, 0.6, 0.2]);
        let c = |v: &NineVector| v.0.iter().map(|r| Complex64::new(*r, 0.0)).collect::<Vec<_>>();
        let want = g.eval(&c(&x), &c(&y), &c(&z)).re;
        assert!((trilinear(&x, &y, &z, Branch::Minus) - want).abs() < 1e-14);
    }
}
