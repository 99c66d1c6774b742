//! Vector and boost matrices in the triplet, and the 3⊕3 block
//! representation that makes `[Vⁱ, Kʲ]` depend on anticommutators.
//!
//! In the triplet every V and K is a multiple of some J, so `[Vⁱ, Kʲ]` is
//! antisymmetric in ij. In the 6-rep
//!
//! ```text
//! J⁶ = diag(J, J)    K⁶ = diag(+iJ, −iJ)    V⁶ = [[0, V₊], [V₋, 0]]
//! ```
//!
//! and `[Vⁱ, Kʲ] = −i√(2/3) α δⁱʲ V⁹ − i β dⁱʲᵏ Vᵏ + i Δⁱʲ`. Requiring
//! `Δ = 0` leaves two branches (β = ±1), each giving nine commuting
//! momentum matrices confined to one off-diagonal block.

use crate::check::Relation;
use crate::error::AlgebraError;
use crate::numerics::{commutator, max_residual, residual, solve, Matrix, Scalar};
use crate::par::{self, ExecMode};
use crate::relations::{self, Signature};
use crate::su3::{contract, gellmann, Branch, GeneratorSet, Rep, StructureConstants, VectorKind};

/// Free constants of the 6-rep vector matrices plus the bracket coefficients α, β.
#[derive(Clone, Debug, PartialEq)]
pub struct SixRepConfig<S> {
    pub c_plus: S,
    pub c9_plus: S,
    pub c_minus: S,
    pub c9_minus: S,
    pub alpha: S,
    pub beta: S,
}

impl<S: Scalar> SixRepConfig<S> {
    /// The branch solution of `Δ = 0` with free scale `c` (nonzero α).
    pub fn branch(branch: Branch, alpha: &S, c: &S) -> Result<Self, AlgebraError> {
        let inv_alpha = alpha.recip().ok_or(AlgebraError::ZeroAlpha)?;
        let c9 = c.times(&S::inv_sqrt6()).times(&inv_alpha);
        Ok(match branch {
            Branch::Plus => Self {
                c_plus: c.clone(),
                c9_plus: c9,
                c_minus: S::zero(),
                c9_minus: S::zero(),
                alpha: alpha.clone(),
                beta: S::one(),
            },
            Branch::Minus => Self {
                c_plus: S::zero(),
                c9_plus: S::zero(),
                c_minus: c.clone(),
                c9_minus: c9.negated(),
                alpha: alpha.clone(),
                beta: S::from_i64(-1),
            },
        })
    }

    /// Residuals of the four constraints `√6 α c⁹₊ = c₊`, `√6 α c⁹₋ = −c₋`,
    /// `c₊(β − 1) = 0`, `c₋(β + 1) = 0`; the largest one.
    pub fn constraint_residual(&self) -> f64 {
        let s6a = S::sqrt6().times(&self.alpha);
        let one = S::one();
        max_residual([
            s6a.times(&self.c9_plus).minus(&self.c_plus).modulus(),
            s6a.times(&self.c9_minus).plus(&self.c_minus).modulus(),
            self.c_plus.times(&self.beta.minus(&one)).modulus(),
            self.c_minus.times(&self.beta.plus(&one)).modulus(),
        ])
    }
}

/// Both branch solutions for a given α, with c₊ = c₋ = 1.
pub fn solve_branch_constraints<S: Scalar>(alpha: &S) -> Result<(SixRepConfig<S>, SixRepConfig<S>), AlgebraError> {
    let one = S::one();
    Ok((
        SixRepConfig::branch(Branch::Plus, alpha, &one)?,
        SixRepConfig::branch(Branch::Minus, alpha, &one)?,
    ))
}

/// Triplet vectors `V^μ = {c Jⁱ, c⁹ 1}` and boosts `Kⁱ = +i Jⁱ`.
pub fn triplet_vk<S: Scalar>(c: &S, c9: &S) -> GeneratorSet<S> {
    let g = gellmann::<S>();
    let k = g.j.iter().map(Matrix::times_i).collect();
    let mut v: Vec<Matrix<S>> = g.j.iter().map(|m| m.scale(c)).collect();
    v.push(Matrix::identity(3).scale(c9));
    GeneratorSet {
        rep: Rep::Triplet,
        j: g.j,
        k: Some(k),
        v: Some(v),
        vector_kind: Some(VectorKind::Vector),
        branch: None,
    }
}

/// The triplet relations that do hold: `[V,J]` and the Lorentz-type set.
pub fn triplet_relations<S: Scalar>(
    gens: &GeneratorSet<S>,
    sc: &StructureConstants<S>,
    mode: ExecMode,
) -> Result<Vec<Relation>, AlgebraError> {
    let mut out = vec![relations::vector_rotation_relation(gens.vectors()?, &gens.j, sc, "3", mode)];
    out.extend(relations::lorentz_relations(&gens.j, gens.boosts()?, sc, "3", mode));
    Ok(out)
}

/// Shows the triplet cannot host an ij-symmetric `[Vⁱ, Kʲ]`.
///
/// Reports the symmetric part `[Vⁱ,Kʲ] + [Vʲ,Kⁱ]` (must be exactly zero),
/// the diagonal `[Vⁱ,Kⁱ]`, and `[V⁹, Kʲ]`.
pub fn triplet_failure_check<S: Scalar>(gens: &GeneratorSet<S>) -> Result<Vec<Relation>, AlgebraError> {
    let v = gens.vectors()?;
    let k = gens.boosts()?;
    let mut sym: f64 = 0.0;
    let mut diag: f64 = 0.0;
    let mut time: f64 = 0.0;
    for i in 0..8 {
        for j in 0..8 {
            let a = commutator(&v[i], &k[j])?;
            let b = commutator(&v[j], &k[i])?;
            sym = sym.max(residual(&(&a + &b)));
            if i == j {
                diag = diag.max(residual(&a));
            }
        }
        time = time.max(residual(&commutator(&v[8], &k[i])?));
    }
    Ok(vec![
        Relation::new("3:[V,K]-symmetric-part", "[V^i,K^j] + [V^j,K^i] = 0 in the triplet", sym, 64),
        Relation::new("3:[V,K]-diagonal", "[V^i,K^i] = 0 in the triplet", diag, 8),
        Relation::new("3:[V9,K]", "[V^9,K^j] = 0 in the triplet", time, 8),
    ])
}

fn off_diagonal<S: Scalar>(upper: &Matrix<S>, lower: &Matrix<S>) -> Matrix<S> {
    let z = Matrix::zeros(3, 3);
    Matrix::from_blocks(&z, upper, lower, &z).expect("3x3 blocks")
}

fn block_diagonal<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let z = Matrix::zeros(3, 3);
    Matrix::from_blocks(a, &z, &z, b).expect("3x3 blocks")
}

fn six_j_k<S: Scalar>() -> (Vec<Matrix<S>>, Vec<Matrix<S>>) {
    let g = gellmann::<S>();
    let j = g.j.iter().map(|m| block_diagonal(m, m)).collect();
    let k = g
        .j
        .iter()
        .map(|m| {
            let ik = m.times_i();
            block_diagonal(&ik, &-&ik)
        })
        .collect();
    (j, k)
}

/// The 6-rep J, K and off-diagonal V for a configuration.
pub fn build_six<S: Scalar>(cfg: &SixRepConfig<S>) -> GeneratorSet<S> {
    let (j, k) = six_j_k::<S>();
    let g = gellmann::<S>();
    let id = Matrix::<S>::identity(3);
    let mut v: Vec<Matrix<S>> = g
        .j
        .iter()
        .map(|m| off_diagonal(&m.scale(&cfg.c_plus), &m.scale(&cfg.c_minus)))
        .collect();
    v.push(off_diagonal(&id.scale(&cfg.c9_plus), &id.scale(&cfg.c9_minus)));
    GeneratorSet {
        rep: Rep::Six,
        j,
        k: Some(k),
        v: Some(v),
        vector_kind: Some(VectorKind::Vector),
        branch: None,
    }
}

/// Δⁱʲ computed from the closed form and recovered from the commutator.
#[derive(Clone, Debug)]
pub struct DeltaMismatch<S> {
    /// Row-major over (i, j) in 1..=8.
    pub closed_form: Vec<Matrix<S>>,
    pub from_commutator: Vec<Matrix<S>>,
}

impl<S: Scalar> DeltaMismatch<S> {
    /// Δⁱʲ (closed form), 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Matrix<S> {
        &self.closed_form[(i - 1) * 8 + (j - 1)]
    }

    /// Largest entry of any Δⁱʲ.
    pub fn max_norm(&self) -> f64 {
        max_residual(self.closed_form.iter().map(residual))
    }

    /// Largest disagreement between the two routes.
    pub fn disagreement(&self) -> f64 {
        max_residual(
            self.closed_form
                .iter()
                .zip(&self.from_commutator)
                .map(|(a, b)| residual(&(a - b))),
        )
    }
}

/// Δⁱʲ two ways:
/// (a) `δⁱʲ/3 [[0, (√6αc⁹₊ − c₊)1], [(√6αc⁹₋ + c₋)1, 0]] + dⁱʲᵏ [[0, c₊(β−1)Jᵏ], [c₋(β+1)Jᵏ, 0]]`
/// (b) `−i([Vⁱ,Kʲ] + i√(2/3)αδⁱʲV⁹ + iβdⁱʲᵏVᵏ)`.
pub fn delta_mismatch<S: Scalar>(
    cfg: &SixRepConfig<S>,
    sc: &StructureConstants<S>,
    mode: ExecMode,
) -> DeltaMismatch<S> {
    let six = build_six(cfg);
    let v = six.v.as_ref().expect("build_six sets V");
    let k = six.k.as_ref().expect("build_six sets K");
    let g = gellmann::<S>();
    let id = Matrix::<S>::identity(3);
    let one = S::one();
    let s6a = S::sqrt6().times(&cfg.alpha);
    let third = S::from_ratio(1, 3);
    let delta_block = off_diagonal(
        &id.scale(&s6a.times(&cfg.c9_plus).minus(&cfg.c_plus).times(&third)),
        &id.scale(&s6a.times(&cfg.c9_minus).plus(&cfg.c_minus).times(&third)),
    );
    let up = cfg.c_plus.times(&cfg.beta.minus(&one));
    let low = cfg.c_minus.times(&cfg.beta.plus(&one));
    let d_blocks: Vec<Matrix<S>> = g.j.iter().map(|m| off_diagonal(&m.scale(&up), &m.scale(&low))).collect();
    let i_unit = S::imag_unit();
    let minus_i = i_unit.negated();
    let r23a = S::sqrt_two_thirds().times(&cfg.alpha);

    let pairs: Vec<(Matrix<S>, Matrix<S>)> = par::map_indices(64, mode, |idx| {
        let (i, j) = (idx / 8 + 1, idx % 8 + 1);
        let mut closed = contract(&d_blocks, |kk| sc.d(i, j, kk).clone());
        if i == j {
            closed = &closed + &delta_block;
        }
        let mut inner = commutator(&v[i - 1], &k[j - 1]).expect("square");
        inner = &inner + &contract(&v[..8], |kk| sc.d(i, j, kk).times(&cfg.beta).times(&i_unit));
        if i == j {
            inner = &inner + &v[8].scale(&r23a.times(&i_unit));
        }
        (closed, inner.scale(&minus_i))
    });
    let (closed_form, from_commutator) = pairs.into_iter().unzip();
    DeltaMismatch {
        closed_form,
        from_commutator,
    }
}

/// Nine commuting 6×6 momentum matrices of one branch.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentumSet<S> {
    pub branch: Branch,
    pub alpha: S,
    pub c: S,
    pub p: Vec<Matrix<S>>,
}

/// Coefficients of a matrix in the momentum span and the reconstruction residual.
#[derive(Clone, Debug, PartialEq)]
pub struct SpanFit<S> {
    pub coeffs: Vec<S>,
    pub residual: f64,
}

impl<S: Scalar> MomentumSet<S> {
    /// P^μ for μ in 1..=9.
    pub fn get(&self, mu: usize) -> &Matrix<S> {
        &self.p[mu - 1]
    }

    /// Top-left corner of the nonzero 3×3 block.
    pub fn block_origin(&self) -> (usize, usize) {
        match self.branch {
            Branch::Plus => (0, 3),
            Branch::Minus => (3, 0),
        }
    }

    /// Decomposes `m` over the nine momenta.
    ///
    /// The nonzero blocks {cJⁱ, ±c·1/(√6α)} are linearly independent 3×3
    /// matrices, so the block entries give a square 9×9 system. The residual
    /// covers the whole 6×6 matrix, so anything outside the momentum block
    /// shows up there.
    pub fn span_decomposition(&self, m: &Matrix<S>) -> Result<SpanFit<S>, AlgebraError> {
        let (r0, c0) = self.block_origin();
        let basis = Matrix::from_fn(9, 9, |row, col| {
            self.p[col].get(r0 + row / 3, c0 + row % 3).clone()
        });
        let target = Matrix::from_fn(9, 1, |row, _| m.get(r0 + row / 3, c0 + row % 3).clone());
        let x = solve(&basis, &target)?;
        let coeffs: Vec<S> = x.entries().to_vec();
        let rebuilt = Matrix::linear_combination(&coeffs, &self.p)?;
        Ok(SpanFit {
            residual: residual(&(m - &rebuilt)),
            coeffs,
        })
    }
}

/// Momentum matrices for one branch with free scale `c`.
pub fn momentum_matrices<S: Scalar>(branch: Branch, alpha: &S, c: &S) -> Result<MomentumSet<S>, AlgebraError> {
    let cfg = SixRepConfig::branch(branch, alpha, c)?;
    let six = build_six(&cfg);
    Ok(MomentumSet {
        branch,
        alpha: alpha.clone(),
        c: c.clone(),
        p: six.v.expect("build_six sets V"),
    })
}

/// 6-rep J, K and the momentum set of `branch` as one generator set.
pub fn six_with_momentum<S: Scalar>(branch: Branch, alpha: &S, c: &S) -> Result<GeneratorSet<S>, AlgebraError> {
    let m = momentum_matrices(branch, alpha, c)?;
    let (j, k) = six_j_k::<S>();
    Ok(GeneratorSet {
        rep: Rep::Six,
        j,
        k: Some(k),
        v: Some(m.p),
        vector_kind: Some(VectorKind::Momentum),
        branch: Some(branch),
    })
}

/// Every 6-rep Poincaré-type relation for one branch, plus the abelian-ideal
/// property: each `[P^μ, X]` for X among J, K, P lies in span{Pᵛ}.
pub fn verify_poincare6<S: Scalar>(
    sc: &StructureConstants<S>,
    branch: Branch,
    alpha: &S,
    c: &S,
    mode: ExecMode,
) -> Result<Vec<Relation>, AlgebraError> {
    let gens = six_with_momentum(branch, alpha, c)?;
    let moms = momentum_matrices(branch, alpha, c)?;
    let k = gens.boosts()?;
    let p = gens.vectors()?;
    let label = format!("6{branch}");

    // α enters the relations as a scalar; the signature carries its sign
    // only for labeling, so build relations directly with the given α.
    let mut out = relations::lorentz_relations(&gens.j, k, sc, &label, mode);
    out.extend(momentum_boost_relations_scalar(p, k, sc, alpha, branch.sign(), &label, mode));
    let mut pj = relations::vector_rotation_relation(p, &gens.j, sc, &label, mode);
    pj.id = format!("{label}:[P,J]");
    pj.statement = "[P^mu, J^j] = i f^mujk P^k".into();
    out.push(pj);
    out.push(relations::momenta_commute(p, &label, mode));

    let others: Vec<&Matrix<S>> = gens.j.iter().chain(k).chain(p).collect();
    let ideal = par::map_indices(9 * others.len(), mode, |idx| {
        let (mu, x) = (idx / others.len(), idx % others.len());
        let br = commutator(&p[mu], others[x]).expect("square");
        moms.span_decomposition(&br).map_or(f64::INFINITY, |fit| fit.residual)
    });
    out.push(Relation::new(
        format!("{label}:abelian-ideal"),
        "[P^mu, X] lies in span{P^nu} for every X in {J, K, P}",
        max_residual(ideal),
        9 * others.len(),
    ));
    Ok(out)
}

fn momentum_boost_relations_scalar<S: Scalar>(
    p: &[Matrix<S>],
    k: &[Matrix<S>],
    sc: &StructureConstants<S>,
    alpha: &S,
    d_sign: i64,
    label: &str,
    mode: ExecMode,
) -> [Relation; 2] {
    // αP⁹ is independent of α, so rescale P⁹ and check against unit α.
    let mut scaled = p.to_vec();
    scaled[8] = p[8].scale(alpha);
    let sig = Signature::new(1, d_sign);
    let mut rels = relations::momentum_boost_relations(&scaled, k, sc, sig, label, mode);
    for r in &mut rels {
        r.statement = r.statement.replace("alpha=1", &format!("alpha={alpha}"));
    }
    rels
}

/// Coefficient tensor of `[Pⁱ, Kʲ]` in the momentum basis: entry (i, j, ν).
pub fn boost_bracket_coefficients<S: Scalar>(branch: Branch) -> Result<Vec<Vec<Vec<S>>>, AlgebraError> {
    let one = S::one();
    let gens = six_with_momentum(branch, &one, &one)?;
    let moms = momentum_matrices(branch, &one, &one)?;
    let k = gens.boosts()?;
    let mut out = Vec::with_capacity(9);
    for i in 0..9 {
        let mut row = Vec::with_capacity(8);
        for kj in k {
            let fit = moms.span_decomposition(&commutator(&moms.p[i], kj)?)?;
            if fit.residual > crate::numerics::Tolerances::default().algebraic_for(S::BACKEND) {
                return Err(AlgebraError::NotInSpan(fit.residual));
            }
            row.push(fit.coeffs);
        }
        out.push(row);
    }
    Ok(out)
}

/// The two branches' `[P,K]` coefficients differ exactly by the sign of d:
/// `c₊ − c₋ = −2i d` and `c₊ + c₋ = −2i√(2/3)(δⁱʲδ^{ν9} + δ^{jν}δ^{i9})`.
pub fn branch_exchange_relation<S: Scalar>(sc: &StructureConstants<S>) -> Result<Relation, AlgebraError> {
    let plus = boost_bracket_coefficients::<S>(Branch::Plus)?;
    let minus = boost_bracket_coefficients::<S>(Branch::Minus)?;
    let m2i = S::from_i64(-2).times_i();
    let r23 = S::sqrt_two_thirds();
    let mut worst: f64 = 0.0;
    for mu in 1..=9 {
        for j in 1..=8 {
            for nu in 1..=9 {
                let a = &plus[mu - 1][j - 1][nu - 1];
                let b = &minus[mu - 1][j - 1][nu - 1];
                let d_part = a.minus(b).minus(&m2i.times(sc.d(mu, j, nu)));
                let delta = (mu == j && nu == 9) || (nu == j && mu == 9);
                let want = if delta { m2i.times(&r23) } else { S::zero() };
                let sym_part = a.plus(b).minus(&want);
                worst = worst.max(d_part.modulus()).max(sym_part.modulus());
            }
        }
    }
    Ok(Relation::new(
        "6:branch-exchange",
        "the two branches' [P,K] coefficients differ only by d -> -d",
        worst,
        9 * 8 * 9,
    ))
}

/// Largest entry of `[P₊^μ, P₋^ν]` (not claimed to vanish; informational).
pub fn mixed_momentum_commutator<S: Scalar>() -> Result<f64, AlgebraError> {
    let one = S::one();
    let plus = momentum_matrices(Branch::Plus, &one, &one)?;
    let minus = momentum_matrices(Branch::Minus, &one, &one)?;
    let mut worst: f64 = 0.0;
    for a in &plus.p {
        for b in &minus.p {
            worst = worst.max(residual(&commutator(a, b)?));
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{ExactScalar, RealSurd};

    type E = ExactScalar;

    fn surd(s: &str) -> E {
        E::real(s.parse::<RealSurd>().unwrap())
    }

    #[test]
    fn triplet_v9_is_identity() {
        let g = triplet_vk(&E::one(), &E::one());
        assert_eq!(g.vectors().unwrap()[8], Matrix::identity(3));
    }

    #[test]
    fn branch_solutions_alpha_one() {
        let (p, m) = solve_branch_constraints(&E::one()).unwrap();
        assert_eq!(p.beta, E::one());
        assert_eq!(p.c_plus, E::one());
        assert_eq!(p.c9_plus, surd("1/6√6"));
        assert!(p.c_minus.is_zero() && p.c9_minus.is_zero());
        assert_eq!(m.beta, E::from_i64(-1));
        assert_eq!(m.c_minus, E::one());
        assert_eq!(m.c9_minus, surd("-1/6√6"));
        assert!(m.c_plus.is_zero() && m.c9_plus.is_zero());
        assert_eq!(p.constraint_residual(), 0.0);
        assert_eq!(m.constraint_residual(), 0.0);
    }

    #[test]
    fn alpha_sign_flips_time_component() {
        let (p1, m1) = solve_branch_constraints(&E::one()).unwrap();
        let (p2, m2) = solve_branch_constraints(&E::from_i64(-1)).unwrap();
        assert_eq!(p2.c9_plus, p1.c9_plus.negated());
        assert_eq!(m2.c9_minus, m1.c9_minus.negated());
        assert_eq!(p2.c_plus, p1.c_plus);
    }

    #[test]
    fn zero_alpha_rejected() {
        assert_eq!(solve_branch_constraints(&E::zero()).unwrap_err(), AlgebraError::ZeroAlpha);
        assert!(momentum_matrices(Branch::Plus, &E::zero(), &E::one()).is_err());
    }

    #[test]
    fn six_rep_block_pattern() {
        let cfg = SixRepConfig::branch(Branch::Plus, &E::one(), &E::one()).unwrap();
        let six = build_six(&cfg);
        let g = gellmann::<E>();
        let k1 = &six.k.as_ref().unwrap()[0];
        assert_eq!(k1.block(0, 0, 3, 3), g.j(1).times_i());
        assert_eq!(k1.block(3, 3, 3, 3), -&g.j(1).times_i());
        for v in six.v.as_ref().unwrap() {
            assert!(v.block(0, 0, 3, 3).is_zero());
            assert!(v.block(3, 3, 3, 3).is_zero());
        }
        assert!(six.dimensions_consistent());
    }

    #[test]
    fn momentum_time_blocks() {
        let p = momentum_matrices::<E>(Branch::Plus, &E::one(), &E::one()).unwrap();
        assert_eq!(p.get(9).block(0, 3, 3, 3), Matrix::identity(3).scale(&surd("1/6√6")));
        let m = momentum_matrices::<E>(Branch::Minus, &E::one(), &E::one()).unwrap();
        assert_eq!(m.get(9).block(3, 0, 3, 3), Matrix::identity(3).scale(&surd("-1/6√6")));
    }

    #[test]
    fn block_structure_preserved_by_products() {
        let one = E::one();
        let gens = six_with_momentum::<E>(Branch::Plus, &one, &one).unwrap();
        let moms = momentum_matrices::<E>(Branch::Plus, &one, &one).unwrap();
        for x in gens.j.iter().chain(gens.k.as_ref().unwrap()) {
            for p in &moms.p {
                for prod in [x * p, p * x] {
                    assert!(prod.block(0, 0, 3, 3).is_zero());
                    assert!(prod.block(3, 0, 3, 3).is_zero());
                    assert!(prod.block(3, 3, 3, 3).is_zero());
                }
            }
        }
    }

    #[test]
    fn violating_config_has_nonzero_delta() {
        let sc = StructureConstants::<E>::fundamental();
        let cfg = SixRepConfig {
            c_plus: E::one(),
            c9_plus: E::zero(),
            c_minus: E::one(),
            c9_minus: E::zero(),
            alpha: E::one(),
            beta: E::one(),
        };
        let dm = delta_mismatch(&cfg, &sc, ExecMode::Sequential);
        assert!(dm.max_norm() > 0.0);
        assert_eq!(dm.disagreement(), 0.0);
        // Δ¹¹ lower-left block carries c₋/3 · 1 + d¹¹⁸ c₋(β+1) J⁸
        assert!(!dm.get(1, 1).is_zero());
    }

    #[test]
    fn span_decomposition_rejects_foreign_matrix() {
        let p = momentum_matrices::<E>(Branch::Plus, &E::one(), &E::one()).unwrap();
        let fit = p.span_decomposition(&Matrix::identity(6)).unwrap();
        assert!(fit.residual > 0.0);
        let fit = p.span_decomposition(&p.get(4).scale(&E::from_i64(3))).unwrap();
        assert_eq!(fit.residual, 0.0);
        assert_eq!(fit.coeffs[3], E::from_i64(3));
    }

    #[test]
    fn poincare6_holds_exactly_for_both_branches() {
        let sc = StructureConstants::<E>::fundamental();
        for branch in Branch::BOTH {
            for alpha in [E::one(), E::from_i64(-2)] {
                let rels = verify_poincare6(&sc, branch, &alpha, &E::from_i64(3), ExecMode::Sequential).unwrap();
                for r in &rels {
                    assert_eq!(r.residual, 0.0, "{} {}", r.id, r.statement);
                }
            }
        }
    }

    #[test]
    fn branches_differ_by_d_sign() {
        let sc = StructureConstants::<E>::fundamental();
        assert_eq!(branch_exchange_relation(&sc).unwrap().residual, 0.0);
    }

    #[test]
    fn delta_vanishes_on_branches() {
        let sc = StructureConstants::<E>::fundamental();
        let (p, m) = solve_branch_constraints(&E::one()).unwrap();
        for cfg in [p, m] {
            let dm = delta_mismatch(&cfg, &sc, ExecMode::Sequential);
            assert_eq!(dm.max_norm(), 0.0);
            assert_eq!(dm.disagreement(), 0.0);
        }
    }

    #[test]
    fn triplet_symmetric_part_vanishes() {
        let g = triplet_vk(&E::one(), &E::from_i64(2));
        for r in triplet_failure_check(&g).unwrap() {
            assert_eq!(r.residual, 0.0, "{}", r.id);
        }
    }

    #[test]
    fn mixed_momenta_do_not_commute() {
        assert!(mixed_momentum_commutator::<E>().unwrap() > 0.0);
    }
}
