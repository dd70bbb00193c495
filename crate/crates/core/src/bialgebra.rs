//! Cocycles, dual brackets, Yang–Baxter predicates and the oscillator
//! bialgebra normal forms.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, Covector, LieAlgebra, Vector};
use crate::linalg::Matrix;
use crate::multivector::{self, Bivector, Trivector};
use crate::oscillator::{self, OscillatorAlgebra, OscillatorError, E_MINUS1, E_ZERO};
use crate::scalar::{self, Scalar};

/// Factor in front of `e₀∧((J_a + ad_{u₀})u)` in the bialgebra cocycle.
/// Fixed by requiring [`closed_form_dual`] to agree with
/// [`dual_bracket_from_cocycle`] ∘ [`params_cocycle`]; see [`calibrate_cocycle_factor`].
pub const COCYCLE_FACTOR: i64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BialgebraError {
    #[error("dual bracket violates Jacobi at ({i}, {j}, {k}); residual {residual}")]
    JacobiFailure { i: usize, j: usize, k: usize, residual: Vector },
    #[error("bivector is not in ∧²S")]
    RNotInWedge2S,
    #[error("u₀ is not in S")]
    U0NotInS,
    #[error("parameter condition violated; residual {residual}")]
    ConditionViolated { residual: Bivector },
    #[error("λ is not generic")]
    NotGeneric,
    #[error("cocycle is not a bialgebra structure: {0}")]
    NotABialgebra(String),
    #[error("bivector solves neither Yang–Baxter equation")]
    NotAYangBaxterSolution,
    #[error("structure check failed: {0}")]
    StructureMismatch(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Oscillator(#[from] OscillatorError),
}

/// A linear map `ξ: g → ∧²g` stored by its basis images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    images: Vec<Bivector>,
}

impl Cocycle {
    pub fn new(images: Vec<Bivector>) -> Result<Self, BialgebraError> {
        let d = images.len();
        if let Some(b) = images.iter().find(|b| b.dim() != d) {
            return Err(BialgebraError::DimensionMismatch { expected: d, got: b.dim() });
        }
        Ok(Self { images })
    }

    pub fn zero(dim: usize) -> Self {
        Self { images: vec![Bivector::zero(dim); dim] }
    }

    /// `u ↦ ad†_u r`.
    pub fn coboundary(g: &LieAlgebra, r: &Bivector) -> Self {
        Self { images: (0..g.dim()).map(|i| multivector::ad_dag_bivector(g, &g.basis(i), r)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> &Bivector {
        &self.images[i]
    }

    pub fn images(&self) -> &[Bivector] {
        &self.images
    }

    pub fn apply(&self, u: &Vector) -> Bivector {
        let mut out = Bivector::zero(self.dim());
        for (x, b) in u.components().iter().zip(&self.images) {
            if !x.is_zero() {
                out = out.axpy(x, b);
            }
        }
        out
    }
}

/// Where a dual bracket came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Cocycle,
    RMatrix,
    Closed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualAlgebra {
    pub algebra: LieAlgebra,
    pub provenance: Provenance,
}

impl DualAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `[b_i*, b_j*]` as a covector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Covector {
        Covector::new(self.algebra.structure(i, j).components().to_vec())
    }

    pub fn bracket(&self, a: &Covector, b: &Covector) -> Covector {
        let v = self
            .algebra
            .bracket(&Vector::new(a.components().to_vec()), &Vector::new(b.components().to_vec()));
        Covector::new(v.into_components())
    }
}

pub fn dual_labels(g: &LieAlgebra) -> Vec<String> {
    g.labels().iter().map(|l| format!("{l}*")).collect()
}

fn build_dual(g: &LieAlgebra, c: Vec<Vec<Vector>>, provenance: Provenance) -> Result<DualAlgebra, BialgebraError> {
    match LieAlgebra::new(dual_labels(g), c) {
        Ok(algebra) => Ok(DualAlgebra { algebra, provenance }),
        Err(AlgebraError::JacobiViolation { i, j, k, residual }) => {
            Err(BialgebraError::JacobiFailure { i, j, k, residual })
        }
        Err(e) => unreachable!("dual structure constants are skew by construction: {e}"),
    }
}

/// `ξ([b_i,b_j]) − ad†_{b_i}ξ(b_j) + ad†_{b_j}ξ(b_i)`.
pub fn cocycle_residual(g: &LieAlgebra, xi: &Cocycle, i: usize, j: usize) -> Bivector {
    let lhs = xi.apply(g.structure(i, j));
    let a = multivector::ad_dag_bivector(g, &g.basis(i), xi.image(j));
    let b = multivector::ad_dag_bivector(g, &g.basis(j), xi.image(i));
    &(&lhs - &a) + &b
}

/// The first basis pair `(i, j)`, `i < j`, where the cocycle identity fails.
pub fn cocycle_check(g: &LieAlgebra, xi: &Cocycle) -> Option<(usize, usize, Bivector)> {
    assert_eq!(g.dim(), xi.dim(), "dimension mismatch");
    let d = g.dim();
    for i in 0..d {
        for j in i + 1..d {
            let res = cocycle_residual(g, xi, i, j);
            if !res.is_zero() {
                return Some((i, j, res));
            }
        }
    }
    None
}

pub fn is_cocycle(g: &LieAlgebra, xi: &Cocycle) -> bool {
    cocycle_check(g, xi).is_none()
}

/// Basis of the space of 1-cocycles `g → ∧²g`, by exact elimination.
pub fn solve_cocycle_space(g: &LieAlgebra) -> Vec<Cocycle> {
    let d = g.dim();
    let m = d * (d - 1) / 2;
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let wedges: Vec<Bivector> = (0..m)
        .map(|p| {
            let mut c = vec![Scalar::zero(); m];
            c[p] = Scalar::one();
            Bivector::from_upper_coordinates(d, &c)
        })
        .collect();
    // ad_dag[i][p] = ad†_{b_i} B_p
    let ad_dag: Vec<Vec<Vec<Scalar>>> = (0..d)
        .map(|i| {
            let bi = g.basis(i);
            wedges.iter().map(|w| multivector::ad_dag_bivector(g, &bi, w).upper_coordinates()).collect()
        })
        .collect();
    let rows = pairs.len() * m;
    let cols = d * m;
    let mut op = Matrix::zeros(rows, cols);
    for (pi, &(i, j)) in pairs.iter().enumerate() {
        let c = g.structure(i, j);
        for k in 0..d {
            for p in 0..m {
                let col = k * m + p;
                if !c[k].is_zero() {
                    op[(pi * m + p, col)] += &c[k];
                }
                if k == j {
                    for (q, v) in ad_dag[i][p].iter().enumerate() {
                        op[(pi * m + q, col)] -= v;
                    }
                }
                if k == i {
                    for (q, v) in ad_dag[j][p].iter().enumerate() {
                        op[(pi * m + q, col)] += v;
                    }
                }
            }
        }
    }
    op.kernel_basis()
        .into_iter()
        .map(|v| Cocycle {
            images: (0..d).map(|k| Bivector::from_upper_coordinates(d, &v[k * m..(k + 1) * m])).collect(),
        })
        .collect()
}

/// Skew table of `[b_i*, b_j*]*(b_k) = ξ(b_k)(b_i*, b_j*)`, before any Jacobi check.
pub fn cocycle_bracket_table(g: &LieAlgebra, xi: &Cocycle) -> Result<Vec<Vec<Vector>>, BialgebraError> {
    let d = g.dim();
    if xi.dim() != d {
        return Err(BialgebraError::DimensionMismatch { expected: d, got: xi.dim() });
    }
    Ok((0..d)
        .map(|i| (0..d).map(|j| Vector::new((0..d).map(|k| xi.image(k).get(i, j).clone()).collect())).collect())
        .collect())
}

pub fn dual_bracket_from_cocycle(g: &LieAlgebra, xi: &Cocycle) -> Result<DualAlgebra, BialgebraError> {
    build_dual(g, cocycle_bracket_table(g, xi)?, Provenance::Cocycle)
}

/// `[α,β]_r = ad*_{r_#β}α − ad*_{r_#α}β`.
pub fn r_bracket(g: &LieAlgebra, r: &Bivector) -> Result<DualAlgebra, BialgebraError> {
    build_dual(g, r_bracket_table(g, r)?, Provenance::RMatrix)
}

/// Skew table of `[b_i*, b_j*]_r`, before any Jacobi check.
pub fn r_bracket_table(g: &LieAlgebra, r: &Bivector) -> Result<Vec<Vec<Vector>>, BialgebraError> {
    let d = g.dim();
    if r.dim() != d {
        return Err(BialgebraError::DimensionMismatch { expected: d, got: r.dim() });
    }
    let duals: Vec<Covector> = (0..d).map(|i| g.dual_basis(i)).collect();
    let sharps: Vec<Vector> = duals.iter().map(|a| r.sharp(a)).collect();
    let mut c = vec![vec![Vector::zero(d); d]; d];
    for i in 0..d {
        for j in i + 1..d {
            let v = &g.coadjoint(&sharps[j], &duals[i]) - &g.coadjoint(&sharps[i], &duals[j]);
            let v = Vector::new(v.into_components());
            c[j][i] = -&v;
            c[i][j] = v;
        }
    }
    Ok(c)
}

pub fn cybe_check(g: &LieAlgebra, r: &Bivector) -> bool {
    multivector::schouten_self(g, r).is_zero()
}

/// The first basis element `b_i` with `ad_{b_i}[r,r] ≠ 0`, with that trivector.
pub fn gybe_residual(g: &LieAlgebra, r: &Bivector) -> Option<(usize, Trivector)> {
    let s = multivector::schouten_self(g, r);
    if s.is_zero() {
        return None;
    }
    (0..g.dim()).find_map(|i| {
        let t = multivector::ad_trivector(g, &g.basis(i), &s);
        (!t.is_zero()).then_some((i, t))
    })
}

pub fn gybe_check(g: &LieAlgebra, r: &Bivector) -> bool {
    gybe_residual(g, r).is_none()
}

/// Parameters `(r, u₀, a)` of a bialgebra cocycle on an oscillator algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BialgebraParams {
    pub r: Bivector,
    pub u0: Vector,
    pub a: Vec<Scalar>,
}

impl BialgebraParams {
    pub fn zero(g: &OscillatorAlgebra) -> Self {
        Self { r: Bivector::zero(g.dim()), u0: Vector::zero(g.dim()), a: vec![Scalar::zero(); g.n()] }
    }
}

fn require_wedge2_s(g: &OscillatorAlgebra, r: &Bivector) -> Result<(), BialgebraError> {
    if r.dim() != g.dim() {
        return Err(BialgebraError::DimensionMismatch { expected: g.dim(), got: r.dim() });
    }
    if !g.in_wedge2_s(r) {
        return Err(BialgebraError::RNotInWedge2S);
    }
    Ok(())
}

fn require_params(g: &OscillatorAlgebra, p: &BialgebraParams) -> Result<(), BialgebraError> {
    require_wedge2_s(g, &p.r)?;
    if p.u0.dim() != g.dim() {
        return Err(BialgebraError::DimensionMismatch { expected: g.dim(), got: p.u0.dim() });
    }
    if !g.in_s(&p.u0) {
        return Err(BialgebraError::U0NotInS);
    }
    g.j_a(&p.a)?;
    Ok(())
}

/// `ω_{r, ad†_{e₋₁}r} − (J†_a ∘ ad†_{e₋₁}) r`.
pub fn bialgebra_condition(g: &OscillatorAlgebra, r: &Bivector, a: &[Scalar]) -> Result<Bivector, BialgebraError> {
    require_wedge2_s(g, r)?;
    let j = g.j_a(a)?;
    let ad = g.ad_em1_dag(r);
    Ok(&g.omega_pair(r, &ad) - &multivector::j_dag(&j.map, &ad))
}

/// `ω_{r₀, ad†_{e₋₁}r₀} + α (ad†_{e₋₁})² r₀`.
pub fn reduced_gybe(g: &OscillatorAlgebra, r0: &Bivector, alpha: &Scalar) -> Result<Bivector, BialgebraError> {
    require_wedge2_s(g, r0)?;
    let ad = g.ad_em1_dag(r0);
    Ok(&g.omega_pair(r0, &ad) + &g.ad_em1_dag(&ad).scale(alpha))
}

/// `ω_{r₀,r₀} + α ad†_{e₋₁} r₀`.
pub fn reduced_cybe(g: &OscillatorAlgebra, r0: &Bivector, alpha: &Scalar) -> Result<Bivector, BialgebraError> {
    require_wedge2_s(g, r0)?;
    Ok(&g.omega_pair(r0, r0) + &g.ad_em1_dag(r0).scale(alpha))
}

fn cocycle_with_factor(g: &OscillatorAlgebra, p: &BialgebraParams, factor: &Scalar) -> Result<Cocycle, BialgebraError> {
    require_params(g, p)?;
    let alg = g.algebra();
    let j = g.j_a(&p.a)?.map.add(&alg.ad_matrix(&p.u0));
    let e0 = g.e0();
    let images = (0..g.dim())
        .map(|k| {
            let u = alg.basis(k);
            let w = j.apply(&u).scale(factor);
            &multivector::ad_dag_bivector(alg, &u, &p.r) + &Bivector::wedge(&e0, &w)
        })
        .collect();
    Ok(Cocycle { images })
}

/// `ξ(u) = ad†_u r + 2 e₀∧((J_a + ad_{u₀})u)`.
pub fn params_cocycle(g: &OscillatorAlgebra, p: &BialgebraParams) -> Result<Cocycle, BialgebraError> {
    cocycle_with_factor(g, p, &scalar::int(COCYCLE_FACTOR))
}

/// The dual bracket in closed form:
/// `[e₀*,α] = 2J*α − 2(ad*_{e₋₁}α)(u₀) e₋₁* + i_{r_#α}ω`,
/// `[α,β] = (ad†_{e₋₁}r)(α,β) e₋₁*` for `α,β ∈ S*`, and `e₋₁*` central.
pub fn closed_form_dual(g: &OscillatorAlgebra, p: &BialgebraParams) -> Result<DualAlgebra, BialgebraError> {
    require_params(g, p)?;
    let residual = bialgebra_condition(g, &p.r, &p.a)?;
    if !residual.is_zero() {
        return Err(BialgebraError::ConditionViolated { residual });
    }
    let alg = g.algebra();
    let d = g.dim();
    let two = scalar::int(2);
    let j = g.j_a(&p.a)?;
    let em1 = g.em1();
    let ad_r = g.ad_em1_dag(&p.r);
    let mut c = vec![vec![Vector::zero(d); d]; d];
    for s in g.s_indices() {
        let alpha = alg.dual_basis(s);
        let mut v = j.map.dual_apply(&alpha).scale(&two);
        let shift = alg.coadjoint(&em1, &alpha).pair(&p.u0);
        v = &v - &alg.dual_basis(E_MINUS1).scale(&(&two * shift));
        v = &v + &g.interior(&p.r.sharp(&alpha));
        let v = Vector::new(v.into_components());
        c[s][E_ZERO] = -&v;
        c[E_ZERO][s] = v;
        for t in s + 1..d {
            let x = Vector::basis(d, E_MINUS1).scale(ad_r.get(s, t));
            c[t][s] = -&x;
            c[s][t] = x;
        }
    }
    build_dual(alg, c, Provenance::Closed)
}

/// Determines the constant `κ` for which `ξ(u) = ad†_u r + κ e₀∧((J + ad_{u₀})u)`
/// reproduces [`closed_form_dual`], by comparing against the unit-factor cocycle
/// at `r = 0`, `u₀ = 0`, `a = (1, …, 1)`.
pub fn calibrate_cocycle_factor(g: &OscillatorAlgebra) -> Option<Scalar> {
    let p = BialgebraParams { a: vec![Scalar::one(); g.n()], ..BialgebraParams::zero(g) };
    let unit = cocycle_with_factor(g, &p, &Scalar::one()).ok()?;
    let unit = dual_bracket_from_cocycle(g.algebra(), &unit).ok()?;
    let closed = closed_form_dual(g, &p).ok()?;
    let (e1, ec1) = (oscillator::e_index(1), oscillator::ec_index(1));
    let u = unit.algebra.structure(E_ZERO, e1)[ec1].clone();
    let c = closed.algebra.structure(E_ZERO, e1)[ec1].clone();
    if u.is_zero() {
        return None;
    }
    let k = c / u;
    let scaled = cocycle_with_factor(g, &p, &k).ok()?;
    (dual_bracket_from_cocycle(g.algebra(), &scaled).ok()?.algebra == closed.algebra).then_some(k)
}

/// Recovers `(r, u₀, a)` from a bialgebra cocycle on a generic `G_λ`.
pub fn extract_params(g: &OscillatorAlgebra, xi: &Cocycle) -> Result<BialgebraParams, BialgebraError> {
    if !g.is_generic() {
        return Err(BialgebraError::NotGeneric);
    }
    let d = g.dim();
    if xi.dim() != d {
        return Err(BialgebraError::DimensionMismatch { expected: d, got: xi.dim() });
    }
    let n = g.n();
    let two = scalar::int(2);
    let (e, ec) = (oscillator::e_index, oscillator::ec_index);
    let at = |u: usize, beta: usize| xi.image(u).get(E_ZERO, beta).clone();
    let mut a = Vec::with_capacity(n);
    let mut r = Bivector::zero(d);
    let mut u0 = vec![Scalar::zero(); d];
    for j in 1..=n {
        a.push(at(e(j), ec(j)) / &two);
        let l = &g.lambda()[j - 1];
        u0[ec(j)] = at(E_MINUS1, e(j)) / (&two * l);
        u0[e(j)] = -at(E_MINUS1, ec(j)) / (&two * l);
        for i in 1..=n {
            r.set(e(i), ec(j), -at(e(j), e(i)));
            if i < j {
                r.set(e(i), e(j), at(ec(j), e(i)));
                r.set(ec(i), ec(j), -at(e(j), ec(i)));
            }
        }
    }
    let params = BialgebraParams { r, u0: Vector::new(u0), a };
    let rebuilt = params_cocycle(g, &params)?;
    if &rebuilt != xi {
        return Err(BialgebraError::NotABialgebra("cocycle is not of the normal form".into()));
    }
    let residual = bialgebra_condition(g, &params.r, &params.a)?;
    if !residual.is_zero() {
        return Err(BialgebraError::NotABialgebra(format!("parameter condition fails: {residual}")));
    }
    Ok(params)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum YbeCase {
    Cybe,
    Gybe,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YangBaxterNormalForm {
    pub case: YbeCase,
    /// Raw `e₀∧e₋₁` coefficient.
    pub coef: Scalar,
    /// `coef` for the classical equation, `coef / 2` for the generalized one.
    pub alpha: Scalar,
    pub u0: Vector,
    pub r0: Bivector,
}

/// Normal form of a Yang–Baxter solution on `G_λ`, with the reduced
/// condition on `r₀` verified.
pub fn yang_baxter_normal_form(g: &OscillatorAlgebra, r: &Bivector) -> Result<YangBaxterNormalForm, BialgebraError> {
    let alg = g.algebra();
    let case = if cybe_check(alg, r) {
        YbeCase::Cybe
    } else if gybe_check(alg, r) {
        YbeCase::Gybe
    } else {
        return Err(BialgebraError::NotAYangBaxterSolution);
    };
    let parts = g.decompose(r)?;
    let (alpha, residual) = match case {
        YbeCase::Cybe => {
            let alpha = parts.coef.clone();
            let res = reduced_cybe(g, &parts.r0, &alpha)?;
            (alpha, res)
        }
        YbeCase::Gybe => {
            let alpha = &parts.coef / scalar::int(2);
            let res = reduced_gybe(g, &parts.r0, &alpha)?;
            (alpha, res)
        }
    };
    if !residual.is_zero() {
        return Err(BialgebraError::ConditionViolated { residual });
    }
    Ok(YangBaxterNormalForm { case, coef: parts.coef, alpha, u0: parts.u0, r0: parts.r0 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualStructureReport {
    pub p: usize,
    pub heisenberg_dim: usize,
    pub form_rank: usize,
    pub unimodular: bool,
    pub unimodular_by_trace: bool,
    pub center_contains_em1star: bool,
    pub brackets_into_line: bool,
    pub ideal_center_dim: usize,
    pub solvable: bool,
}

/// Structure of the dual of a bialgebra on `G_λ`.
pub fn analyze_dual_structure(g: &OscillatorAlgebra, p: &BialgebraParams) -> Result<DualStructureReport, BialgebraError> {
    let dual = closed_form_dual(g, p)?;
    let n = g.n();
    let d = g.dim();
    let s: Vec<usize> = g.s_indices().collect();
    let ad_r = g.ad_em1_dag(&p.r);
    let form = Matrix::from_fn(s.len(), s.len(), |x, y| ad_r.get(s[x], s[y]).clone());
    let form_rank = form.rank();
    let p_half = (2 * n - form_rank) / 2;
    let sum = (1..=n).fold(Scalar::zero(), |acc, i| acc + p.r.get(oscillator::e_index(i), oscillator::ec_index(i)));
    let unimodular = sum.is_zero();
    let dual_alg = &dual.algebra;
    let unimodular_by_trace = dual_alg.is_unimodular();
    let em1 = Vector::basis(d, E_MINUS1);
    let center_contains_em1star = (0..d).all(|i| dual_alg.bracket(&em1, &dual_alg.basis(i)).is_zero());
    let brackets_into_line = s.iter().all(|&x| {
        s.iter().all(|&y| {
            let v = dual_alg.structure(x, y);
            (0..d).all(|k| k == E_MINUS1 || v[k].is_zero())
        })
    });
    let ideal: Vec<Vector> = std::iter::once(em1.clone()).chain(s.iter().map(|&x| Vector::basis(d, x))).collect();
    let ideal_center_dim = dual_alg.centralizer_in(&ideal, &ideal).len();
    let report = DualStructureReport {
        p: p_half,
        heisenberg_dim: 2 * (n - p_half) + 1,
        form_rank,
        unimodular,
        unimodular_by_trace,
        center_contains_em1star,
        brackets_into_line,
        ideal_center_dim,
        solvable: dual_alg.is_solvable(),
    };
    let mut problems = Vec::new();
    if !form_rank.is_multiple_of(2) {
        problems.push("odd rank");
    }
    if unimodular != unimodular_by_trace {
        problems.push("unimodularity criteria disagree");
    }
    if !center_contains_em1star {
        problems.push("e₋₁* not central");
    }
    if !brackets_into_line {
        problems.push("[S*,S*] not in ℝe₋₁*");
    }
    if !dual_alg.is_ideal(&ideal) {
        problems.push("span(e₋₁*, S*) is not an ideal");
    }
    if ideal_center_dim != 2 * p_half + 1 {
        problems.push("center of span(e₋₁*, S*) has wrong dimension");
    }
    if !report.solvable {
        problems.push("dual not solvable");
    }
    if problems.is_empty() {
        Ok(report)
    } else {
        Err(BialgebraError::StructureMismatch(problems.join("; ")))
    }
}

/// `Σ r(e_i*, ě_i*)`.
pub fn diagonal_sum(r: &Bivector, n: usize) -> Scalar {
    (1..=n).fold(Scalar::zero(), |acc, i| acc + r.get(oscillator::e_index(i), oscillator::ec_index(i)))
}

/// Kernel dimension of the skew form `(α,β) ↦ ad†_{e₋₁}r(α,β)` on `S*`.
pub fn restricted_form_kernel_dim(g: &OscillatorAlgebra, r: &Bivector) -> usize {
    let s: Vec<usize> = g.s_indices().collect();
    let ad_r = g.ad_em1_dag(r);
    let form = Matrix::from_fn(s.len(), s.len(), |x, y| ad_r.get(s[x], s[y]).clone());
    form.kernel_basis().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{sl2, Vector};
    use crate::catalog;
    use crate::oscillator::build_oscillator;
    use crate::scalar::{int, ratio};

    fn osc(l: &[i64]) -> OscillatorAlgebra {
        build_oscillator(&l.iter().map(|&x| int(x)).collect::<Vec<_>>()).unwrap()
    }

    fn params(r: Bivector, u0: Vector, a: &[Scalar]) -> BialgebraParams {
        BialgebraParams { r, u0, a: a.to_vec() }
    }

    #[test]
    fn coboundary_is_a_cocycle() {
        let g = osc(&[1]);
        let xi = Cocycle::coboundary(g.algebra(), &g.t(1));
        assert!(is_cocycle(g.algebra(), &xi));
    }

    #[test]
    fn constant_map_is_not_a_cocycle() {
        let g = osc(&[1]);
        let xi = Cocycle::new(vec![g.t(1); 4]).unwrap();
        assert!(cocycle_check(g.algebra(), &xi).is_some());
        let res = cocycle_residual(g.algebra(), &xi, oscillator::e_index(1), oscillator::ec_index(1));
        assert!(!res.is_zero());
    }

    #[test]
    fn parametrized_cocycles_are_cocycles() {
        let g = osc(&[1, 2]);
        let e12 = catalog::ef_basis(&g, 1, 2).unwrap().e;
        let p = params(&e12 + &g.t(1), g.e(2), &[int(1), int(3)]);
        let xi = params_cocycle(&g, &p).unwrap();
        assert!(is_cocycle(g.algebra(), &xi));
    }

    #[test]
    fn cocycle_space_of_abelian_algebra() {
        let g = LieAlgebra::abelian(crate::algebra::default_labels(3));
        assert_eq!(solve_cocycle_space(&g).len(), 3 * 3);
    }

    #[test]
    fn cocycle_space_vanishes_on_e0() {
        let g = osc(&[1]);
        let basis = solve_cocycle_space(g.algebra());
        assert!(!basis.is_empty());
        for xi in &basis {
            assert!(is_cocycle(g.algebra(), xi));
            assert!(xi.image(E_ZERO).is_zero());
        }
    }

    #[test]
    fn zero_cocycle_gives_abelian_dual() {
        let g = osc(&[1]);
        let dual = dual_bracket_from_cocycle(g.algebra(), &Cocycle::zero(4)).unwrap();
        assert!(dual.algebra.structure_report().nilpotent);
        assert_eq!(dual.algebra.center().len(), 4);
    }

    #[test]
    fn violated_condition_gives_jacobi_failure() {
        let g = osc(&[1, 2]);
        let f = catalog::ef_basis(&g, 1, 2).unwrap().f;
        let a = [int(1), int(2)];
        assert!(!bialgebra_condition(&g, &f, &a).unwrap().is_zero());
        let xi = params_cocycle(&g, &params(f, Vector::zero(6), &a)).unwrap();
        assert!(matches!(dual_bracket_from_cocycle(g.algebra(), &xi), Err(BialgebraError::JacobiFailure { .. })));
    }

    #[test]
    fn sl2_r_bracket() {
        let g = sl2();
        let r = catalog::sl2_bivector(&int(1), &int(0), &int(0));
        let dual = r_bracket(&g, &r).unwrap();
        assert_eq!(dual.bracket_basis(0, 1), Covector::new(vec![int(-2), int(0), int(0)]));
        assert_eq!(dual.bracket_basis(1, 2), Covector::new(vec![int(0), int(0), int(2)]));
        assert!(dual.bracket_basis(0, 2).is_zero());
    }

    #[test]
    fn r_bracket_of_zero_is_abelian() {
        let g = osc(&[1, 2]);
        let dual = r_bracket(g.algebra(), &Bivector::zero(6)).unwrap();
        assert_eq!(dual.algebra.center().len(), 6);
    }

    #[test]
    fn yang_baxter_predicates() {
        let g = osc(&[1]);
        let alg = g.algebra();
        assert!(!cybe_check(alg, &g.t(1)));
        assert!(gybe_check(alg, &g.t(1)));
        let bad = Bivector::wedge(&g.em1(), &g.e(1));
        assert!(!gybe_check(alg, &bad));
        let g = osc(&[1, 2]);
        assert!(cybe_check(g.algebra(), &catalog::flat_complete_r(&g)));
    }

    #[test]
    fn e0_wedge_anything_solves_cybe() {
        let g = osc(&[1, 2]);
        for i in 0..6 {
            let r = Bivector::wedge(&g.e0(), &g.algebra().basis(i));
            assert!(cybe_check(g.algebra(), &r));
        }
    }

    #[test]
    fn bialgebra_condition_examples() {
        let g = osc(&[1, 2]);
        let ef = catalog::ef_basis(&g, 1, 2).unwrap();
        let t = &g.t(1).scale(&int(2)) + &g.t(2).scale(&int(-3));
        assert!(bialgebra_condition(&g, &t, &[int(5), int(-1)]).unwrap().is_zero());
        let r = &ef.e + &(&g.t(1) - &g.t(2)).scale(&int(3));
        assert!(bialgebra_condition(&g, &r, &[int(2), int(-2)]).unwrap().is_zero());
        assert!(!bialgebra_condition(&g, &ef.f, &[int(1), int(2)]).unwrap().is_zero());
        let bad = Bivector::wedge(&g.e0(), &g.e(1));
        assert_eq!(bialgebra_condition(&g, &bad, &[int(0), int(0)]), Err(BialgebraError::RNotInWedge2S));
    }

    #[test]
    fn reduced_yang_baxter_conditions() {
        let g = osc(&[1, 2]);
        let ef = catalog::ef_basis(&g, 1, 2).unwrap();
        let r0 = &(&ef.e + &g.t(1)) - &g.t(2);
        assert!(reduced_cybe(&g, &r0, &int(0)).unwrap().is_zero());
        assert_eq!(reduced_cybe(&g, &g.t(1), &int(0)).unwrap(), g.t(1));
        let t = &g.t(1).scale(&int(2)) + &g.t(2);
        assert!(reduced_gybe(&g, &t, &ratio(7, 3)).unwrap().is_zero());
    }

    #[test]
    fn calibrated_factor_is_two() {
        assert_eq!(calibrate_cocycle_factor(&osc(&[1])), Some(int(COCYCLE_FACTOR)));
        assert_eq!(calibrate_cocycle_factor(&osc(&[1, 2])), Some(int(COCYCLE_FACTOR)));
    }

    #[test]
    fn closed_form_matches_cocycle_dual() {
        let g = osc(&[1, 2]);
        let ef = catalog::ef_basis(&g, 1, 2).unwrap();
        let r = &ef.f + &(&g.t(1) - &g.t(2)).scale(&int(2));
        let u0 = &g.e(1) + &g.ec(2).scale(&int(-3));
        let p = params(r, u0, &[int(4), int(4)]);
        let a = closed_form_dual(&g, &p).unwrap();
        let b = dual_bracket_from_cocycle(g.algebra(), &params_cocycle(&g, &p).unwrap()).unwrap();
        assert_eq!(a.algebra, b.algebra);
    }

    #[test]
    fn closed_form_with_r_zero() {
        let g = osc(&[1, 2]);
        let p = params(Bivector::zero(6), Vector::zero(6), &[int(3), int(5)]);
        let dual = closed_form_dual(&g, &p).unwrap();
        let e1 = oscillator::e_index(1);
        let ec1 = oscillator::ec_index(1);
        // 2J*e₁* = −2a₁ě₁*
        assert_eq!(dual.algebra.structure(E_ZERO, e1), &Vector::basis(6, ec1).scale(&int(-6)));
        for x in g.s_indices() {
            for y in g.s_indices() {
                assert!(dual.algebra.structure(x, y).is_zero());
            }
        }
    }

    #[test]
    fn closed_form_rejects_violated_condition() {
        let g = osc(&[1, 2]);
        let f = catalog::ef_basis(&g, 1, 2).unwrap().f;
        let p = params(f, Vector::zero(6), &[int(1), int(2)]);
        assert!(matches!(closed_form_dual(&g, &p), Err(BialgebraError::ConditionViolated { .. })));
    }

    #[test]
    fn extraction_examples() {
        let g = osc(&[1]);
        let p = params(g.t(1).scale(&int(2)), Vector::zero(4), &[ratio(3, 2)]);
        let xi = params_cocycle(&g, &p).unwrap();
        let q = extract_params(&g, &xi).unwrap();
        assert_eq!(q.r, g.t(1).scale(&int(2)));
        assert_eq!(q.a, vec![ratio(3, 2)]);
        assert_eq!(extract_params(&g, &Cocycle::zero(4)).unwrap(), BialgebraParams::zero(&g));
        let ng = osc(&[1, 1]);
        assert_eq!(extract_params(&ng, &Cocycle::zero(6)), Err(BialgebraError::NotGeneric));
    }

    #[test]
    fn extraction_roundtrip_with_u0() {
        let g = osc(&[1, 2]);
        let ef = catalog::ef_basis(&g, 1, 2).unwrap();
        let r = &(&ef.e.scale(&int(2)) + &ef.e_check) + &(&g.t(1) - &g.t(2)).scale(&int(-1));
        let u0 = &(&g.e(1) + &g.ec(1).scale(&int(2))) + &g.ec(2).scale(&ratio(1, 3));
        let p = params(r, u0, &[int(-1), int(1)]);
        let xi = params_cocycle(&g, &p).unwrap();
        assert_eq!(extract_params(&g, &xi).unwrap(), p);
    }

    #[test]
    fn extraction_rejects_coboundary_off_normal_form() {
        let g = osc(&[1]);
        let xi = Cocycle::coboundary(g.algebra(), &Bivector::wedge(&g.em1(), &g.e(1)));
        assert!(matches!(extract_params(&g, &xi), Err(BialgebraError::NotABialgebra(_))));
    }

    #[test]
    fn normal_forms() {
        let g = osc(&[1, 2]);
        let r = catalog::flat_complete_r(&g);
        let nf = yang_baxter_normal_form(&g, &r).unwrap();
        assert_eq!(nf.case, YbeCase::Cybe);
        assert!(nf.alpha.is_zero());
        assert_eq!(nf.u0, g.e(1));
        assert_eq!(&r - &Bivector::wedge(&g.e0(), &g.e(1)), nf.r0);

        let r = &(&Bivector::wedge(&g.e0(), &g.em1()).scale(&int(2)) + &g.t(1)) + &g.t(2).scale(&int(3));
        let nf = yang_baxter_normal_form(&g, &r).unwrap();
        assert_eq!(nf.case, YbeCase::Gybe);
        assert_eq!(nf.alpha, int(1));

        let nf = yang_baxter_normal_form(&g, &Bivector::zero(6)).unwrap();
        assert_eq!(nf.case, YbeCase::Cybe);
        assert!(nf.coef.is_zero() && nf.u0.is_zero() && nf.r0.is_zero());
    }

    #[test]
    fn dual_structure_examples() {
        let g = osc(&[1, 2]);
        let a = [int(0), int(0)];
        let rep = analyze_dual_structure(&g, &params(g.t(1), Vector::zero(6), &a)).unwrap();
        assert_eq!(rep.p, 2);
        assert!(!rep.unimodular);
        let rep = analyze_dual_structure(&g, &BialgebraParams::zero(&g)).unwrap();
        assert_eq!(rep.p, 2);
        assert!(rep.unimodular);
        let rep = analyze_dual_structure(&g, &params(&g.t(1) - &g.t(2), Vector::zero(6), &a)).unwrap();
        assert!(rep.unimodular);
    }

    #[test]
    fn kernel_parameter_for_nondegenerate_form() {
        let g = osc(&[1, 2]);
        let ef = catalog::ef_basis(&g, 1, 2).unwrap();
        let r = &ef.e + &(&g.t(1) - &g.t(2));
        let rep = analyze_dual_structure(&g, &params(r, g.e(1), &[int(1), int(-1)])).unwrap();
        assert_eq!(rep.heisenberg_dim, 2 * (2 - rep.p) + 1);
        assert!(rep.unimodular && rep.unimodular_by_trace);
        assert_eq!(restricted_form_kernel_dim(&g, &g.t(1)), 4);
    }
}
