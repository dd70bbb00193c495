//! Left-invariant geometry on the dual of a quadratic Lie algebra.
//!
//! Curvature follows `R(α,β)γ = ∇_{[α,β]}γ − [∇_α,∇_β]γ`, the opposite of the
//! usual textbook sign. Flatness and local symmetry do not depend on it.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Covector, LieAlgebra, Vector};
use crate::bialgebra::{self, BialgebraError, DualAlgebra};
use crate::linalg::Matrix;
use crate::multivector::{self, Bivector};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("form is not symmetric")]
    NotSymmetric,
    #[error("form is degenerate")]
    Degenerate,
    #[error("form is not ad-invariant at ({u}, {v}, {w})")]
    NotAdInvariant { u: usize, v: usize, w: usize },
    #[error("dual metric is degenerate")]
    DegenerateMetric,
    #[error("curvature formulas disagree at ({i}, {j})")]
    FormulaMismatch { i: usize, j: usize },
    #[error("connection is not the Levi-Civita connection: {0}")]
    ConnectionMismatch(String),
    #[error("bivector does not solve the generalized Yang–Baxter equation")]
    NotGybe,
    #[error(transparent)]
    Bialgebra(#[from] BialgebraError),
}

/// An ad-invariant nondegenerate symmetric form on the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalStructure {
    matrix: Matrix,
}

impl OrthogonalStructure {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

pub fn validate_orthogonal(g: &LieAlgebra, form: &Matrix) -> Result<OrthogonalStructure, GeometryError> {
    let d = g.dim();
    if form.rows() != d || form.cols() != d {
        return Err(GeometryError::DimensionMismatch { expected: d, got: form.rows() });
    }
    if !form.is_symmetric() {
        return Err(GeometryError::NotSymmetric);
    }
    if form.determinant().is_zero() {
        return Err(GeometryError::Degenerate);
    }
    let pair = |x: &Vector, w: usize| (0..d).fold(Scalar::zero(), |acc, i| acc + &x[i] * &form[(i, w)]);
    for u in 0..d {
        for v in 0..d {
            for w in v..d {
                let a = pair(g.structure(u, v), w);
                let b = pair(g.structure(u, w), v);
                if !(a + b).is_zero() {
                    return Err(GeometryError::NotAdInvariant { u, v, w });
                }
            }
        }
    }
    Ok(OrthogonalStructure { matrix: form.clone() })
}

/// `⟨α,β⟩* = ⟨φ⁻¹α, φ⁻¹β⟩`; its matrix is the inverse of the form's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualMetric {
    matrix: Matrix,
}

impl DualMetric {
    pub fn from_matrix(matrix: Matrix) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn pair(&self, a: &Covector, b: &Covector) -> Scalar {
        let mb = self.matrix.mul_vec(b.components());
        a.components().iter().zip(&mb).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
    }
}

pub fn dual_metric(k: &OrthogonalStructure) -> DualMetric {
    DualMetric { matrix: k.matrix.inverse().expect("validated form is nondegenerate") }
}

/// `∇_{b_i*} b_j* = gamma[i·d + j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionTable {
    dim: usize,
    gamma: Vec<Covector>,
}

impl ConnectionTable {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Covector) -> Self {
        Self { dim, gamma: (0..dim * dim).map(|x| f(x / dim, x % dim)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Covector {
        &self.gamma[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(Covector::is_zero)
    }

    /// `∇_α β` for arbitrary covectors.
    pub fn apply(&self, a: &Covector, b: &Covector) -> Covector {
        let d = self.dim;
        let mut out = Covector::zero(d);
        for i in 0..d {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if !b[j].is_zero() {
                    out = out.axpy(&(&a[i] * &b[j]), self.get(i, j));
                }
            }
        }
        out
    }

    /// `∇_αβ − ∇_βα = [α,β]` on all basis pairs.
    pub fn is_torsion_free(&self, dual: &DualAlgebra) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..d).all(|j| (self.get(i, j) - self.get(j, i)) == dual.bracket_basis(i, j)))
    }

    /// `⟨∇_αβ,γ⟩* + ⟨β,∇_αγ⟩* = 0` on all basis triples.
    pub fn is_metric(&self, metric: &DualMetric) -> bool {
        let d = self.dim;
        let m = metric.matrix();
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    let a = (0..d).fold(Scalar::zero(), |acc, x| acc + &self.get(i, j)[x] * &m[(x, k)]);
                    let b = (0..d).fold(Scalar::zero(), |acc, x| acc + &m[(j, x)] * &self.get(i, k)[x]);
                    (a + b).is_zero()
                })
            })
        })
    }
}

/// `∇*_αβ = −ad*_{r_#α}β`.
pub fn connection(g: &LieAlgebra, r: &Bivector) -> ConnectionTable {
    let d = g.dim();
    let sharps: Vec<Vector> = (0..d).map(|i| r.sharp(&g.dual_basis(i))).collect();
    ConnectionTable::from_fn(d, |i, j| -&g.coadjoint(&sharps[i], &g.dual_basis(j)))
}

/// Levi-Civita connection by the Koszul formula
/// `2⟨∇_αβ,γ⟩ = ⟨[α,β],γ⟩ − ⟨[β,γ],α⟩ + ⟨[γ,α],β⟩`.
pub fn koszul_connection(dual: &DualAlgebra, metric: &DualMetric) -> Result<ConnectionTable, GeometryError> {
    let d = dual.dim();
    let m = metric.matrix();
    let inv = m.inverse().ok_or(GeometryError::DegenerateMetric)?;
    let half = scalar::half();
    let ip = |x: &Covector, k: usize| (0..d).fold(Scalar::zero(), |acc, y| acc + &x[y] * &m[(y, k)]);
    Ok(ConnectionTable::from_fn(d, |i, j| {
        let w: Vec<Scalar> = (0..d)
            .map(|k| {
                let v = ip(&dual.bracket_basis(i, j), k) - ip(&dual.bracket_basis(j, k), i)
                    + ip(&dual.bracket_basis(k, i), j);
                v * &half
            })
            .collect();
        Covector::new(inv.mul_vec(&w))
    }))
}

/// The vector with `γ(u_r(α,β)) = ½[r,r](α,β,γ)`.
pub fn u_r_map(g: &LieAlgebra, r: &Bivector, a: &Covector, b: &Covector) -> Vector {
    let s = multivector::schouten_self(g, r);
    u_r_from_schouten(g, &s, a, b)
}

fn u_r_from_schouten(g: &LieAlgebra, s: &multivector::Trivector, a: &Covector, b: &Covector) -> Vector {
    let half = scalar::half();
    Vector::new((0..g.dim()).map(|k| s.pair(a, b, &g.dual_basis(k)) * &half).collect())
}

/// Riemann tensor `riem[i][j][k][l]` and its covariant derivative
/// `nabla_r[ρ][i][j][k][l]`, stored flat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureTensor {
    dim: usize,
    riem: Vec<Scalar>,
    nabla_r: Vec<Scalar>,
}

impl CurvatureTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `b_l*` in `R(b_i*, b_j*) b_k*`.
    pub fn riem(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        let d = self.dim;
        &self.riem[((i * d + j) * d + k) * d + l]
    }

    /// Coefficient of `b_l*` in `(∇_{b_ρ*}R)(b_i*, b_j*) b_k*`.
    pub fn nabla_r(&self, rho: usize, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        let d = self.dim;
        &self.nabla_r[(((rho * d + i) * d + j) * d + k) * d + l]
    }

    pub fn operator(&self, i: usize, j: usize, k: usize) -> Covector {
        Covector::new((0..self.dim).map(|l| self.riem(i, j, k, l).clone()).collect())
    }

    pub fn is_flat(&self) -> bool {
        self.riem.iter().all(Zero::is_zero)
    }

    pub fn is_parallel(&self) -> bool {
        self.nabla_r.iter().all(Zero::is_zero)
    }
}

/// Curvature from the commutator formula, checked against
/// `R(α,β)γ = ad*_{u_r(α,β)}γ`, together with `∇R`.
pub fn curvature(g: &LieAlgebra, r: &Bivector, dual: &DualAlgebra, conn: &ConnectionTable) -> Result<CurvatureTensor, GeometryError> {
    let d = g.dim();
    let s = multivector::schouten_self(g, r);
    let blocks: Vec<Result<Vec<Vec<Covector>>, GeometryError>> = (0..d)
        .into_par_iter()
        .map(|i| {
            let ai = g.dual_basis(i);
            (0..d)
                .map(|j| {
                    let aj = g.dual_basis(j);
                    let br = dual.bracket_basis(i, j);
                    let u = u_r_from_schouten(g, &s, &ai, &aj);
                    (0..d)
                        .map(|k| {
                            let gk = g.dual_basis(k);
                            let first = conn.apply(&br, &gk);
                            let ab = conn.apply(&ai, conn.get(j, k));
                            let ba = conn.apply(&aj, conn.get(i, k));
                            let val = &(&first - &ab) + &ba;
                            if val != g.coadjoint(&u, &gk) {
                                return Err(GeometryError::FormulaMismatch { i, j });
                            }
                            Ok(val)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut rop: Vec<Vec<Vec<Covector>>> = Vec::with_capacity(d);
    for b in blocks {
        rop.push(b?);
    }
    let riem: Vec<Scalar> = rop.iter().flatten().flatten().flat_map(|c| c.components().to_vec()).collect();
    let flat = riem.iter().all(Zero::is_zero);
    let nabla_r = if flat { vec![Scalar::zero(); d.pow(5)] } else { nabla_curvature(d, &rop, conn) };
    Ok(CurvatureTensor { dim: d, riem, nabla_r })
}

/// `(∇_ρR)(α,β)γ = ∇_ρ(R(α,β)γ) − R(∇_ρα,β)γ − R(α,∇_ρβ)γ − R(α,β)∇_ργ`.
pub fn nabla_curvature(d: usize, rop: &[Vec<Vec<Covector>>], conn: &ConnectionTable) -> Vec<Scalar> {
    // R applied with a covector in one slot, by linearity
    let r_first = |a: &Covector, j: usize, k: usize| {
        (0..d).filter(|&m| !a[m].is_zero()).fold(Covector::zero(d), |acc, m| acc.axpy(&a[m], &rop[m][j][k]))
    };
    let r_second = |i: usize, b: &Covector, k: usize| {
        (0..d).filter(|&m| !b[m].is_zero()).fold(Covector::zero(d), |acc, m| acc.axpy(&b[m], &rop[i][m][k]))
    };
    let r_third = |i: usize, j: usize, c: &Covector| {
        (0..d).filter(|&m| !c[m].is_zero()).fold(Covector::zero(d), |acc, m| acc.axpy(&c[m], &rop[i][j][m]))
    };
    (0..d)
        .into_par_iter()
        .flat_map_iter(|rho| {
            let ar = Covector::basis(d, rho);
            let mut out = Vec::with_capacity(d.pow(4));
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let mut v = conn.apply(&ar, &rop[i][j][k]);
                        v = &v - &r_first(conn.get(rho, i), j, k);
                        v = &v - &r_second(i, conn.get(rho, j), k);
                        v = &v - &r_third(i, j, conn.get(rho, k));
                        out.extend(v.into_components());
                    }
                }
            }
            out.into_iter()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Completeness {
    Complete,
    Incomplete,
    NotDetermined,
}

/// A flat left-invariant metric is complete exactly when the group is unimodular.
pub fn completeness_verdict(flat: bool, unimodular: bool) -> Completeness {
    match (flat, unimodular) {
        (true, true) => Completeness::Complete,
        (true, false) => Completeness::Incomplete,
        (false, _) => Completeness::NotDetermined,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGeometryReport {
    pub dual: DualAlgebra,
    pub metric: DualMetric,
    pub connection: ConnectionTable,
    pub curvature: CurvatureTensor,
    pub flat: bool,
    pub locally_symmetric: bool,
    pub unimodular: bool,
    pub solvable: bool,
    pub completeness: Completeness,
    pub derived_dim: usize,
    pub derived_abelian: bool,
    pub ker_sharp_dim: usize,
    pub ker_sharp_abelian_ideal: bool,
    pub sharp_is_homomorphism: bool,
}

/// Serializable verdict summary of a [`DualGeometryReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometrySummary {
    pub flat: bool,
    pub locally_symmetric: bool,
    pub unimodular: bool,
    pub solvable: bool,
    pub completeness: Completeness,
    pub derived_dim: usize,
    pub derived_abelian: bool,
    pub ker_sharp_dim: usize,
    pub ker_sharp_abelian_ideal: bool,
    pub sharp_is_homomorphism: bool,
    pub levi_civita: bool,
}

impl DualGeometryReport {
    pub fn summary(&self) -> GeometrySummary {
        GeometrySummary {
            flat: self.flat,
            locally_symmetric: self.locally_symmetric,
            unimodular: self.unimodular,
            solvable: self.solvable,
            completeness: self.completeness,
            derived_dim: self.derived_dim,
            derived_abelian: self.derived_abelian,
            ker_sharp_dim: self.ker_sharp_dim,
            ker_sharp_abelian_ideal: self.ker_sharp_abelian_ideal,
            sharp_is_homomorphism: self.sharp_is_homomorphism,
            levi_civita: true,
        }
    }
}

pub fn geometry_report(g: &LieAlgebra, k: &OrthogonalStructure, r: &Bivector) -> Result<DualGeometryReport, GeometryError> {
    let d = g.dim();
    if k.dim() != d || r.dim() != d {
        return Err(GeometryError::DimensionMismatch { expected: d, got: r.dim().min(k.dim()) });
    }
    if !bialgebra::gybe_check(g, r) {
        return Err(GeometryError::NotGybe);
    }
    let dual = bialgebra::r_bracket(g, r)?;
    let metric = dual_metric(k);
    let conn = connection(g, r);
    if !conn.is_torsion_free(&dual) {
        return Err(GeometryError::ConnectionMismatch("torsion".into()));
    }
    if !conn.is_metric(&metric) {
        return Err(GeometryError::ConnectionMismatch("not metric".into()));
    }
    if conn != koszul_connection(&dual, &metric)? {
        return Err(GeometryError::ConnectionMismatch("differs from Koszul formula".into()));
    }
    let curvature = curvature(g, r, &dual, &conn)?;
    let flat = curvature.is_flat();
    let locally_symmetric = curvature.is_parallel();
    let alg = &dual.algebra;
    let unimodular = alg.is_unimodular();
    let derived = alg.bracket_span(&all_basis(alg), &all_basis(alg));
    let derived_abelian = alg.bracket_span(&derived, &derived).is_empty();
    let ker: Vec<Vector> =
        r.to_matrix().kernel_basis().into_iter().map(Vector::new).collect();
    let ker_sharp_abelian_ideal = alg.is_ideal(&ker) && alg.bracket_span(&ker, &ker).is_empty();
    let sharp_is_homomorphism = sharp_is_homomorphism(g, r, &dual);
    Ok(DualGeometryReport {
        flat,
        locally_symmetric,
        unimodular,
        solvable: alg.is_solvable(),
        completeness: completeness_verdict(flat, unimodular),
        derived_dim: derived.len(),
        derived_abelian,
        ker_sharp_dim: ker.len(),
        ker_sharp_abelian_ideal,
        sharp_is_homomorphism,
        dual,
        metric,
        connection: conn,
        curvature,
    })
}

fn all_basis(g: &LieAlgebra) -> Vec<Vector> {
    (0..g.dim()).map(|i| g.basis(i)).collect()
}

/// `r_#[α,β]_r = [r_#α, r_#β]` on basis pairs.
pub fn sharp_is_homomorphism(g: &LieAlgebra, r: &Bivector, dual: &DualAlgebra) -> bool {
    let d = g.dim();
    let sharps: Vec<Vector> = (0..d).map(|i| r.sharp(&g.dual_basis(i))).collect();
    (0..d).all(|i| (i + 1..d).all(|j| r.sharp(&dual.bracket_basis(i, j)) == g.bracket(&sharps[i], &sharps[j])))
}

/// The trace form of sl(2) in the basis `(h, e, -f)`.
pub fn sl2_trace_form() -> Matrix {
    let i = scalar::int;
    Matrix::from_rows(vec![vec![i(2), i(0), i(0)], vec![i(0), i(0), i(-1)], vec![i(0), i(-1), i(0)]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sl2;
    use crate::catalog;
    use crate::oscillator::{build_oscillator, E_ZERO};
    use crate::scalar::{int, ratio};

    #[test]
    fn orthogonal_structures() {
        let g = build_oscillator(&[int(1)]).unwrap();
        assert!(g.k_lambda().is_ok());
        assert!(validate_orthogonal(&sl2(), &sl2_trace_form()).is_ok());
        assert!(matches!(
            validate_orthogonal(g.algebra(), &Matrix::identity(4)),
            Err(GeometryError::NotAdInvariant { .. })
        ));
        assert_eq!(validate_orthogonal(&sl2(), &Matrix::zeros(3, 3)), Err(GeometryError::Degenerate));
    }

    #[test]
    fn dual_metrics() {
        let k = validate_orthogonal(&sl2(), &sl2_trace_form()).unwrap();
        let m = dual_metric(&k);
        let i = int;
        let expected = Matrix::from_rows(vec![
            vec![ratio(1, 2), i(0), i(0)],
            vec![i(0), i(0), i(-1)],
            vec![i(0), i(-1), i(0)],
        ]);
        assert_eq!(m.matrix(), &expected);

        let g = build_oscillator(&[int(1), int(2)]).unwrap();
        let m = dual_metric(&g.k_lambda().unwrap());
        assert_eq!(m.matrix()[(E_ZERO, 0)], int(1));
        assert_eq!(m.matrix()[(4, 4)], int(2));
        assert_eq!(m.matrix()[(5, 5)], int(2));
    }

    #[test]
    fn identity_form_dualizes_to_identity() {
        let g = LieAlgebra::abelian(crate::algebra::default_labels(3));
        let k = validate_orthogonal(&g, &Matrix::identity(3)).unwrap();
        assert_eq!(dual_metric(&k).matrix(), &Matrix::identity(3));
    }

    #[test]
    fn u_r_of_t1() {
        let g = build_oscillator(&[int(1)]).unwrap();
        let alg = g.algebra();
        let u = u_r_map(alg, &g.t(1), &alg.dual_basis(E_ZERO), &alg.dual_basis(2));
        assert_eq!(u, g.ec(1));
        let u = u_r_map(alg, &g.t(1), &alg.dual_basis(2), &alg.dual_basis(3));
        assert_eq!(u, g.e0());
    }

    #[test]
    fn t1_is_curved_but_locally_symmetric() {
        let g = build_oscillator(&[int(1)]).unwrap();
        let rep = geometry_report(g.algebra(), &g.k_lambda().unwrap(), &g.t(1)).unwrap();
        assert!(!rep.flat);
        assert!(rep.locally_symmetric);
        assert_eq!(rep.completeness, Completeness::NotDetermined);
        let expected = g.algebra().coadjoint(&g.ec(1), &g.algebra().dual_basis(2));
        assert_eq!(rep.curvature.operator(E_ZERO, 2, 2), expected);
    }

    #[test]
    fn flat_complete_example_is_flat_and_complete() {
        let g = build_oscillator(&[int(1), int(2)]).unwrap();
        let r = catalog::flat_complete_r(&g);
        let rep = geometry_report(g.algebra(), &g.k_lambda().unwrap(), &r).unwrap();
        assert!(rep.flat && rep.unimodular && rep.solvable);
        assert_eq!(rep.completeness, Completeness::Complete);
        assert!(rep.ker_sharp_abelian_ideal && rep.sharp_is_homomorphism);
    }

    #[test]
    fn sl2_solution_is_flat_and_incomplete() {
        let k = validate_orthogonal(&sl2(), &sl2_trace_form()).unwrap();
        let r = catalog::sl2_bivector(&int(1), &int(0), &int(0));
        let rep = geometry_report(&sl2(), &k, &r).unwrap();
        assert!(rep.flat && !rep.unimodular);
        assert_eq!(rep.completeness, Completeness::Incomplete);
        assert_eq!(rep.derived_dim, 2);
        assert!(rep.derived_abelian);
        assert_eq!(koszul_connection(&rep.dual, &rep.metric).unwrap(), rep.connection);
    }

    #[test]
    fn zero_bivector() {
        let g = build_oscillator(&[int(1)]).unwrap();
        let rep = geometry_report(g.algebra(), &g.k_lambda().unwrap(), &Bivector::zero(4)).unwrap();
        assert!(rep.flat && rep.connection.is_zero());
        assert_eq!(rep.completeness, Completeness::Complete);
    }

    #[test]
    fn kernel_directions_are_parallel() {
        let g = build_oscillator(&[int(1)]).unwrap();
        let conn = connection(g.algebra(), &g.t(1));
        for j in 0..4 {
            assert!(conn.get(0, j).is_zero());
            assert!(conn.get(E_ZERO, j).is_zero());
        }
    }

    #[test]
    fn verdicts() {
        assert_eq!(completeness_verdict(true, true), Completeness::Complete);
        assert_eq!(completeness_verdict(true, false), Completeness::Incomplete);
        assert_eq!(completeness_verdict(false, true), Completeness::NotDetermined);
    }

    #[test]
    fn non_gybe_is_rejected() {
        let g = build_oscillator(&[int(1)]).unwrap();
        let r = Bivector::wedge(&g.em1(), &g.e(1));
        assert_eq!(geometry_report(g.algebra(), &g.k_lambda().unwrap(), &r).unwrap_err(), GeometryError::NotGybe);
    }

    #[test]
    fn non_levi_civita_connection_has_nonzero_nabla_r() {
        // A flat-looking but non-parallel curvature built from a perturbed connection.
        let g = build_oscillator(&[int(1)]).unwrap();
        let alg = g.algebra();
        let r = g.t(1);
        let dual = bialgebra::r_bracket(alg, &r).unwrap();
        let conn = connection(alg, &r);
        let rep = curvature(alg, &r, &dual, &conn).unwrap();
        let d = 4;
        let rop: Vec<Vec<Vec<Covector>>> =
            (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| rep.operator(i, j, k)).collect()).collect()).collect();
        let bent = ConnectionTable::from_fn(d, |i, j| {
            if i == j { conn.get(i, j).axpy(&int(1), &Covector::basis(d, j)) } else { conn.get(i, j).clone() }
        });
        assert!(nabla_curvature(d, &rop, &bent).iter().any(|x| !x.is_zero()));
    }
}
