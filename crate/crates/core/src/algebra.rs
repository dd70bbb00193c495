//! Finite-dimensional Lie algebras given by exact structure constants.
//!
//! Coadjoint convention: `(ad*_u α)(v) = α([u, v])`, i.e. `ad*_u` is the
//! transpose of `ad_u`. Many texts use the opposite sign; every formula in
//! this crate (dual brackets, connections, curvature) assumes this one.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{self, Matrix};
use crate::scalar::{self, Scalar};

macro_rules! coordinate_type {
    ($name:ident) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash)]
        pub struct $name(Vec<Scalar>);

        impl $name {
            pub fn new(components: Vec<Scalar>) -> Self {
                Self(components)
            }

            pub fn zero(dim: usize) -> Self {
                Self(vec![Scalar::zero(); dim])
            }

            pub fn basis(dim: usize, i: usize) -> Self {
                let mut v = Self::zero(dim);
                v.0[i] = scalar::one();
                v
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn components(&self) -> &[Scalar] {
                &self.0
            }

            pub fn into_components(self) -> Vec<Scalar> {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Zero::is_zero)
            }

            pub fn scale(&self, s: &Scalar) -> Self {
                Self(self.0.iter().map(|x| x * s).collect())
            }

            /// `self + s·other`
            pub fn axpy(&self, s: &Scalar, other: &Self) -> Self {
                assert_eq!(self.dim(), other.dim(), "dimension mismatch");
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a + s * b).collect())
            }
        }

        impl Index<usize> for $name {
            type Output = Scalar;
            fn index(&self, i: usize) -> &Scalar {
                &self.0[i]
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", scalar::format(x))?;
                }
                write!(f, ")")
            }
        }
    };
}

coordinate_type!(Vector);
coordinate_type!(Covector);

impl Covector {
    /// The primal/dual pairing `Σ α_i x_i`.
    pub fn pair(&self, v: &Vector) -> Scalar {
        assert_eq!(self.dim(), v.dim(), "pairing dimension mismatch");
        self.0
            .iter()
            .zip(&v.0)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }
}

/// An endomorphism of the algebra, as a matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        assert!(matrix.is_square(), "linear map must be square");
        Self { matrix }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(Matrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(Matrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        Vector::new(self.matrix.mul_vec(v.components()))
    }

    /// `J*α = α ∘ J`.
    pub fn dual_apply(&self, alpha: &Covector) -> Covector {
        let d = self.dim();
        Covector::new(
            (0..d)
                .map(|i| {
                    (0..d)
                        .filter(|&k| !alpha[k].is_zero() && !self.matrix[(k, i)].is_zero())
                        .fold(Scalar::zero(), |acc, k| acc + &alpha[k] * &self.matrix[(k, i)])
                })
                .collect(),
        )
    }

    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.mul(&inner.matrix))
    }

    pub fn commutator(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.mul(&other.matrix).sub(&other.matrix.mul(&self.matrix)))
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.add(&other.matrix))
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap::new(self.matrix.scale(s))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure constants have inconsistent shape: {0}")]
    Shape(String),
    #[error("antisymmetry violated at ({i}, {j})")]
    AntisymmetryViolation { i: usize, j: usize },
    #[error("Jacobi identity violated at ({i}, {j}, {k}); residual {residual}")]
    JacobiViolation { i: usize, j: usize, k: usize, residual: Vector },
}

/// A Lie algebra with a labelled basis; `c[i][j]` holds the coordinates of `[b_i, b_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    c: Vec<Vec<Vector>>,
}

impl LieAlgebra {
    /// Validates antisymmetry then the Jacobi identity, reporting the
    /// lexicographically first violation.
    pub fn new(labels: Vec<String>, c: Vec<Vec<Vector>>) -> Result<Self, AlgebraError> {
        let d = labels.len();
        if d == 0 {
            return Err(AlgebraError::Shape("dimension must be positive".into()));
        }
        if c.len() != d || c.iter().any(|row| row.len() != d || row.iter().any(|v| v.dim() != d)) {
            return Err(AlgebraError::Shape(format!("expected {d}×{d} table of {d}-vectors")));
        }
        for i in 0..d {
            for j in i..d {
                if !(&c[i][j] + &c[j][i]).is_zero() {
                    return Err(AlgebraError::AntisymmetryViolation { i, j });
                }
            }
        }
        let g = Self { labels, c };
        if let Some((i, j, k, residual)) = g.first_jacobi_violation() {
            return Err(AlgebraError::JacobiViolation { i, j, k, residual });
        }
        Ok(g)
    }

    /// Builds from the brackets `[b_i, b_j]` for `i < j`; the rest is implied by antisymmetry.
    pub fn from_upper_brackets(
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self, AlgebraError> {
        let d = labels.len();
        let mut c = vec![vec![Vector::zero(d); d]; d];
        for (i, j, v) in brackets {
            if i >= d || j >= d || v.dim() != d {
                return Err(AlgebraError::Shape(format!("bracket ({i}, {j}) out of range")));
            }
            if i == j {
                if !v.is_zero() {
                    return Err(AlgebraError::AntisymmetryViolation { i, j });
                }
                continue;
            }
            c[j][i] = -&v;
            c[i][j] = v;
        }
        Self::new(labels, c)
    }

    pub fn abelian(labels: Vec<String>) -> Self {
        let d = labels.len();
        Self::new(labels, vec![vec![Vector::zero(d); d]; d]).expect("abelian algebra is valid")
    }

    /// `self ⊕ other`, with the basis of `self` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (p, q) = (self.dim(), other.dim());
        let d = p + q;
        let embed = |v: &Vector, off: usize| {
            let mut c = vec![Scalar::zero(); d];
            for (k, x) in v.components().iter().enumerate() {
                c[off + k] = x.clone();
            }
            Vector::new(c)
        };
        let mut c = vec![vec![Vector::zero(d); d]; d];
        for i in 0..p {
            for j in 0..p {
                c[i][j] = embed(self.structure(i, j), 0);
            }
        }
        for i in 0..q {
            for j in 0..q {
                c[p + i][p + j] = embed(other.structure(i, j), p);
            }
        }
        let labels = self.labels.iter().chain(other.labels.iter()).cloned().collect();
        LieAlgebra::new(labels, c).expect("direct sum of Lie algebras is a Lie algebra")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &Vector {
        &self.c[i][j]
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    pub fn dual_basis(&self, i: usize) -> Covector {
        Covector::basis(self.dim(), i)
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let d = self.dim();
        assert!(x.dim() == d && y.dim() == d, "bracket dimension mismatch");
        let mut out = vec![Scalar::zero(); d];
        for i in 0..d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let cij = &self.c[i][j];
                if cij.is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    if !cij[k].is_zero() {
                        *o += &s * &cij[k];
                    }
                }
            }
        }
        Vector::new(out)
    }

    pub fn ad_matrix(&self, u: &Vector) -> LinearMap {
        let d = self.dim();
        let cols: Vec<Vector> = (0..d).map(|j| self.bracket(u, &self.basis(j))).collect();
        LinearMap::new(Matrix::from_fn(d, d, |i, j| cols[j][i].clone()))
    }

    /// `ad*_u α = α ∘ ad_u`.
    pub fn coadjoint(&self, u: &Vector, alpha: &Covector) -> Covector {
        let d = self.dim();
        Covector::new((0..d).map(|j| alpha.pair(&self.bracket(u, &self.basis(j)))).collect())
    }

    /// Checks `D[x,y] = [Dx,y] + [x,Dy]` on all basis pairs.
    pub fn is_derivation(&self, map: &LinearMap) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (i + 1..d).all(|j| {
                let (x, y) = (self.basis(i), self.basis(j));
                let lhs = map.apply(&self.bracket(&x, &y));
                let rhs = &self.bracket(&map.apply(&x), &y) + &self.bracket(&x, &map.apply(&y));
                lhs == rhs
            })
        })
    }

    fn first_jacobi_violation(&self) -> Option<(usize, usize, usize, Vector)> {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let (bi, bj, bk) = (self.basis(i), self.basis(j), self.basis(k));
                    let r = &(&self.bracket(&self.c[i][j], &bk) + &self.bracket(&self.c[j][k], &bi))
                        + &self.bracket(&self.c[k][i], &bj);
                    if !r.is_zero() {
                        return Some((i, j, k, r));
                    }
                }
            }
        }
        None
    }

    /// Re-runs the Jacobi check; zero for every value of this type.
    pub fn jacobi_holds(&self) -> bool {
        self.first_jacobi_violation().is_none()
    }

    /// `tr(ad_x) = 0` for every basis element.
    pub fn is_unimodular(&self) -> bool {
        (0..self.dim()).all(|i| self.ad_matrix(&self.basis(i)).matrix().trace().is_zero())
    }

    /// Basis of the subalgebra `[a, b]` spanned by brackets of the given families.
    pub fn bracket_span(&self, a: &[Vector], b: &[Vector]) -> Vec<Vector> {
        let mut vs = Vec::new();
        for x in a {
            for y in b {
                let z = self.bracket(x, y);
                if !z.is_zero() {
                    vs.push(z.into_components());
                }
            }
        }
        linalg::span_basis(&vs, self.dim()).into_iter().map(Vector::new).collect()
    }

    fn full_basis(&self) -> Vec<Vector> {
        (0..self.dim()).map(|i| self.basis(i)).collect()
    }

    /// Dimensions of `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …` until it stabilises.
    pub fn derived_series(&self) -> Vec<Vec<Vector>> {
        let mut series = vec![self.full_basis()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_span(last, last);
            let stop = next.len() == last.len() || next.is_empty();
            series.push(next);
            if stop {
                break;
            }
        }
        series
    }

    pub fn lower_central_series(&self) -> Vec<Vec<Vector>> {
        let all = self.full_basis();
        let mut series = vec![all.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_span(&all, last);
            let stop = next.len() == last.len() || next.is_empty();
            series.push(next);
            if stop {
                break;
            }
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Vec::is_empty)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Vec::is_empty)
    }

    /// Basis of the center, as the common kernel of all `ad_{b_j}` transposed.
    pub fn center(&self) -> Vec<Vector> {
        self.centralizer_in(&self.full_basis(), &self.full_basis())
    }

    /// Elements of `span(within)` commuting with every element of `with`.
    pub fn centralizer_in(&self, within: &[Vector], with: &[Vector]) -> Vec<Vector> {
        let d = self.dim();
        let m = within.len();
        if m == 0 {
            return Vec::new();
        }
        // unknown coefficients c ∈ ℚ^m, x = Σ c_a within[a]; equations [x, w] = 0.
        let mut rows = Vec::new();
        for w in with {
            let cols: Vec<Vector> = within.iter().map(|x| self.bracket(x, w)).collect();
            for k in 0..d {
                rows.push(cols.iter().map(|v| v[k].clone()).collect::<Vec<_>>());
            }
        }
        let ker = Matrix::from_rows(rows).kernel_basis();
        let vs: Vec<Vec<Scalar>> = ker
            .iter()
            .map(|c| {
                within
                    .iter()
                    .zip(c)
                    .fold(Vector::zero(d), |acc, (x, s)| acc.axpy(s, x))
                    .into_components()
            })
            .collect();
        linalg::span_basis(&vs, d).into_iter().map(Vector::new).collect()
    }

    /// Whether `span(sub)` is an ideal.
    pub fn is_ideal(&self, sub: &[Vector]) -> bool {
        let basis: Vec<Vec<Scalar>> = sub.iter().map(|v| v.components().to_vec()).collect();
        self.full_basis()
            .iter()
            .all(|x| sub.iter().all(|y| linalg::in_span(&basis, self.bracket(x, y).components())))
    }

    pub fn structure_report(&self) -> StructureReport {
        let derived = self.derived_series();
        let lower = self.lower_central_series();
        StructureReport {
            dim: self.dim(),
            derived_dims: derived.iter().map(Vec::len).collect(),
            lower_central_dims: lower.iter().map(Vec::len).collect(),
            center_dim: self.center().len(),
            solvable: derived.last().is_some_and(Vec::is_empty),
            nilpotent: lower.last().is_some_and(Vec::is_empty),
            unimodular: self.is_unimodular(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct StructureReport {
    pub dim: usize,
    pub derived_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub center_dim: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    pub unimodular: bool,
}

/// Standard labels `b0, b1, …`.
pub fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("b{i}")).collect()
}

pub fn heisenberg3() -> LieAlgebra {
    let e = |i| Vector::basis(3, i);
    LieAlgebra::from_upper_brackets(vec!["x".into(), "y".into(), "z".into()], [(0, 1, e(2))])
        .expect("Heisenberg algebra is valid")
}

/// `sl(2)` in the basis `h, e, f'` with `[h,e]=2e`, `[h,f']=−2f'`, `[e,f']=−h`.
pub fn sl2() -> LieAlgebra {
    let e = |i| Vector::basis(3, i);
    LieAlgebra::from_upper_brackets(
        vec!["e1".into(), "e2".into(), "e3".into()],
        [(0, 1, e(1).scale(&scalar::int(2))), (0, 2, e(2).scale(&scalar::int(-2))), (1, 2, -&e(0))],
    )
    .expect("sl(2) is valid")
}
