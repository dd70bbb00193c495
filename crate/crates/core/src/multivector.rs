//! Skew bivectors and trivectors, lifted actions and the Schouten bracket.
//!
//! A bivector is stored as a full skew matrix `R` with
//! `r = Σ_{i<j} R_ij b_i∧b_j`, `r(α,β) = Σ α_i R_ij β_j` and
//! `(r_#α)_j = Σ_i α_i R_ij`, so that `β(r_#α) = r(α,β)`.
//! Wedges pair by determinants: `(x∧y)(α,β) = α(x)β(y) − α(y)β(x)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::algebra::{Covector, LieAlgebra, LinearMap, Vector};
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bivector {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Bivector {
    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: vec![Scalar::zero(); dim * dim] }
    }

    /// From a skew matrix; `None` if it is not square-skew.
    pub fn from_matrix(m: &Matrix) -> Option<Self> {
        let d = m.rows();
        if m.cols() != d {
            return None;
        }
        let mut b = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                if m[(i, j)] != -&m[(j, i)] {
                    return None;
                }
                b.entries[i * d + j] = m[(i, j)].clone();
            }
        }
        Some(b)
    }

    /// `b_i ∧ b_j`.
    pub fn basis_wedge(dim: usize, i: usize, j: usize) -> Self {
        let mut b = Self::zero(dim);
        if i != j {
            b.entries[i * dim + j] = scalar::one();
            b.entries[j * dim + i] = -scalar::one();
        }
        b
    }

    pub fn wedge(x: &Vector, y: &Vector) -> Self {
        let d = x.dim();
        assert_eq!(d, y.dim(), "wedge dimension mismatch");
        let mut b = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                b.entries[i * d + j] = &x[i] * &y[j] - &x[j] * &y[i];
            }
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `R_ij = r(b_i*, b_j*)`.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    /// Sets `R_ij = v` and `R_ji = −v`.
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i != j || v.is_zero(), "diagonal of a bivector must vanish");
        self.entries[j * self.dim + i] = -&v;
        self.entries[i * self.dim + j] = v;
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Nonzero upper-triangular entries `(i, j, R_ij)` with `i < j`.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        let d = self.dim;
        (0..d).flat_map(move |i| (i + 1..d).map(move |j| (i, j))).filter_map(move |(i, j)| {
            let v = self.get(i, j);
            (!v.is_zero()).then_some((i, j, v))
        })
    }

    /// Flattened `i<j` coordinates, in lexicographic order.
    pub fn upper_coordinates(&self) -> Vec<Scalar> {
        let d = self.dim;
        (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).map(|(i, j)| self.get(i, j).clone()).collect()
    }

    pub fn from_upper_coordinates(dim: usize, coords: &[Scalar]) -> Self {
        assert_eq!(coords.len(), dim * (dim.saturating_sub(1)) / 2, "wrong coordinate count");
        let mut b = Self::zero(dim);
        let mut it = coords.iter();
        for i in 0..dim {
            for j in i + 1..dim {
                b.set(i, j, it.next().expect("length checked").clone());
            }
        }
        b
    }

    pub fn pair(&self, alpha: &Covector, beta: &Covector) -> Scalar {
        let d = self.dim;
        let mut s = Scalar::zero();
        for i in 0..d {
            if alpha[i].is_zero() {
                continue;
            }
            for j in 0..d {
                let r = &self.entries[i * d + j];
                if !r.is_zero() && !beta[j].is_zero() {
                    s += &alpha[i] * r * &beta[j];
                }
            }
        }
        s
    }

    /// `r_#α`, the vector with `β(r_#α) = r(α, β)`.
    pub fn sharp(&self, alpha: &Covector) -> Vector {
        let d = self.dim;
        let mut out = vec![Scalar::zero(); d];
        for i in 0..d {
            if alpha[i].is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let r = &self.entries[i * d + j];
                if !r.is_zero() {
                    *o += &alpha[i] * r;
                }
            }
        }
        Vector::new(out)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|x| x * s).collect() }
    }

    pub fn axpy(&self, s: &Scalar, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self { dim: self.dim, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + s * b).collect() }
    }
}

impl Add for &Bivector {
    type Output = Bivector;
    fn add(self, rhs: &Bivector) -> Bivector {
        self.axpy(&scalar::one(), rhs)
    }
}

impl Sub for &Bivector {
    type Output = Bivector;
    fn sub(self, rhs: &Bivector) -> Bivector {
        self.axpy(&-scalar::one(), rhs)
    }
}

impl Neg for &Bivector {
    type Output = Bivector;
    fn neg(self) -> Bivector {
        self.scale(&-scalar::one())
    }
}

impl fmt::Display for Bivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, v) in self.upper_entries() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})b{i}∧b{j}", scalar::format(v))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Fully antisymmetric `dim³` array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trivector {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Trivector {
    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: vec![Scalar::zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[self.idx(i, j, k)]
    }

    /// Sets `T_ijk = v` for `i<j<k` and fills the other five permutations.
    pub fn set_antisymmetric(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = -&v;
        for (a, b, c, s) in [(i, j, k, &v), (j, k, i, &v), (k, i, j, &v), (j, i, k, &n), (i, k, j, &n), (k, j, i, &n)] {
            let ix = self.idx(a, b, c);
            self.entries[ix] = s.clone();
        }
    }

    pub fn wedge3(x: &Vector, y: &Vector, z: &Vector) -> Self {
        let d = x.dim();
        let mut t = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = &x[i] * &y[j] * &z[k] + &x[j] * &y[k] * &z[i] + &x[k] * &y[i] * &z[j]
                        - &x[j] * &y[i] * &z[k]
                        - &x[i] * &y[k] * &z[j]
                        - &x[k] * &y[j] * &z[i];
                    let ix = t.idx(i, j, k);
                    t.entries[ix] = v;
                }
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    let v = self.get(i, j, k);
                    *self.get(j, i, k) == -v && *self.get(i, k, j) == -v && *self.get(k, j, i) == -v
                })
            })
        })
    }

    pub fn pair(&self, a: &Covector, b: &Covector, c: &Covector) -> Scalar {
        let d = self.dim;
        let mut s = Scalar::zero();
        for i in 0..d {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if b[j].is_zero() {
                    continue;
                }
                for k in 0..d {
                    let t = self.get(i, j, k);
                    if !t.is_zero() && !c[k].is_zero() {
                        s += &a[i] * &b[j] * t * &c[k];
                    }
                }
            }
        }
        s
    }

    /// Nonzero `(i, j, k, T_ijk)` with `i<j<k`.
    pub fn upper_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|x| x * s).collect() }
    }

    pub fn axpy(&self, s: &Scalar, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self { dim: self.dim, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + s * b).collect() }
    }
}

impl Add for &Trivector {
    type Output = Trivector;
    fn add(self, rhs: &Trivector) -> Trivector {
        self.axpy(&scalar::one(), rhs)
    }
}

impl Sub for &Trivector {
    type Output = Trivector;
    fn sub(self, rhs: &Trivector) -> Trivector {
        self.axpy(&-scalar::one(), rhs)
    }
}

impl fmt::Display for Trivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries = self.upper_entries();
        if entries.is_empty() {
            return write!(f, "0");
        }
        for (n, (i, j, k, v)) in entries.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})b{i}∧b{j}∧b{k}", scalar::format(v))?;
        }
        Ok(())
    }
}

/// `J†r(α,β) = r(J*α,β) + r(α,J*β)`; as matrices `M R + R Mᵀ`.
pub fn j_dag(map: &LinearMap, r: &Bivector) -> Bivector {
    assert_eq!(map.dim(), r.dim(), "dimension mismatch");
    let m = map.matrix();
    let rm = r.to_matrix();
    let out = m.mul(&rm).add(&rm.mul(&m.transpose()));
    Bivector::from_matrix(&out).expect("J† preserves skewness")
}

/// `ad†_u r`, the adjoint action extended to `∧²g` as a derivation.
pub fn ad_dag_bivector(g: &LieAlgebra, u: &Vector, r: &Bivector) -> Bivector {
    j_dag(&g.ad_matrix(u), r)
}

/// `(ad_u T)(α,β,γ) = T(ad*_uα,β,γ) + T(α,ad*_uβ,γ) + T(α,β,ad*_uγ)`.
pub fn ad_trivector(g: &LieAlgebra, u: &Vector, t: &Trivector) -> Trivector {
    let d = g.dim();
    assert_eq!(d, t.dim(), "dimension mismatch");
    let m = g.ad_matrix(u);
    let m = m.matrix();
    let mut out = Trivector::zero(d);
    for p in 0..d {
        for q in 0..d {
            for s in 0..d {
                let mut v = Scalar::zero();
                for x in 0..d {
                    if !m[(p, x)].is_zero() {
                        v += &m[(p, x)] * t.get(x, q, s);
                    }
                    if !m[(q, x)].is_zero() {
                        v += &m[(q, x)] * t.get(p, x, s);
                    }
                    if !m[(s, x)].is_zero() {
                        v += &m[(s, x)] * t.get(p, q, x);
                    }
                }
                let ix = out.idx(p, q, s);
                out.entries[ix] = v;
            }
        }
    }
    out
}

/// `[r,r](α,β,γ) = 2α([r_#β, r_#γ]) + 2β([r_#γ, r_#α]) + 2γ([r_#α, r_#β])`.
pub fn schouten_self(g: &LieAlgebra, r: &Bivector) -> Trivector {
    let d = g.dim();
    assert_eq!(d, r.dim(), "dimension mismatch");
    let sharps: Vec<Vector> = (0..d).map(|i| r.sharp(&g.dual_basis(i))).collect();
    // brackets[j][k] = [r_# b_j*, r_# b_k*]
    let mut brackets = vec![vec![Vector::zero(d); d]; d];
    for j in 0..d {
        for k in j + 1..d {
            let b = g.bracket(&sharps[j], &sharps[k]);
            brackets[k][j] = -&b;
            brackets[j][k] = b;
        }
    }
    let two = scalar::int(2);
    let mut t = Trivector::zero(d);
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let v = &brackets[j][k][i] + &brackets[k][i][j] + &brackets[i][j][k];
                if !v.is_zero() {
                    t.set_antisymmetric(i, j, k, &two * v);
                }
            }
        }
    }
    t
}

/// The symmetric bilinear Schouten pairing `S(r1, r2)` with `S(r, r) = [r, r]`,
/// obtained by polarization.
pub fn schouten_polarized(g: &LieAlgebra, r1: &Bivector, r2: &Bivector) -> Trivector {
    let sum = schouten_self(g, &(r1 + r2));
    let diff = &(&sum - &schouten_self(g, r1)) - &schouten_self(g, r2);
    diff.scale(&scalar::half())
}
