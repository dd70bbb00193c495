//! Oscillator Lie algebras `G_λ` and their symplectic data.
//!
//! Basis order is fixed as `(e₋₁, e₀, e₁, ě₁, …, e_n, ě_n)`; serialized
//! indices and golden files depend on it. Brackets:
//! `[e₋₁,e_j] = λ_j ě_j`, `[e₋₁,ě_j] = −λ_j e_j`, `[e_j,ě_j] = e₀`.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{AlgebraError, Covector, LieAlgebra, LinearMap, Vector};
use crate::geometry::{self, GeometryError, OrthogonalStructure};
use crate::linalg::{self, Matrix};
use crate::multivector::{self, Bivector};
use crate::scalar::{self, Scalar};

pub const E_MINUS1: usize = 0;
pub const E_ZERO: usize = 1;

/// Index of `e_i` (1-based `i`).
pub fn e_index(i: usize) -> usize {
    2 * i
}

/// Index of `ě_i` (1-based `i`).
pub fn ec_index(i: usize) -> usize {
    2 * i + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OscillatorError {
    #[error("λ must be nonempty")]
    EmptyLambda,
    #[error("λ_{index} = {value} is not positive")]
    NonPositiveLambda { index: usize, value: String },
    #[error("λ is not weakly increasing at position {index}")]
    UnsortedLambda { index: usize },
    #[error("expected {expected} parameters, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("bivector has components pairing e₋₁* with S*: {residual}")]
    NotInNormalForm { residual: Bivector },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OscillatorAlgebra {
    lambda: Vec<Scalar>,
    algebra: LieAlgebra,
    omega: Matrix,
}

/// `0 < λ₁ < … < λ_n` and `λ_k ≠ λ_i + λ_j` for `i < j < k`.
pub fn is_generic(lambda: &[Scalar]) -> bool {
    let n = lambda.len();
    if lambda.iter().any(|l| !scalar::is_positive(l)) {
        return false;
    }
    if lambda.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if lambda[k] == &lambda[i] + &lambda[j] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn labels(n: usize) -> Vec<String> {
    let mut l = vec!["e-1".to_string(), "e0".to_string()];
    for i in 1..=n {
        l.push(format!("e{i}"));
        l.push(format!("ě{i}"));
    }
    l
}

pub fn build_oscillator(lambda: &[Scalar]) -> Result<OscillatorAlgebra, OscillatorError> {
    if lambda.is_empty() {
        return Err(OscillatorError::EmptyLambda);
    }
    for (i, l) in lambda.iter().enumerate() {
        if !scalar::is_positive(l) {
            return Err(OscillatorError::NonPositiveLambda { index: i + 1, value: scalar::format(l) });
        }
    }
    if let Some(i) = lambda.windows(2).position(|w| w[0] > w[1]) {
        return Err(OscillatorError::UnsortedLambda { index: i + 2 });
    }
    let n = lambda.len();
    let d = 2 * n + 2;
    let b = |i| Vector::basis(d, i);
    let mut brackets = Vec::new();
    for (j0, l) in lambda.iter().enumerate() {
        let j = j0 + 1;
        brackets.push((E_MINUS1, e_index(j), b(ec_index(j)).scale(l)));
        brackets.push((E_MINUS1, ec_index(j), b(e_index(j)).scale(&-l)));
        brackets.push((e_index(j), ec_index(j), b(E_ZERO)));
    }
    let algebra = LieAlgebra::from_upper_brackets(labels(n), brackets)?;
    let mut omega = Matrix::zeros(d, d);
    for i in 1..=n {
        omega[(e_index(i), ec_index(i))] = scalar::one();
        omega[(ec_index(i), e_index(i))] = -scalar::one();
    }
    Ok(OscillatorAlgebra { lambda: lambda.to_vec(), algebra, omega })
}

/// Parses a list of `"p/q"` strings and builds `G_λ`.
pub fn build_from_strs(lambda: &[&str]) -> Result<OscillatorAlgebra, Box<dyn std::error::Error>> {
    let l: Vec<Scalar> = lambda.iter().map(|s| scalar::parse(s)).collect::<Result<_, _>>()?;
    Ok(build_oscillator(&l)?)
}

/// An `ω`-skew derivation `J_a`: `J e_i = a_i ě_i`, `J ě_i = −a_i e_i`, zero on `e₋₁, e₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewDerivation {
    pub a: Vec<Scalar>,
    pub map: LinearMap,
}

/// Decomposition `r = coef·e₀∧e₋₁ + e₀∧u₀ + r₀` with `u₀ ∈ S`, `r₀ ∈ ∧²S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalParts {
    pub coef: Scalar,
    pub u0: Vector,
    pub r0: Bivector,
}

impl OscillatorAlgebra {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn lambda(&self) -> &[Scalar] {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn is_generic(&self) -> bool {
        is_generic(&self.lambda)
    }

    pub fn s_indices(&self) -> std::ops::Range<usize> {
        2..self.dim()
    }

    pub fn em1(&self) -> Vector {
        Vector::basis(self.dim(), E_MINUS1)
    }

    pub fn e0(&self) -> Vector {
        Vector::basis(self.dim(), E_ZERO)
    }

    pub fn e(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), e_index(i))
    }

    pub fn ec(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), ec_index(i))
    }

    /// `t_i = e_i ∧ ě_i`.
    pub fn t(&self, i: usize) -> Bivector {
        Bivector::basis_wedge(self.dim(), e_index(i), ec_index(i))
    }

    /// The 2-form `ω` on vectors.
    pub fn omega(&self, x: &Vector, y: &Vector) -> Scalar {
        let wy = self.omega.mul_vec(y.components());
        x.components().iter().zip(&wy).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn omega_matrix(&self) -> &Matrix {
        &self.omega
    }

    /// `i_x ω`, the covector `v ↦ ω(x, v)`.
    pub fn interior(&self, x: &Vector) -> Covector {
        let d = self.dim();
        Covector::new((0..d).map(|j| self.omega(x, &Vector::basis(d, j))).collect())
    }

    /// `ω_{r1,r2}(α,β) = ½(ω(r1_#α, r2_#β) + ω(r2_#α, r1_#β))`; as matrices
    /// `½(R₁ W R₂ᵀ + R₂ W R₁ᵀ)`.
    pub fn omega_pair(&self, r1: &Bivector, r2: &Bivector) -> Bivector {
        let (a, b) = (r1.to_matrix(), r2.to_matrix());
        let w = &self.omega;
        let m = a.mul(w).mul(&b.transpose()).add(&b.mul(w).mul(&a.transpose())).scale(&scalar::half());
        Bivector::from_matrix(&m).expect("ω pairing is skew")
    }

    pub fn ad_em1(&self) -> LinearMap {
        self.algebra.ad_matrix(&self.em1())
    }

    /// `ad†_{e₋₁} r`.
    pub fn ad_em1_dag(&self, r: &Bivector) -> Bivector {
        multivector::j_dag(&self.ad_em1(), r)
    }

    pub fn j_a(&self, a: &[Scalar]) -> Result<SkewDerivation, OscillatorError> {
        let n = self.n();
        if a.len() != n {
            return Err(OscillatorError::WrongLength { expected: n, got: a.len() });
        }
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (i0, ai) in a.iter().enumerate() {
            let i = i0 + 1;
            // column e_i ↦ a_i ě_i, column ě_i ↦ −a_i e_i
            m[(ec_index(i), e_index(i))] = ai.clone();
            m[(e_index(i), ec_index(i))] = -ai;
        }
        Ok(SkewDerivation { a: a.to_vec(), map: LinearMap::new(m) })
    }

    /// Whether `r_#(e₋₁*) = r_#(e₀*) = 0`.
    pub fn in_wedge2_s(&self, r: &Bivector) -> bool {
        let d = self.dim();
        (0..d).all(|j| r.get(E_MINUS1, j).is_zero() && r.get(E_ZERO, j).is_zero())
    }

    pub fn in_s(&self, u: &Vector) -> bool {
        u[E_MINUS1].is_zero() && u[E_ZERO].is_zero()
    }

    /// Restriction of `r` to `S* × S*`.
    pub fn project_s(&self, r: &Bivector) -> Bivector {
        let mut out = Bivector::zero(self.dim());
        for (i, j, v) in r.upper_entries() {
            if i >= 2 && j >= 2 {
                out.set(i, j, v.clone());
            }
        }
        out
    }

    /// Splits `r = coef·e₀∧e₋₁ + e₀∧u₀ + r₀`. The `coef` is returned raw:
    /// it equals `2α` in the generalized-equation normal form and `α` in the
    /// classical one.
    pub fn decompose(&self, r: &Bivector) -> Result<NormalParts, OscillatorError> {
        let d = self.dim();
        let mut residual = Bivector::zero(d);
        for s in self.s_indices() {
            let v = r.get(E_MINUS1, s);
            if !v.is_zero() {
                residual.set(E_MINUS1, s, v.clone());
            }
        }
        if !residual.is_zero() {
            return Err(OscillatorError::NotInNormalForm { residual });
        }
        let coef = r.get(E_ZERO, E_MINUS1).clone();
        let mut u0 = vec![Scalar::zero(); d];
        for s in self.s_indices() {
            u0[s] = r.get(E_ZERO, s).clone();
        }
        Ok(NormalParts { coef, u0: Vector::new(u0), r0: self.project_s(r) })
    }

    /// Inverse of [`decompose`](Self::decompose).
    pub fn assemble(&self, parts: &NormalParts) -> Bivector {
        let e0 = self.e0();
        let base = Bivector::wedge(&e0, &self.em1()).scale(&parts.coef);
        &(&base + &Bivector::wedge(&e0, &parts.u0)) + &parts.r0
    }

    /// `k_λ(x,x) = 2x₋₁x₀ + Σ (1/λ_i)(x_i² + x̌_i²)`, validated ad-invariant and Lorentzian.
    pub fn k_lambda(&self) -> Result<OrthogonalStructure, GeometryError> {
        let d = self.dim();
        let mut k = Matrix::zeros(d, d);
        k[(E_MINUS1, E_ZERO)] = scalar::one();
        k[(E_ZERO, E_MINUS1)] = scalar::one();
        for (i0, l) in self.lambda.iter().enumerate() {
            let inv = scalar::one() / l;
            k[(e_index(i0 + 1), e_index(i0 + 1))] = inv.clone();
            k[(ec_index(i0 + 1), ec_index(i0 + 1))] = inv;
        }
        let form = geometry::validate_orthogonal(&self.algebra, &k)?;
        debug_assert_eq!(linalg::inertia(form.matrix()), (d - 1, 1, 0));
        Ok(form)
    }
}
