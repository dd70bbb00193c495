//! Closed-form families and worked examples on oscillator algebras and sl(2).
//!
//! The dimension-4 and dimension-6 bialgebra families are written as
//! `ad†_u r + e₀∧((J_a + ad_{u₀})u)`, without the factor 2 used by
//! [`bialgebra::params_cocycle`]; they are realized there with `(r, u₀/2, a/2)`.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{self, Covector, LieAlgebra, Vector};
use crate::bialgebra::{self, BialgebraError, BialgebraParams, Cocycle};
use crate::geometry::{self, OrthogonalStructure};
use crate::linalg::Matrix;
use crate::multivector::Bivector;
use crate::oscillator::{self, OscillatorAlgebra, OscillatorError, E_MINUS1, E_ZERO};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("indices ({i}, {j}) must satisfy 1 ≤ i < j ≤ n")]
    BadIndices { i: usize, j: usize },
    #[error("family needs n = {expected}, got n = {got}")]
    WrongRank { expected: usize, got: usize },
    #[error("parameter constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("index pairs overlap")]
    OverlappingIndices,
    #[error("bivector is not supported on the pair ({i}, {j})")]
    NotSupported { i: usize, j: usize },
    #[error("subspace is not ω-isotropic: ω(f_{a}, f_{b}) ≠ 0")]
    NotIsotropic { a: usize, b: usize },
    #[error("μ must be skew and nondegenerate")]
    DegenerateMu,
    #[error("spanning vectors must be independent, lie in S and have even count")]
    BadSubspace,
    #[error(transparent)]
    Bialgebra(#[from] BialgebraError),
    #[error(transparent)]
    Oscillator(#[from] OscillatorError),
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeometryError),
}

/// The bivectors attached to a pair `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EfBasis {
    pub e: Bivector,
    pub e_check: Bivector,
    pub f: Bivector,
    pub f_check: Bivector,
    pub t_i: Bivector,
    pub t_j: Bivector,
    pub r: Bivector,
    pub r_check: Bivector,
    pub s: Bivector,
    pub s_check: Bivector,
}

pub fn ef_basis(g: &OscillatorAlgebra, i: usize, j: usize) -> Result<EfBasis, CatalogError> {
    if i == 0 || i >= j || j > g.n() {
        return Err(CatalogError::BadIndices { i, j });
    }
    let w = Bivector::wedge;
    let r = w(&g.e(i), &g.e(j));
    let r_check = w(&g.ec(i), &g.ec(j));
    let s = w(&g.e(i), &g.ec(j));
    let s_check = w(&g.ec(i), &g.e(j));
    Ok(EfBasis {
        e: &s + &s_check,
        e_check: &r_check - &r,
        f: &s_check - &s,
        f_check: &r + &r_check,
        t_i: g.t(i),
        t_j: g.t(j),
        r,
        r_check,
        s,
        s_check,
    })
}

/// `a E + ǎ Ě + b F + b̌ F̌` on the pair `(i, j)`.
pub fn p_ij(g: &OscillatorAlgebra, i: usize, j: usize, coords: [&Scalar; 4]) -> Result<Bivector, CatalogError> {
    let ef = ef_basis(g, i, j)?;
    let [a, ac, b, bc] = coords;
    Ok(&(&ef.e.scale(a) + &ef.e_check.scale(ac)) + &(&ef.f.scale(b) + &ef.f_check.scale(bc)))
}

/// Either a bialgebra cocycle (with its parameters) or a bivector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realized {
    Bialgebra { cocycle: Cocycle, params: BialgebraParams },
    Bivector(Bivector),
}

impl Realized {
    pub fn bivector(&self) -> Option<&Bivector> {
        match self {
            Realized::Bivector(r) => Some(r),
            Realized::Bialgebra { .. } => None,
        }
    }

    /// Whether the realized object passes the predicate its kind claims.
    pub fn passes(&self, g: &OscillatorAlgebra, kind: FamilyKind) -> bool {
        let alg = g.algebra();
        match (self, kind) {
            (Realized::Bialgebra { cocycle, .. }, FamilyKind::Bialgebra) => {
                bialgebra::is_cocycle(alg, cocycle) && bialgebra::dual_bracket_from_cocycle(alg, cocycle).is_ok()
            }
            (Realized::Bivector(r), FamilyKind::Gybe) => bialgebra::gybe_check(alg, r),
            (Realized::Bivector(r), FamilyKind::Cybe) => bialgebra::cybe_check(alg, r),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Bialgebra,
    Gybe,
    Cybe,
}

/// Parameters written in the family normalization, converted to the
/// cocycle normalization with the factor 2.
pub fn family_params(r: Bivector, u0: &Vector, a: &[Scalar]) -> BialgebraParams {
    let half = scalar::half();
    BialgebraParams { r, u0: u0.scale(&half), a: a.iter().map(|x| x * &half).collect() }
}

fn realize_bialgebra(g: &OscillatorAlgebra, r: Bivector, u0: &Vector, a: &[Scalar]) -> Result<Realized, CatalogError> {
    let params = family_params(r, u0, a);
    let cocycle = bialgebra::params_cocycle(g, &params)?;
    Ok(Realized::Bialgebra { cocycle, params })
}

fn require_rank(g: &OscillatorAlgebra, n: usize) -> Result<(), CatalogError> {
    if g.n() != n {
        return Err(CatalogError::WrongRank { expected: n, got: g.n() });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dim4Family {
    /// `ξ(u) = α ad†_u t₁ + e₀∧((J_a + ad_{u₀})u)`.
    Bialgebra { alpha: Scalar, a: Scalar, u0: Vector },
    /// `r = e₀∧u + α t₁`.
    Gybe { alpha: Scalar, u: Vector },
    /// `r = e₀∧u`.
    Cybe { u: Vector },
}

impl Dim4Family {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Dim4Family::Bialgebra { .. } => FamilyKind::Bialgebra,
            Dim4Family::Gybe { .. } => FamilyKind::Gybe,
            Dim4Family::Cybe { .. } => FamilyKind::Cybe,
        }
    }
}

pub fn dim4_family(g: &OscillatorAlgebra, fam: &Dim4Family) -> Result<Realized, CatalogError> {
    require_rank(g, 1)?;
    match fam {
        Dim4Family::Bialgebra { alpha, a, u0 } => {
            realize_bialgebra(g, g.t(1).scale(alpha), u0, std::slice::from_ref(a))
        }
        Dim4Family::Gybe { alpha, u } => Ok(Realized::Bivector(&Bivector::wedge(&g.e0(), u) + &g.t(1).scale(alpha))),
        Dim4Family::Cybe { u } => Ok(Realized::Bivector(Bivector::wedge(&g.e0(), u))),
    }
}

/// `(a, ǎ, b, b̌)` coordinates on `(E₁₂, Ě₁₂, F₁₂, F̌₁₂)`.
pub type EfCoords = [Scalar; 4];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dim6Family {
    /// `r = c₁t₁ + c₂t₂`, any `a`.
    BialgebraT { c1: Scalar, c2: Scalar, a: [Scalar; 2], u0: Vector },
    /// `r = dE₁₂ + ďĚ₁₂ + c(t₁ − t₂)`, `a₁ + a₂ = 0`.
    BialgebraE { d: Scalar, d_check: Scalar, c: Scalar, a: [Scalar; 2], u0: Vector },
    /// `r = dF₁₂ + ďF̌₁₂ + c(t₁ − t₂)`, `a₁ = a₂`.
    BialgebraF { d: Scalar, d_check: Scalar, c: Scalar, a: [Scalar; 2], u0: Vector },
    /// `r = p₁₂ + c(t₁ − t₂)`, `a = 0`.
    BialgebraP { p: EfCoords, c: Scalar, a: [Scalar; 2], u0: Vector },
    /// `r = e₀∧u + c₁t₁ + c₂t₂`, any `u`.
    GybeT { u: Vector, c1: Scalar, c2: Scalar },
    /// `r = e₀∧u + p₁₂ + c(t₁ − t₂)`, `u ∈ S`.
    GybeP { u: Vector, p: EfCoords, c: Scalar },
    /// `r = e₀∧u`, any `u`.
    CybeE0 { u: Vector },
    /// `r = e₀∧u + p₁₂ + c(t₁ − t₂)`, `u ∈ S`, `c² = a² + ǎ² − b² − b̌²`.
    CybeP { u: Vector, p: EfCoords, c: Scalar },
}

impl Dim6Family {
    pub fn kind(&self) -> FamilyKind {
        use Dim6Family::*;
        match self {
            BialgebraT { .. } | BialgebraE { .. } | BialgebraF { .. } | BialgebraP { .. } => FamilyKind::Bialgebra,
            GybeT { .. } | GybeP { .. } => FamilyKind::Gybe,
            CybeE0 { .. } | CybeP { .. } => FamilyKind::Cybe,
        }
    }

    /// Checks the subcase constraint.
    pub fn check(&self, g: &OscillatorAlgebra) -> Result<(), CatalogError> {
        use Dim6Family::*;
        let violated = |m: &str| Err(CatalogError::ConstraintViolated(m.into()));
        match self {
            BialgebraT { u0, .. } if !g.in_s(u0) => violated("u₀ ∈ S"),
            BialgebraE { a, u0, .. } => {
                if !(&a[0] + &a[1]).is_zero() {
                    violated("a₁ + a₂ = 0")
                } else if !g.in_s(u0) {
                    violated("u₀ ∈ S")
                } else {
                    Ok(())
                }
            }
            BialgebraF { a, u0, .. } => {
                if a[0] != a[1] {
                    violated("a₁ = a₂")
                } else if !g.in_s(u0) {
                    violated("u₀ ∈ S")
                } else {
                    Ok(())
                }
            }
            BialgebraP { a, u0, .. } => {
                if !(a[0].is_zero() && a[1].is_zero()) {
                    violated("a = 0")
                } else if !g.in_s(u0) {
                    violated("u₀ ∈ S")
                } else {
                    Ok(())
                }
            }
            GybeP { u, .. } if !g.in_s(u) => violated("u ∈ S"),
            CybeP { u, p, c } => {
                if !g.in_s(u) {
                    violated("u ∈ S")
                } else if !cyb_constraint_holds(p, c) {
                    violated("c² = a² + ǎ² − b² − b̌²")
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

/// `c² = a² + ǎ² − b² − b̌²`.
pub fn cyb_constraint_holds(p: &EfCoords, c: &Scalar) -> bool {
    let [a, ac, b, bc] = p;
    c * c == a * a + ac * ac - b * b - bc * bc
}

pub fn dim6_family(g: &OscillatorAlgebra, fam: &Dim6Family) -> Result<Realized, CatalogError> {
    require_rank(g, 2)?;
    fam.check(g)?;
    realize_dim6(g, fam)
}

/// Builds the family member without checking the subcase constraint.
pub fn realize_dim6(g: &OscillatorAlgebra, fam: &Dim6Family) -> Result<Realized, CatalogError> {
    use Dim6Family::*;
    require_rank(g, 2)?;
    let ef = ef_basis(g, 1, 2)?;
    let tt = |c1: &Scalar, c2: &Scalar| &g.t(1).scale(c1) + &g.t(2).scale(c2);
    let diff = |c: &Scalar| tt(c, &-c);
    let p = |x: &EfCoords| p_ij(g, 1, 2, [&x[0], &x[1], &x[2], &x[3]]);
    let e0u = |u: &Vector| Bivector::wedge(&g.e0(), u);
    match fam {
        BialgebraT { c1, c2, a, u0 } => realize_bialgebra(g, tt(c1, c2), u0, a),
        BialgebraE { d, d_check, c, a, u0 } => {
            let r = &(&ef.e.scale(d) + &ef.e_check.scale(d_check)) + &diff(c);
            realize_bialgebra(g, r, u0, a)
        }
        BialgebraF { d, d_check, c, a, u0 } => {
            let r = &(&ef.f.scale(d) + &ef.f_check.scale(d_check)) + &diff(c);
            realize_bialgebra(g, r, u0, a)
        }
        BialgebraP { p: x, c, a, u0 } => realize_bialgebra(g, &p(x)? + &diff(c), u0, a),
        GybeT { u, c1, c2 } => Ok(Realized::Bivector(&e0u(u) + &tt(c1, c2))),
        GybeP { u, p: x, c } | CybeP { u, p: x, c } => Ok(Realized::Bivector(&(&e0u(u) + &p(x)?) + &diff(c))),
        CybeE0 { u } => Ok(Realized::Bivector(e0u(u))),
    }
}

fn pair_indices(g: &OscillatorAlgebra, pair: (usize, usize)) -> Result<[usize; 4], CatalogError> {
    let (i, j) = pair;
    if i == 0 || i >= j || j > g.n() {
        return Err(CatalogError::BadIndices { i, j });
    }
    Ok([oscillator::e_index(i), oscillator::ec_index(i), oscillator::e_index(j), oscillator::ec_index(j)])
}

/// Sum of two solutions supported on disjoint index pairs.
pub fn block_sum(
    g: &OscillatorAlgebra,
    r1: &Bivector,
    pair1: (usize, usize),
    r2: &Bivector,
    pair2: (usize, usize),
) -> Result<Bivector, CatalogError> {
    let s1 = pair_indices(g, pair1)?;
    let s2 = pair_indices(g, pair2)?;
    if [pair1.0, pair1.1].iter().any(|x| *x == pair2.0 || *x == pair2.1) {
        return Err(CatalogError::OverlappingIndices);
    }
    for (r, s, (i, j)) in [(r1, s1, pair1), (r2, s2, pair2)] {
        if r.upper_entries().any(|(x, y, _)| !s.contains(&x) || !s.contains(&y)) {
            return Err(CatalogError::NotSupported { i, j });
        }
    }
    Ok(r1 + r2)
}

/// `r₀ = Σ μ_ab f_a ⊗ f_b` for an ω-isotropic `F = span(f_a)` and a
/// nondegenerate skew `μ`; its image is `F`.
pub fn isotropic_solution(g: &OscillatorAlgebra, f: &[Vector], mu: &Matrix) -> Result<Bivector, CatalogError> {
    let k = f.len();
    let rows: Vec<Vec<Scalar>> = f.iter().map(|v| v.components().to_vec()).collect();
    if !k.is_multiple_of(2) || f.iter().any(|v| v.dim() != g.dim() || !g.in_s(v)) || crate::linalg::span_rank(&rows) != k {
        return Err(CatalogError::BadSubspace);
    }
    for a in 0..k {
        for b in a + 1..k {
            if !g.omega(&f[a], &f[b]).is_zero() {
                return Err(CatalogError::NotIsotropic { a, b });
            }
        }
    }
    if mu.rows() != k || mu.cols() != k || !mu.add(&mu.transpose()).is_zero() || mu.determinant().is_zero() {
        return Err(CatalogError::DegenerateMu);
    }
    let fm = Matrix::from_rows(rows);
    let r = fm.transpose().mul(mu).mul(&fm);
    Ok(Bivector::from_matrix(&r).expect("congruent to a skew matrix"))
}

/// `e₀∧e₁ + e₁∧ě₂ + ě₁∧e₂ + e₁∧ě₁ − e₂∧ě₂`.
pub fn flat_complete_r(g: &OscillatorAlgebra) -> Bivector {
    let w = Bivector::wedge;
    let a = &w(&g.e0(), &g.e(1)) + &w(&g.e(1), &g.ec(2));
    let b = &w(&g.ec(1), &g.e(2)) + &g.t(1);
    &(&a + &b) - &g.t(2)
}

/// A dual bracket table entry `[b_i*, b_j*] = value`, `i < j`.
pub type BracketTable = Vec<(usize, usize, Covector)>;

/// Structure constants of a dual algebra as an explicit table of nonzero entries.
pub fn bracket_table(g: &LieAlgebra) -> BracketTable {
    let d = g.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let v = g.structure(i, j);
            if !v.is_zero() {
                out.push((i, j, Covector::new(v.components().to_vec())));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleBundle {
    pub algebra: LieAlgebra,
    pub r: Bivector,
    pub form: OrthogonalStructure,
    pub expected: BracketTable,
    pub expect_unimodular: bool,
}

/// The six-dimensional flat complete example, with the dual table
/// written out entry by entry.
pub fn flat_complete_example(lambda: &[Scalar; 2]) -> Result<(OscillatorAlgebra, ExampleBundle), CatalogError> {
    let g = oscillator::build_oscillator(lambda)?;
    let r = flat_complete_r(&g);
    let form = g.k_lambda()?;
    let d = g.dim();
    let (e1, ec1, e2, ec2) = (oscillator::e_index(1), oscillator::ec_index(1), oscillator::e_index(2), oscillator::ec_index(2));
    let cv = |terms: &[(usize, Scalar)]| {
        let mut c = vec![Scalar::zero(); d];
        for (k, v) in terms {
            c[*k] += v;
        }
        Covector::new(c)
    };
    let one = scalar::one;
    let sum = &lambda[0] + &lambda[1];
    let mut expected = vec![
        (E_ZERO, e1, cv(&[(e1, -one()), (e2, -one())])),
        (E_ZERO, ec1, cv(&[(E_MINUS1, lambda[0].clone()), (ec1, -one()), (ec2, one())])),
        (E_ZERO, e2, cv(&[(e1, one()), (e2, one())])),
        (E_ZERO, ec2, cv(&[(ec1, -one()), (ec2, one())])),
        (e1, e2, cv(&[(E_MINUS1, -sum.clone())])),
        (ec1, ec2, cv(&[(E_MINUS1, sum)])),
    ];
    expected.sort_by_key(|(i, j, _)| (*i, *j));
    let bundle = ExampleBundle { algebra: g.algebra().clone(), r, form, expected, expect_unimodular: true };
    Ok((g, bundle))
}

/// `r = −(a e₁∧e₂ + b e₁∧e₃ + c e₂∧e₃)`, whose sharp map has matrix
/// `[[0,a,b],[−a,0,c],[−b,−c,0]]` from `B*` to `B`.
pub fn sl2_bivector(a: &Scalar, b: &Scalar, c: &Scalar) -> Bivector {
    let mut r = Bivector::zero(3);
    r.set(0, 1, -a);
    r.set(0, 2, -b);
    r.set(1, 2, -c);
    r
}

/// `4ab + c² = 0`.
pub fn sl2_cybe_condition(a: &Scalar, b: &Scalar, c: &Scalar) -> bool {
    (scalar::int(4) * a * b + c * c).is_zero()
}

pub fn sl2_example(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<ExampleBundle, CatalogError> {
    let g = algebra::sl2();
    let form = geometry::validate_orthogonal(&g, &geometry::sl2_trace_form()).expect("trace form is orthogonal");
    let two = scalar::int(2);
    let cv = |x: Scalar, y: Scalar, z: Scalar| Covector::new(vec![x, y, z]);
    let z = Scalar::zero;
    let expected: BracketTable = vec![
        (0, 1, cv(-(&two * a), -c, z())),
        (0, 2, cv(&two * b, z(), -c)),
        (1, 2, cv(z(), &two * b, &two * a)),
    ]
    .into_iter()
    .filter(|(_, _, v)| !v.is_zero())
    .collect();
    Ok(ExampleBundle { algebra: g, r: sl2_bivector(a, b, c), form, expected, expect_unimodular: false })
}

/// Structural test that `span(sub)` is an ideal isomorphic to a Heisenberg
/// algebra: one-dimensional center equal to its derived algebra and
/// nondegenerate bracket on the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeisenbergCheck {
    pub is_ideal: bool,
    pub dim: usize,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub derived_is_center: bool,
}

impl HeisenbergCheck {
    pub fn passes(&self) -> bool {
        self.is_ideal && self.dim % 2 == 1 && self.center_dim == 1 && self.derived_dim == 1 && self.derived_is_center
    }
}

pub fn heisenberg_check(g: &LieAlgebra, sub: &[Vector]) -> HeisenbergCheck {
    let center = g.centralizer_in(sub, sub);
    let derived = g.bracket_span(sub, sub);
    let mut joined: Vec<Vec<Scalar>> = center.iter().map(|v| v.components().to_vec()).collect();
    joined.extend(derived.iter().map(|v| v.components().to_vec()));
    let derived_is_center = center.len() == derived.len() && crate::linalg::span_rank(&joined) == center.len();
    HeisenbergCheck {
        is_ideal: g.is_ideal(sub),
        dim: sub.len(),
        center_dim: center.len(),
        derived_dim: derived.len(),
        derived_is_center,
    }
}

/// Failures in the pairing table and the eigen-relations on the pair basis.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EfTableReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl EfTableReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    fn expect(&mut self, name: String, lhs: &Bivector, rhs: &Bivector) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(format!("{name}: got {lhs}, expected {rhs}"));
        }
    }
}

pub fn verify_ef_table(g: &OscillatorAlgebra) -> EfTableReport {
    let mut rep = EfTableReport::default();
    let n = g.n();
    let half = scalar::half();
    let zero = Bivector::zero(g.dim());
    // an arbitrary J_a with distinct entries alongside ad_{e₋₁} = J_λ
    let a: Vec<Scalar> = (1..=n).map(|k| scalar::ratio(2 * k as i64 * k as i64 - 7, 3)).collect();
    let maps = [("J_a", g.j_a(&a).expect("length n").map, a.clone()), ("ad_e-1", g.ad_em1(), g.lambda().to_vec())];
    for i in 1..=n {
        rep.expect(format!("ω(t{i},t{i})"), &g.omega_pair(&g.t(i), &g.t(i)), &g.t(i));
        for j in i + 1..=n {
            let b = ef_basis(g, i, j).expect("valid pair");
            let om = |x: &Bivector, y: &Bivector| g.omega_pair(x, y);
            let tsum = &b.t_i + &b.t_j;
            for (name, x) in [("r", &b.r), ("ř", &b.r_check), ("s", &b.s), ("š", &b.s_check)] {
                rep.expect(format!("ω({name}{i}{j},{name}{i}{j})"), &om(x, x), &zero);
                rep.expect(format!("ω(t{i},{name}{i}{j})"), &om(&b.t_i, x), &x.scale(&half));
                rep.expect(format!("ω(t{j},{name}{i}{j})"), &om(&b.t_j, x), &x.scale(&half));
            }
            for (nx, x) in [("r", &b.r), ("ř", &b.r_check)] {
                for (ny, y) in [("s", &b.s), ("š", &b.s_check)] {
                    rep.expect(format!("ω({nx}{i}{j},{ny}{i}{j})"), &om(x, y), &zero);
                }
            }
            rep.expect(format!("ω(r{i}{j},ř{i}{j})"), &om(&b.r, &b.r_check), &tsum.scale(&half));
            rep.expect(format!("ω(s{i}{j},š{i}{j})"), &om(&b.s, &b.s_check), &tsum.scale(&-&half));
            rep.expect(format!("ω(t{i},t{j})"), &om(&b.t_i, &b.t_j), &zero);
            let efs = [("E", &b.e), ("Ě", &b.e_check), ("F", &b.f), ("F̌", &b.f_check)];
            for (x, (nx, bx)) in efs.iter().enumerate() {
                for (ny, by) in efs.iter().skip(x + 1) {
                    rep.expect(format!("ω({nx}{i}{j},{ny}{i}{j})"), &om(bx, by), &zero);
                }
                let sign = if x < 2 { -scalar::one() } else { scalar::one() };
                rep.expect(format!("ω({nx}{i}{j},{nx}{i}{j})"), &om(bx, bx), &tsum.scale(&sign));
            }
            for (mname, m, coeffs) in &maps {
                let plus = &coeffs[i - 1] + &coeffs[j - 1];
                let minus = &coeffs[j - 1] - &coeffs[i - 1];
                let jd = |x: &Bivector| crate::multivector::j_dag(m, x);
                rep.expect(format!("{mname}†E{i}{j}"), &jd(&b.e), &b.e_check.scale(&plus));
                rep.expect(format!("{mname}†Ě{i}{j}"), &jd(&b.e_check), &b.e.scale(&-&plus));
                rep.expect(format!("{mname}†F{i}{j}"), &jd(&b.f), &b.f_check.scale(&minus));
                rep.expect(format!("{mname}†F̌{i}{j}"), &jd(&b.f_check), &b.f.scale(&-&minus));
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{cybe_check, gybe_check, r_bracket};
    use crate::oscillator::build_oscillator;
    use crate::scalar::{int, ratio};

    fn osc(l: &[i64]) -> OscillatorAlgebra {
        build_oscillator(&l.iter().map(|&x| int(x)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn ef_basis_definitions() {
        let g = osc(&[1, 2]);
        let b = ef_basis(&g, 1, 2).unwrap();
        let expected = &Bivector::wedge(&g.e(1), &g.ec(2)) + &Bivector::wedge(&g.ec(1), &g.e(2));
        assert_eq!(b.e, expected);
        assert!(g.omega_pair(&b.e, &b.f).is_zero());
        assert_eq!(b.t_i, Bivector::wedge(&g.e(1), &g.ec(1)));
        assert_eq!(ef_basis(&g, 2, 1), Err(CatalogError::BadIndices { i: 2, j: 1 }));
        assert_eq!(ef_basis(&g, 1, 3), Err(CatalogError::BadIndices { i: 1, j: 3 }));
    }

    #[test]
    fn j_dag_on_f() {
        let g = osc(&[1, 2]);
        let b = ef_basis(&g, 1, 2).unwrap();
        let j = g.j_a(&[int(3), int(7)]).unwrap();
        assert_eq!(crate::multivector::j_dag(&j.map, &b.f), b.f_check.scale(&int(4)));
        assert_eq!(g.ad_em1_dag(&b.e), b.e_check.scale(&int(3)));
    }

    #[test]
    fn dim4_examples() {
        let g = osc(&[1]);
        let r = dim4_family(&g, &Dim4Family::Cybe { u: g.em1() }).unwrap();
        assert_eq!(r.bivector().unwrap(), &Bivector::wedge(&g.e0(), &g.em1()));
        assert!(r.passes(&g, FamilyKind::Cybe));
        let r = dim4_family(&g, &Dim4Family::Gybe { alpha: int(1), u: Vector::zero(4) }).unwrap();
        assert_eq!(r.bivector().unwrap(), &g.t(1));
        assert!(r.passes(&g, FamilyKind::Gybe) && !r.passes(&g, FamilyKind::Cybe));
        let z = dim4_family(&g, &Dim4Family::Bialgebra { alpha: int(0), a: int(0), u0: Vector::zero(4) }).unwrap();
        match z {
            Realized::Bialgebra { cocycle, .. } => assert_eq!(cocycle, Cocycle::zero(4)),
            _ => panic!("expected a cocycle"),
        }
    }

    #[test]
    fn dim4_bialgebra_extracts_in_family_normalization() {
        let g = osc(&[1]);
        let fam = Dim4Family::Bialgebra { alpha: int(2), a: int(3), u0: Vector::zero(4) };
        let Realized::Bialgebra { cocycle, .. } = dim4_family(&g, &fam).unwrap() else { panic!() };
        let p = bialgebra::extract_params(&g, &cocycle).unwrap();
        assert_eq!(p.r, g.t(1).scale(&int(2)));
        assert_eq!(p.a, vec![ratio(3, 2)]);
        assert_eq!(&p.a[0] * int(2), int(3));
    }

    #[test]
    fn dim6_examples() {
        let g = osc(&[1, 2]);
        let z = Scalar::zero;
        let fam = Dim6Family::CybeP { u: Vector::zero(6), p: [int(1), z(), z(), z()], c: int(1) };
        let r = dim6_family(&g, &fam).unwrap();
        let b = ef_basis(&g, 1, 2).unwrap();
        assert_eq!(r.bivector().unwrap(), &(&(&b.e + &g.t(1)) - &g.t(2)));
        assert!(r.passes(&g, FamilyKind::Cybe));
        let bad = Dim6Family::CybeP { u: Vector::zero(6), p: [int(1), z(), z(), z()], c: int(2) };
        assert!(matches!(dim6_family(&g, &bad), Err(CatalogError::ConstraintViolated(_))));
        let fam = Dim6Family::GybeT { u: g.em1(), c1: int(1), c2: int(1) };
        assert!(dim6_family(&g, &fam).unwrap().passes(&g, FamilyKind::Gybe));
    }

    #[test]
    fn dim6_bialgebra_subcases() {
        let g = osc(&[1, 2]);
        let u0 = &g.e(1) - &g.ec(2);
        let fams = [
            Dim6Family::BialgebraT { c1: int(2), c2: int(-1), a: [int(1), int(5)], u0: u0.clone() },
            Dim6Family::BialgebraE { d: int(1), d_check: int(2), c: int(3), a: [int(2), int(-2)], u0: u0.clone() },
            Dim6Family::BialgebraF { d: int(-1), d_check: int(1), c: int(1), a: [int(3), int(3)], u0: u0.clone() },
            Dim6Family::BialgebraP { p: [int(1), int(2), int(3), int(4)], c: int(5), a: [int(0), int(0)], u0 },
        ];
        for f in &fams {
            assert!(dim6_family(&g, f).unwrap().passes(&g, FamilyKind::Bialgebra), "{f:?}");
        }
    }

    #[test]
    fn block_sums() {
        let g = osc(&[1, 2, 4, 8]);
        let b12 = ef_basis(&g, 1, 2).unwrap();
        let b34 = ef_basis(&g, 3, 4).unwrap();
        let r1 = &(&b12.e + &g.t(1)) - &g.t(2);
        let r2 = &(&b34.e + &g.t(3)) - &g.t(4);
        let r = block_sum(&g, &r1, (1, 2), &r2, (3, 4)).unwrap();
        assert!(cybe_check(g.algebra(), &r));
        assert_eq!(block_sum(&g, &r1, (1, 2), &r2, (2, 3)), Err(CatalogError::OverlappingIndices));
        let g3 = osc(&[1, 2, 4]);
        let b = ef_basis(&g3, 1, 2).unwrap();
        let r1 = &(&b.e + &g3.t(1)) - &g3.t(2);
        let z = Bivector::zero(8);
        // a single block padded with zero on a pair that does not exist is rejected
        assert!(block_sum(&g3, &r1, (1, 2), &z, (3, 4)).is_err());
        assert!(cybe_check(g3.algebra(), &r1));
    }

    #[test]
    fn isotropic_solutions() {
        let g = osc(&[1, 2]);
        let mu = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(-1), int(0)]]);
        let r = isotropic_solution(&g, &[g.e(1), g.e(2)], &mu).unwrap();
        assert_eq!(r, Bivector::wedge(&g.e(1), &g.e(2)));
        assert!(cybe_check(g.algebra(), &r));
        assert!(bialgebra::reduced_cybe(&g, &r, &int(0)).unwrap().is_zero());
        assert_eq!(
            isotropic_solution(&g, &[g.e(1), g.ec(1)], &mu),
            Err(CatalogError::NotIsotropic { a: 0, b: 1 })
        );
        assert_eq!(isotropic_solution(&g, &[g.e(1), g.e(2)], &Matrix::zeros(2, 2)), Err(CatalogError::DegenerateMu));
    }

    #[test]
    fn flat_complete_table() {
        let (g, bundle) = flat_complete_example(&[int(1), int(2)]).unwrap();
        let dual = r_bracket(g.algebra(), &bundle.r).unwrap();
        assert_eq!(bracket_table(&dual.algebra), bundle.expected);
        let e1 = oscillator::e_index(1);
        let e2 = oscillator::e_index(2);
        assert_eq!(dual.bracket_basis(e1, e2), Covector::basis(6, E_MINUS1).scale(&int(-3)));
        assert!(cybe_check(g.algebra(), &bundle.r));
        let ideal: Vec<Vector> = [0, 2, 3, 4, 5].iter().map(|&i| Vector::basis(6, i)).collect();
        assert!(heisenberg_check(&dual.algebra, &ideal).passes());
    }

    #[test]
    fn sl2_example_cases() {
        for (a, b, c, cybe) in [(1, 0, 0, true), (1, -1, 2, true), (1, 1, 1, false)] {
            let bundle = sl2_example(&int(a), &int(b), &int(c)).unwrap();
            assert_eq!(cybe_check(&bundle.algebra, &bundle.r), cybe, "({a},{b},{c})");
            assert_eq!(sl2_cybe_condition(&int(a), &int(b), &int(c)), cybe);
            if cybe {
                let dual = r_bracket(&bundle.algebra, &bundle.r).unwrap();
                assert_eq!(bracket_table(&dual.algebra), bundle.expected);
            }
        }
        let bundle = sl2_example(&int(1), &int(0), &int(0)).unwrap();
        assert_eq!(bundle.expected[0].2, Covector::new(vec![int(-2), int(0), int(0)]));
    }

    #[test]
    fn ef_table() {
        for l in [&[1, 2][..], &[1, 2, 4], &[1, 2, 4, 8]] {
            let rep = verify_ef_table(&osc(l));
            assert!(rep.passes(), "{:?}", rep.failures);
        }
    }

    #[test]
    fn gybe_without_cybe_in_dim6() {
        let g = osc(&[1, 2]);
        let r = &g.t(1) + &g.t(2);
        assert!(gybe_check(g.algebra(), &r) && !cybe_check(g.algebra(), &r));
    }
}
