//! The full battery of reproducible checks behind `liebial verify`.
//!
//! Every check is exact. Random draws come from a seeded [`Sampler`], and
//! grids from [`sampling::grid_values`]; both are echoed in the report.

use std::path::{Path, PathBuf};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{self, LieAlgebra, Vector};
use crate::bialgebra::{self, BialgebraParams, Cocycle, YbeCase};
use crate::catalog::{self, Dim6Family, Realized};
use crate::geometry::{self, Completeness};
use crate::io::{self, Document, ExplicitAlgebraSpec};
use crate::linalg::Matrix;
use crate::multivector::{self, Bivector};
use crate::oracle;
use crate::oscillator::{self, NormalParts, OscillatorAlgebra, E_MINUS1, E_ZERO};
use crate::sampling::{self, Sampler, DEFAULT_SEED};
use crate::scalar::{self, int, Scalar};

const MAX_LISTED_FAILURES: usize = 20;

pub const CRITERIA: [&str; 12] = [
    "oscillator algebras: Jacobi, bracket on S, skew ad, invariant form",
    "Schouten bracket against decomposable expansion",
    "pairing table and eigen-relations on the pair basis",
    "dimension 4 classification grid",
    "dimension 6 families and case analysis grid",
    "bialgebra condition equivalence and cocycle spaces",
    "Yang-Baxter normal form equivalence and isotropic images",
    "dual structure and unimodularity",
    "flat and locally symmetric duals",
    "six-dimensional flat complete example",
    "sl(2) example",
    "cross-formula consistency",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Grid half-width `N`: values `k/2` with `|k| ≤ N` (doubled for sl(2)).
    pub grid: i64,
    pub golden_dir: PathBuf,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { seed: DEFAULT_SEED, grid: 2, golden_dir: default_golden_dir() }
    }
}

pub fn default_golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join("golden")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl CheckResult {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{verdict} [{:2}] {} ({} checks", self.id, self.name, self.checked);
        if self.failed > 0 {
            s.push_str(&format!(", {} failed", self.failed));
        }
        s.push(')');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub grid: i64,
    pub golden_dir: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_count(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn text(&self) -> String {
        let mut s = format!("seed {} grid {} golden {}\n", self.seed, self.grid, self.golden_dir);
        for c in &self.checks {
            s.push_str(&c.line());
            s.push('\n');
            for n in &c.notes {
                s.push_str(&format!("       {n}\n"));
            }
            for f in &c.failures {
                s.push_str(&format!("       failure: {f}\n"));
            }
        }
        let failed = self.failed_count();
        s.push_str(&format!("{} of {} criteria passed\n", self.checks.len() - failed, self.checks.len()));
        s
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failed: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < MAX_LISTED_FAILURES {
            self.failures.push(msg);
        }
    }

    /// Adds `n` checks that all passed, e.g. the components of a zero tensor.
    fn passed(&mut self, n: usize) {
        self.checked += n;
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn finish(self, id: usize) -> CheckResult {
        CheckResult {
            id,
            name: CRITERIA[id - 1].to_string(),
            passed: self.failed == 0,
            checked: self.checked,
            failed: self.failed,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

pub fn run_all(cfg: &VerifyConfig) -> VerifyReport {
    let checks = (1..=CRITERIA.len()).into_par_iter().map(|id| run(id, cfg)).collect();
    VerifyReport { seed: cfg.seed, grid: cfg.grid, golden_dir: cfg.golden_dir.display().to_string(), checks }
}

/// Runs criterion `id` (1-based). Panics on an unknown id.
pub fn run(id: usize, cfg: &VerifyConfig) -> CheckResult {
    let tally = match id {
        1 => oscillator_validity(),
        2 => schouten_oracle(cfg),
        3 => ef_identities(),
        4 => dim4_grid(cfg),
        5 => dim6_families(cfg),
        6 => bialgebra_equivalence(cfg),
        7 => normal_form_equivalence(cfg),
        8 => dual_structure(cfg),
        9 => dual_geometry(cfg),
        10 => flat_complete_example(cfg),
        11 => sl2_example(cfg),
        12 => cross_formula(cfg),
        _ => panic!("unknown criterion {id}"),
    };
    tally.finish(id)
}

fn sampler(cfg: &VerifyConfig, id: u64) -> Sampler {
    Sampler::new(cfg.seed.wrapping_add(id.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

fn osc(lambda: &[i64]) -> OscillatorAlgebra {
    let l: Vec<Scalar> = lambda.iter().map(|&x| int(x)).collect();
    oscillator::build_oscillator(&l).expect("fixed λ is valid")
}

fn form(m: &Matrix, x: &Vector, y: &Vector) -> Scalar {
    let mut acc = Scalar::zero();
    for (i, xi) in x.components().iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.components().iter().enumerate() {
            acc += xi * &m[(i, j)] * yj;
        }
    }
    acc
}

fn aff1() -> LieAlgebra {
    LieAlgebra::from_upper_brackets(vec!["x".into(), "y".into()], [(0, 1, Vector::basis(2, 1))]).expect("valid")
}

/// A nonabelian Lie algebra of each dimension from 3 to 10.
pub fn test_algebra(d: usize) -> LieAlgebra {
    match d {
        3 => algebra::sl2(),
        4 => osc(&[1]).algebra().clone(),
        5 => algebra::sl2().direct_sum(&aff1()),
        6 => osc(&[1, 2]).algebra().clone(),
        7 => algebra::sl2().direct_sum(osc(&[1]).algebra()),
        8 => osc(&[1, 2, 4]).algebra().clone(),
        9 => algebra::sl2().direct_sum(osc(&[1, 2]).algebra()),
        10 => osc(&[1, 2, 4, 8]).algebra().clone(),
        _ => panic!("no test algebra in dimension {d}"),
    }
}

// 1

fn oscillator_validity() -> Tally {
    let mut t = Tally::default();
    for lambda in [&[1][..], &[1, 2], &[1, 2, 4]] {
        let g = osc(lambda);
        let alg = g.algebra();
        let d = g.dim();
        let k = match g.k_lambda() {
            Ok(k) => k.matrix().clone(),
            Err(e) => {
                t.fail(format!("λ={lambda:?}: k_λ rejected: {e}"));
                continue;
            }
        };
        let b: Vec<Vector> = (0..d).map(|i| alg.basis(i)).collect();
        let br: Vec<Vec<Vector>> = (0..d).map(|i| (0..d).map(|j| alg.bracket(&b[i], &b[j])).collect()).collect();
        for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    let jac = &(&alg.bracket(&br[i][j], &b[l]) + &alg.bracket(&br[j][l], &b[i])) + &alg.bracket(&br[l][i], &b[j]);
                    t.check(jac.is_zero(), || format!("λ={lambda:?}: Jacobi fails at ({i},{j},{l})"));
                    let inv = form(&k, &br[i][j], &b[l]) + form(&k, &b[j], &br[i][l]);
                    t.check(inv.is_zero(), || format!("λ={lambda:?}: k_λ not invariant at ({i},{j},{l})"));
                }
            }
            t.check(br[E_ZERO][i].is_zero(), || format!("λ={lambda:?}: e₀ not central against {i}"));
        }
        let ad = g.ad_em1();
        for u in g.s_indices() {
            for v in g.s_indices() {
                let w = g.omega(&b[u], &b[v]);
                t.check(br[u][v] == g.e0().scale(&w), || format!("λ={lambda:?}: [{u},{v}] ≠ ω e₀"));
                let skew = g.omega(&ad.apply(&b[u]), &b[v]) + g.omega(&b[u], &ad.apply(&b[v]));
                t.check(skew.is_zero(), || format!("λ={lambda:?}: ad_{{e₋₁}} not ω-skew at ({u},{v})"));
            }
        }
    }
    t
}

// 2

fn schouten_oracle(cfg: &VerifyConfig) -> Tally {
    let mut s = sampler(cfg, 2);
    let algebras: Vec<LieAlgebra> = (3..=10).map(test_algebra).collect();
    let cases: Vec<(usize, Bivector)> = (0..200)
        .map(|k| {
            let d = 3 + k % 8;
            (d, s.bivector(d))
        })
        .collect();
    let results: Vec<bool> = cases
        .par_iter()
        .map(|(d, r)| {
            let g = &algebras[d - 3];
            multivector::schouten_self(g, r) == oracle::schouten_by_decomposables(g, r)
        })
        .collect();
    let mut t = Tally::default();
    for (k, ok) in results.into_iter().enumerate() {
        t.check(ok, || format!("draw {k} (dim {}) disagrees with the oracle", cases[k].0));
    }
    t
}

// 3

fn ef_identities() -> Tally {
    let mut t = Tally::default();
    for lambda in [&[1, 2][..], &[1, 2, 4], &[1, 2, 4, 8]] {
        let rep = catalog::verify_ef_table(&osc(lambda));
        t.passed(rep.checked - rep.failures.len());
        for f in rep.failures {
            t.fail(format!("n={}: {f}", lambda.len()));
        }
    }
    t
}

// 4

fn dim4_grid(cfg: &VerifyConfig) -> Tally {
    let g = osc(&[1]);
    let alg = g.algebra();
    let vals = sampling::grid_values(cfg.grid);
    let total = sampling::grid_size(&vals, 6);
    let rows: Vec<(usize, bool, bool, bool, bool)> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let r = Bivector::from_upper_coordinates(4, &sampling::grid_point(&vals, 6, idx));
            let z = |i, j| r.get(i, j).is_zero();
            // e₀∧u has no entries away from index 1; adding αt₁ frees (2,3)
            let in_cybe_family = z(0, 2) && z(0, 3) && z(2, 3);
            let in_gybe_family = z(0, 2) && z(0, 3);
            (idx, in_cybe_family, bialgebra::cybe_check(alg, &r), in_gybe_family, bialgebra::gybe_check(alg, &r))
        })
        .collect();
    let mut t = Tally::default();
    let (mut nc, mut ng) = (0, 0);
    for (idx, fc, c, fg, gy) in rows {
        nc += usize::from(c);
        ng += usize::from(gy);
        t.check(!c || fc, || format!("grid point {idx}: CYBE solution outside e₀∧u"));
        t.check(!fc || c, || format!("grid point {idx}: e₀∧u fails CYBE"));
        t.check(!gy || fg, || format!("grid point {idx}: GYBE solution outside e₀∧u + αt₁"));
        t.check(!fg || gy, || format!("grid point {idx}: e₀∧u + αt₁ fails GYBE"));
    }
    t.note(format!("{total} grid points over {} values; {nc} CYBE and {ng} GYBE solutions", vals.len()));
    t
}

// 5

fn nonzero_coords(s: &mut Sampler) -> catalog::EfCoords {
    [s.nonzero_scalar(), s.nonzero_scalar(), s.nonzero_scalar(), s.nonzero_scalar()]
}

/// `(a, ǎ, b, b̌)` with `a² + ǎ² − b² − b̌² = c²`.
fn constrained_coords(s: &mut Sampler, c: &Scalar) -> catalog::EfCoords {
    let x = s.scalar();
    let z = Scalar::zero();
    match s.index(4) {
        0 => [c.clone(), x.clone(), x, z],
        1 => [x.clone(), c.clone(), z, x],
        2 => [c.clone(), x.clone(), z, x],
        _ => [x.clone(), c.clone(), x, z],
    }
}

fn draw_dim6(s: &mut Sampler, g: &OscillatorAlgebra, variant: usize, violate: bool) -> Dim6Family {
    let pair_a = |s: &mut Sampler| [s.scalar(), s.scalar()];
    match variant {
        0 => Dim6Family::BialgebraT { c1: s.scalar(), c2: s.scalar(), a: pair_a(s), u0: s.vector_in_s(g) },
        1 | 2 => {
            let (d, d_check, c) = (s.nonzero_scalar(), s.nonzero_scalar(), s.scalar());
            let x = s.scalar();
            let shift = if violate { s.nonzero_scalar() } else { Scalar::zero() };
            let u0 = s.vector_in_s(g);
            if variant == 1 {
                Dim6Family::BialgebraE { d, d_check, c, a: [x.clone(), -x + shift], u0 }
            } else {
                Dim6Family::BialgebraF { d, d_check, c, a: [x.clone(), x + shift], u0 }
            }
        }
        3 => {
            let a = if violate { [s.nonzero_scalar(), s.scalar()] } else { [Scalar::zero(), Scalar::zero()] };
            Dim6Family::BialgebraP { p: nonzero_coords(s), c: s.scalar(), a, u0: s.vector_in_s(g) }
        }
        4 => Dim6Family::GybeT { u: s.vector(g.dim()), c1: s.scalar(), c2: s.scalar() },
        5 => {
            let mut u = s.vector_in_s(g);
            if violate {
                u = u.axpy(&s.nonzero_scalar(), &g.em1());
            }
            Dim6Family::GybeP { u, p: nonzero_coords(s), c: s.scalar() }
        }
        6 => Dim6Family::CybeE0 { u: s.vector(g.dim()) },
        _ => {
            let mut c = s.scalar();
            let mut p = constrained_coords(s, &c);
            let mut u = s.vector_in_s(g);
            if violate {
                if s.coin() {
                    while catalog::cyb_constraint_holds(&p, &c) {
                        p[0] = &p[0] + scalar::one();
                    }
                } else {
                    c = s.nonzero_scalar();
                    p = constrained_coords(s, &c);
                    u = u.axpy(&s.nonzero_scalar(), &g.em1());
                }
            }
            Dim6Family::CybeP { u, p, c }
        }
    }
}

const DIM6_VARIANTS: [&str; 8] = ["T", "E", "F", "P", "GYBE t", "GYBE p", "CYBE e₀∧u", "CYBE p"];
const DIM6_CONSTRAINED: [usize; 5] = [1, 2, 3, 5, 7];

fn dim6_families(cfg: &VerifyConfig) -> Tally {
    let mut s = sampler(cfg, 5);
    let g = osc(&[1, 2]);
    let mut draws = Vec::new();
    for variant in 0..DIM6_VARIANTS.len() {
        for _ in 0..100 {
            draws.push((variant, false, draw_dim6(&mut s, &g, variant, false)));
        }
    }
    for variant in DIM6_CONSTRAINED {
        for _ in 0..100 {
            draws.push((variant, true, draw_dim6(&mut s, &g, variant, true)));
        }
    }
    let outcomes: Vec<(usize, bool, bool, bool)> = draws
        .par_iter()
        .map(|(variant, violate, fam)| {
            let constraint_ok = fam.check(&g).is_ok();
            let passes = catalog::realize_dim6(&g, fam).map(|r| r.passes(&g, fam.kind())).unwrap_or(false);
            (*variant, *violate, constraint_ok, passes)
        })
        .collect();
    let mut t = Tally::default();
    for (k, (variant, violate, constraint_ok, passes)) in outcomes.into_iter().enumerate() {
        let name = DIM6_VARIANTS[variant];
        if violate {
            t.check(!constraint_ok, || format!("draw {k} ({name}): violating draw accepted by the constraint check"));
            t.check(!passes, || format!("draw {k} ({name}): constraint-violating draw passes its predicate"));
        } else {
            t.check(constraint_ok, || format!("draw {k} ({name}): valid draw rejected by the constraint check"));
            t.check(passes, || format!("draw {k} ({name}): family member fails its predicate"));
        }
    }

    // c₁t₁ + c₂t₂ + p₁₂ with α = 0
    let vals = sampling::grid_values(cfg.grid);
    let total = sampling::grid_size(&vals, 6);
    let zero = Scalar::zero();
    let rows: Vec<(usize, bool, bool)> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let x = sampling::grid_point(&vals, 6, idx);
            let p = catalog::p_ij(&g, 1, 2, [&x[0], &x[1], &x[2], &x[3]]).expect("pair (1,2)");
            let r = &(&p + &g.t(1).scale(&x[4])) + &g.t(2).scale(&x[5]);
            let solved = bialgebra::reduced_cybe(&g, &r, &zero).expect("r ∈ ∧²S").is_zero();
            let predicted = x[4] == -&x[5] && catalog::cyb_constraint_holds(&[x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()], &x[4]);
            (idx, solved, predicted)
        })
        .collect();
    let mut hits = 0;
    for (idx, solved, predicted) in rows {
        hits += usize::from(solved);
        t.check(solved == predicted, || format!("case grid point {idx}: condition {solved}, prediction {predicted}"));
    }
    t.note(format!("case grid: {total} points, {hits} solutions"));
    t
}

// 6

#[derive(Clone, Copy, PartialEq, Eq)]
enum Block {
    E,
    F,
    P,
}

fn pick_pair(s: &mut Sampler, n: usize) -> (usize, usize) {
    let i = 1 + s.index(n - 1);
    let j = i + 1 + s.index(n - i);
    (i, j)
}

fn block_bivector(s: &mut Sampler, g: &OscillatorAlgebra, (i, j): (usize, usize), block: Block) -> Bivector {
    let ef = catalog::ef_basis(g, i, j).expect("valid pair");
    match block {
        Block::E => &ef.e.scale(&s.nonzero_scalar()) + &ef.e_check.scale(&s.nonzero_scalar()),
        Block::F => &ef.f.scale(&s.nonzero_scalar()) + &ef.f_check.scale(&s.nonzero_scalar()),
        Block::P => {
            let x = nonzero_coords(s);
            catalog::p_ij(g, i, j, [&x[0], &x[1], &x[2], &x[3]]).expect("valid pair")
        }
    }
}

/// `Σ c_k t_k` over `k` outside `skip`.
fn diagonal(s: &mut Sampler, g: &OscillatorAlgebra, skip: &[usize]) -> Bivector {
    let mut r = Bivector::zero(g.dim());
    for k in 1..=g.n() {
        if !skip.contains(&k) {
            r = r.axpy(&s.scalar(), &g.t(k));
        }
    }
    r
}

/// Bialgebra parameters; mode 0 is unconstrained, 1 diagonal, 2 a valid
/// pair block, 3 a pair block whose constraint on `a` is broken.
fn draw_params(s: &mut Sampler, g: &OscillatorAlgebra, mode: usize) -> BialgebraParams {
    let n = g.n();
    let u0 = s.vector_in_s(g);
    let mut a = s.scalars(n);
    if mode == 0 || (n == 1 && mode != 1) {
        return BialgebraParams { r: s.sparse_bivector_in_wedge2_s(g), u0, a };
    }
    if mode == 1 {
        return BialgebraParams { r: diagonal(s, g, &[]), u0, a };
    }
    let (i, j) = pick_pair(s, n);
    let block = [Block::E, Block::F, Block::P][s.index(3)];
    let c = s.scalar();
    let r = &(&block_bivector(s, g, (i, j), block) + &(&g.t(i) - &g.t(j)).scale(&c)) + &diagonal(s, g, &[i, j]);
    let x = s.scalar();
    let shift = if mode == 3 { s.nonzero_scalar() } else { Scalar::zero() };
    match block {
        Block::E => {
            a[i - 1] = x.clone();
            a[j - 1] = -x + shift;
        }
        Block::F => {
            a[i - 1] = x.clone();
            a[j - 1] = x + shift;
        }
        Block::P => {
            a[i - 1] = shift;
            a[j - 1] = Scalar::zero();
        }
    }
    BialgebraParams { r, u0, a }
}

fn em1_star_central(xi: &Cocycle) -> bool {
    let d = xi.dim();
    xi.images().iter().all(|im| (0..d).all(|k| im.get(E_MINUS1, k).is_zero()))
}

fn bialgebra_equivalence(cfg: &VerifyConfig) -> Tally {
    let mut s = sampler(cfg, 6);
    let mut t = Tally::default();
    for lambda in [&[1, 2][..], &[1, 2, 4]] {
        let g = osc(lambda);
        let draws: Vec<BialgebraParams> = (0..200).map(|k| draw_params(&mut s, &g, k % 4)).collect();
        let rows: Vec<(bool, bool, bool)> = draws
            .par_iter()
            .map(|p| {
                let xi = bialgebra::params_cocycle(&g, p).expect("parameters are well-formed");
                let jacobi = bialgebra::dual_bracket_from_cocycle(g.algebra(), &xi).is_ok();
                let condition = bialgebra::bialgebra_condition(&g, &p.r, &p.a).expect("r ∈ ∧²S").is_zero();
                let extra = !jacobi
                    || (em1_star_central(&xi) && bialgebra::extract_params(&g, &xi).as_ref() == Ok(p));
                (jacobi, condition, extra)
            })
            .collect();
        let yes = rows.iter().filter(|r| r.0).count();
        for (k, (jacobi, condition, extra)) in rows.into_iter().enumerate() {
            t.check(jacobi == condition, || format!("λ={lambda:?} draw {k}: Jacobi {jacobi}, condition {condition}"));
            t.check(extra, || format!("λ={lambda:?} draw {k}: e₋₁* not central or extraction fails"));
        }
        t.check(yes > 0 && yes < 200, || format!("λ={lambda:?}: only one side of the equivalence was sampled"));
        t.note(format!("λ={lambda:?}: {yes} of 200 draws are bialgebras"));
    }

    for lambda in [&[1][..], &[1, 2]] {
        let g = osc(lambda);
        let alg = g.algebra();
        let basis = bialgebra::solve_cocycle_space(alg);
        let mut bialgebras = 0;
        let mut examine = |t: &mut Tally, xi: &Cocycle, what: &str| {
            t.check(bialgebra::is_cocycle(alg, xi), || format!("λ={lambda:?} {what}: not a cocycle"));
            t.check(xi.image(E_ZERO).is_zero(), || format!("λ={lambda:?} {what}: ξ(e₀) ≠ 0"));
            if bialgebra::dual_bracket_from_cocycle(alg, xi).is_ok() {
                bialgebras += 1;
                t.check(em1_star_central(xi), || format!("λ={lambda:?} {what}: e₋₁* not central"));
                t.check(bialgebra::extract_params(&g, xi).is_ok(), || format!("λ={lambda:?} {what}: extraction fails"));
            }
        };
        for (k, xi) in basis.iter().enumerate() {
            examine(&mut t, xi, &format!("basis cocycle {k}"));
        }
        for k in 0..200 {
            let mut images = vec![Bivector::zero(alg.dim()); alg.dim()];
            for _ in 0..1 + s.index(3) {
                let b = &basis[s.index(basis.len())];
                let c = s.nonzero_scalar();
                images = images.iter().zip(b.images()).map(|(x, y)| x.axpy(&c, y)).collect();
            }
            let xi = Cocycle::new(images).expect("dimensions agree");
            examine(&mut t, &xi, &format!("combination {k}"));
        }
        t.note(format!("λ={lambda:?}: cocycle space of dimension {}, {bialgebras} bialgebra cocycles examined", basis.len()));
    }
    t
}

// 7

/// A draw of `r₀ ∈ ∧²S` and the `e₀∧e₋₁` coefficient.
fn draw_r0(s: &mut Sampler, g: &OscillatorAlgebra, mode: usize) -> (Bivector, Scalar) {
    let n = g.n();
    let coef_maybe = |s: &mut Sampler| if s.coin() { Scalar::zero() } else { s.scalar() };
    if n == 1 {
        let x = if mode.is_multiple_of(2) { s.scalar() } else { Scalar::zero() };
        return (g.t(1).scale(&x), coef_maybe(s));
    }
    match mode {
        0 => (s.sparse_bivector_in_wedge2_s(g), s.scalar()),
        1 => (diagonal(s, g, &[]), s.scalar()),
        2 => {
            let (i, j) = pick_pair(s, n);
            let c = s.scalar();
            let r = &(&block_bivector(s, g, (i, j), Block::P) + &(&g.t(i) - &g.t(j)).scale(&c)) + &diagonal(s, g, &[i, j]);
            (r, coef_maybe(s))
        }
        3 => {
            let (i, j) = pick_pair(s, n);
            let c = s.scalar();
            let x = constrained_coords(s, &c);
            let p = catalog::p_ij(g, i, j, [&x[0], &x[1], &x[2], &x[3]]).expect("valid pair");
            (&p + &(&g.t(i) - &g.t(j)).scale(&c), coef_maybe(s))
        }
        _ => (isotropic_draw(s, g), coef_maybe(s)),
    }
}

/// `r₀` with image `span(e_i + xě_j, e_j + xě_i)`, which is ω-isotropic.
fn isotropic_draw(s: &mut Sampler, g: &OscillatorAlgebra) -> Bivector {
    let (i, j) = pick_pair(s, g.n());
    let x = s.scalar();
    let f = [g.e(i).axpy(&x, &g.ec(j)), g.e(j).axpy(&x, &g.ec(i))];
    let m = s.nonzero_scalar();
    let mu = Matrix::from_rows(vec![vec![Scalar::zero(), m.clone()], vec![-m, Scalar::zero()]]);
    catalog::isotropic_solution(g, &f, &mu).expect("isotropic by construction")
}

fn image_is_isotropic(g: &OscillatorAlgebra, r0: &Bivector) -> bool {
    let alg = g.algebra();
    let s: Vec<usize> = g.s_indices().collect();
    let sharps: Vec<Vector> = s.iter().map(|&k| r0.sharp(&alg.dual_basis(k))).collect();
    sharps.iter().all(|x| sharps.iter().all(|y| g.omega(x, y).is_zero()))
}

fn normal_form_equivalence(cfg: &VerifyConfig) -> Tally {
    let mut s = sampler(cfg, 7);
    let mut t = Tally::default();
    let two = int(2);
    let mut totals = [0usize; 3];
    for lambda in [&[1][..], &[1, 2], &[1, 2, 4]] {
        let g = osc(lambda);
        let draws: Vec<(Bivector, NormalParts)> = (0..200)
            .map(|k| {
                let (r0, coef) = draw_r0(&mut s, &g, k % 5);
                let parts = NormalParts { coef, u0: s.vector_in_s(&g), r0 };
                (g.assemble(&parts), parts)
            })
            .collect();
        let rows: Vec<[bool; 7]> = draws
            .par_iter()
            .map(|(r, parts)| {
                let alg = g.algebra();
                let cybe = bialgebra::cybe_check(alg, r);
                let gybe = bialgebra::gybe_check(alg, r);
                let reduced_c = bialgebra::reduced_cybe(&g, &parts.r0, &parts.coef).expect("r₀ ∈ ∧²S").is_zero();
                let reduced_g = bialgebra::reduced_gybe(&g, &parts.r0, &(&parts.coef / &two)).expect("r₀ ∈ ∧²S").is_zero();
                let normal = match bialgebra::yang_baxter_normal_form(&g, r) {
                    Ok(nf) => {
                        let case = if cybe { YbeCase::Cybe } else { YbeCase::Gybe };
                        nf.case == case && nf.coef == parts.coef && nf.u0 == parts.u0 && nf.r0 == parts.r0
                    }
                    Err(_) => !gybe,
                };
                let iso = image_is_isotropic(&g, &parts.r0);
                let cybe_r0 = bialgebra::reduced_cybe(&g, &parts.r0, &Scalar::zero()).expect("r₀ ∈ ∧²S").is_zero();
                [cybe, reduced_c, gybe, reduced_g, normal, iso, cybe_r0]
            })
            .collect();
        let (mut nc, mut ng, mut ni) = (0, 0, 0);
        for (k, [cybe, reduced_c, gybe, reduced_g, normal, iso, cybe_r0]) in rows.into_iter().enumerate() {
            nc += usize::from(cybe);
            ng += usize::from(gybe);
            ni += usize::from(iso);
            t.check(cybe == reduced_c, || format!("λ={lambda:?} draw {k}: CYBE {cybe}, reduced condition {reduced_c}"));
            t.check(gybe == reduced_g, || format!("λ={lambda:?} draw {k}: GYBE {gybe}, reduced condition {reduced_g}"));
            t.check(normal, || format!("λ={lambda:?} draw {k}: normal form disagrees"));
            t.check(iso == cybe_r0, || format!("λ={lambda:?} draw {k}: isotropic image {iso}, α=0 condition {cybe_r0}"));
        }
        totals = [totals[0] + nc, totals[1] + ng, totals[2] + ni];
        t.note(format!("λ={lambda:?}: {nc} CYBE, {ng} GYBE, {ni} isotropic images among 200 draws"));
    }
    // on G_(1) every bivector in normal form solves GYBE, so sides are counted over all draws
    let draws = 600;
    t.check(totals.iter().all(|&x| x > 0 && x < draws), || "one side of an equivalence was not sampled".into());
    t
}

// 8

fn dual_structure(cfg: &VerifyConfig) -> Tally {
    let mut s = sampler(cfg, 8);
    let mut t = Tally::default();
    for lambda in [&[1][..], &[1, 2], &[1, 2, 4]] {
        let g = osc(lambda);
        let draws: Vec<BialgebraParams> = (0..100).map(|k| draw_params(&mut s, &g, 1 + k % 2)).collect();
        let rows: Vec<Result<bialgebra::DualStructureReport, String>> = draws
            .par_iter()
            .map(|p| bialgebra::analyze_dual_structure(&g, p).map_err(|e| e.to_string()))
            .collect();
        let mut unimodular = 0;
        for (k, (row, p)) in rows.into_iter().zip(&draws).enumerate() {
            match row {
                Ok(rep) => {
                    unimodular += usize::from(rep.unimodular);
                    let n = g.n();
                    t.check(rep.center_contains_em1star, || format!("λ={lambda:?} draw {k}: e₋₁* not central"));
                    t.check(rep.brackets_into_line, || format!("λ={lambda:?} draw {k}: [S*,S*] ⊄ ℝe₋₁*"));
                    t.check(rep.form_rank == 2 * (n - rep.p), || format!("λ={lambda:?} draw {k}: rank ≠ 2(n−p)"));
                    t.check(rep.unimodular == rep.unimodular_by_trace, || format!("λ={lambda:?} draw {k}: unimodularity criteria disagree"));
                    let by_sum = bialgebra::diagonal_sum(&p.r, n).is_zero();
                    t.check(rep.unimodular == by_sum, || format!("λ={lambda:?} draw {k}: diagonal sum disagrees"));
                }
                Err(e) => t.fail(format!("λ={lambda:?} draw {k}: {e}")),
            }
        }
        t.note(format!("λ={lambda:?}: {unimodular} of 100 sampled duals unimodular"));
    }

    let g = osc(&[1, 2]);
    let fams: Vec<Dim6Family> = (0..100).map(|k| draw_dim6(&mut s, &g, 6 + k % 2, false)).collect();
    let rows: Vec<bool> = fams
        .par_iter()
        .map(|fam| match catalog::dim6_family(&g, fam) {
            Ok(Realized::Bivector(r)) => bialgebra::r_bracket(g.algebra(), &r).map(|d| d.algebra.is_unimodular()).unwrap_or(false),
            _ => false,
        })
        .collect();
    for (k, ok) in rows.into_iter().enumerate() {
        t.check(ok, || format!("dimension 6 CYBE draw {k}: dual not unimodular"));
    }
    t
}

// 9

fn dual_geometry(cfg: &VerifyConfig) -> Tally {
    let mut s = sampler(cfg, 9);
    let g1 = osc(&[1]);
    let g2 = osc(&[1, 2]);
    let mut cases: Vec<(&OscillatorAlgebra, Bivector)> = vec![(&g1, g1.t(1)), (&g1, Bivector::zero(4)), (&g2, Bivector::zero(6))];
    for _ in 0..10 {
        let u = s.vector(4);
        cases.push((&g1, Bivector::wedge(&g1.e0(), &u)));
        cases.push((&g1, &Bivector::wedge(&g1.e0(), &u) + &g1.t(1).scale(&s.nonzero_scalar())));
    }
    for variant in [4, 5, 6, 7] {
        for _ in 0..8 {
            if let Ok(Realized::Bivector(r)) = catalog::dim6_family(&g2, &draw_dim6(&mut s, &g2, variant, false)) {
                cases.push((&g2, r));
            }
        }
    }
    for _ in 0..6 {
        let u = s.vector_in_s(&g2);
        cases.push((&g2, &Bivector::wedge(&g2.e0(), &u) + &isotropic_draw(&mut s, &g2)));
    }
    let rows: Vec<Result<(bool, bool, bool, usize), String>> = cases
        .par_iter()
        .map(|(g, r)| {
            let alg = g.algebra();
            let k = g.k_lambda().map_err(|e| e.to_string())?;
            let cybe = bialgebra::cybe_check(alg, r);
            let rep = geometry::geometry_report(alg, &k, r).map_err(|e| e.to_string())?;
            Ok((cybe, rep.flat, rep.locally_symmetric, g.dim()))
        })
        .collect();
    let mut t = Tally::default();
    let (mut nc, mut ng) = (0, 0);
    for (k, row) in rows.into_iter().enumerate() {
        match row {
            Ok((cybe, flat, parallel, d)) => {
                // connection against the Koszul formula, torsion, metric and the two curvature formulas
                t.passed(4);
                if cybe {
                    nc += 1;
                    t.check(flat, || format!("case {k}: CYBE solution with nonzero curvature"));
                    t.passed(d.pow(4) - 1);
                } else {
                    ng += 1;
                    t.check(parallel, || format!("case {k}: GYBE solution with ∇R ≠ 0"));
                    t.passed(d.pow(5) - 1);
                }
                if k == 0 {
                    t.check(!cybe && !flat, || "t₁ on G_(1) should have nonzero curvature".into());
                }
            }
            Err(e) => t.fail(format!("case {k}: {e}")),
        }
    }
    t.note(format!("{nc} CYBE and {ng} GYBE-only solutions"));
    t
}

// 10, 11

fn golden(cfg: &VerifyConfig, name: &str) -> Result<Document, String> {
    let path = cfg.golden_dir.join(name);
    Document::read(&path).map_err(|e| format!("{name}: {e}"))
}

fn compare_dual(t: &mut Tally, name: &str, doc: &Document, dual: &LieAlgebra) {
    let computed = io::to_canonical_string(&ExplicitAlgebraSpec::from_algebra(dual));
    match &doc.dual {
        Some(expected) => {
            let expected = io::to_canonical_string(expected);
            t.check(computed == expected, || format!("{name}: dual brackets differ from the stored table"));
        }
        None => t.fail(format!("{name}: no dual table stored")),
    }
}

fn flat_complete_example(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    for lambda in [[1, 2], [1, 3]] {
        let name = format!("flat_complete_{}_{}.json", lambda[0], lambda[1]);
        let doc = match golden(cfg, &name) {
            Ok(d) => d,
            Err(e) => {
                t.fail(e);
                continue;
            }
        };
        let (g, bundle) = catalog::flat_complete_example(&[int(lambda[0]), int(lambda[1])]).expect("λ is generic");
        let alg = g.algebra();
        let loaded = doc.algebra.load();
        t.check(loaded.as_ref().map(|l| &l.algebra == alg).unwrap_or(false), || format!("{name}: stored algebra differs"));
        let stored_r = loaded.ok().and_then(|l| doc.bivector(&l).ok().flatten());
        t.check(stored_r.as_ref() == Some(&bundle.r), || format!("{name}: stored bivector differs"));
        t.check(bialgebra::cybe_check(alg, &bundle.r), || format!("{name}: r does not solve CYBE"));
        let dual = match bialgebra::r_bracket(alg, &bundle.r) {
            Ok(d) => d,
            Err(e) => {
                t.fail(format!("{name}: {e}"));
                continue;
            }
        };
        compare_dual(&mut t, &name, &doc, &dual.algebra);
        t.check(catalog::bracket_table(&dual.algebra) == bundle.expected, || format!("{name}: catalog table differs"));
        match geometry::geometry_report(alg, &bundle.form, &bundle.r) {
            Ok(rep) => {
                t.check(rep.flat, || format!("{name}: not flat"));
                t.check(rep.unimodular, || format!("{name}: not unimodular"));
                t.check(rep.completeness == Completeness::Complete, || format!("{name}: not complete"));
                t.check(rep.solvable, || format!("{name}: not solvable"));
            }
            Err(e) => t.fail(format!("{name}: {e}")),
        }
        let d = g.dim();
        let sub: Vec<Vector> = [E_MINUS1, oscillator::e_index(1), oscillator::e_index(2), oscillator::ec_index(1), oscillator::ec_index(2)]
            .iter()
            .map(|&k| Vector::basis(d, k))
            .collect();
        let h = catalog::heisenberg_check(&dual.algebra, &sub);
        t.check(h.passes() && h.dim == 5, || format!("{name}: ideal fails the Heisenberg checks: {h:?}"));
    }
    t
}

fn sl2_example(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let g = algebra::sl2();
    let vals = sampling::grid_values(2 * cfg.grid);
    let total = sampling::grid_size(&vals, 3);
    let rows: Vec<(usize, bool, bool)> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let x = sampling::grid_point(&vals, 3, idx);
            let r = catalog::sl2_bivector(&x[0], &x[1], &x[2]);
            (idx, bialgebra::cybe_check(&g, &r), catalog::sl2_cybe_condition(&x[0], &x[1], &x[2]))
        })
        .collect();
    let mut hits = 0;
    for (idx, cybe, cond) in rows {
        hits += usize::from(cybe);
        t.check(cybe == cond, || format!("sl(2) grid point {idx}: CYBE {cybe}, 4ab+c²=0 {cond}"));
    }
    t.note(format!("sl(2) grid: {total} points, {hits} solutions"));

    for (name, abc) in [("sl2_1_0_0.json", [1, 0, 0]), ("sl2_0_1_0.json", [0, 1, 0]), ("sl2_1_m1_2.json", [1, -1, 2])] {
        let doc = match golden(cfg, name) {
            Ok(d) => d,
            Err(e) => {
                t.fail(e);
                continue;
            }
        };
        let [a, b, c] = abc.map(int);
        let bundle = catalog::sl2_example(&a, &b, &c).expect("sl(2) bundle");
        let loaded = doc.algebra.load();
        t.check(loaded.as_ref().map(|l| l.algebra == g).unwrap_or(false), || format!("{name}: stored algebra differs"));
        let stored_r = loaded.ok().and_then(|l| doc.bivector(&l).ok().flatten());
        t.check(stored_r.as_ref() == Some(&bundle.r), || format!("{name}: stored bivector differs"));
        let dual = match bialgebra::r_bracket(&g, &bundle.r) {
            Ok(d) => d,
            Err(e) => {
                t.fail(format!("{name}: {e}"));
                continue;
            }
        };
        compare_dual(&mut t, name, &doc, &dual.algebra);
        t.check(catalog::bracket_table(&dual.algebra) == bundle.expected, || format!("{name}: catalog table differs"));
        match geometry::geometry_report(&g, &bundle.form, &bundle.r) {
            Ok(rep) => {
                t.check(rep.derived_dim == 2 && rep.derived_abelian, || format!("{name}: derived ideal is not 2-dim abelian"));
                t.check(rep.flat, || format!("{name}: not flat"));
                t.check(!rep.unimodular, || format!("{name}: unexpectedly unimodular"));
                t.check(rep.completeness == Completeness::Incomplete, || format!("{name}: not incomplete"));
            }
            Err(e) => t.fail(format!("{name}: {e}")),
        }
    }
    t
}

// 12

fn cross_formula(cfg: &VerifyConfig) -> Tally {
    let mut s = sampler(cfg, 12);
    let mut t = Tally::default();
    for lambda in [&[1][..], &[1, 2], &[1, 2, 4]] {
        let g = osc(lambda);
        t.check(bialgebra::calibrate_cocycle_factor(&g) == Some(int(bialgebra::COCYCLE_FACTOR)), || {
            format!("λ={lambda:?}: cocycle factor calibration")
        });
        let draws: Vec<BialgebraParams> = (0..100).map(|k| draw_params(&mut s, &g, 1 + k % 2)).collect();
        let rows: Vec<bool> = draws
            .par_iter()
            .map(|p| {
                let closed = bialgebra::closed_form_dual(&g, p);
                let via = bialgebra::params_cocycle(&g, p).and_then(|xi| bialgebra::dual_bracket_from_cocycle(g.algebra(), &xi));
                matches!((closed, via), (Ok(a), Ok(b)) if a.algebra == b.algebra)
            })
            .collect();
        for (k, ok) in rows.into_iter().enumerate() {
            t.check(ok, || format!("λ={lambda:?} draw {k}: closed form and cocycle dual differ"));
        }
    }
    let algebras: Vec<LieAlgebra> = (3..=10).map(test_algebra).collect();
    let draws: Vec<(usize, Bivector)> = (0..160)
        .map(|k| {
            let d = 3 + k % 8;
            (d, s.small_bivector(d))
        })
        .collect();
    let rows: Vec<bool> = draws
        .par_iter()
        .map(|(d, r)| {
            let g = &algebras[d - 3];
            let xi = Cocycle::coboundary(g, r);
            bialgebra::cocycle_bracket_table(g, &xi).ok() == bialgebra::r_bracket_table(g, r).ok()
        })
        .collect();
    for (k, ok) in rows.into_iter().enumerate() {
        t.check(ok, || format!("coboundary draw {k} (dim {}): brackets differ", draws[k].0));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_algebras_have_requested_dimension() {
        for d in 3..=10 {
            assert_eq!(test_algebra(d).dim(), d);
        }
    }

    #[test]
    fn cheap_criteria_pass() {
        let cfg = VerifyConfig::default();
        for id in [1, 3, 10] {
            let r = run(id, &cfg);
            assert!(r.passed, "{}: {:?}", r.line(), r.failures);
        }
    }

    #[test]
    fn missing_golden_dir_fails() {
        let cfg = VerifyConfig { golden_dir: PathBuf::from("/nonexistent"), ..VerifyConfig::default() };
        let r = run(11, &cfg);
        assert!(!r.passed);
        assert!(r.line().starts_with("FAIL"));
    }
}
