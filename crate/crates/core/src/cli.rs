//! The `liebial` command line.
//!
//! Exit codes: 0 when every requested check holds, 1 when a check fails,
//! 2 for unreadable or invalid input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::algebra::{AlgebraError, LieAlgebra, Vector};
use crate::bialgebra::{self, BialgebraError, Cocycle, DualAlgebra};
use crate::catalog;
use crate::geometry::{self, Completeness, GeometryError};
use crate::io::{self, BivectorSpec, Document, ExplicitAlgebraSpec, IoError, LoadedAlgebra};
use crate::multivector::{self, Bivector, Trivector};
use crate::oscillator;
use crate::sampling::{self, DEFAULT_SEED};
use crate::scalar::{self, Scalar};
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "liebial", version, about = "Exact Lie bialgebra and Yang-Baxter computations")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an algebra and summarize its structure.
    Algebra { file: PathBuf },
    /// Test a bivector against CYBE/GYBE, or a cocycle against the cocycle identity.
    Check {
        file: PathBuf,
        #[arg(long)]
        cybe: bool,
        #[arg(long)]
        gybe: bool,
        #[arg(long)]
        cocycle: bool,
    },
    /// Compute the dual Lie algebra of a bivector or a cocycle.
    Dualize { file: PathBuf },
    /// Left-invariant geometry of the dual group.
    Geometry { file: PathBuf },
    /// Enumerate Yang-Baxter solutions over a grid of half-integers.
    Enumerate {
        #[command(flatten)]
        mode: EnumerateMode,
        /// Values `k/2` with `|k| ≤ N`; defaults to 2 (4 for `--sl2`).
        #[arg(long, value_name = "N", allow_negative_numbers = true)]
        grid: Option<i64>,
    },
    /// Run every verification check.
    #[command(alias = "verify-paper")]
    Verify {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
        grid: i64,
        /// Directory holding the stored dual bracket tables.
        #[arg(long, value_name = "DIR")]
        golden_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct EnumerateMode {
    /// Bivectors on the 4-dimensional oscillator algebra.
    #[arg(long)]
    pub dim4: bool,
    /// Bivectors `−(a e1∧e2 + b e1∧e3 + c e2∧e3)` on sl(2).
    #[arg(long)]
    pub sl2: bool,
    /// `p₁₂ + c₁t₁ + c₂t₂` on the 6-dimensional oscillator algebra, reduced CYBE condition.
    #[arg(long)]
    pub dim6_case: bool,
}

/// Echoed into every JSON report.
#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub command: String,
    pub inputs: Vec<String>,
    pub output: Option<String>,
    pub seed: Option<u64>,
    pub grid: Option<i64>,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Check(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Output {
    text: String,
    json: String,
    failed: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(stderr, "{}", e.render()) } else { write!(stdout, "{}", e.render()) };
            return code;
        }
    };
    let result = dispatch(&cli);
    match result {
        Ok(out) => {
            let body = if cli.json { out.json } else { out.text };
            if let Err(e) = emit(cli.out.as_deref(), &body, stdout) {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_INPUT;
            }
            if out.failed {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(stderr, "check failed: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}

fn emit(path: Option<&Path>, body: &str, stdout: &mut dyn Write) -> Result<(), IoError> {
    match path {
        Some(p) => io::write_text(p, body),
        None => stdout
            .write_all(body.as_bytes())
            .map_err(|source| IoError::Write { path: "stdout".into(), source }),
    }
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let manifest = |command: &str, inputs: Vec<&Path>, seed, grid| Manifest {
        command: command.into(),
        inputs: inputs.iter().map(|p| p.display().to_string()).collect(),
        output: cli.out.as_ref().map(|p| p.display().to_string()),
        seed,
        grid,
    };
    match &cli.command {
        Command::Algebra { file } => cmd_algebra(file, manifest("algebra", vec![file], None, None)),
        Command::Check { file, cybe, gybe, cocycle } => {
            cmd_check(file, [*cybe, *gybe, *cocycle], manifest("check", vec![file], None, None))
        }
        Command::Dualize { file } => cmd_dualize(file),
        Command::Geometry { file } => cmd_geometry(file, manifest("geometry", vec![file], None, None)),
        Command::Enumerate { mode, grid } => {
            let n = grid.unwrap_or(if mode.sl2 { 4 } else { 2 });
            cmd_enumerate(mode, n, manifest("enumerate", vec![], None, Some(n)))
        }
        Command::Verify { seed, grid, golden_dir } => {
            let cfg = VerifyConfig {
                seed: *seed,
                grid: *grid,
                golden_dir: golden_dir.clone().unwrap_or_else(verify::default_golden_dir),
            };
            let m = manifest("verify", vec![&cfg.golden_dir], Some(*seed), Some(*grid));
            Ok(cmd_verify(&cfg, m))
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    io::to_canonical_string(v)
}

fn load(file: &Path) -> Result<(Document, LoadedAlgebra), Failure> {
    let doc = Document::read(file)?;
    let g = doc.algebra.load().map_err(|e| match e {
        IoError::Algebra(AlgebraError::JacobiViolation { i, j, k, residual }) => {
            Failure::Input(format!("algebra invalid: Jacobi identity fails on ({i}, {j}, {k}) with residual {residual}"))
        }
        IoError::Algebra(e) => Failure::Input(format!("algebra invalid: {e}")),
        other => other.into(),
    })?;
    Ok((doc, g))
}

/// `3/2 e1 - e2`, or `0`.
pub fn format_combination(labels: &[String], coeffs: &[Scalar]) -> String {
    let mut s = String::new();
    for (label, c) in labels.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Scalar::zero();
        let mag = scalar::format(&if neg { -c } else { c.clone() });
        let term = if mag == "1" { label.clone() } else { format!("{mag} {label}") };
        match (s.is_empty(), neg) {
            (true, false) => s.push_str(&term),
            (true, true) => s.push_str(&format!("-{term}")),
            (false, false) => s.push_str(&format!(" + {term}")),
            (false, true) => s.push_str(&format!(" - {term}")),
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

fn format_bivector(labels: &[String], r: &Bivector) -> String {
    let terms: Vec<String> = r
        .upper_entries()
        .filter(|(_, _, v)| !v.is_zero())
        .map(|(i, j, v)| format!("{} {}∧{}", scalar::format(v), labels[i], labels[j]))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn format_trivector(labels: &[String], t: &Trivector) -> String {
    let terms: Vec<String> = t
        .upper_entries()
        .into_iter()
        .map(|(i, j, k, v)| format!("{} {}∧{}∧{}", scalar::format(&v), labels[i], labels[j], labels[k]))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn span_text(labels: &[String], vs: &[Vector]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| format_combination(labels, v.components())).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn cmd_algebra(file: &Path, manifest: Manifest) -> Result<Output, Failure> {
    let (_, g) = load(file)?;
    let alg = &g.algebra;
    let rep = alg.structure_report();
    let labels = alg.labels();
    let center = alg.center();
    let mut text = format!(
        "valid, dim {}, {}, {}\n",
        rep.dim,
        if rep.solvable { "solvable" } else { "not solvable" },
        if rep.unimodular { "unimodular" } else { "not unimodular" }
    );
    text.push_str(&format!("nilpotent: {}\n", yes(rep.nilpotent)));
    text.push_str(&format!("center: {} (dim {})\n", span_text(labels, &center), center.len()));
    text.push_str(&format!("derived series dimensions: {:?}\n", rep.derived_dims));
    if let Some(o) = &g.oscillator {
        let lambda: Vec<String> = o.lambda().iter().map(scalar::format).collect();
        text.push_str(&format!("oscillator algebra, λ = ({}), generic: {}\n", lambda.join(", "), yes(o.is_generic())));
    }
    let json = to_json(&json!({
        "manifest": manifest,
        "valid": true,
        "labels": labels,
        "oscillator": g.oscillator.is_some(),
        "structure": rep,
        "center": center.iter().map(|v| v.components().iter().map(scalar::format).collect::<Vec<_>>()).collect::<Vec<_>>(),
    }));
    Ok(Output { text, json, failed: false })
}

fn require_bivector(doc: &Document, g: &LoadedAlgebra) -> Result<Bivector, Failure> {
    doc.bivector(g)?.ok_or_else(|| Failure::Input("document has no bivector".into()))
}

fn cmd_check(file: &Path, flags: [bool; 3], manifest: Manifest) -> Result<Output, Failure> {
    let (doc, g) = load(file)?;
    let alg = &g.algebra;
    let labels = alg.labels();
    let [mut want_cybe, mut want_gybe, mut want_cocycle] = flags;
    if !flags.iter().any(|&f| f) {
        want_cybe = doc.bivector.is_some();
        want_gybe = doc.bivector.is_some();
        want_cocycle = doc.cocycle.is_some();
        if !(want_cybe || want_cocycle) {
            return Err(Failure::Input("document has neither a bivector nor a cocycle".into()));
        }
    }
    let mut text = String::new();
    let mut report = serde_json::Map::new();
    report.insert("manifest".into(), json!(manifest));
    let mut failed = false;
    if want_cybe || want_gybe {
        let r = require_bivector(&doc, &g)?;
        if want_cybe {
            let t = multivector::schouten_self(alg, &r);
            let holds = t.is_zero();
            failed |= !holds;
            if holds {
                text.push_str("CYBE: yes\n");
            } else {
                text.push_str(&format!("CYBE: no, [r,r] = {}\n", format_trivector(labels, &t)));
            }
            report.insert("cybe".into(), json!({"holds": holds, "schouten": (!holds).then(|| format_trivector(labels, &t))}));
        }
        if want_gybe {
            let res = bialgebra::gybe_residual(alg, &r);
            failed |= res.is_some();
            match &res {
                None => text.push_str("GYBE: yes\n"),
                Some((k, t)) => {
                    text.push_str(&format!("GYBE: no, ad_{}[r,r] = {}\n", labels[*k], format_trivector(labels, t)))
                }
            }
            report.insert(
                "gybe".into(),
                json!({
                    "holds": res.is_none(),
                    "residual": res.as_ref().map(|(k, t)| json!({"basis": labels[*k], "value": format_trivector(labels, t)})),
                }),
            );
        }
    }
    if want_cocycle {
        let xi = doc.cocycle(&g)?.ok_or_else(|| Failure::Input("document has no cocycle".into()))?;
        let res = bialgebra::cocycle_check(alg, &xi);
        failed |= res.is_some();
        match &res {
            None => text.push_str("cocycle: yes\n"),
            Some((i, j, b)) => text.push_str(&format!(
                "cocycle: no, fails at ({}, {}) with residual {}\n",
                labels[*i],
                labels[*j],
                format_bivector(labels, b)
            )),
        }
        report.insert(
            "cocycle".into(),
            json!({
                "holds": res.is_none(),
                "residual": res.as_ref().map(|(i, j, b)| json!({"pair": [labels[*i], labels[*j]], "value": format_bivector(labels, b)})),
            }),
        );
    }
    Ok(Output { text, json: to_json(&report), failed })
}

fn bracket_lines(dual: &LieAlgebra) -> String {
    let labels = dual.labels();
    let table = catalog::bracket_table(dual);
    if table.is_empty() {
        return "abelian\n".into();
    }
    table
        .iter()
        .map(|(i, j, v)| format!("[{}, {}] = {}\n", labels[*i], labels[*j], format_combination(labels, v.components())))
        .collect()
}

fn cmd_dualize(file: &Path) -> Result<Output, Failure> {
    let (doc, g) = load(file)?;
    let alg = &g.algebra;
    let check = |e: BialgebraError| match e {
        BialgebraError::JacobiFailure { i, j, k, .. } => Failure::Check(format!(
            "dual bracket fails the Jacobi identity on ({}*, {}*, {}*)",
            alg.labels()[i],
            alg.labels()[j],
            alg.labels()[k]
        )),
        other => Failure::Input(other.to_string()),
    };
    let (dual, xi): (DualAlgebra, Cocycle) = match (doc.cocycle(&g)?, doc.bivector(&g)?) {
        (Some(xi), _) => {
            if let Some((i, j, _)) = bialgebra::cocycle_check(alg, &xi) {
                return Err(Failure::Check(format!("not a cocycle at ({}, {})", alg.labels()[i], alg.labels()[j])));
            }
            (bialgebra::dual_bracket_from_cocycle(alg, &xi).map_err(check)?, xi)
        }
        (None, Some(r)) => (bialgebra::r_bracket(alg, &r).map_err(check)?, Cocycle::coboundary(alg, &r)),
        (None, None) => return Err(Failure::Input("document has neither a bivector nor a cocycle".into())),
    };
    let mut text = bracket_lines(&dual.algebra);
    let structure = g.oscillator.as_ref().filter(|o| o.is_generic()).and_then(|o| {
        let p = bialgebra::extract_params(o, &xi).ok()?;
        Some(bialgebra::analyze_dual_structure(o, &p))
    });
    match structure {
        Some(Ok(rep)) => {
            text.push_str(&format!(
                "kernel parameter p = {}, Heisenberg factor of dimension {}\n",
                rep.p, rep.heisenberg_dim
            ));
            text.push_str(&format!("e-1* central: {}\n", yes(rep.center_contains_em1star)));
            text.push_str(&format!("[S*, S*] in R e-1*: {}\n", yes(rep.brackets_into_line)));
            text.push_str(&format!(
                "unimodular: {} (diagonal sum), {} (adjoint traces)\n",
                yes(rep.unimodular),
                yes(rep.unimodular_by_trace)
            ));
            text.push_str(&format!("solvable: {}\n", yes(rep.solvable)));
        }
        Some(Err(e)) => return Err(Failure::Check(e.to_string())),
        None => {}
    }
    let mut out = doc.clone();
    out.dual = Some(ExplicitAlgebraSpec::from_algebra(&dual.algebra));
    Ok(Output { text, json: out.to_canonical_string(), failed: false })
}

fn cmd_geometry(file: &Path, manifest: Manifest) -> Result<Output, Failure> {
    let (doc, g) = load(file)?;
    let r = require_bivector(&doc, &g)?;
    let form = doc.form.as_ref().ok_or_else(|| Failure::Input("document has no orthogonal form".into()))?;
    let k = form.load(&g)?;
    let rep = geometry::geometry_report(&g.algebra, &k, &r).map_err(|e| match e {
        GeometryError::NotGybe => Failure::Check("bivector does not solve GYBE".into()),
        GeometryError::DimensionMismatch { .. } => Failure::Input(e.to_string()),
        other => Failure::Check(other.to_string()),
    })?;
    let s = rep.summary();
    let completeness = match s.completeness {
        Completeness::Complete => "complete",
        Completeness::Incomplete => "incomplete",
        Completeness::NotDetermined => "not determined (curvature is nonzero)",
    };
    let mut text = String::new();
    text.push_str(&format!("flat: {}\n", yes(s.flat)));
    text.push_str(&format!("locally symmetric: {}\n", yes(s.locally_symmetric)));
    text.push_str(&format!("unimodular: {}\n", yes(s.unimodular)));
    text.push_str(&format!("completeness: {completeness}\n"));
    text.push_str(&format!("solvable: {}\n", yes(s.solvable)));
    text.push_str(&format!("derived algebra: dim {}, abelian: {}\n", s.derived_dim, yes(s.derived_abelian)));
    text.push_str(&format!("kernel of r#: dim {}, abelian ideal: {}\n", s.ker_sharp_dim, yes(s.ker_sharp_abelian_ideal)));
    text.push_str(&format!("r# is a homomorphism: {}\n", yes(s.sharp_is_homomorphism)));
    let json = to_json(&json!({ "manifest": manifest, "summary": s }));
    Ok(Output { text, json, failed: false })
}

#[derive(Serialize)]
struct EnumerateReport {
    manifest: Manifest,
    mode: &'static str,
    values: Vec<String>,
    points: usize,
    solutions: Vec<serde_json::Value>,
    mismatches: Vec<serde_json::Value>,
    classification_holds: bool,
}

fn formatted(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(scalar::format).collect()
}

fn cmd_enumerate(mode: &EnumerateMode, n: i64, manifest: Manifest) -> Result<Output, Failure> {
    let vals = sampling::grid_values(n);
    let (name, dims) = if mode.dim4 {
        ("dim4", 6)
    } else if mode.sl2 {
        ("sl2", 3)
    } else {
        ("dim6-case", 6)
    };
    let total = sampling::grid_size(&vals, dims);
    let g1 = oscillator::build_oscillator(&[scalar::one()]).expect("λ = (1)");
    let g2 = oscillator::build_oscillator(&[scalar::int(1), scalar::int(2)]).expect("λ = (1, 2)");
    let sl2 = crate::algebra::sl2();
    // (solution json, mismatch json)
    type Row = (Option<serde_json::Value>, Option<serde_json::Value>);
    let rows: Vec<Row> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let x = sampling::grid_point(&vals, dims, idx);
            match name {
                "dim4" => {
                    let alg = g1.algebra();
                    let r = Bivector::from_upper_coordinates(4, &x);
                    let z = |i, j| r.get(i, j).is_zero();
                    let (cybe, gybe) = (bialgebra::cybe_check(alg, &r), bialgebra::gybe_check(alg, &r));
                    let (fc, fg) = (z(0, 2) && z(0, 3) && z(2, 3), z(0, 2) && z(0, 3));
                    let sol = (cybe || gybe).then(|| json!({"bivector": BivectorSpec::from_bivector(&r), "cybe": cybe, "gybe": gybe}));
                    let bad = (cybe != fc || gybe != fg).then(|| json!({"bivector": BivectorSpec::from_bivector(&r)}));
                    (sol, bad)
                }
                "sl2" => {
                    let r = catalog::sl2_bivector(&x[0], &x[1], &x[2]);
                    let cybe = bialgebra::cybe_check(&sl2, &r);
                    let cond = catalog::sl2_cybe_condition(&x[0], &x[1], &x[2]);
                    let abc = formatted(&x);
                    (cybe.then(|| json!({"a": abc[0], "b": abc[1], "c": abc[2]})), (cybe != cond).then(|| json!(abc)))
                }
                _ => {
                    let p = catalog::p_ij(&g2, 1, 2, [&x[0], &x[1], &x[2], &x[3]]).expect("pair (1, 2)");
                    let r = &(&p + &g2.t(1).scale(&x[4])) + &g2.t(2).scale(&x[5]);
                    let solved = bialgebra::reduced_cybe(&g2, &r, &Scalar::zero()).expect("r ∈ ∧²S").is_zero();
                    let coords = [x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()];
                    let predicted = x[4] == -&x[5] && catalog::cyb_constraint_holds(&coords, &x[4]);
                    let v = formatted(&x);
                    let point = json!({"a": v[0], "a_check": v[1], "b": v[2], "b_check": v[3], "c1": v[4], "c2": v[5]});
                    (solved.then(|| point.clone()), (solved != predicted).then_some(point))
                }
            }
        })
        .collect();
    let solutions: Vec<_> = rows.iter().filter_map(|r| r.0.clone()).collect();
    let mismatches: Vec<_> = rows.iter().filter_map(|r| r.1.clone()).collect();
    let holds = mismatches.is_empty();
    let claim = match name {
        "dim4" => "CYBE solutions are exactly e0∧u, GYBE solutions exactly e0∧u + αt1",
        "sl2" => "CYBE holds exactly when 4ab + c² = 0",
        _ => "the condition holds exactly when c1 = -c2 = c with c² = a² + ǎ² - b² - b̌²",
    };
    let mut text = format!("{name}: grid N = {n}, {} values, {total} points, {} solutions\n", vals.len(), solutions.len());
    text.push_str(&format!("{claim}: {}\n", yes(holds)));
    if name == "sl2" {
        for s in &solutions {
            text.push_str(&format!("  (a, b, c) = ({}, {}, {})\n", s["a"].as_str().unwrap_or(""), s["b"].as_str().unwrap_or(""), s["c"].as_str().unwrap_or("")));
        }
    }
    let report = EnumerateReport {
        manifest,
        mode: name,
        values: formatted(&vals),
        points: total,
        solutions,
        mismatches,
        classification_holds: holds,
    };
    Ok(Output { text, json: to_json(&report), failed: !holds })
}

fn cmd_verify(cfg: &VerifyConfig, manifest: Manifest) -> Output {
    let report = verify::run_all(cfg);
    let failed = !report.all_passed();
    let text = report.text();
    let json = to_json(&json!({ "manifest": manifest, "report": report }));
    Output { text, json, failed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("liebial").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn combinations_format() {
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert_eq!(format_combination(&labels, &[ratio(0, 1), ratio(-1, 1), ratio(3, 2)]), "-b + 3/2 c");
        assert_eq!(format_combination(&labels, &[ratio(1, 1), ratio(-2, 1), ratio(0, 1)]), "a - 2 b");
        assert_eq!(format_combination(&labels, &vec![ratio(0, 1); 3]), "0");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["enumerate"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["enumerate", "--dim4", "--sl2"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["algebra", "/nonexistent.json"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn empty_grid_enumerates_nothing() {
        let (code, out, _) = run_capture(&["enumerate", "--sl2", "--grid", "-1", "--json"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["points"], 0);
        assert_eq!(v["solutions"].as_array().unwrap().len(), 0);
        assert_eq!(v["manifest"]["grid"], -1);
    }
}
