use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use liebial::io::Document;

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(rel)
}

fn spec(name: &str) -> String {
    data(&format!("specs/{name}.json")).display().to_string()
}

fn liebial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liebial")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_files(dir: &Path) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    v.sort();
    v
}

#[test]
fn algebra_summary() {
    let o = liebial(&["algebra", &spec("oscillator_1_2")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid, dim 6, solvable, unimodular\n"));
}

#[test]
fn algebra_json_has_manifest() {
    let o = liebial(&["--json", "algebra", &spec("heisenberg3")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["manifest"]["command"], "algebra");
    assert_eq!(v["manifest"]["inputs"][0], spec("heisenberg3"));
}

#[test]
fn malformed_json_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(&p, "{\"algebra\": ").unwrap();
    let o = liebial(&["algebra", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn missing_file_is_an_input_error() {
    let o = liebial(&["algebra", "/nonexistent/nowhere.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn jacobi_violation_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    let text = r#"{
  "algebra": {
    "dim": 3,
    "labels": ["x", "y", "z"],
    "brackets": [
      {"i": 0, "j": 1, "coeffs": ["0", "1", "0"]},
      {"i": 1, "j": 2, "coeffs": ["1", "0", "0"]}
    ]
  }
}"#;
    fs::write(&p, text).unwrap();
    let o = liebial(&["algebra", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Jacobi"));
}

#[test]
fn check_exit_codes_follow_verdicts() {
    let o = liebial(&["check", "--gybe", &spec("t1_g1")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "GYBE: yes\n");

    let o = liebial(&["check", "--cybe", &spec("t1_g1")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("CYBE: no"));

    let o = liebial(&["check", "--gybe", &spec("em1_e1_g1")]);
    assert_eq!(o.status.code(), Some(1));

    let o = liebial(&["check", &spec("sl2_1_0_0")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn cocycle_check() {
    let o = liebial(&["check", "--cocycle", &spec("cocycle_g1_2")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "cocycle: yes\n");
    let o = liebial(&["check", &spec("not_cocycle_g1_2")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("cocycle: no, fails at (e-1, e1)"));
    let o = liebial(&["dualize", &spec("not_cocycle_g1_2")]);
    assert_eq!(o.status.code(), Some(1));
    let o = liebial(&["check", "--cocycle", &spec("t1_g1")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dualize_reproduces_golden_files() {
    for name in ["flat_complete_1_2", "sl2_1_0_0"] {
        let o = liebial(&["--json", "dualize", &spec(name)]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let golden = fs::read_to_string(data(&format!("golden/{name}.json"))).unwrap();
        assert_eq!(stdout(&o), golden, "{name}");
    }
}

#[test]
fn zero_bivector_has_abelian_dual() {
    let o = liebial(&["--json", "dualize", &spec("zero_g1_2")]);
    assert_eq!(o.status.code(), Some(0));
    let doc = Document::from_json(&stdout(&o)).unwrap();
    assert!(doc.dual.unwrap().brackets.is_empty());
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("dual.json");
    let o = liebial(&["dualize", &spec("sl2_1_0_0"), "--json", "--out", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = fs::read_to_string(&p).unwrap();
    assert_eq!(written, fs::read_to_string(data("golden/sl2_1_0_0.json")).unwrap());
}

#[test]
fn geometry_verdicts() {
    let o = liebial(&["geometry", &spec("flat_complete_1_2")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("completeness: complete\n"));

    let o = liebial(&["--json", "geometry", &spec("sl2_1_0_0")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["flat"], true);
    assert_eq!(v["summary"]["unimodular"], false);
}

#[test]
fn enumerate_counts() {
    let o = liebial(&["enumerate", "--sl2", "--grid", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("solutions"));
    let o = liebial(&["enumerate", "--dim4", "--sl2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = liebial(&["enumerate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_stored_document_round_trips() {
    let mut files = json_files(&data("specs"));
    files.extend(json_files(&data("golden")));
    assert!(files.len() >= 10);
    for p in files {
        let text = fs::read_to_string(&p).unwrap();
        let doc = Document::from_json(&text).unwrap();
        assert_eq!(doc.to_canonical_string(), text, "{}", p.display());
    }
}

#[test]
fn verify_passes_and_ignores_seed() {
    let a = liebial(&["--json", "verify"]);
    let b = liebial(&["--json", "verify", "--seed", "99"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(b.status.code(), Some(0), "{}", stdout(&b));
    let verdicts = |o: &Output| {
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v["report"]["checks"].as_array().unwrap().iter().map(|c| c["passed"].as_bool().unwrap()).collect::<Vec<_>>()
    };
    assert_eq!(verdicts(&a), vec![true; 12]);
    assert_eq!(verdicts(&a), verdicts(&b));
}

#[test]
fn corrupted_golden_file_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    for p in json_files(&data("golden")) {
        fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
    }
    let target = dir.path().join("flat_complete_1_3.json");
    let mut doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&target).unwrap()).unwrap();
    doc["dual"]["brackets"][0]["coeffs"][0] = "7/5".into();
    fs::write(&target, serde_json::to_string_pretty(&doc).unwrap()).unwrap();

    let o = liebial(&["verify-paper", "--golden-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL [10]"));
}
