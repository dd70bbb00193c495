use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use liebial_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn oscillator(lambda: &[&str]) -> *mut LbAlgebra {
    let owned: Vec<CString> = lambda.iter().map(|s| c(s)).collect();
    let ptrs: Vec<*const c_char> = owned.iter().map(|s| s.as_ptr()).collect();
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { lb_oscillator_new(ptrs.as_ptr(), ptrs.len(), &mut alg) }, LbStatus::Ok);
    alg
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    lb_string_free(p);
    s
}

fn last_error() -> String {
    let p = lb_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_is_generated() {
    let h = std::fs::read_to_string(crate_dir().join("include/liebial.h")).unwrap();
    for name in ["LB_STATUS_OK", "typedef struct LbAlgebra LbAlgebra", "lb_dualize_json", "lb_last_error_message"] {
        assert!(h.contains(name), "{name}");
    }
}

#[test]
fn yang_baxter_checks() {
    let alg = oscillator(&["1"]);
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(lb_bivector_new(4, &mut r), LbStatus::Ok);
        // t1 = e1∧ě1
        assert_eq!(lb_bivector_set(r, 2, 3, c("1").as_ptr()), LbStatus::Ok);
        let (mut cybe, mut gybe) = (true, false);
        assert_eq!(lb_check_cybe(alg, r, &mut cybe), LbStatus::Ok);
        assert_eq!(lb_check_gybe(alg, r, &mut gybe), LbStatus::Ok);
        assert!(!cybe);
        assert!(gybe);
        lb_bivector_free(r);
        lb_algebra_free(alg);
    }
}

#[test]
fn dualize_matches_stored_table() {
    let data = crate_dir().join("../core/data");
    let spec = std::fs::read_to_string(data.join("specs/sl2_1_0_0.json")).unwrap();
    let golden = std::fs::read_to_string(data.join("golden/sl2_1_0_0.json")).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&spec).unwrap();
    let mut alg = ptr::null_mut();
    let mut r = ptr::null_mut();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(lb_algebra_from_json(c(&spec).as_ptr(), &mut alg), LbStatus::Ok);
        assert_eq!(lb_algebra_dim(alg), 3);
        let biv = c(&doc["bivector"].to_string());
        assert_eq!(lb_bivector_from_json(alg, biv.as_ptr(), &mut r), LbStatus::Ok);
        assert_eq!(lb_dualize_json(alg, r, &mut out), LbStatus::Ok);
        let text = take_string(out);
        let ours: serde_json::Value = serde_json::from_str(&text).unwrap();
        let theirs: serde_json::Value = serde_json::from_str(&golden).unwrap();
        assert_eq!(ours["dual"], theirs["dual"]);

        let form = c(r#"{"builtin": "sl2_trace"}"#);
        assert_eq!(lb_geometry_json(alg, r, form.as_ptr(), &mut out), LbStatus::Ok);
        let summary: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(summary["flat"], true);
        assert_eq!(summary["unimodular"], false);
        lb_bivector_free(r);
        lb_algebra_free(alg);
    }
}

#[test]
fn error_codes() {
    let alg = oscillator(&["1", "2"]);
    let mut r = ptr::null_mut();
    let mut out = ptr::null_mut();
    let mut flag = false;
    unsafe {
        assert_eq!(lb_algebra_from_json(c("{").as_ptr(), &mut ptr::null_mut()), LbStatus::ParseError);
        assert!(last_error().contains("JSON"));

        let bad = c(r#"{"algebra": {"dim": 3, "labels": ["x", "y", "z"], "brackets": [
            {"i": 0, "j": 1, "coeffs": ["0", "1", "0"]}, {"i": 1, "j": 2, "coeffs": ["1", "0", "0"]}]}}"#);
        assert_eq!(lb_algebra_from_json(bad.as_ptr(), &mut ptr::null_mut()), LbStatus::JacobiFailure);

        assert_eq!(lb_check_cybe(ptr::null(), ptr::null(), &mut flag), LbStatus::NullPointer);

        assert_eq!(lb_bivector_new(4, &mut r), LbStatus::Ok);
        assert_eq!(lb_check_cybe(alg, r, &mut flag), LbStatus::DimensionMismatch);
        lb_bivector_free(r);

        // e-1∧e1 solves neither equation on the 6-dimensional algebra
        assert_eq!(lb_bivector_new(6, &mut r), LbStatus::Ok);
        assert_eq!(lb_bivector_set(r, 0, 2, c("x").as_ptr()), LbStatus::ParseError);
        assert_eq!(lb_bivector_set(r, 0, 2, c("1").as_ptr()), LbStatus::Ok);
        assert_eq!(lb_geometry_json(alg, r, ptr::null(), &mut out), LbStatus::NotASolution);
        assert!(out.is_null());
        lb_bivector_free(r);
        lb_algebra_free(alg);
    }
    assert_eq!(unsafe { lb_algebra_dim(ptr::null()) }, 0);
}

fn static_lib() -> Option<PathBuf> {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libliebial_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_against_the_header() {
    let lib = static_lib().expect("static library next to the test binary");
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let include: &Path = &crate_dir().join("include");
    let status = Command::new("cc")
        .arg(crate_dir().join("tests/smoke.c"))
        .arg("-I")
        .arg(include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
