//! C interface to `liebial`.
//!
//! Every function returns an [`LbStatus`]. On failure a message is kept per
//! thread and can be read with [`lb_last_error_message`]. Scalars cross the
//! boundary as strings `"p"` or `"p/q"`, documents as JSON.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use liebial::bialgebra::{self, BialgebraError};
use liebial::geometry::{self, GeometryError};
use liebial::io::{self, AlgebraSpec, BivectorSpec, Document, ExplicitAlgebraSpec, FormSpec, IoError, LoadedAlgebra};
use liebial::multivector::Bivector;
use liebial::scalar;
use thiserror::Error;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    ParseError = 3,
    DimensionMismatch = 4,
    JacobiFailure = 5,
    NotASolution = 6,
    Panic = 7,
}

/// A validated Lie algebra.
pub struct LbAlgebra {
    spec: AlgebraSpec,
    loaded: LoadedAlgebra,
}

/// A bivector in `∧²g`.
pub struct LbBivector {
    inner: Bivector,
}

#[derive(Debug, Error)]
enum FfiError {
    #[error("null pointer argument: {0}")]
    Null(&'static str),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Bialgebra(#[from] BialgebraError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("dimension mismatch: algebra has dimension {expected}, bivector {got}")]
    Dimension { expected: usize, got: usize },
}

impl FfiError {
    fn status(&self) -> LbStatus {
        match self {
            FfiError::Null(_) => LbStatus::NullPointer,
            FfiError::Invalid(_) => LbStatus::InvalidInput,
            FfiError::Io(IoError::Parse(_) | IoError::Scalar(_)) => LbStatus::ParseError,
            FfiError::Io(IoError::Algebra(_)) => LbStatus::JacobiFailure,
            FfiError::Io(_) => LbStatus::InvalidInput,
            FfiError::Bialgebra(BialgebraError::JacobiFailure { .. }) => LbStatus::JacobiFailure,
            FfiError::Bialgebra(BialgebraError::DimensionMismatch { .. }) => LbStatus::DimensionMismatch,
            FfiError::Bialgebra(_) => LbStatus::InvalidInput,
            FfiError::Geometry(GeometryError::NotGybe) => LbStatus::NotASolution,
            FfiError::Geometry(GeometryError::DimensionMismatch { .. }) => LbStatus::DimensionMismatch,
            FfiError::Geometry(GeometryError::Bialgebra(BialgebraError::JacobiFailure { .. })) => {
                LbStatus::JacobiFailure
            }
            FfiError::Geometry(_) => LbStatus::InvalidInput,
            FfiError::Dimension { .. } => LbStatus::DimensionMismatch,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), FfiError>) -> LbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LbStatus::Ok
        }
        Ok(Err(e)) => {
            set_error(e.to_string());
            e.status()
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            LbStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &'static str) -> Result<&'a str, FfiError> {
    if p.is_null() {
        return Err(FfiError::Null(name));
    }
    CStr::from_ptr(p).to_str().map_err(|_| FfiError::Invalid(format!("{name} is not valid UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &'static str) -> Result<&'a T, FfiError> {
    p.as_ref().ok_or(FfiError::Null(name))
}

unsafe fn out_arg<'a, T>(p: *mut T, name: &'static str) -> Result<&'a mut T, FfiError> {
    p.as_mut().ok_or(FfiError::Null(name))
}

fn into_c_string(s: String) -> Result<*mut c_char, FfiError> {
    CString::new(s).map(CString::into_raw).map_err(|_| FfiError::Invalid("output contains a NUL byte".into()))
}

fn matching(alg: &LbAlgebra, r: &LbBivector) -> Result<(), FfiError> {
    let (expected, got) = (alg.loaded.algebra.dim(), r.inner.dim());
    if expected != got {
        return Err(FfiError::Dimension { expected, got });
    }
    Ok(())
}

/// Builds the oscillator algebra for `lambda[0..n]`, each entry a scalar string.
///
/// # Safety
/// `lambda` must point to `n` valid C strings and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lb_oscillator_new(lambda: *const *const c_char, n: usize, out: *mut *mut LbAlgebra) -> LbStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        if lambda.is_null() && n > 0 {
            return Err(FfiError::Null("lambda"));
        }
        let mut values = Vec::with_capacity(n);
        for k in 0..n {
            let s = str_arg(*lambda.add(k), "lambda entry")?;
            values.push(scalar::parse(s).map_err(IoError::from)?);
        }
        let spec = AlgebraSpec::oscillator(&values);
        let loaded = spec.load()?;
        *out = Box::into_raw(Box::new(LbAlgebra { spec, loaded }));
        Ok(())
    })
}

/// Reads an algebra from a JSON document with an `algebra` field.
///
/// # Safety
/// `json` must be a valid C string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lb_algebra_from_json(json: *const c_char, out: *mut *mut LbAlgebra) -> LbStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let doc = Document::from_json(str_arg(json, "json")?)?;
        let loaded = doc.algebra.load()?;
        *out = Box::into_raw(Box::new(LbAlgebra { spec: doc.algebra, loaded }));
        Ok(())
    })
}

/// Dimension of the algebra, or 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lb_algebra_dim(alg: *const LbAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.loaded.algebra.dim())
}

/// # Safety
/// `alg` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lb_algebra_free(alg: *mut LbAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// A zero bivector of dimension `dim`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lb_bivector_new(dim: usize, out: *mut *mut LbBivector) -> LbStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        if dim == 0 {
            return Err(FfiError::Invalid("dimension must be positive".into()));
        }
        *out = Box::into_raw(Box::new(LbBivector { inner: Bivector::zero(dim) }));
        Ok(())
    })
}

/// Sets the `b_i∧b_j` coefficient; `(j, i)` gets the negative.
///
/// # Safety
/// `r` must be a live handle and `value` a valid C string.
#[no_mangle]
pub unsafe extern "C" fn lb_bivector_set(r: *mut LbBivector, i: usize, j: usize, value: *const c_char) -> LbStatus {
    guard(|| {
        let r = out_arg(r, "bivector")?;
        let v = scalar::parse(str_arg(value, "value")?).map_err(IoError::from)?;
        let d = r.inner.dim();
        if i >= d || j >= d {
            return Err(FfiError::Invalid(format!("index ({i}, {j}) out of range for dimension {d}")));
        }
        if i == j {
            return Err(FfiError::Invalid("diagonal entries of a bivector are zero".into()));
        }
        r.inner.set(i, j, v);
        Ok(())
    })
}

/// Reads `{"entries": [{"i", "j", "value"}]}` as a bivector on `alg`.
///
/// # Safety
/// `alg` must be a live handle, `json` a valid C string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_bivector_from_json(
    alg: *const LbAlgebra,
    json: *const c_char,
    out: *mut *mut LbBivector,
) -> LbStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let alg = ref_arg(alg, "algebra")?;
        let spec: BivectorSpec = serde_json::from_str(str_arg(json, "json")?).map_err(IoError::from)?;
        let inner = spec.to_bivector(alg.loaded.algebra.dim())?;
        *out = Box::into_raw(Box::new(LbBivector { inner }));
        Ok(())
    })
}

/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lb_bivector_free(r: *mut LbBivector) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Writes whether `[r, r] = 0`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_check_cybe(alg: *const LbAlgebra, r: *const LbBivector, out: *mut bool) -> LbStatus {
    guard(|| {
        let (alg, r, out) = (ref_arg(alg, "algebra")?, ref_arg(r, "bivector")?, out_arg(out, "out")?);
        matching(alg, r)?;
        *out = bialgebra::cybe_check(&alg.loaded.algebra, &r.inner);
        Ok(())
    })
}

/// Writes whether `[r, r]` is ad-invariant.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_check_gybe(alg: *const LbAlgebra, r: *const LbBivector, out: *mut bool) -> LbStatus {
    guard(|| {
        let (alg, r, out) = (ref_arg(alg, "algebra")?, ref_arg(r, "bivector")?, out_arg(out, "out")?);
        matching(alg, r)?;
        *out = bialgebra::gybe_check(&alg.loaded.algebra, &r.inner);
        Ok(())
    })
}

/// The document `{algebra, bivector, dual}` with the dual bracket of `r`.
/// Free the string with [`lb_string_free`].
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_dualize_json(alg: *const LbAlgebra, r: *const LbBivector, out: *mut *mut c_char) -> LbStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let (alg, r) = (ref_arg(alg, "algebra")?, ref_arg(r, "bivector")?);
        matching(alg, r)?;
        let dual = bialgebra::r_bracket(&alg.loaded.algebra, &r.inner)?;
        let mut doc = Document::new(alg.spec.clone());
        doc.bivector = Some(BivectorSpec::from_bivector(&r.inner));
        doc.dual = Some(ExplicitAlgebraSpec::from_algebra(&dual.algebra));
        *out = into_c_string(doc.to_canonical_string())?;
        Ok(())
    })
}

/// Geometry summary of the dual group as JSON. `form_json` is a form spec
/// such as `{"builtin": "k_lambda"}`; null selects `k_lambda`.
///
/// # Safety
/// Handles must be live, `form_json` null or a valid C string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_geometry_json(
    alg: *const LbAlgebra,
    r: *const LbBivector,
    form_json: *const c_char,
    out: *mut *mut c_char,
) -> LbStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let (alg, r) = (ref_arg(alg, "algebra")?, ref_arg(r, "bivector")?);
        matching(alg, r)?;
        let form: FormSpec = if form_json.is_null() {
            FormSpec::Builtin { builtin: "k_lambda".into() }
        } else {
            serde_json::from_str(str_arg(form_json, "form_json")?).map_err(IoError::from)?
        };
        let k = form.load(&alg.loaded)?;
        let rep = geometry::geometry_report(&alg.loaded.algebra, &k, &r.inner)?;
        *out = into_c_string(io::to_canonical_string(&rep.summary()))?;
        Ok(())
    })
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn lb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn osc(lambda: &[&str]) -> *mut LbAlgebra {
        let owned: Vec<CString> = lambda.iter().map(|s| CString::new(*s).unwrap()).collect();
        let ptrs: Vec<*const c_char> = owned.iter().map(|c| c.as_ptr()).collect();
        let mut alg = ptr::null_mut();
        assert_eq!(unsafe { lb_oscillator_new(ptrs.as_ptr(), ptrs.len(), &mut alg) }, LbStatus::Ok);
        alg
    }

    #[test]
    fn oscillator_dimension() {
        let alg = osc(&["1", "2"]);
        assert_eq!(unsafe { lb_algebra_dim(alg) }, 6);
        unsafe { lb_algebra_free(alg) };
    }

    #[test]
    fn null_out_pointer() {
        assert_eq!(unsafe { lb_bivector_new(3, ptr::null_mut()) }, LbStatus::NullPointer);
        assert!(!lb_last_error_message().is_null());
    }

    #[test]
    fn non_generic_lambda_is_still_an_algebra() {
        let alg = osc(&["1", "1"]);
        assert_eq!(unsafe { lb_algebra_dim(alg) }, 6);
        unsafe { lb_algebra_free(alg) };
    }

    #[test]
    fn bad_scalar_is_a_parse_error() {
        let s = CString::new("1/0").unwrap();
        let p = [s.as_ptr()];
        let mut alg = ptr::null_mut();
        assert_eq!(unsafe { lb_oscillator_new(p.as_ptr(), 1, &mut alg) }, LbStatus::ParseError);
        assert!(alg.is_null());
    }

    #[test]
    fn status_of_a_panic() {
        assert_eq!(guard(|| panic!("boom")), LbStatus::Panic);
        let msg = unsafe { CStr::from_ptr(lb_last_error_message()) }.to_str().unwrap();
        assert!(msg.contains("boom"));
    }
}
