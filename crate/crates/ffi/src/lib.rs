//! C ABI for `nilclass`.
//!
//! Handles are opaque and owned by the caller once returned; release them with the matching
//! `*_free`. Every fallible call returns a [`NilStatus`] and writes its result through an out
//! pointer. On failure the message is kept per thread and read with [`nil_last_error`].
//! Strings returned by the library are freed with [`nil_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nilclass::catalog::{certificates, real_algebra, reproduce_table, Manifest, TableId};
use nilclass::complex::{realify, standard_map, ComplexStructEqs};
use nilclass::invariants::{betti, casimir_count_seeded, fingerprint};
use nilclass::kernel::{Gauss, Rational, DEFAULT_TRIALS};
use nilclass::lie::LieAlgebra;
use nilclass::parse::{eval_str, parse_algebra, parse_eqs, print_algebra, Env};
use nilclass::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Syntax, index or bidegree error in the input text.
    Parse = 3,
    /// Unknown algebra or table, missing or out-of-domain parameter.
    InvalidInput = 4,
    /// Division by zero, irrational radicand or a non-real value.
    Arithmetic = 5,
    NotNilpotent = 6,
    /// The output buffer is too small; the needed length was written.
    BufferTooSmall = 7,
    Internal = 8,
    Panic = 9,
}

/// A real Lie algebra with rational structure constants.
pub struct NilAlgebra(LieAlgebra<Rational>);

/// Complex structure equations with Gaussian rational coefficients.
pub struct NilComplex(ComplexStructEqs<Gauss>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> NilStatus {
    match e {
        Error::Parse { .. } | Error::Integrability { .. } | Error::IndexOrder { .. } | Error::Json(_) => {
            NilStatus::Parse
        }
        Error::MissingParameter(_)
        | Error::InvalidParams(_)
        | Error::UnknownAlgebra(_)
        | Error::NoMatchingRow(_)
        | Error::DimensionMismatch { .. } => NilStatus::InvalidInput,
        Error::DivisionByZero | Error::IrrationalRadicand(_) | Error::NonReal(_) | Error::RingMismatch(_) => {
            NilStatus::Arithmetic
        }
        Error::NonNilpotent => NilStatus::NotNilpotent,
        _ => NilStatus::Internal,
    }
}

struct Fail(NilStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> NilStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NilStatus::Ok,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("panic inside nilclass".into());
            NilStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(NilStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(NilStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

/// `k=v,...`; null or empty means no bindings.
unsafe fn params_arg(p: *const c_char) -> Result<Vec<(String, Rational)>, Fail> {
    if p.is_null() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for kv in str_arg(p, "params")?.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Fail(NilStatus::InvalidInput, format!("bad parameter `{kv}`")))?;
        out.push((k.trim().to_string(), eval_str::<Rational>(v, &Env::new(None))?));
    }
    Ok(out)
}

fn env<S: nilclass::kernel::EvalScalar>(ps: &[(String, Rational)]) -> Env<S> {
    let mut env = Env::new(None);
    for (k, v) in ps {
        env.bind(k, S::from_rational(v));
    }
    env
}

unsafe fn out_ptr<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail(NilStatus::NullPointer, format!("{name} is null")))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(NilStatus::NullPointer, "handle is null".into()))
}

fn string_out(s: String, out: &mut *mut c_char) -> Result<(), Fail> {
    *out = CString::new(s)
        .map_err(|_| Fail(NilStatus::Internal, "interior NUL".into()))?
        .into_raw();
    Ok(())
}

/// Last error message on this thread, or null. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn nil_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn nil_status_str(s: NilStatus) -> *const c_char {
    let msg: &'static CStr = match s {
        NilStatus::Ok => c"ok",
        NilStatus::NullPointer => c"null pointer",
        NilStatus::InvalidUtf8 => c"invalid UTF-8",
        NilStatus::Parse => c"parse error",
        NilStatus::InvalidInput => c"invalid input",
        NilStatus::Arithmetic => c"arithmetic error",
        NilStatus::NotNilpotent => c"not nilpotent",
        NilStatus::BufferTooSmall => c"buffer too small",
        NilStatus::Internal => c"internal error",
        NilStatus::Panic => c"panic",
    };
    msg.as_ptr()
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn nil_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses abbreviated notation such as `(0^4, 12, 15+(a+1)*24, ...)`.
///
/// # Safety
/// `notation` must be a valid C string; `params` a valid C string or null; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nil_algebra_parse(
    notation: *const c_char,
    params: *const c_char,
    out: *mut *mut NilAlgebra,
) -> NilStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let src = str_arg(notation, "notation")?;
        let g = parse_algebra(src, &env(&params_arg(params)?))?;
        *out = Box::into_raw(Box::new(NilAlgebra(g)));
        Ok(())
    })
}

/// A catalog algebra by name (`g1..g12`, `n1..n8`, `m1..m4`).
///
/// # Safety
/// As [`nil_algebra_parse`].
#[no_mangle]
pub unsafe extern "C" fn nil_algebra_catalog(
    name: *const c_char,
    params: *const c_char,
    out: *mut *mut NilAlgebra,
) -> NilStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let name = str_arg(name, "name")?;
        let ps = params_arg(params)?;
        let named: Vec<(&str, Rational)> = ps.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
        *out = Box::into_raw(Box::new(NilAlgebra(real_algebra(name, &named)?)));
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library or be null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn nil_algebra_free(g: *mut NilAlgebra) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Dimension, or 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn nil_algebra_dim(g: *const NilAlgebra) -> usize {
    g.as_ref().map_or(0, |g| g.0.dim())
}

/// Canonical abbreviated notation; free with [`nil_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nil_algebra_notation(g: *const NilAlgebra, out: *mut *mut c_char) -> NilStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        string_out(print_algebra(&handle(g)?.0), out)
    })
}

/// # Safety
/// `g` must be a live handle; `passes` writable.
#[no_mangle]
pub unsafe extern "C" fn nil_algebra_jacobi(g: *const NilAlgebra, passes: *mut bool) -> NilStatus {
    guard(|| {
        let passes = out_ptr(passes, "passes")?;
        *passes = handle(g)?.0.jacobi_check().passes();
        Ok(())
    })
}

unsafe fn write_tuple(v: &[usize], buf: *mut usize, cap: usize, len: *mut usize) -> Result<(), Fail> {
    *out_ptr(len, "len")? = v.len();
    if v.len() > cap {
        return Err(Fail(NilStatus::BufferTooSmall, format!("need {} entries", v.len())));
    }
    if !v.is_empty() {
        if buf.is_null() {
            return Err(Fail(NilStatus::NullPointer, "buf is null".into()));
        }
        ptr::copy_nonoverlapping(v.as_ptr(), buf, v.len());
    }
    Ok(())
}

/// Dimensions of the ascending central series `g_1, g_2, ...`.
///
/// `len` receives the tuple length even when `cap` is too small.
///
/// # Safety
/// `g` must be a live handle; `buf` must hold `cap` entries; `len` writable.
#[no_mangle]
pub unsafe extern "C" fn nil_algebra_ascending_type(
    g: *const NilAlgebra,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> NilStatus {
    guard(|| {
        let s = handle(g)?.0.ascending_series();
        if !s.nilpotent {
            return Err(Error::NonNilpotent.into());
        }
        write_tuple(&s.type_tuple(), buf, cap, len)
    })
}

/// Dimensions of `[g,g], [g,[g,g]], ...` down to 0.
///
/// # Safety
/// As [`nil_algebra_ascending_type`].
#[no_mangle]
pub unsafe extern "C" fn nil_algebra_descending_type(
    g: *const NilAlgebra,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> NilStatus {
    guard(|| write_tuple(&handle(g)?.0.descending_type(), buf, cap, len))
}

/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nil_algebra_betti(g: *const NilAlgebra, k: usize, out: *mut usize) -> NilStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let g = &handle(g)?.0;
        if k > g.dim() {
            return Err(Fail(NilStatus::InvalidInput, format!("degree {k} exceeds dimension")));
        }
        *out = betti(g, k);
        Ok(())
    })
}

/// Number of independent Casimir invariants; `seed` drives the generic-rank test.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nil_algebra_casimir(g: *const NilAlgebra, seed: u64, out: *mut usize) -> NilStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = casimir_count_seeded(&handle(g)?.0, DEFAULT_TRIALS, seed)?;
        Ok(())
    })
}

/// Fingerprint as JSON; free with [`nil_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nil_algebra_fingerprint_json(g: *const NilAlgebra, out: *mut *mut c_char) -> NilStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let f = fingerprint(&handle(g)?.0)?;
        string_out(serde_json::to_string(&f).map_err(|e| Fail(NilStatus::Internal, e.to_string()))?, out)
    })
}

/// Parses complex equations `dw1 = ...` with `w1~2` for a conjugate index.
///
/// # Safety
/// As [`nil_algebra_parse`].
#[no_mangle]
pub unsafe extern "C" fn nil_complex_parse(
    eqs: *const c_char,
    params: *const c_char,
    out: *mut *mut NilComplex,
) -> NilStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let src = str_arg(eqs, "eqs")?;
        let e = parse_eqs(src, &env(&params_arg(params)?))?;
        *out = Box::into_raw(Box::new(NilComplex(e)));
        Ok(())
    })
}

/// # Safety
/// `c` must come from this library or be null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn nil_complex_free(c: *mut NilComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Whether `d^2 = 0` on every generator.
///
/// # Safety
/// `c` must be a live handle; `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn nil_complex_validate(c: *const NilComplex, valid: *mut bool) -> NilStatus {
    guard(|| {
        let valid = out_ptr(valid, "valid")?;
        *valid = handle(c)?.0.is_valid();
        Ok(())
    })
}

/// Real algebra under `w^k = e^(2k-1) + i e^(2k)`.
///
/// # Safety
/// `c` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nil_complex_realify(c: *const NilComplex, out: *mut *mut NilAlgebra) -> NilStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let eqs = &handle(c)?.0;
        let r = realify(eqs, &standard_map(eqs.n()))?;
        *out = Box::into_raw(Box::new(NilAlgebra(r.algebra)));
        Ok(())
    })
}

/// Verifies one certificate or a list given as JSON; `all_passed` is false if any fails.
///
/// # Safety
/// `json` must be a valid C string; `all_passed` writable.
#[no_mangle]
pub unsafe extern "C" fn nil_certify_json(json: *const c_char, all_passed: *mut bool) -> NilStatus {
    guard(|| {
        let all_passed = out_ptr(all_passed, "all_passed")?;
        let v = certificates::verify_json(str_arg(json, "json")?)?;
        *all_passed = v.iter().all(|v| v.passed);
        Ok(())
    })
}

/// Table report as JSON from the built-in samples; `pass` tells whether every row passed.
///
/// # Safety
/// `table` must be a valid C string; `out` and `pass` writable.
#[no_mangle]
pub unsafe extern "C" fn nil_table_report_json(
    table: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
    pass: *mut bool,
) -> NilStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let pass = out_ptr(pass, "pass")?;
        let id: TableId = str_arg(table, "table")?.parse()?;
        let r = reproduce_table(id, &Manifest::builtin(), seed)?;
        *pass = r.pass;
        string_out(serde_json::to_string(&r).map_err(|e| Fail(NilStatus::Internal, e.to_string()))?, out)
    })
}
