//! C interface.
//!
//! Problems are parsed once into an opaque `NilorbitProblem` handle. Every call returns a
//! `NilorbitStatus`; on success the verdict JSON is written to `*out_json` and must be
//! released with `nilorbit_string_free`. On failure `nilorbit_last_error` returns a JSON
//! object `{"kind", "message", "pointer"}` describing the most recent error on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nilorbit::io::{parse_point, parse_problem, ProblemFile};
use nilorbit::oracle::{Grid, RecurrenceParams};
use nilorbit::regularity::Sampling;
use nilorbit::{report, Error};

/// A parsed and validated problem file.
pub struct NilorbitProblem {
    inner: ProblemFile,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilorbitStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Malformed or invalid input; the error pointer locates the fault.
    InvalidInput = 3,
    /// Input is valid but no verdict was reached.
    Inconclusive = 4,
    /// A selftest check failed; the result JSON is still returned.
    CheckFailed = 5,
    Panic = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(kind: &str, message: &str, pointer: Option<&str>) {
    let body = serde_json::json!({ "kind": kind, "message": message, "pointer": pointer }).to_string();
    let c = CString::new(body).unwrap_or_else(|_| CString::new("{\"kind\":\"internal\"}").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(e: &Error) -> NilorbitStatus {
    let pointer = match e {
        Error::Malformed { pointer, .. } => Some(pointer.as_str()),
        _ => None,
    };
    set_last_error(e.kind(), &e.to_string(), pointer);
    if e.exit_code() == 2 {
        NilorbitStatus::InvalidInput
    } else {
        NilorbitStatus::Inconclusive
    }
}

enum Failure {
    Status(NilorbitStatus),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn null(what: &str) -> Failure {
    set_last_error("null_argument", &format!("{what} is null"), None);
    Failure::Status(NilorbitStatus::NullArgument)
}

/// Runs `f` with panics and errors mapped to status codes.
fn guard(f: impl FnOnce() -> Result<NilorbitStatus, Failure>) -> NilorbitStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Failure::Status(s))) => s,
        Ok(Err(Failure::Error(e))) => fail(&e),
        Err(_) => {
            set_last_error("panic", "internal panic", None);
            NilorbitStatus::Panic
        }
    }
}

/// # Safety
/// `p` must be null or a NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_last_error("invalid_utf8", &format!("{what} is not UTF-8"), None);
        Failure::Status(NilorbitStatus::InvalidUtf8)
    })
}

/// # Safety
/// `h` must be null or a handle from `nilorbit_problem_parse`.
unsafe fn handle<'a>(h: *const NilorbitProblem) -> Result<&'a ProblemFile, Failure> {
    h.as_ref().map(|p| &p.inner).ok_or_else(|| null("problem"))
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_json(out: *mut *mut c_char, value: &serde_json::Value) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out_json"));
    }
    let s = CString::new(value.to_string()).expect("JSON has no interior NUL");
    *out = s.into_raw();
    Ok(())
}

/// Parses a problem file. On success `*out` receives a handle owned by the caller.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn nilorbit_problem_parse(json: *const c_char, out: *mut *mut NilorbitProblem) -> NilorbitStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = parse_problem(text)?;
        *out = Box::into_raw(Box::new(NilorbitProblem { inner }));
        Ok(NilorbitStatus::Ok)
    })
}

/// # Safety
/// `problem` must be null or a handle from `nilorbit_problem_parse` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nilorbit_problem_free(problem: *mut NilorbitProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nilorbit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The last error on this thread as JSON, or null. Valid until the next call on the thread.
#[no_mangle]
pub extern "C" fn nilorbit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn nilorbit_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Weight spaces, real form, blocks and the `dE + dν` split.
///
/// # Safety
/// `problem` must be a live handle and `out_json` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn nilorbit_decompose(problem: *const NilorbitProblem, out_json: *mut *mut c_char) -> NilorbitStatus {
    guard(|| {
        let v = report::decompose(handle(problem)?)?;
        write_json(out_json, &v)?;
        Ok(NilorbitStatus::Ok)
    })
}

/// Regularity of `point`, or of the problem's own points when `point` is null.
/// `point` is `(a, b, …)` or a JSON array of field elements.
///
/// # Safety
/// `problem` must be a live handle, `point` null or NUL-terminated, `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn nilorbit_regular(
    problem: *const NilorbitProblem,
    point: *const c_char,
    out_json: *mut *mut c_char,
) -> NilorbitStatus {
    guard(|| {
        let p = handle(problem)?;
        let points = if point.is_null() {
            Vec::new()
        } else {
            vec![parse_point(read_str(point, "point")?, p.field.as_ref())?]
        };
        write_json(out_json, &report::regular(p, &points)?)?;
        Ok(NilorbitStatus::Ok)
    })
}

/// # Safety
/// `problem` must be a live handle and `out_json` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn nilorbit_dichotomy(
    problem: *const NilorbitProblem,
    samples: usize,
    seed: u64,
    coordinate_bound: i64,
    out_json: *mut *mut c_char,
) -> NilorbitStatus {
    guard(|| {
        let sampling = Sampling {
            count: samples,
            seed,
            coordinate_bound,
        };
        write_json(out_json, &report::dichotomy(handle(problem)?, &sampling)?)?;
        Ok(NilorbitStatus::Ok)
    })
}

/// Type I / antiliminary classification from a matrix or spectrum problem.
///
/// # Safety
/// `problem` must be a live handle and `out_json` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn nilorbit_axb(problem: *const NilorbitProblem, out_json: *mut *mut c_char) -> NilorbitStatus {
    guard(|| {
        write_json(out_json, &report::axb(handle(problem)?)?)?;
        Ok(NilorbitStatus::Ok)
    })
}

/// Float recurrence score along `x_1`, with a grid of `steps` orbit samples of the given radius.
///
/// # Safety
/// `problem` must be a live handle, `point` NUL-terminated, `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn nilorbit_orbit_sample(
    problem: *const NilorbitProblem,
    point: *const c_char,
    radius: f64,
    steps: usize,
    t_min: f64,
    t_max: f64,
    epsilon: f64,
    out_json: *mut *mut c_char,
) -> NilorbitStatus {
    guard(|| {
        let p = handle(problem)?;
        let v = parse_point(read_str(point, "point")?, p.field.as_ref())?;
        let grid = Grid { radius, steps };
        let params = RecurrenceParams {
            t_min,
            t_max,
            epsilon,
            direction: None,
        };
        let (sample, score) = report::orbit(p, &v, grid, &params)?;
        let mut value = report::orbit_value(&sample, &score, grid);
        value["points"] = serde_json::json!(sample.points);
        value["parameters"] = serde_json::json!(sample.parameters);
        value["norms"] = serde_json::json!(sample.norms);
        write_json(out_json, &value)?;
        Ok(NilorbitStatus::Ok)
    })
}

/// Runs the bundled fixtures. Returns `CheckFailed` with the full result when a check fails.
///
/// # Safety
/// `out_json` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn nilorbit_selftest(seed: u64, out_json: *mut *mut c_char) -> NilorbitStatus {
    guard(|| {
        let out = report::selftest(seed);
        write_json(out_json, &serde_json::to_value(&out).expect("selftest serializes"))?;
        Ok(if out.passed {
            NilorbitStatus::Ok
        } else {
            set_last_error("check_failed", "a selftest check failed", None);
            NilorbitStatus::CheckFailed
        })
    })
}
