//! C interface to `plane-auto`.
//!
//! Maps are opaque `PaMap` handles owned by the caller and released with
//! [`pa_map_free`]. Every fallible function returns a [`PaStatus`]; on
//! failure [`pa_last_error_message`] describes the error. Strings returned
//! through `char **` out-parameters are released with [`pa_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use plane_auto::amalgam::{Engine, Verdict};
use plane_auto::cli::parse_with_cap;
use plane_auto::paperlab::{run_all, Config, Report};
use plane_auto::planeauto::PolyMap;
use plane_auto::Error;

/// Opaque handle to a polynomial map.
pub struct PaMap {
    inner: PolyMap,
}

/// Result codes. Values 1 to 12 match the error codes of the library and
/// the command-line tool.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PaStatus {
    Ok = 0,
    DivisionByZero = 1,
    DegreeCapExceeded = 2,
    NotUnimodular = 3,
    NotAnAutomorphism = 4,
    InU = 5,
    NotInFactor = 6,
    NotHenon = 7,
    NoHenonForm = 8,
    Syntax = 9,
    Semantic = 10,
    BadLiteral = 11,
    InvalidWord = 12,
    NullPointer = 100,
    InvalidUtf8 = 101,
    Panic = 102,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PaVerdict {
    Elementary = 0,
    Henon = 1,
}

impl From<&Error> for PaStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DivisionByZero => PaStatus::DivisionByZero,
            Error::DegreeCapExceeded { .. } => PaStatus::DegreeCapExceeded,
            Error::NotUnimodular(_) => PaStatus::NotUnimodular,
            Error::NotAnAutomorphism(_) => PaStatus::NotAnAutomorphism,
            Error::InU => PaStatus::InU,
            Error::NotInFactor => PaStatus::NotInFactor,
            Error::NotHenon => PaStatus::NotHenon,
            Error::NoHenonForm(_) => PaStatus::NoHenonForm,
            Error::Syntax { .. } => PaStatus::Syntax,
            Error::Semantic(_) => PaStatus::Semantic,
            Error::BadLiteral(_) => PaStatus::BadLiteral,
            Error::InvalidWord(_) => PaStatus::InvalidWord,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(PaStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(PaStatus::from(&e), e.to_string())
    }
}

fn null_pointer(what: &str) -> Failure {
    Failure(PaStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, records any error and converts panics into `PaStatus::Panic`.
fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> PaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            PaStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            PaStatus::Panic
        }
    }
}

fn engine(degree_cap: u32) -> Engine {
    if degree_cap == 0 {
        Engine::default()
    } else {
        Engine::with_degree_cap(degree_cap)
    }
}

unsafe fn map_ref<'a>(m: *const PaMap, what: &str) -> Result<&'a PolyMap, Failure> {
    m.as_ref()
        .map(|m| &m.inner)
        .ok_or_else(|| null_pointer(what))
}

unsafe fn put_map(out: *mut *mut PaMap, g: PolyMap) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null_pointer("out"));
    }
    *out = Box::into_raw(Box::new(PaMap { inner: g }));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null_pointer("out"));
    }
    *out = CString::new(s).expect("no interior nul").into_raw();
    Ok(())
}

/// Parses and evaluates an expression such as `"(x + y^2, y) * (y, -x)"`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_map_parse(
    text: *const c_char,
    degree_cap: u32,
    out: *mut *mut PaMap,
) -> PaStatus {
    guard(|| {
        if text.is_null() {
            return Err(null_pointer("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(PaStatus::InvalidUtf8, e.to_string()))?;
        let e = engine(degree_cap);
        let g = parse_with_cap(s, e.cap())?.eval(&e)?;
        put_map(out, g)
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `m` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pa_map_free(m: *mut PaMap) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Canonical text form, which parses back to the same map.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_map_to_string(m: *const PaMap, out: *mut *mut c_char) -> PaStatus {
    guard(|| {
        let g = map_ref(m, "map")?;
        put_string(out, g.to_string())
    })
}

/// Diagrammatic product: the result applies `g` first. A `degree_cap` of 0
/// selects the default cap.
///
/// # Safety
/// `g`, `h` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_map_compose(
    g: *const PaMap,
    h: *const PaMap,
    degree_cap: u32,
    out: *mut *mut PaMap,
) -> PaStatus {
    guard(|| {
        let (g, h) = (map_ref(g, "g")?, map_ref(h, "h")?);
        put_map(out, engine(degree_cap).mul(g, h)?)
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_map_invert(
    g: *const PaMap,
    degree_cap: u32,
    out: *mut *mut PaMap,
) -> PaStatus {
    guard(|| {
        let g = map_ref(g, "g")?;
        put_map(out, engine(degree_cap).invert(g)?)
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_map_power(
    g: *const PaMap,
    n: i64,
    degree_cap: u32,
    out: *mut *mut PaMap,
) -> PaStatus {
    guard(|| {
        let g = map_ref(g, "g")?;
        put_map(out, engine(degree_cap).power(g, n)?)
    })
}

/// Algebraic length.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_map_length(g: *const PaMap, out: *mut usize) -> PaStatus {
    guard(|| {
        let g = map_ref(g, "g")?;
        let n = Engine::default().length(g)?;
        if out.is_null() {
            return Err(null_pointer("out"));
        }
        *out = n;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_map_classify(g: *const PaMap, out: *mut PaVerdict) -> PaStatus {
    guard(|| {
        let g = map_ref(g, "g")?;
        let c = Engine::default().classify(g)?;
        if out.is_null() {
            return Err(null_pointer("out"));
        }
        *out = match c.verdict {
            Verdict::Elementary => PaVerdict::Elementary,
            Verdict::Henon => PaVerdict::Henon,
        };
        Ok(())
    })
}

/// Normal form as JSON `{"head": …, "reps": […]}`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_map_normal_form_json(
    g: *const PaMap,
    out: *mut *mut c_char,
) -> PaStatus {
    guard(|| {
        let g = map_ref(g, "g")?;
        let w = Engine::default().normal_form(g)?;
        put_string(out, w.to_json().to_string())
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_map_equal(
    a: *const PaMap,
    b: *const PaMap,
    out: *mut bool,
) -> PaStatus {
    guard(|| {
        let (a, b) = (map_ref(a, "a")?, map_ref(b, "b")?);
        if out.is_null() {
            return Err(null_pointer("out"));
        }
        *out = a == b;
        Ok(())
    })
}

/// Runs every verification check. `samples` of 0 keeps each check's
/// default. Writes the JSON report and whether all checks passed.
///
/// # Safety
/// `out` and `pass` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pa_verify_all_json(
    seed: u64,
    samples: usize,
    out: *mut *mut c_char,
    pass: *mut bool,
) -> PaStatus {
    guard(|| {
        if pass.is_null() {
            return Err(null_pointer("pass"));
        }
        let cfg = Config {
            seed,
            samples: (samples > 0).then_some(samples),
            engine: Engine::default(),
        };
        let reports = run_all(&cfg);
        let all = reports.iter().all(|r| r.pass);
        let json = serde_json::json!({
            "pass": all,
            "seed": seed,
            "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
        });
        put_string(out, json.to_string())?;
        *pass = all;
        Ok(())
    })
}

/// Message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn pa_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
