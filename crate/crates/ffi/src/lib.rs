//! C interface to `sp6-orbits`.
//!
//! Fields and vectors are opaque handles. Every fallible call returns an
//! [`Sp6Status`]; on failure [`sp6_last_error_message`] describes the error
//! for the calling thread. Strings returned through `out` parameters are
//! JSON documents owned by the caller and released with [`sp6_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde_json::Value;
use sp6_orbits::api::{self, AnyField};
use sp6_orbits::error::Error;
use sp6_orbits::orbits::{CensusScope, GroupMode, ReduceConfig};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sp6Status {
    Ok = 0,
    Internal = 1,
    InvalidInput = 2,
    NotInX = 3,
    Unsupported = 4,
    SearchExhausted = 5,
    NullPointer = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sp6Mode {
    Sp6 = 0,
    Sp6Gl1 = 1,
    Gsp6Gl1 = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sp6Stratum {
    Zero = 0,
    X0 = 1,
    X1 = 2,
    X2 = 3,
    X3 = 4,
}

/// A ground field, `Q` or `F:p`.
pub struct Sp6Field {
    field: AnyField,
}

/// A point of X over a fixed field.
pub struct Sp6Vector {
    field: String,
    point: Value,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> Sp6Status {
    match api::exit_code(e) {
        2 => Sp6Status::InvalidInput,
        3 => Sp6Status::NotInX,
        4 => Sp6Status::Unsupported,
        5 => Sp6Status::SearchExhausted,
        _ => Sp6Status::Internal,
    }
}

fn guard(body: impl FnOnce() -> Result<(), Sp6Status>) -> Sp6Status {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            Sp6Status::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside sp6-orbits");
            Sp6Status::Internal
        }
    }
}

fn fail(e: Error) -> Sp6Status {
    set_error(&format!("{}: {e}", api::error_kind(&e)));
    status_of(&e)
}

fn null() -> Sp6Status {
    set_error("null pointer argument");
    Sp6Status::NullPointer
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Sp6Status> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(Error::Parse("string is not UTF-8".into())))
}

unsafe fn read_json(s: *const c_char) -> Result<Value, Sp6Status> {
    serde_json::from_str(read_str(s)?).map_err(|e| fail(Error::Parse(e.to_string())))
}

unsafe fn write_json(out: *mut *mut c_char, v: &Value) -> Result<(), Sp6Status> {
    let s = CString::new(v.to_string()).map_err(|_| fail(Error::Internal("NUL in output".into())))?;
    *out = s.into_raw();
    Ok(())
}

unsafe fn handles<'a>(f: *const Sp6Field, v: *const Sp6Vector) -> Result<(&'a Sp6Field, &'a Sp6Vector), Sp6Status> {
    if f.is_null() || v.is_null() {
        return Err(null());
    }
    let (f, v) = (&*f, &*v);
    if f.field.name() != v.field {
        return Err(fail(Error::DimensionMismatch(format!("vector over {} used with field {}", v.field, f.field.name()))));
    }
    Ok((f, v))
}

fn mode_of(m: Sp6Mode) -> GroupMode {
    match m {
        Sp6Mode::Sp6 => GroupMode::Sp6,
        Sp6Mode::Sp6Gl1 => GroupMode::Sp6xGL1,
        Sp6Mode::Gsp6Gl1 => GroupMode::GSp6xGL1,
    }
}

/// Creates a field from `"Q"` or `"F:p"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sp6_field_new(name: *const c_char, out: *mut *mut Sp6Field) -> Sp6Status {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let field: AnyField = read_str(name)?.parse().map_err(fail)?;
        *out = Box::into_raw(Box::new(Sp6Field { field }));
        Ok(())
    })
}

/// # Safety
/// `f` must come from [`sp6_field_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sp6_field_free(f: *mut Sp6Field) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Parses a point (`wedge`, `terms` or tuple encoding) and checks it lies in X.
///
/// # Safety
/// `f` must be a live field handle, `json` a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sp6_vector_from_json(
    f: *const Sp6Field,
    json: *const c_char,
    out: *mut *mut Sp6Vector,
) -> Sp6Status {
    guard(|| {
        if f.is_null() || out.is_null() {
            return Err(null());
        }
        let field = &(*f).field;
        let input = read_json(json)?;
        let point = api::normalize_point(field, &input).map_err(fail)?;
        *out = Box::into_raw(Box::new(Sp6Vector { field: field.name(), point }));
        Ok(())
    })
}

/// # Safety
/// `v` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sp6_vector_free(v: *mut Sp6Vector) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// J, grad J, covariant rank and stratum as JSON.
///
/// # Safety
/// Handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sp6_j_json(f: *const Sp6Field, v: *const Sp6Vector, out: *mut *mut c_char) -> Sp6Status {
    guard(|| {
        let (f, v) = handles(f, v)?;
        if out.is_null() {
            return Err(null());
        }
        write_json(out, &api::j_report(&f.field, &v.point).map_err(fail)?)
    })
}

/// # Safety
/// Handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sp6_stratum(f: *const Sp6Field, v: *const Sp6Vector, out: *mut Sp6Stratum) -> Sp6Status {
    guard(|| {
        let (f, v) = handles(f, v)?;
        if out.is_null() {
            return Err(null());
        }
        let r = api::j_report(&f.field, &v.point).map_err(fail)?;
        *out = match r["stratum"]["tag"].as_str() {
            Some("Zero") => Sp6Stratum::Zero,
            Some("X0") => Sp6Stratum::X0,
            Some("X1") => Sp6Stratum::X1,
            Some("X2") => Sp6Stratum::X2,
            _ => Sp6Stratum::X3,
        };
        Ok(())
    })
}

/// Orbit invariant and witness as JSON.
///
/// # Safety
/// Handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sp6_classify_json(
    f: *const Sp6Field,
    v: *const Sp6Vector,
    mode: Sp6Mode,
    seed: u64,
    out: *mut *mut c_char,
) -> Sp6Status {
    guard(|| {
        let (f, v) = handles(f, v)?;
        if out.is_null() {
            return Err(null());
        }
        let cfg = ReduceConfig { seed, ..ReduceConfig::default() };
        write_json(out, &api::classify_report(&f.field, &v.point, mode_of(mode), &cfg).map_err(fail)?)
    })
}

/// Reduction word and canonical tuple as JSON.
///
/// # Safety
/// Handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sp6_reduce_json(
    f: *const Sp6Field,
    v: *const Sp6Vector,
    seed: u64,
    out: *mut *mut c_char,
) -> Sp6Status {
    guard(|| {
        let (f, v) = handles(f, v)?;
        if out.is_null() {
            return Err(null());
        }
        let cfg = ReduceConfig { seed, ..ReduceConfig::default() };
        write_json(out, &api::reduce_report(&f.field, &v.point, &cfg).map_err(fail)?)
    })
}

/// Applies `{"g": matrix}` or `{"word": [...]}` to `v`, producing a new vector.
///
/// # Safety
/// Handles must be live, `g_json` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sp6_act(
    f: *const Sp6Field,
    v: *const Sp6Vector,
    g_json: *const c_char,
    out: *mut *mut Sp6Vector,
) -> Sp6Status {
    guard(|| {
        let (f, v) = handles(f, v)?;
        if out.is_null() {
            return Err(null());
        }
        let mut input = read_json(g_json)?;
        let obj = input.as_object_mut().ok_or_else(|| fail(Error::Parse("group element must be an object".into())))?;
        obj.insert("x".into(), v.point.clone());
        let r = api::act_report(&f.field, &input).map_err(fail)?;
        *out = Box::into_raw(Box::new(Sp6Vector { field: v.field.clone(), point: r["result"].clone() }));
        Ok(())
    })
}

/// Census over `F_p`: full enumeration when `full` (p = 3 only), otherwise
/// `samples` random vectors.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sp6_census_json(
    p: u64,
    full: bool,
    samples: u64,
    jobs: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> Sp6Status {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let scope = if full { CensusScope::Full } else { CensusScope::Sample { n: samples, seed } };
        write_json(out, &api::census_report(p, scope, jobs, seed).map_err(fail)?)
    })
}

/// Message for the last failed call on this thread; empty after success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn sp6_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sp6_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn sp6_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
