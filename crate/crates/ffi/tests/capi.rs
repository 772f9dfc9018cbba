use std::ffi::{CStr, CString};
use std::ptr;

use sp6_orbits_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> serde_json::Value {
    let v = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
    sp6_string_free(s);
    v
}

unsafe fn field(name: &str) -> *mut Sp6Field {
    let mut f = ptr::null_mut();
    assert_eq!(sp6_field_new(c(name).as_ptr(), &mut f), Sp6Status::Ok);
    f
}

unsafe fn vector(f: *const Sp6Field, json: &str) -> Result<*mut Sp6Vector, Sp6Status> {
    let mut v = ptr::null_mut();
    match sp6_vector_from_json(f, c(json).as_ptr(), &mut v) {
        Sp6Status::Ok => Ok(v),
        s => Err(s),
    }
}

const WORKED: &str = r#"{"terms":[[-1,[1,2,3]],[-1,[4,5,6]]]}"#;

#[test]
fn classify_worked_example() {
    unsafe {
        let f = field("Q");
        let v = vector(f, WORKED).unwrap();
        let mut s = Sp6Stratum::Zero;
        assert_eq!(sp6_stratum(f, v, &mut s), Sp6Status::Ok);
        assert_eq!(s, Sp6Stratum::X3);
        let mut out = ptr::null_mut();
        assert_eq!(sp6_classify_json(f, v, Sp6Mode::Sp6, 0, &mut out), Sp6Status::Ok);
        let r = take(out);
        assert_eq!(r["invariant"]["i"], "-1/4");
        assert_eq!(r["invariant"]["octonion_split"], true);
        assert_eq!(r["witness"]["canonical"]["B"][0][0], "-1/4");
        assert_eq!(sp6_j_json(f, v, &mut out), Sp6Status::Ok);
        assert_eq!(take(out)["J"], "-1/4");
        assert_eq!(sp6_reduce_json(f, v, 0, &mut out), Sp6Status::Ok);
        assert_eq!(take(out)["canonical"]["y0"], "1");
        sp6_vector_free(v);
        sp6_field_free(f);
    }
}

#[test]
fn act_keeps_j() {
    unsafe {
        let f = field("F:7");
        let v = vector(f, WORKED).unwrap();
        let mut w = ptr::null_mut();
        let word = r#"{"word":[{"BetaMove":[[1,2,0],[2,0,1],[0,1,3]]},"Swap",{"TorusScale":[2,3,5]}]}"#;
        assert_eq!(sp6_act(f, v, c(word).as_ptr(), &mut w), Sp6Status::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(sp6_j_json(f, w, &mut out), Sp6Status::Ok);
        // -1/4 = 5 mod 7
        assert_eq!(take(out)["J"], "5");
        sp6_vector_free(w);
        sp6_vector_free(v);
        sp6_field_free(f);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(sp6_field_new(c("F:4").as_ptr(), &mut f), Sp6Status::InvalidInput);
        assert!(!CStr::from_ptr(sp6_last_error_message()).to_bytes().is_empty());
        assert_eq!(sp6_field_new(ptr::null(), &mut f), Sp6Status::NullPointer);
        let f = field("Q");
        assert_eq!(vector(f, r#"{"terms":[[1,[1,2,4]]]}"#).unwrap_err(), Sp6Status::NotInX);
        assert_eq!(vector(f, "not json").unwrap_err(), Sp6Status::InvalidInput);
        let g = field("F:5");
        let v = vector(g, WORKED).unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(sp6_j_json(f, v, &mut out), Sp6Status::InvalidInput);
        assert_eq!(sp6_census_json(5, true, 0, 1, 0, &mut out), Sp6Status::Unsupported);
        assert_eq!(sp6_census_json(5, false, 2000, 2, 1, &mut out), Sp6Status::Ok);
        assert!(CStr::from_ptr(sp6_last_error_message()).to_bytes().is_empty());
        assert_eq!(take(out)["checks_pass"], true);
        sp6_vector_free(v);
        sp6_field_free(g);
        sp6_field_free(f);
        sp6_field_free(ptr::null_mut());
        sp6_string_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(sp6_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sp6_orbits.h")).unwrap();
    for name in [
        "sp6_field_new",
        "sp6_field_free",
        "sp6_vector_from_json",
        "sp6_vector_free",
        "sp6_j_json",
        "sp6_stratum",
        "sp6_classify_json",
        "sp6_reduce_json",
        "sp6_act",
        "sp6_census_json",
        "sp6_last_error_message",
        "sp6_string_free",
        "sp6_version",
        "SP6_STATUS_NOT_IN_X = 3",
        "SP6_STATUS_SEARCH_EXHAUSTED = 5",
        "typedef struct Sp6Field Sp6Field",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/sp6_orbits.h");
    let Ok(status) = std::process::Command::new("cc").args(["-fsyntax-only", "-x", "c", header]).status() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(status.success());
}
