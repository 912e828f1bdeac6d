use std::ffi::{CStr, CString};
use std::ptr;

use qkflag_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn flag(t: &str) -> *mut QkFlag {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qk_flag_new(c(t).as_ptr(), &mut out) }, QkStatus::Ok);
    assert!(!out.is_null());
    out
}

fn take(s: *mut std::ffi::c_char) -> serde_json::Value {
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { qk_string_free(s) };
    v
}

fn last_error() -> String {
    let p = qk_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn handle_lifecycle() {
    let f = flag("G2");
    assert_eq!(unsafe { qk_flag_rank(f) }, 2);
    assert_eq!(unsafe { qk_flag_rank(ptr::null()) }, 0);
    unsafe { qk_flag_free(f) };
    unsafe { qk_flag_free(ptr::null_mut()) };
    unsafe { qk_string_free(ptr::null_mut()) };
}

#[test]
fn three_point_matches_the_cli() {
    let f = flag("G2");
    let (w, d) = (c("2,1,2,1,2"), c("1,2"));
    for m in ["pairing", "full", "reduced"] {
        let mut out = ptr::null_mut();
        let m = c(m);
        let st = unsafe { qk_three_point(f, 2, w.as_ptr(), c("1").as_ptr(), d.as_ptr(), ptr::null(), m.as_ptr(), &mut out) };
        assert_eq!(st, QkStatus::Ok);
        assert_eq!(take(out)["text"], "1 + e^[-3,-2]");
    }
    let mut out = ptr::null_mut();
    let st = unsafe { qk_two_point(f, w.as_ptr(), c("e").as_ptr(), d.as_ptr(), ptr::null(), &mut out) };
    assert_eq!(st, QkStatus::Ok);
    assert_eq!(take(out)["text"], "1");
    unsafe { qk_flag_free(f) };
}

#[test]
fn chevalley_json_has_terms() {
    let f = flag("A1");
    let mut out = ptr::null_mut();
    let st = unsafe { qk_chevalley(f, 1, c("1").as_ptr(), ptr::null(), &mut out) };
    assert_eq!(st, QkStatus::Ok);
    let v = take(out);
    assert!(!v["terms"].as_array().unwrap().is_empty());
    unsafe { qk_flag_free(f) };
}

#[test]
fn peterson_lift_writes_the_degree() {
    let f = flag("A3");
    let mut buf = [0i64; 3];
    let st = unsafe { qk_peterson_lift(f, c("2").as_ptr(), c("2").as_ptr(), buf.as_mut_ptr(), 3) };
    assert_eq!(st, QkStatus::Ok);
    assert_eq!(buf, [1, 2, 1]);
    let st = unsafe { qk_peterson_lift(f, c("2").as_ptr(), c("2").as_ptr(), buf.as_mut_ptr(), 2) };
    assert_eq!(st, QkStatus::BufferTooSmall);
    unsafe { qk_flag_free(f) };
}

#[test]
fn errors_map_to_codes() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qk_flag_new(c("Z9").as_ptr(), &mut out) }, QkStatus::InvalidInput);
    assert!(last_error().contains("Z9"));
    assert_eq!(unsafe { qk_flag_new(ptr::null(), &mut out) }, QkStatus::NullArgument);
    assert_eq!(unsafe { qk_flag_new(c("A2").as_ptr(), ptr::null_mut()) }, QkStatus::NullArgument);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { qk_flag_new(bad.as_ptr().cast(), &mut out) }, QkStatus::InvalidUtf8);

    let f = flag("G2");
    let mut s = ptr::null_mut();
    let (w, x, d) = (c("2"), c("e"), c("0,0"));
    let st = unsafe { qk_three_point(f, 3, w.as_ptr(), x.as_ptr(), d.as_ptr(), ptr::null(), ptr::null(), &mut s) };
    assert_eq!(st, QkStatus::InvalidInput);
    assert!(last_error().contains("out of range"));
    let st = unsafe { qk_three_point(f, 1, w.as_ptr(), x.as_ptr(), c("1").as_ptr(), ptr::null(), ptr::null(), &mut s) };
    assert_eq!(st, QkStatus::InvalidInput);
    let st = unsafe { qk_three_point(f, 1, w.as_ptr(), x.as_ptr(), d.as_ptr(), ptr::null(), c("fast").as_ptr(), &mut s) };
    assert_eq!(st, QkStatus::InvalidInput);
    let st = unsafe { qk_three_point(ptr::null(), 1, w.as_ptr(), x.as_ptr(), d.as_ptr(), ptr::null(), ptr::null(), &mut s) };
    assert_eq!(st, QkStatus::NullArgument);
    assert!(s.is_null());
    let st = unsafe { qk_three_point(f, 1, w.as_ptr(), x.as_ptr(), d.as_ptr(), ptr::null(), ptr::null(), &mut s) };
    assert_eq!(st, QkStatus::Ok);
    assert!(qk_last_error().is_null());
    take(s);
    unsafe { qk_flag_free(f) };
}

#[test]
fn header_declares_every_export() {
    let h = include_str!("../include/qkflag.h");
    for name in [
        "qk_flag_new",
        "qk_flag_free",
        "qk_flag_rank",
        "qk_three_point",
        "qk_two_point",
        "qk_chevalley",
        "qk_peterson_lift",
        "qk_string_free",
        "qk_last_error",
        "QK_STATUS_PANIC",
    ] {
        assert!(h.contains(name), "{name} missing from the header");
    }
}
