//! C ABI for `qkflag`.
//!
//! A `QkFlag` handle owns the Weyl group, the quantum Bruhat graph and the
//! path caches of one Cartan type. Every fallible call returns a
//! `QkStatus`; on failure a message is available from `qk_last_error` on the
//! same thread. Strings returned through `out` parameters are JSON and must
//! be released with `qk_string_free`. Elements are words such as `"2,1,2"`
//! or `"e"`, node indices are 1-based, `K` is a node list such as `"1,3"`
//! (NULL or `"all"` for every node) and degrees list one integer per node of
//! `K`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qkflag::flag::Flag;
use qkflag::invariants::{peterson_lift, three_point, two_point, ThreePointMethod};
use qkflag::ring::{chevalley_parabolic, Basis, GroupAlgElem};
use qkflag::rootsys::{CorootVec, ParabolicSubset};
use qkflag::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QkStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Precondition = 4,
    TooLarge = 5,
    BufferTooSmall = 6,
    Internal = 7,
    Panic = 8,
}

/// Opaque handle for one flag manifold `G/B` and its parabolic quotients.
pub struct QkFlag {
    inner: Flag,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QkStatus {
    match e {
        Error::InvalidType(_) | Error::InvalidWord { .. } | Error::Parse(_) | Error::DimensionMismatch { .. } => {
            QkStatus::InvalidInput
        }
        Error::Precondition(_) | Error::NotARoot(_) | Error::Mismatch => QkStatus::Precondition,
        Error::GroupTooLarge { .. } => QkStatus::TooLarge,
        Error::LiftBound(_) | Error::Internal(_) => QkStatus::Internal,
    }
}

struct Failure(QkStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `f`, turning errors and panics into a status plus a stored message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QkStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QkStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside qkflag".into());
            QkStatus::Panic
        }
    }
}

/// # Safety
/// `p` is NULL or points to a nul-terminated string.
unsafe fn opt_str<'a>(p: *const c_char, name: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        return Ok(None);
    }
    CStr::from_ptr(p)
        .to_str()
        .map(Some)
        .map_err(|_| Failure(QkStatus::InvalidUtf8, format!("{name} is not valid UTF-8")))
}

/// # Safety
/// As for [`opt_str`].
unsafe fn req_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    opt_str(p, name)?.ok_or_else(|| Failure(QkStatus::NullArgument, format!("{name} is NULL")))
}

/// # Safety
/// `p` is NULL or a pointer from [`qk_flag_new`] that has not been freed.
unsafe fn handle<'a>(p: *const QkFlag) -> Result<&'a Flag, Failure> {
    p.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| Failure(QkStatus::NullArgument, "flag handle is NULL".into()))
}

fn node(flag: &Flag, i: u32) -> Result<usize, Failure> {
    let i = i as usize;
    if i == 0 || i > flag.rank() {
        return Err(Failure(QkStatus::InvalidInput, format!("node {i} is out of range 1..={}", flag.rank())));
    }
    Ok(i - 1)
}

fn subset(flag: &Flag, k: Option<&str>) -> Result<ParabolicSubset, Failure> {
    Ok(ParabolicSubset::parse(k.unwrap_or("all"), flag.rank())?)
}

/// # Safety
/// `out` is non-null and writable.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(QkStatus::Internal, "output contains a nul byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(QkStatus::NullArgument, "output pointer is NULL".into()))
    } else {
        Ok(())
    }
}

fn value_json(flag: &Flag, v: &GroupAlgElem) -> String {
    serde_json::json!({ "value": v.to_json(), "text": v.format(flag.root_system(), Basis::Root) }).to_string()
}

/// Builds the handle for a Cartan type such as `"G2"`.
///
/// # Safety
/// `lie_type` is a nul-terminated string and `out` is writable. The handle
/// written to `out` must be released with [`qk_flag_free`].
#[no_mangle]
pub unsafe extern "C" fn qk_flag_new(lie_type: *const c_char, out: *mut *mut QkFlag) -> QkStatus {
    guard(|| {
        check_out(out)?;
        let t = req_str(lie_type, "lie_type")?;
        let inner = Flag::parse(t)?;
        *out = Box::into_raw(Box::new(QkFlag { inner }));
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `flag` is NULL or a handle from [`qk_flag_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qk_flag_free(flag: *mut QkFlag) {
    if !flag.is_null() {
        drop(Box::from_raw(flag));
    }
}

/// Rank of the root system, or 0 for a NULL handle.
///
/// # Safety
/// `flag` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qk_flag_rank(flag: *const QkFlag) -> usize {
    flag.as_ref().map_or(0, |h| h.inner.rank())
}

/// `<O^{s_i}, O^w, O_x>_d` on `G/P_K`. `method` is `"pairing"`, `"full"`
/// or `"reduced"` (NULL selects `"reduced"`). Writes
/// `{"value": [{"wt": [...], "c": n}, ...], "text": "..."}` to `out`.
///
/// # Safety
/// `flag` is a live handle, the strings are NULL or nul-terminated (`w`, `x`
/// and `d` must be non-null) and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qk_three_point(
    flag: *const QkFlag,
    i: u32,
    w: *const c_char,
    x: *const c_char,
    d: *const c_char,
    k: *const c_char,
    method: *const c_char,
    out: *mut *mut c_char,
) -> QkStatus {
    guard(|| {
        check_out(out)?;
        let flag = handle(flag)?;
        let k = subset(flag, opt_str(k, "k")?)?;
        let method: ThreePointMethod = opt_str(method, "method")?.unwrap_or("reduced").parse()?;
        let w = flag.parse_elem(req_str(w, "w")?)?;
        let x = flag.parse_elem(req_str(x, "x")?)?;
        let d = CorootVec::parse_over(req_str(d, "d")?, k)?;
        let v = three_point(flag, node(flag, i)?, w, x, &d, k, method)?;
        write_string(out, value_json(flag, &v))
    })
}

/// `<O^z, O_x>_d` on `G/P_K`, in the same JSON shape as [`qk_three_point`].
///
/// # Safety
/// As for [`qk_three_point`].
#[no_mangle]
pub unsafe extern "C" fn qk_two_point(
    flag: *const QkFlag,
    z: *const c_char,
    x: *const c_char,
    d: *const c_char,
    k: *const c_char,
    out: *mut *mut c_char,
) -> QkStatus {
    guard(|| {
        check_out(out)?;
        let flag = handle(flag)?;
        let k = subset(flag, opt_str(k, "k")?)?;
        let z = flag.parse_elem(req_str(z, "z")?)?;
        let x = flag.parse_elem(req_str(x, "x")?)?;
        let d = CorootVec::parse_over(req_str(d, "d")?, k)?;
        let v = two_point(flag, z, x, &d, k)?;
        write_string(out, value_json(flag, &v))
    })
}

/// `O^{s_i} * O^w` in `QK_T(G/P_K)` as JSON
/// `{"type", "K", "terms": [{"w", "Q", "coeff"}]}`.
///
/// # Safety
/// `flag` is a live handle, `w` is nul-terminated, `k` is NULL or
/// nul-terminated and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qk_chevalley(
    flag: *const QkFlag,
    i: u32,
    w: *const c_char,
    k: *const c_char,
    out: *mut *mut c_char,
) -> QkStatus {
    guard(|| {
        check_out(out)?;
        let flag = handle(flag)?;
        let k = subset(flag, opt_str(k, "k")?)?;
        let w = flag.parse_elem(req_str(w, "w")?)?;
        let class = chevalley_parabolic(flag, node(flag, i)?, w, k)?;
        write_string(out, class.to_json(flag.group()).to_string())
    })
}

/// Peterson lift of `d` (one entry per node of `K`) to a degree on `G/B`,
/// written as `rank` integers into `out`.
///
/// # Safety
/// `flag` is a live handle, `d` is nul-terminated, `k` is NULL or
/// nul-terminated and `out` has room for `out_len` integers.
#[no_mangle]
pub unsafe extern "C" fn qk_peterson_lift(
    flag: *const QkFlag,
    d: *const c_char,
    k: *const c_char,
    out: *mut i64,
    out_len: usize,
) -> QkStatus {
    guard(|| {
        check_out(out)?;
        let flag = handle(flag)?;
        if out_len < flag.rank() {
            return Err(Failure(
                QkStatus::BufferTooSmall,
                format!("output holds {out_len} integers but the rank is {}", flag.rank()),
            ));
        }
        let k = subset(flag, opt_str(k, "k")?)?;
        let d = CorootVec::parse_over(req_str(d, "d")?, k)?;
        let lift = peterson_lift(flag, &d, k)?;
        ptr::copy_nonoverlapping(lift.coords().as_ptr(), out, flag.rank());
        Ok(())
    })
}

/// Releases a string returned through an `out` parameter. NULL is ignored.
///
/// # Safety
/// `s` is NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn qk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
