//! C ABI for `matx`.
//!
//! Matroids cross the boundary as opaque `MatxMatroid` handles. Every fallible call returns a
//! `MatxStatus`; on failure `matx_last_error()` describes the problem. Strings returned by the
//! library are owned by the caller and released with `matx_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use matx::bounds::{run_suite, Profile, Suite, Verdict};
use matx::io::matroid_from_value;
use matx::tutte::{coefficient_families, tutte_dc};
use matx::{Matroid, MatxError};
use num_traits::ToPrimitive;

/// Opaque matroid handle.
pub struct MatxMatroid(Matroid);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    NotAMatroid = 4,
    TooLarge = 5,
    HasLoops = 6,
    BufferTooSmall = 7,
    Overflow = 8,
    Panic = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: MatxStatus, msg: impl Into<String>) -> MatxStatus {
    set_error(msg);
    status
}

fn status_of(e: &MatxError) -> MatxStatus {
    match e {
        MatxError::NotAMatroid { .. } | MatxError::EmptyBases | MatxError::UnequalBases(..) => MatxStatus::NotAMatroid,
        MatxError::TooLarge(_) | MatxError::TooManyFaces(_) => MatxStatus::TooLarge,
        MatxError::HasLoops => MatxStatus::HasLoops,
        _ => MatxStatus::InvalidInput,
    }
}

fn from_err(e: MatxError) -> MatxStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, turning a panic into `MatxStatus::Panic` instead of unwinding into C.
fn guard(f: impl FnOnce() -> MatxStatus) -> MatxStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(MatxStatus::Panic, "internal panic"))
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, MatxStatus> {
    if s.is_null() {
        return Err(fail(MatxStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(MatxStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn give(m: Matroid, out: *mut *mut MatxMatroid) -> MatxStatus {
    *out = Box::into_raw(Box::new(MatxMatroid(m)));
    MatxStatus::Ok
}

unsafe fn give_string(s: String, out: *mut *mut c_char) -> MatxStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            MatxStatus::Ok
        }
        Err(_) => fail(MatxStatus::InvalidInput, "output contained a NUL byte"),
    }
}

/// Message for the last failed call on this thread, or NULL. Valid until the next call.
#[no_mangle]
pub extern "C" fn matx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn matx_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a matroid document (explicit bases, graph edges or a construction).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn matx_matroid_from_json(json: *const c_char, out: *mut *mut MatxMatroid) -> MatxStatus {
    guard(|| {
        if out.is_null() {
            return fail(MatxStatus::NullPointer, "null output pointer");
        }
        let text = match str_arg(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let v: serde_json::Value = match serde_json::from_str(text) {
            Ok(v) => v,
            Err(e) => return fail(MatxStatus::InvalidInput, e.to_string()),
        };
        match matroid_from_value(&v) {
            Ok(m) => give(m, out),
            Err(e) => from_err(e),
        }
    })
}

/// `U_{r,n}`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn matx_matroid_uniform(r: u32, n: u32, out: *mut *mut MatxMatroid) -> MatxStatus {
    guard(|| {
        if out.is_null() {
            return fail(MatxStatus::NullPointer, "null output pointer");
        }
        match Matroid::uniform(r as usize, n as usize) {
            Ok(m) => give(m, out),
            Err(e) => from_err(e),
        }
    })
}

/// # Safety
/// `m` must be a handle from this library or NULL; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn matx_matroid_dual(m: *const MatxMatroid, out: *mut *mut MatxMatroid) -> MatxStatus {
    guard(|| {
        if m.is_null() || out.is_null() {
            return fail(MatxStatus::NullPointer, "null argument");
        }
        give((*m).0.dual(), out)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `m` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn matx_matroid_free(m: *mut MatxMatroid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Ground-set size, or 0 for NULL.
///
/// # Safety
/// `m` must be a handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn matx_matroid_size(m: *const MatxMatroid) -> u32 {
    m.as_ref().map_or(0, |m| m.0.n() as u32)
}

/// Rank, or 0 for NULL.
///
/// # Safety
/// `m` must be a handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn matx_matroid_rank(m: *const MatxMatroid) -> u32 {
    m.as_ref().map_or(0, |m| m.0.rank() as u32)
}

/// Number of bases, or 0 for NULL.
///
/// # Safety
/// `m` must be a handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn matx_matroid_num_bases(m: *const MatxMatroid) -> u64 {
    m.as_ref().map_or(0, |m| m.0.num_bases() as u64)
}

/// Writes `h_0..h_r` into `buf`. `*written` receives the required length even when the
/// buffer is too small.
///
/// # Safety
/// `buf` must hold `len` values; `m` and `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn matx_h_vector(
    m: *const MatxMatroid,
    buf: *mut i64,
    len: usize,
    written: *mut usize,
) -> MatxStatus {
    guard(|| {
        if m.is_null() || written.is_null() {
            return fail(MatxStatus::NullPointer, "null argument");
        }
        let h = coefficient_families(&(*m).0).h;
        *written = h.len();
        if len < h.len() || buf.is_null() {
            return fail(MatxStatus::BufferTooSmall, format!("need {} slots", h.len()));
        }
        for (i, x) in h.iter().enumerate() {
            match x.to_i64() {
                Some(v) => *buf.add(i) = v,
                None => return fail(MatxStatus::Overflow, format!("h_{i} does not fit in 64 bits")),
            }
        }
        MatxStatus::Ok
    })
}

/// Tutte polynomial as a JSON array of `[i, j, coefficient]` terms.
///
/// # Safety
/// `m` must be a valid handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn matx_tutte_json(m: *const MatxMatroid, out: *mut *mut c_char) -> MatxStatus {
    guard(|| {
        if m.is_null() || out.is_null() {
            return fail(MatxStatus::NullPointer, "null argument");
        }
        let terms: Vec<serde_json::Value> = tutte_dc(&(*m).0)
            .terms()
            .into_iter()
            .map(|(i, j, c)| serde_json::json!([i, j, matx::arith::json_int::value(&c)]))
            .collect();
        give_string(serde_json::Value::Array(terms).to_string(), out)
    })
}

/// Runs a check suite (`"all"`, `"eq1"`, ...) and returns the results as JSON.
/// `*violations` receives the number of violated checks.
///
/// # Safety
/// `m`, `suite`, `out` and `violations` must be valid.
#[no_mangle]
pub unsafe extern "C" fn matx_verify_json(
    m: *const MatxMatroid,
    suite: *const c_char,
    out: *mut *mut c_char,
    violations: *mut u32,
) -> MatxStatus {
    guard(|| {
        if m.is_null() || out.is_null() || violations.is_null() {
            return fail(MatxStatus::NullPointer, "null argument");
        }
        let suite: Suite = match str_arg(suite).map(str::parse) {
            Ok(Ok(s)) => s,
            Ok(Err(e)) => return from_err(e),
            Err(s) => return s,
        };
        let rows = run_suite(&Profile::new(&(*m).0), suite);
        *violations = rows.iter().filter(|c| c.verdict == Verdict::Violation).count() as u32;
        give_string(serde_json::to_string(&rows).expect("results serialize"), out)
    })
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn matx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
