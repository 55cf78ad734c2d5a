//! C ABI for the schubert-core engine.
//!
//! All functions exchange data as UTF-8 strings and opaque handles and
//! report failure through status codes. A failing call stores a
//! human-readable message retrievable with `schubert_last_error_message`
//! until the next failing call on the same thread. Strings returned by the
//! library must be released with `schubert_string_free`, polynomial handles
//! with `schubert_poly_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use schubert_core::app::{parse, render};
use schubert_core::key::{key_polynomial, skew_key, skew_schubert};
use schubert_core::schubert::{constants_by_product, reduce_mod_ideal, schubert_poly};
use schubert_core::skew::skew_apply;
use schubert_core::Polynomial;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SchubertStatus {
    /// The call succeeded and all output parameters are populated.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The engine rejected the input; see `schubert_last_error_message`.
    DomainError = 3,
    /// An internal invariant failed; see `schubert_last_error_message`.
    InternalError = 4,
}

/// Output encoding for rendered values.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SchubertFormat {
    Text = 0,
    Json = 1,
    Csv = 2,
}

/// Opaque handle to an integer-coefficient polynomial.
pub struct SchubertPoly(Polynomial);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: SchubertStatus, msg: &str) -> SchubertStatus {
    let msg = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = msg);
    status
}

/// The message of the most recent failing call on this thread. The pointer
/// stays valid until the next failing call; never free it.
#[no_mangle]
pub extern "C" fn schubert_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

unsafe fn text_arg<'a>(p: *const c_char) -> Result<&'a str, SchubertStatus> {
    if p.is_null() {
        return Err(SchubertStatus::NullArgument);
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| SchubertStatus::InvalidUtf8)
}

fn deliver(
    out: *mut *mut SchubertPoly,
    result: Result<Polynomial, schubert_core::Error>,
) -> SchubertStatus {
    match result {
        Ok(p) => {
            unsafe { *out = Box::into_raw(Box::new(SchubertPoly(p))) };
            SchubertStatus::Ok
        }
        Err(e) => fail(SchubertStatus::DomainError, &e.to_string()),
    }
}

fn guarded(body: impl FnOnce() -> SchubertStatus) -> SchubertStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(SchubertStatus::InternalError, "internal panic"),
    }
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => {
                return fail(status, "bad string argument");
            }
        }
    };
}

/// Parses a polynomial from the CLI grammar, e.g. `"x1^3*x2^2 - 2*x3"`.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn schubert_poly_parse(
    text: *const c_char,
    out: *mut *mut SchubertPoly,
) -> SchubertStatus {
    if out.is_null() {
        return fail(SchubertStatus::NullArgument, "null output pointer");
    }
    let text = try_status!(text_arg(text));
    guarded(|| deliver(out, parse::parse_polynomial(text)))
}

/// The Schubert polynomial of a permutation given in one-line notation
/// (`"4312"`, `"10,2,..."`) or as a word (`"w:2,1,3,2,1"`).
///
/// # Safety
/// `w` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn schubert_poly_schubert(
    w: *const c_char,
    out: *mut *mut SchubertPoly,
) -> SchubertStatus {
    if out.is_null() {
        return fail(SchubertStatus::NullArgument, "null output pointer");
    }
    let w = try_status!(text_arg(w));
    guarded(|| deliver(out, parse::parse_permutation(w).map(|w| schubert_poly(&w))))
}

/// Applies the skew divided difference operator `d_{w/v}` to `f`.
///
/// # Safety
/// `w` and `v` must be valid C strings; `f` a live handle; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn schubert_skew_apply(
    w: *const c_char,
    v: *const c_char,
    f: *const SchubertPoly,
    out: *mut *mut SchubertPoly,
) -> SchubertStatus {
    if f.is_null() || out.is_null() {
        return fail(SchubertStatus::NullArgument, "null handle or output pointer");
    }
    let w = try_status!(text_arg(w));
    let v = try_status!(text_arg(v));
    let f = &(*f).0;
    guarded(|| {
        deliver(
            out,
            parse::parse_permutation(w).and_then(|w| {
                let v = parse::parse_permutation(v)?;
                skew_apply(&w, &v, f)
            }),
        )
    })
}

/// The skew Schubert polynomial `S_{w/v}` in `n` variables.
///
/// # Safety
/// `w` and `v` must be valid C strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn schubert_skew_schubert(
    w: *const c_char,
    v: *const c_char,
    n: usize,
    out: *mut *mut SchubertPoly,
) -> SchubertStatus {
    if out.is_null() {
        return fail(SchubertStatus::NullArgument, "null output pointer");
    }
    let w = try_status!(text_arg(w));
    let v = try_status!(text_arg(v));
    guarded(|| {
        deliver(
            out,
            parse::parse_permutation(w).and_then(|w| {
                let v = parse::parse_permutation(v)?;
                skew_schubert(&w, &v, n)
            }),
        )
    })
}

/// The key polynomial of a composition (`"c:0,2,1"` or `"0,2,1"`); with a
/// non-null `v` the skew key polynomial `k_{alpha/v}`.
///
/// # Safety
/// `alpha` must be a valid C string, `v` null or a valid C string, `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn schubert_key(
    alpha: *const c_char,
    v: *const c_char,
    out: *mut *mut SchubertPoly,
) -> SchubertStatus {
    if out.is_null() {
        return fail(SchubertStatus::NullArgument, "null output pointer");
    }
    let alpha = try_status!(text_arg(alpha));
    let v = if v.is_null() {
        None
    } else {
        Some(try_status!(text_arg(v)))
    };
    guarded(|| {
        deliver(
            out,
            parse::parse_composition(alpha).and_then(|alpha| match v {
                None => Ok(key_polynomial(&alpha)),
                Some(v) => skew_key(&alpha, &parse::parse_permutation(v)?),
            }),
        )
    })
}

/// Reduces `f` modulo the ideal of positive-degree symmetric polynomials
/// in `n` variables.
///
/// # Safety
/// `f` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn schubert_reduce(
    f: *const SchubertPoly,
    n: usize,
    out: *mut *mut SchubertPoly,
) -> SchubertStatus {
    if f.is_null() || out.is_null() {
        return fail(SchubertStatus::NullArgument, "null handle or output pointer");
    }
    let f = &(*f).0;
    guarded(|| deliver(out, reduce_mod_ideal(f, n)))
}

/// Renders `f` in the requested format. The returned string must be
/// released with `schubert_string_free`.
///
/// # Safety
/// `f` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn schubert_poly_render(
    f: *const SchubertPoly,
    format: SchubertFormat,
    out: *mut *mut c_char,
) -> SchubertStatus {
    if f.is_null() || out.is_null() {
        return fail(SchubertStatus::NullArgument, "null handle or output pointer");
    }
    let f = &(*f).0;
    guarded(|| {
        let fmt = match format {
            SchubertFormat::Text => render::Format::Text,
            SchubertFormat::Json => render::Format::Json,
            SchubertFormat::Csv => render::Format::Csv,
        };
        let text = render::polynomial(f, fmt);
        match CString::new(text) {
            Ok(s) => {
                *out = s.into_raw();
                SchubertStatus::Ok
            }
            Err(_) => fail(SchubertStatus::InternalError, "rendered text had a NUL"),
        }
    })
}

/// The structure-constant table of `S_u * S_v` in `n` variables as a JSON
/// array of `{window, coefficient}` records. Release the string with
/// `schubert_string_free`.
///
/// # Safety
/// `u` and `v` must be valid C strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn schubert_constants_json(
    u: *const c_char,
    v: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> SchubertStatus {
    if out.is_null() {
        return fail(SchubertStatus::NullArgument, "null output pointer");
    }
    let u = try_status!(text_arg(u));
    let v = try_status!(text_arg(v));
    guarded(|| {
        let table = parse::parse_permutation(u).and_then(|u| {
            let v = parse::parse_permutation(v)?;
            constants_by_product(&u, &v, n)
        });
        match table {
            Ok(table) => {
                let text = render::expansion(&table, render::Format::Json);
                match CString::new(text) {
                    Ok(s) => {
                        *out = s.into_raw();
                        SchubertStatus::Ok
                    }
                    Err(_) => fail(SchubertStatus::InternalError, "rendered text had a NUL"),
                }
            }
            Err(e) => fail(SchubertStatus::DomainError, &e.to_string()),
        }
    })
}

/// Exact equality of two polynomials. Returns 1, 0, or -1 when a handle
/// is null.
///
/// # Safety
/// `a` and `b` must be live handles or null.
#[no_mangle]
pub unsafe extern "C" fn schubert_poly_equal(
    a: *const SchubertPoly,
    b: *const SchubertPoly,
) -> i32 {
    if a.is_null() || b.is_null() {
        return -1;
    }
    ((*a).0 == (*b).0) as i32
}

/// Releases a polynomial handle. Null is a no-op.
///
/// # Safety
/// `p` must be a handle returned by this library, released at most once.
#[no_mangle]
pub unsafe extern "C" fn schubert_poly_free(p: *mut SchubertPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be a string returned by this library, released at most once.
#[no_mangle]
pub unsafe extern "C" fn schubert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn parse(s: &str) -> *mut SchubertPoly {
        let mut out = ptr::null_mut();
        assert_eq!(
            schubert_poly_parse(c(s).as_ptr(), &mut out),
            SchubertStatus::Ok
        );
        out
    }

    unsafe fn rendered(p: *const SchubertPoly, fmt: SchubertFormat) -> String {
        let mut out = ptr::null_mut();
        assert_eq!(schubert_poly_render(p, fmt, &mut out), SchubertStatus::Ok);
        let text = CStr::from_ptr(out).to_str().unwrap().to_owned();
        schubert_string_free(out);
        text
    }

    #[test]
    fn parse_render_round_trip() {
        unsafe {
            let p = parse("x1^2 + x1*x4 + x4^2");
            assert_eq!(rendered(p, SchubertFormat::Text), "x1^2 + x1*x4 + x4^2\n");
            let csv = rendered(p, SchubertFormat::Csv);
            assert!(csv.contains("x1*x4,1"));
            schubert_poly_free(p);
        }
    }

    #[test]
    fn skew_apply_golden() {
        unsafe {
            let f = parse("x1^3*x2^2");
            let mut out = ptr::null_mut();
            assert_eq!(
                schubert_skew_apply(c("4312").as_ptr(), c("312").as_ptr(), f, &mut out),
                SchubertStatus::Ok
            );
            let expect = parse("x1^2 + x1*x4 + x4^2");
            assert_eq!(schubert_poly_equal(out, expect), 1);
            let mut reduced = ptr::null_mut();
            assert_eq!(schubert_reduce(out, 4, &mut reduced), SchubertStatus::Ok);
            assert_eq!(rendered(reduced, SchubertFormat::Text), "x2*x3\n");
            for p in [f, out, expect, reduced] {
                schubert_poly_free(p);
            }
        }
    }

    #[test]
    fn schubert_and_skew_schubert_agree_at_longest() {
        unsafe {
            let mut direct = ptr::null_mut();
            assert_eq!(
                schubert_poly_schubert(c("w:1,2").as_ptr(), &mut direct),
                SchubertStatus::Ok
            );
            let mut skew = ptr::null_mut();
            assert_eq!(
                schubert_skew_schubert(c("321").as_ptr(), c("231").as_ptr(), 3, &mut skew),
                SchubertStatus::Ok
            );
            assert_eq!(schubert_poly_equal(direct, skew), 1);
            schubert_poly_free(direct);
            schubert_poly_free(skew);
        }
    }

    #[test]
    fn key_polynomial_complete_case() {
        unsafe {
            let mut out = ptr::null_mut();
            assert_eq!(
                schubert_key(c("c:0,0,2").as_ptr(), ptr::null(), &mut out),
                SchubertStatus::Ok
            );
            let expect = parse("x1^2 + x1*x2 + x1*x3 + x2^2 + x2*x3 + x3^2");
            assert_eq!(schubert_poly_equal(out, expect), 1);
            schubert_poly_free(out);
            schubert_poly_free(expect);
        }
    }

    #[test]
    fn constants_table_json() {
        unsafe {
            let mut out = ptr::null_mut();
            assert_eq!(
                schubert_constants_json(c("213").as_ptr(), c("213").as_ptr(), 3, &mut out),
                SchubertStatus::Ok
            );
            let text = CStr::from_ptr(out).to_str().unwrap().to_owned();
            schubert_string_free(out);
            let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
            let terms = parsed["terms"].as_array().unwrap();
            assert_eq!(terms.len(), 1);
            assert_eq!(terms[0]["window"], serde_json::json!([3, 1, 2]));
            assert_eq!(terms[0]["coefficient"], serde_json::json!(1));
        }
    }

    #[test]
    fn error_paths() {
        unsafe {
            let mut out = ptr::null_mut();
            assert_eq!(
                schubert_poly_parse(c("x1 x2").as_ptr(), &mut out),
                SchubertStatus::DomainError
            );
            let msg = CStr::from_ptr(schubert_last_error_message())
                .to_str()
                .unwrap();
            assert!(!msg.is_empty());
            assert_eq!(
                schubert_poly_parse(ptr::null(), &mut out),
                SchubertStatus::NullArgument
            );
            // v not below w in Bruhat order
            assert_eq!(
                schubert_skew_schubert(c("213").as_ptr(), c("321").as_ptr(), 3, &mut out),
                SchubertStatus::DomainError
            );
            assert_eq!(schubert_poly_equal(ptr::null(), ptr::null()), -1);
        }
    }
}
