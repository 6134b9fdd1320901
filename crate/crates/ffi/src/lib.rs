//! C ABI over `trigpow`.
//!
//! Every fallible function returns a [`TrigpowStatus`] and writes its result
//! through an out-pointer. Objects are opaque handles released with their
//! `*_free` function; strings are released with [`trigpow_string_free`].
//! The message of the most recent failure on the calling thread is
//! available from [`trigpow_last_error_message`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use trigpow::reciprocal::{ReciprocalSeriesDoc, Target};
use trigpow::{
    cheie_sum, cooc_sum, kernel_bruteforce, kernel_closed_form, lemma2_sum, power_fourier,
    to_fourier, Base, Error, KernelKind, PowerExpansion, ReciprocalParams, SumMode, TrigPolynomial,
};

pub const TRIGPOW_BASE_COS: u32 = 0;
pub const TRIGPOW_BASE_SIN: u32 = 1;

pub const TRIGPOW_KERNEL_ALPHA: u32 = 0;
pub const TRIGPOW_KERNEL_ALPHA_PRIME: u32 = 1;
pub const TRIGPOW_KERNEL_ALPHA_DOUBLE_PRIME: u32 = 2;

pub const TRIGPOW_TARGET_COS: u32 = 0;
pub const TRIGPOW_TARGET_SIN: u32 = 1;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigpowStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    Evaluation = 3,
    Parse = 4,
    InvalidArgument = 5,
    Panic = 6,
}

/// Exact trigonometric polynomial.
pub struct TrigpowPoly(TrigPolynomial);

/// Polynomial in `cos t` or `sin t`, optionally times `cos t`.
pub struct TrigpowExpansion(PowerExpansion);

/// Validated parameter of the `1/(a - cos t)` series.
pub struct TrigpowReciprocal(ReciprocalParams);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: TrigpowStatus, msg: impl Into<String>) -> TrigpowStatus {
    set_error(msg.into());
    status
}

fn from_error(err: Error) -> TrigpowStatus {
    let status = match err {
        Error::Domain(_) => TrigpowStatus::Domain,
        Error::Evaluation(_) => TrigpowStatus::Evaluation,
        Error::Parse(_) => TrigpowStatus::Parse,
    };
    fail(status, err.to_string())
}

/// Runs `f`, turning panics into [`TrigpowStatus::Panic`].
fn guard(f: impl FnOnce() -> TrigpowStatus) -> TrigpowStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(TrigpowStatus::Panic, "internal panic"),
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> TrigpowStatus {
    if out.is_null() {
        return fail(TrigpowStatus::NullPointer, "output pointer is null");
    }
    out.write(value);
    TrigpowStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> TrigpowStatus {
    match CString::new(s) {
        Ok(c) => {
            if out.is_null() {
                return fail(TrigpowStatus::NullPointer, "output pointer is null");
            }
            out.write(c.into_raw());
            TrigpowStatus::Ok
        }
        Err(_) => fail(TrigpowStatus::Evaluation, "result contains a NUL byte"),
    }
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> TrigpowStatus {
    if out.is_null() {
        return fail(TrigpowStatus::NullPointer, "output pointer is null");
    }
    out.write(Box::into_raw(Box::new(value)));
    TrigpowStatus::Ok
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, TrigpowStatus> {
    p.as_ref()
        .ok_or_else(|| fail(TrigpowStatus::NullPointer, "handle is null"))
}

fn base_of(code: u32) -> Result<Base, TrigpowStatus> {
    match code {
        TRIGPOW_BASE_COS => Ok(Base::Cos),
        TRIGPOW_BASE_SIN => Ok(Base::Sin),
        _ => Err(fail(
            TrigpowStatus::InvalidArgument,
            format!("unknown base code {code}"),
        )),
    }
}

fn mode_of(brute: bool) -> SumMode {
    if brute {
        SumMode::BruteForce
    } else {
        SumMode::ClosedForm
    }
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

macro_rules! try_core {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return from_error(err),
        }
    };
}

/// Message of the last failed call on this thread, or NULL if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn trigpow_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn trigpow_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Kernel value as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn trigpow_kernel(
    kind: u32,
    n: i64,
    s: i64,
    brute: bool,
    out: *mut *mut c_char,
) -> TrigpowStatus {
    guard(|| {
        let kind = match kind {
            TRIGPOW_KERNEL_ALPHA => KernelKind::Alpha,
            TRIGPOW_KERNEL_ALPHA_PRIME => KernelKind::AlphaPrime,
            TRIGPOW_KERNEL_ALPHA_DOUBLE_PRIME => KernelKind::AlphaDoublePrime,
            _ => {
                return fail(
                    TrigpowStatus::InvalidArgument,
                    format!("unknown kernel code {kind}"),
                )
            }
        };
        let v = if brute {
            kernel_bruteforce(kind, n, s)
        } else {
            kernel_closed_form(kind, n, s)
        };
        write_string(out, try_core!(v).to_string())
    })
}

/// `sum_{j=1}^{s} C(2k, 2j-1) C(k-j, s-j)` as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn trigpow_lemma2(
    k: i64,
    s: i64,
    brute: bool,
    out: *mut *mut c_char,
) -> TrigpowStatus {
    guard(|| write_string(out, try_core!(lemma2_sum(k, s, mode_of(brute))).to_string()))
}

/// Alternating binomial sum that vanishes for `t >= 1`.
#[no_mangle]
pub unsafe extern "C" fn trigpow_cooc(ell: i64, t: i64, out: *mut *mut c_char) -> TrigpowStatus {
    guard(|| write_string(out, try_core!(cooc_sum(ell, t)).to_string()))
}

/// Binomial convolution equal to `C(n+2l, l)`.
#[no_mangle]
pub unsafe extern "C" fn trigpow_cheie(
    n: i64,
    ell: i64,
    brute: bool,
    out: *mut *mut c_char,
) -> TrigpowStatus {
    guard(|| {
        write_string(
            out,
            try_core!(cheie_sum(n, ell, mode_of(brute))).to_string(),
        )
    })
}

/// Fourier form of `cos^n t` or `sin^n t`.
#[no_mangle]
pub unsafe extern "C" fn trigpow_power_fourier(
    base: u32,
    n: i64,
    out: *mut *mut TrigpowPoly,
) -> TrigpowStatus {
    guard(|| {
        let base = try_status!(base_of(base));
        write_handle(out, TrigpowPoly(try_core!(power_fourier(base, n))))
    })
}

/// Parses `{"constant":"p/q","cos":{"n":"p/q"},"sin":{..}}`.
#[no_mangle]
pub unsafe extern "C" fn trigpow_poly_from_json(
    json: *const c_char,
    out: *mut *mut TrigpowPoly,
) -> TrigpowStatus {
    guard(|| {
        if json.is_null() {
            return fail(TrigpowStatus::NullPointer, "json is null");
        }
        let Ok(text) = CStr::from_ptr(json).to_str() else {
            return fail(TrigpowStatus::Parse, "json is not valid UTF-8");
        };
        write_handle(out, TrigpowPoly(try_core!(TrigPolynomial::from_json(text))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn trigpow_poly_mul(
    lhs: *const TrigpowPoly,
    rhs: *const TrigpowPoly,
    out: *mut *mut TrigpowPoly,
) -> TrigpowStatus {
    guard(|| {
        let (p, q) = (try_status!(borrow(lhs)), try_status!(borrow(rhs)));
        write_handle(out, TrigpowPoly(p.0.mul(&q.0)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn trigpow_poly_eval(
    poly: *const TrigpowPoly,
    t: f64,
    out: *mut f64,
) -> TrigpowStatus {
    guard(|| write_out(out, try_status!(borrow(poly)).0.eval(t)))
}

#[no_mangle]
pub unsafe extern "C" fn trigpow_poly_to_json(
    poly: *const TrigpowPoly,
    out: *mut *mut c_char,
) -> TrigpowStatus {
    guard(|| write_string(out, try_status!(borrow(poly)).0.to_json()))
}

#[no_mangle]
pub unsafe extern "C" fn trigpow_poly_free(poly: *mut TrigpowPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// `cos(n t)` or `sin(n t)` as a polynomial in the same base.
#[no_mangle]
pub unsafe extern "C" fn trigpow_multiple_angle(
    base: u32,
    n: i64,
    out: *mut *mut TrigpowExpansion,
) -> TrigpowStatus {
    guard(|| {
        let e = match try_status!(base_of(base)) {
            Base::Cos => trigpow::cos_multiple_angle(n),
            Base::Sin => trigpow::sin_multiple_angle(n),
        };
        write_handle(out, TrigpowExpansion(try_core!(e)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn trigpow_expansion_eval(
    e: *const TrigpowExpansion,
    t: f64,
    out: *mut f64,
) -> TrigpowStatus {
    guard(|| write_out(out, try_status!(borrow(e)).0.eval(t)))
}

#[no_mangle]
pub unsafe extern "C" fn trigpow_expansion_to_json(
    e: *const TrigpowExpansion,
    out: *mut *mut c_char,
) -> TrigpowStatus {
    guard(|| write_string(out, try_status!(borrow(e)).0.to_json()))
}

/// Converts a power expansion back to its Fourier form.
#[no_mangle]
pub unsafe extern "C" fn trigpow_expansion_to_fourier(
    e: *const TrigpowExpansion,
    out: *mut *mut TrigpowPoly,
) -> TrigpowStatus {
    guard(|| {
        let e = try_status!(borrow(e));
        write_handle(out, TrigpowPoly(try_core!(to_fourier(&e.0))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn trigpow_expansion_free(e: *mut TrigpowExpansion) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Fails with [`TrigpowStatus::Domain`] unless `|a| > 1`.
#[no_mangle]
pub unsafe extern "C" fn trigpow_reciprocal_new(
    a: f64,
    out: *mut *mut TrigpowReciprocal,
) -> TrigpowStatus {
    guard(|| write_handle(out, TrigpowReciprocal(try_core!(ReciprocalParams::new(a)))))
}

/// Cosine coefficient `a_n` of `1/(a - cos t)`.
#[no_mangle]
pub unsafe extern "C" fn trigpow_reciprocal_cos_coeff(
    p: *const TrigpowReciprocal,
    n: u64,
    out: *mut f64,
) -> TrigpowStatus {
    guard(|| write_out(out, try_status!(borrow(p)).0.cos_coeff(n)))
}

#[no_mangle]
pub unsafe extern "C" fn trigpow_reciprocal_ratio(
    p: *const TrigpowReciprocal,
    out: *mut f64,
) -> TrigpowStatus {
    guard(|| write_out(out, try_status!(borrow(p)).0.ratio()))
}

/// Upper bound on the sup-norm error after truncating at harmonic `n`.
#[no_mangle]
pub unsafe extern "C" fn trigpow_reciprocal_tail_bound(
    p: *const TrigpowReciprocal,
    n: u64,
    out: *mut f64,
) -> TrigpowStatus {
    guard(|| write_out(out, try_status!(borrow(p)).0.tail_bound(n)))
}

/// Truncated series of `1/(a - cos t)` or `1/(a - sin t)` as JSON.
#[no_mangle]
pub unsafe extern "C" fn trigpow_reciprocal_series_json(
    p: *const TrigpowReciprocal,
    target: u32,
    n: u64,
    out: *mut *mut c_char,
) -> TrigpowStatus {
    guard(|| {
        let p = try_status!(borrow(p));
        let target = match target {
            TRIGPOW_TARGET_COS => Target::Cos,
            TRIGPOW_TARGET_SIN => Target::Sin,
            _ => {
                return fail(
                    TrigpowStatus::InvalidArgument,
                    format!("unknown target code {target}"),
                )
            }
        };
        let doc = ReciprocalSeriesDoc::build(target, &p.0, n);
        match serde_json::to_string(&doc) {
            Ok(s) => write_string(out, s),
            Err(e) => fail(TrigpowStatus::Evaluation, e.to_string()),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn trigpow_reciprocal_free(p: *mut TrigpowReciprocal) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}
