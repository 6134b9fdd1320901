use std::ffi::{c_char, CStr, CString};
use std::ptr;

use trigpow_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    trigpow_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(trigpow_last_error_message())
        .to_string_lossy()
        .into_owned()
}

#[test]
fn kernel_and_lemma_strings() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            trigpow_kernel(TRIGPOW_KERNEL_ALPHA, 5, 2, false, &mut s),
            TrigpowStatus::Ok
        );
        let closed = take_string(s);
        assert_eq!(
            trigpow_kernel(TRIGPOW_KERNEL_ALPHA, 5, 2, true, &mut s),
            TrigpowStatus::Ok
        );
        assert_eq!(take_string(s), closed);

        assert_eq!(trigpow_cheie(3, 2, true, &mut s), TrigpowStatus::Ok);
        assert_eq!(take_string(s), "21");
        assert_eq!(trigpow_cooc(4, 3, &mut s), TrigpowStatus::Ok);
        assert_eq!(take_string(s), "0");

        assert_eq!(
            trigpow_kernel(9, 5, 2, false, &mut s),
            TrigpowStatus::InvalidArgument
        );
        assert!(last_error().contains("kernel"));
        assert_eq!(trigpow_lemma2(3, 5, false, &mut s), TrigpowStatus::Domain);
    }
}

#[test]
fn polynomial_handles() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            trigpow_power_fourier(TRIGPOW_BASE_COS, 4, &mut p),
            TrigpowStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(trigpow_poly_to_json(p, &mut s), TrigpowStatus::Ok);
        assert_eq!(
            take_string(s),
            r#"{"constant":"3/8","cos":{"2":"1/2","4":"1/8"},"sin":{}}"#
        );

        let json = CString::new(r#"{"constant":"0","cos":{"2":"1"},"sin":{}}"#).unwrap();
        let mut q = ptr::null_mut();
        assert_eq!(
            trigpow_poly_from_json(json.as_ptr(), &mut q),
            TrigpowStatus::Ok
        );
        let mut prod = ptr::null_mut();
        assert_eq!(trigpow_poly_mul(p, q, &mut prod), TrigpowStatus::Ok);
        let mut v = 0.0;
        assert_eq!(trigpow_poly_eval(prod, 0.3, &mut v), TrigpowStatus::Ok);
        assert!((v - 0.3f64.cos().powi(4) * 0.6f64.cos()).abs() < 1e-14);

        let bad = CString::new(r#"{"constant":"1/0"}"#).unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(
            trigpow_poly_from_json(bad.as_ptr(), &mut r),
            TrigpowStatus::Parse
        );
        assert!(r.is_null());

        trigpow_poly_free(prod);
        trigpow_poly_free(q);
        trigpow_poly_free(p);
        trigpow_poly_free(ptr::null_mut());
    }
}

#[test]
fn expansion_handles() {
    unsafe {
        let mut e = ptr::null_mut();
        assert_eq!(
            trigpow_multiple_angle(TRIGPOW_BASE_SIN, 3, &mut e),
            TrigpowStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(trigpow_expansion_to_json(e, &mut s), TrigpowStatus::Ok);
        assert_eq!(
            take_string(s),
            r#"{"base":"sin","cos_cofactor":false,"coeffs":{"1":"3","3":"-4"}}"#
        );
        let mut v = 0.0;
        assert_eq!(trigpow_expansion_eval(e, 0.7, &mut v), TrigpowStatus::Ok);
        assert!((v - 2.1f64.sin()).abs() < 1e-14);

        let mut f = ptr::null_mut();
        assert_eq!(trigpow_expansion_to_fourier(e, &mut f), TrigpowStatus::Ok);
        assert_eq!(trigpow_poly_to_json(f, &mut s), TrigpowStatus::Ok);
        assert_eq!(
            take_string(s),
            r#"{"constant":"0","cos":{},"sin":{"3":"1"}}"#
        );
        trigpow_poly_free(f);
        trigpow_expansion_free(e);

        assert_eq!(
            trigpow_multiple_angle(7, 3, &mut e),
            TrigpowStatus::InvalidArgument
        );
    }
}

#[test]
fn reciprocal_handle() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(trigpow_reciprocal_new(0.5, &mut p), TrigpowStatus::Domain);
        assert!(last_error().contains("must exceed 1"));
        assert_eq!(trigpow_reciprocal_new(2.0, &mut p), TrigpowStatus::Ok);

        let mut v = 0.0;
        assert_eq!(
            trigpow_reciprocal_cos_coeff(p, 1, &mut v),
            TrigpowStatus::Ok
        );
        assert!((v - 0.309_401_076_758_503).abs() < 1e-14);
        assert_eq!(trigpow_reciprocal_ratio(p, &mut v), TrigpowStatus::Ok);
        assert!((v - (2.0 - 3f64.sqrt())).abs() < 1e-15);
        assert_eq!(
            trigpow_reciprocal_tail_bound(p, 10, &mut v),
            TrigpowStatus::Ok
        );
        assert!((v - 8.063e-7).abs() < 1e-9);

        let mut s = ptr::null_mut();
        assert_eq!(
            trigpow_reciprocal_series_json(p, TRIGPOW_TARGET_SIN, 2, &mut s),
            TrigpowStatus::Ok
        );
        let doc: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(doc["N"], 2);
        assert_eq!(doc["sin"].as_array().unwrap().len(), 2);
        assert_eq!(
            trigpow_reciprocal_series_json(p, 5, 2, &mut s),
            TrigpowStatus::InvalidArgument
        );
        trigpow_reciprocal_free(p);
    }
}

#[test]
fn null_pointers_are_reported() {
    unsafe {
        assert_eq!(
            trigpow_poly_eval(ptr::null(), 0.0, &mut 0.0),
            TrigpowStatus::NullPointer
        );
        assert_eq!(
            trigpow_power_fourier(TRIGPOW_BASE_COS, 2, ptr::null_mut()),
            TrigpowStatus::NullPointer
        );
        assert_eq!(
            trigpow_poly_from_json(ptr::null(), &mut ptr::null_mut()),
            TrigpowStatus::NullPointer
        );
        trigpow_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/trigpow.h");
    for name in [
        "trigpow_last_error_message",
        "trigpow_string_free",
        "trigpow_kernel",
        "trigpow_lemma2",
        "trigpow_cooc",
        "trigpow_cheie",
        "trigpow_power_fourier",
        "trigpow_poly_from_json",
        "trigpow_poly_mul",
        "trigpow_poly_eval",
        "trigpow_poly_to_json",
        "trigpow_poly_free",
        "trigpow_multiple_angle",
        "trigpow_expansion_eval",
        "trigpow_expansion_to_json",
        "trigpow_expansion_to_fourier",
        "trigpow_expansion_free",
        "trigpow_reciprocal_new",
        "trigpow_reciprocal_cos_coeff",
        "trigpow_reciprocal_ratio",
        "trigpow_reciprocal_tail_bound",
        "trigpow_reciprocal_series_json",
        "trigpow_reciprocal_free",
    ] {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    assert!(header.contains("typedef struct TrigpowPoly TrigpowPoly;"));
    assert!(header.contains("TRIGPOW_STATUS_DOMAIN = 2"));
}
