use std::ffi::{CStr, CString};
use std::ptr;

use se3sym_ffi::*;

fn elem(c: [f64; 6]) -> *mut Se3Element {
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { se3_element_new(c.as_ptr(), &mut e) }, Se3Status::Ok);
    e
}

fn coeffs(e: *const Se3Element) -> [f64; 6] {
    let mut c = [0.0; 6];
    assert_eq!(unsafe { se3_element_coeffs(e, c.as_mut_ptr()) }, Se3Status::Ok);
    c
}

fn last_error() -> String {
    let p = se3_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn bracket_of_basis_elements() {
    let (x4, x5) = (elem([0.0, 0.0, 0.0, 1.0, 0.0, 0.0]), elem([0.0, 0.0, 0.0, 0.0, 1.0, 0.0]));
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { se3_bracket(x4, x5, &mut b) }, Se3Status::Ok);
    let c = coeffs(b);
    assert_eq!(c.iter().filter(|v| **v != 0.0).count(), 1);
    assert_eq!(c[5].abs(), 1.0);
    unsafe {
        se3_element_free(x4);
        se3_element_free(x5);
        se3_element_free(b);
    }
}

#[test]
fn quarter_turn_word() {
    let x = elem([1.0, 0.0, 0.0, 2.0, 0.0, 0.0]);
    let (g, p) = ([6u32], [std::f64::consts::FRAC_PI_2]);
    let mut w = ptr::null_mut();
    assert_eq!(unsafe { se3_word_new(g.as_ptr(), p.as_ptr(), 1, &mut w) }, Se3Status::Ok);
    let mut y = ptr::null_mut();
    assert_eq!(unsafe { se3_apply_word(w, x, &mut y) }, Se3Status::Ok);
    let c = coeffs(y);
    let expected = [0.0, 1.0, 0.0, 0.0, 2.0, 0.0];
    assert!(c.iter().zip(expected).all(|(a, b)| (a - b).abs() <= 1e-15), "{c:?}");
    unsafe {
        se3_word_free(w);
        se3_element_free(x);
        se3_element_free(y);
    }
}

#[test]
fn adjoint_matrix_at_zero_is_identity() {
    let mut m = [0.0; 36];
    for i in 1..=6 {
        assert_eq!(unsafe { se3_adjoint_matrix(i, 0.0, m.as_mut_ptr()) }, Se3Status::Ok);
        for r in 0..6 {
            for c in 0..6 {
                assert_eq!(m[6 * r + c], if r == c { 1.0 } else { 0.0 });
            }
        }
    }
    assert_eq!(unsafe { se3_adjoint_matrix(7, 0.0, m.as_mut_ptr()) }, Se3Status::GeneratorIndex);
    assert!(last_error().contains('7'));
    assert_eq!(unsafe { se3_adjoint_matrix(1, f64::NAN, m.as_mut_ptr()) }, Se3Status::NonFinite);
}

#[test]
fn screw_and_classification() {
    let x = elem([0.0, 0.0, 3.0, 0.0, 0.0, 2.0]);
    let (mut kind, mut pitch, mut scale) = (Se3ScrewKind::Translation, 0.0, 0.0);
    assert_eq!(unsafe { se3_canonicalize_screw(x, &mut kind, &mut pitch, &mut scale) }, Se3Status::Ok);
    assert_eq!(kind, Se3ScrewKind::Screw);
    assert!((pitch - 1.5).abs() <= 1e-12);

    let mut cls = ptr::null_mut();
    assert_eq!(unsafe { se3_classify(x, &mut cls) }, Se3Status::Ok);
    let mut label = ptr::null_mut();
    assert_eq!(unsafe { se3_classification_case(cls, &mut label) }, Se3Status::Ok);
    assert!(unsafe { CStr::from_ptr(label) }.to_str().unwrap().starts_with('A'));
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { se3_classification_json(cls, &mut json) }, Se3Status::Ok);
    let v: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(json) }.to_str().unwrap()).unwrap();
    assert!(v.get("word").is_some());
    let mut rep = [0.0; 6];
    assert_eq!(unsafe { se3_classification_representative(cls, rep.as_mut_ptr()) }, Se3Status::Ok);
    assert!(rep.iter().any(|c| *c != 0.0));
    unsafe {
        se3_string_free(label);
        se3_string_free(json);
        se3_classification_free(cls);
        se3_element_free(x);
    }
}

#[test]
fn errors_are_reported() {
    let zero = elem([0.0; 6]);
    let mut cls = ptr::null_mut();
    assert_eq!(unsafe { se3_classify(zero, &mut cls) }, Se3Status::ZeroElement);
    assert!(cls.is_null());
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { se3_classify(ptr::null(), &mut cls) }, Se3Status::NullPointer);

    let nan = [f64::NAN, 0.0, 0.0, 0.0, 0.0, 0.0];
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { se3_element_new(nan.as_ptr(), &mut e) }, Se3Status::NonFinite);

    let mut w = ptr::null_mut();
    let (g, p) = ([9u32], [1.0]);
    assert_eq!(unsafe { se3_word_new(g.as_ptr(), p.as_ptr(), 1, &mut w) }, Se3Status::GeneratorIndex);
    assert_eq!(unsafe { se3_word_new(ptr::null(), ptr::null(), 0, &mut w) }, Se3Status::Ok);
    unsafe {
        se3_word_free(w);
        se3_element_free(zero);
        se3_element_free(ptr::null_mut());
        se3_string_free(ptr::null_mut());
    }
}

#[test]
fn invariance_and_report() {
    let name = CString::new("xy").unwrap();
    let mut r = f64::NAN;
    assert_eq!(unsafe { se3_verify_invariance(name.as_ptr(), 4, 0.3, 50, 42, &mut r) }, Se3Status::Ok);
    assert!(r <= 1e-6);
    let bad = CString::new("nope").unwrap();
    assert_eq!(unsafe { se3_verify_invariance(bad.as_ptr(), 4, 0.3, 50, 42, &mut r) }, Se3Status::InvalidArgument);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { se3_claims_report_json(200, 7, &mut json) }, Se3Status::Ok);
    let v: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(json) }.to_str().unwrap()).unwrap();
    assert_eq!(v["claims"].as_array().unwrap().len(), 15);
    unsafe { se3_string_free(json) };
}

#[test]
fn header_is_generated() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/se3sym.h")).unwrap();
    for symbol in ["se3_element_new", "se3_classify", "se3_last_error", "SE3_STATUS_OK", "Se3Element"] {
        assert!(header.contains(symbol), "{symbol} missing from header");
    }
}
