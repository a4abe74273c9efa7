//! C ABI over `se3sym`.
//!
//! Every fallible function returns an [`Se3Status`]. On failure the message is
//! available from [`se3_last_error`] on the same thread. Strings handed out by
//! the library are released with [`se3_string_free`]; handles with their own
//! `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use se3sym::adjoint::{apply_word, closed_form, AdjointWord};
use se3sym::algebra::{bracket, AlgebraElement};
use se3sym::optimal::{canonicalize_screw, classify_1d_paper, OneDimRepresentative, ScrewKind};
use se3sym::solutions::{family, verify_invariance};
use se3sym::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Se3Status {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    GeneratorIndex = 3,
    NonFinite = 4,
    ZeroElement = 5,
    OutsideDomain = 6,
    Internal = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Se3ScrewKind {
    Screw = 0,
    Translation = 1,
}

/// Opaque element of se(3) with `f64` coefficients in the basis X1..X6.
pub struct Se3Element(AlgebraElement<f64>);

/// Opaque sequence of adjoint factors `Ad(exp(s X_i))`, applied in order.
pub struct Se3Word(AdjointWord);

/// Opaque result of the one-dimensional classifier.
pub struct Se3Classification(OneDimRepresentative);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> Se3Status {
    match err {
        Error::GeneratorIndex(_) => Se3Status::GeneratorIndex,
        Error::NonFiniteParameter(_) | Error::NonFiniteFlow { .. } => Se3Status::NonFinite,
        Error::ZeroElement => Se3Status::ZeroElement,
        Error::OutsideBox { .. } => Se3Status::OutsideDomain,
        Error::InvalidArgument(_) | Error::Parse { .. } => Se3Status::InvalidArgument,
        _ => Se3Status::Internal,
    }
}

fn fail(status: Se3Status, msg: impl Into<String>) -> Se3Status {
    set_error(msg.into());
    status
}

fn guard(f: impl FnOnce() -> Result<(), Se3Status>) -> Se3Status {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Se3Status::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(Se3Status::Panic, "internal panic"),
    }
}

fn lift<T>(r: se3sym::Result<T>) -> Result<T, Se3Status> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn deref<'a, T>(p: *const T, name: &str) -> Result<&'a T, Se3Status> {
    p.as_ref().ok_or_else(|| fail(Se3Status::NullPointer, format!("{name} is null")))
}

unsafe fn out<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Se3Status> {
    p.as_mut().ok_or_else(|| fail(Se3Status::NullPointer, format!("{name} is null")))
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn to_c_string(s: String) -> Result<*mut c_char, Se3Status> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(Se3Status::Internal, "string contains a nul byte"))
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library and valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn se3_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn se3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `coeffs` must point to 6 doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se3_element_new(coeffs: *const f64, out_elem: *mut *mut Se3Element) -> Se3Status {
    guard(|| {
        let c = deref(coeffs as *const [f64; 6], "coeffs")?;
        let slot = out(out_elem, "out")?;
        let x = AlgebraElement::new(*c);
        if !x.is_finite() {
            return Err(fail(Se3Status::NonFinite, "coefficients must be finite"));
        }
        *slot = boxed(Se3Element(x));
        Ok(())
    })
}

/// # Safety
/// `elem` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn se3_element_free(elem: *mut Se3Element) {
    if !elem.is_null() {
        drop(Box::from_raw(elem));
    }
}

/// # Safety
/// `elem` must be a live handle; `coeffs` must point to 6 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn se3_element_coeffs(elem: *const Se3Element, coeffs: *mut f64) -> Se3Status {
    guard(|| {
        let x = deref(elem, "elem")?;
        *out(coeffs as *mut [f64; 6], "coeffs")? = *x.0.coeffs();
        Ok(())
    })
}

/// `[a, b]` as a new handle.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se3_bracket(
    a: *const Se3Element,
    b: *const Se3Element,
    out_elem: *mut *mut Se3Element,
) -> Se3Status {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        *out(out_elem, "out")? = boxed(Se3Element(bracket(&a.0, &b.0)));
        Ok(())
    })
}

/// Builds a word from parallel arrays of generator indices (1..=6) and parameters.
///
/// # Safety
/// `generators` and `params` must each point to `len` values (or be null when
/// `len` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se3_word_new(
    generators: *const u32,
    params: *const f64,
    len: usize,
    out_word: *mut *mut Se3Word,
) -> Se3Status {
    guard(|| {
        let slot = out(out_word, "out")?;
        let steps: Vec<(usize, f64)> = if len == 0 {
            Vec::new()
        } else {
            if generators.is_null() || params.is_null() {
                return Err(fail(Se3Status::NullPointer, "generators or params is null"));
            }
            let g = std::slice::from_raw_parts(generators, len);
            let p = std::slice::from_raw_parts(params, len);
            g.iter().zip(p).map(|(&g, &p)| (g as usize, p)).collect()
        };
        *slot = boxed(Se3Word(lift(AdjointWord::new(steps))?));
        Ok(())
    })
}

/// # Safety
/// `word` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn se3_word_free(word: *mut Se3Word) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// # Safety
/// `word` and `elem` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se3_apply_word(
    word: *const Se3Word,
    elem: *const Se3Element,
    out_elem: *mut *mut Se3Element,
) -> Se3Status {
    guard(|| {
        let (w, x) = (deref(word, "word")?, deref(elem, "elem")?);
        *out(out_elem, "out")? = boxed(Se3Element(apply_word(&w.0, &x.0)));
        Ok(())
    })
}

/// Writes the 36 entries of `Ad(exp(s X_i))` in row-major order.
///
/// # Safety
/// `matrix` must point to 36 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn se3_adjoint_matrix(generator: u32, s: f64, matrix: *mut f64) -> Se3Status {
    guard(|| {
        let dst = out(matrix as *mut [[f64; 6]; 6], "matrix")?;
        if !(1..=6).contains(&generator) {
            return Err(fail(Se3Status::GeneratorIndex, format!("generator index {generator} is outside 1..=6")));
        }
        if !s.is_finite() {
            return Err(fail(Se3Status::NonFinite, "parameter must be finite"));
        }
        *dst = *closed_form(generator as usize).evaluate(s).rows();
        Ok(())
    })
}

/// # Safety
/// `elem` must be a live handle; `kind`, `pitch` and `scale` must be writable.
/// `pitch` is set to NaN for pure translations.
#[no_mangle]
pub unsafe extern "C" fn se3_canonicalize_screw(
    elem: *const Se3Element,
    kind: *mut Se3ScrewKind,
    pitch: *mut f64,
    scale: *mut f64,
) -> Se3Status {
    guard(|| {
        let x = deref(elem, "elem")?;
        let (k, p, sc) = (out(kind, "kind")?, out(pitch, "pitch")?, out(scale, "scale")?);
        let form = lift(canonicalize_screw(&x.0))?;
        *k = match form.kind {
            ScrewKind::Screw => Se3ScrewKind::Screw,
            ScrewKind::Translation => Se3ScrewKind::Translation,
        };
        *p = form.pitch.unwrap_or(f64::NAN);
        *sc = form.scale;
        Ok(())
    })
}

/// # Safety
/// `elem` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se3_classify(elem: *const Se3Element, out_cls: *mut *mut Se3Classification) -> Se3Status {
    guard(|| {
        let x = deref(elem, "elem")?;
        let slot = out(out_cls, "out")?;
        *slot = boxed(Se3Classification(lift(classify_1d_paper(&x.0))?));
        Ok(())
    })
}

/// # Safety
/// `cls` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn se3_classification_free(cls: *mut Se3Classification) {
    if !cls.is_null() {
        drop(Box::from_raw(cls));
    }
}

/// Case label such as `"A13"`; release with [`se3_string_free`].
///
/// # Safety
/// `cls` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se3_classification_case(cls: *const Se3Classification, out_str: *mut *mut c_char) -> Se3Status {
    guard(|| {
        let c = deref(cls, "cls")?;
        let label = serde_json::to_value(c.0.case_tag).map_err(|e| fail(Se3Status::Internal, e.to_string()))?;
        *out(out_str, "out")? = to_c_string(label.as_str().unwrap_or_default().to_string())?;
        Ok(())
    })
}

/// # Safety
/// `cls` must be a live handle; `coeffs` must point to 6 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn se3_classification_representative(
    cls: *const Se3Classification,
    coeffs: *mut f64,
) -> Se3Status {
    guard(|| {
        let c = deref(cls, "cls")?;
        *out(coeffs as *mut [f64; 6], "coeffs")? = *c.0.representative.coeffs();
        Ok(())
    })
}

/// Full classifier output as JSON; release with [`se3_string_free`].
///
/// # Safety
/// `cls` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se3_classification_json(cls: *const Se3Classification, out_str: *mut *mut c_char) -> Se3Status {
    guard(|| {
        let c = deref(cls, "cls")?;
        let json = serde_json::to_string(&c.0).map_err(|e| fail(Se3Status::Internal, e.to_string()))?;
        *out(out_str, "out")? = to_c_string(json)?;
        Ok(())
    })
}

/// Claims report as JSON; release with [`se3_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se3_claims_report_json(samples: usize, seed: u64, out_str: *mut *mut c_char) -> Se3Status {
    guard(|| {
        let slot = out(out_str, "out")?;
        let report = lift(se3sym::claims::claims_report(samples, seed))?;
        let json = serde_json::to_string(&report).map_err(|e| fail(Se3Status::Internal, e.to_string()))?;
        *slot = to_c_string(json)?;
        Ok(())
    })
}

/// Largest finite-difference residual of the Poisson equation for the field
/// family `name` transformed by `exp(s X_k)`, over `samples` random points.
///
/// # Safety
/// `name` must be a nul-terminated string; `max_residual` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se3_verify_invariance(
    name: *const c_char,
    generator: u32,
    s: f64,
    samples: usize,
    seed: u64,
    max_residual: *mut f64,
) -> Se3Status {
    guard(|| {
        if name.is_null() {
            return Err(fail(Se3Status::NullPointer, "name is null"));
        }
        let name = CStr::from_ptr(name)
            .to_str()
            .map_err(|_| fail(Se3Status::InvalidArgument, "name is not UTF-8"))?;
        let slot = out(max_residual, "max_residual")?;
        let h = lift(family(name))?;
        *slot = lift(verify_invariance(&h, generator as usize, s, samples, seed))?.max_residual;
        Ok(())
    })
}
