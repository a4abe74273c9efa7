//! Canonical forms of 1-d subalgebras from the screw invariants `‖ω‖²` and `v·ω`.

use serde::Serialize;

use crate::adjoint::{apply_word, AdjointWord};
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::scalar::FLOAT_TOL;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScrewKind {
    /// `ω ≠ 0`; canonical element `X6 + p·X3`.
    Screw,
    /// `ω = 0`; canonical element `X1`.
    Translation,
}

/// Screw normal form together with the word and scale that reach it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScrewForm {
    pub kind: ScrewKind,
    /// Translation per radian, `v·ω / ‖ω‖²`; absent for pure translations.
    pub pitch: Option<f64>,
    pub word: AdjointWord,
    pub scale: f64,
}

impl ScrewForm {
    pub fn canonical(&self) -> AlgebraElement<f64> {
        match self.kind {
            ScrewKind::Screw => AlgebraElement::new([0.0, 0.0, self.pitch.unwrap_or(0.0), 0.0, 0.0, 1.0]),
            ScrewKind::Translation => AlgebraElement::basis(1),
        }
    }

    /// `max |scale · word(x) − canonical|`.
    pub fn reproduction_error(&self, x: &AlgebraElement<f64>) -> f64 {
        let image = apply_word(&self.word, x).scale(&self.scale);
        (image - self.canonical()).max_abs()
    }
}

fn norm(v: &[f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

/// Whether the rotation part is negligible relative to the whole element.
pub(crate) fn is_translation(x: &AlgebraElement<f64>) -> bool {
    norm(&x.rotation()) <= FLOAT_TOL * x.max_abs()
}

/// Whether `x` is a rotation about some axis (screw of pitch zero).
pub(crate) fn has_zero_pitch(x: &AlgebraElement<f64>) -> bool {
    let w = norm(&x.rotation());
    w > 0.0 && x.translation_dot_rotation().abs() / w <= FLOAT_TOL * x.max_abs()
}

/// Rotation word taking `axis` onto the positive z direction.
pub(crate) fn align_to_z(axis: &[f64; 3]) -> AdjointWord {
    let mut word = AdjointWord::empty();
    let r = axis[0].hypot(axis[1]);
    word.push(6, -axis[1].atan2(axis[0]));
    word.push(5, (-r).atan2(axis[2]));
    word
}

/// Rotation word taking `axis` onto the positive x direction.
pub(crate) fn align_to_x(axis: &[f64; 3]) -> AdjointWord {
    let mut word = AdjointWord::empty();
    let r = axis[0].hypot(axis[1]);
    word.push(6, -axis[1].atan2(axis[0]));
    word.push(5, axis[2].atan2(r));
    word
}

/// Reduces `x` to `X6 + p·X3` (rotation axis along +z, unit angular part)
/// or to `X1` when `x` is a pure translation.
pub fn canonicalize_screw(x: &AlgebraElement<f64>) -> Result<ScrewForm> {
    if x.max_abs() == 0.0 || !x.is_finite() {
        return Err(Error::ZeroElement);
    }
    if is_translation(x) {
        let v = x.translation();
        let word = align_to_x(&v);
        return Ok(ScrewForm { kind: ScrewKind::Translation, pitch: None, word, scale: 1.0 / norm(&v) });
    }
    let omega = x.rotation();
    let n = norm(&omega);
    let pitch = x.translation_dot_rotation() / (n * n);
    let mut word = align_to_z(&omega);
    let aligned = apply_word(&word, x);
    word.push(1, aligned.coeff(2) / n);
    word.push(2, -aligned.coeff(1) / n);
    Ok(ScrewForm { kind: ScrewKind::Screw, pitch: Some(pitch), word, scale: 1.0 / n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = canonicalize_screw(&AlgebraElement::basis(6)).unwrap();
        assert_eq!((f.kind, f.pitch), (ScrewKind::Screw, Some(0.0)));
        assert!(f.word.is_empty());

        let b = 2.5;
        let x = AlgebraElement::new([1.0, 0.0, 0.0, b, 0.0, 0.0]);
        let f = canonicalize_screw(&x).unwrap();
        assert!((f.pitch.unwrap() - 1.0 / b).abs() < 1e-15);
        assert!(f.reproduction_error(&x) < 1e-12);

        let x = AlgebraElement::new([0.0, 5.0, 0.0, 0.0, 0.0, 0.0]);
        let f = canonicalize_screw(&x).unwrap();
        assert_eq!(f.kind, ScrewKind::Translation);
        assert!(f.reproduction_error(&x) < 1e-15);

        assert_eq!(canonicalize_screw(&AlgebraElement::zero()).unwrap_err(), Error::ZeroElement);
    }

    #[test]
    fn general_element_reaches_canonical_form() {
        let x = AlgebraElement::new([0.3, -1.2, 0.7, -0.4, 0.9, -2.0]);
        let f = canonicalize_screw(&x).unwrap();
        assert!(f.reproduction_error(&x) < 1e-12);
        let canonical = f.canonical();
        let p = canonical.translation_dot_rotation() / canonical.rotation_norm_sq();
        assert!((p - f.pitch.unwrap()).abs() < 1e-12);
    }
}
