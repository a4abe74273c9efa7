//! Seven-case normalization of 1-d subalgebras following the published
//! case split on the vanishing pattern of the translation part.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fmt;

use serde::Serialize;

use crate::adjoint::{apply_word, AdjointWord};
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::optimal::screw::{align_to_z, canonicalize_screw, has_zero_pitch, ScrewKind};
use crate::scalar::FLOAT_TOL;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    A11,
    A12,
    A13,
    A14,
    A15,
    A16,
    A17,
}

impl CaseTag {
    pub const ALL: [CaseTag; 7] = [
        CaseTag::A11,
        CaseTag::A12,
        CaseTag::A13,
        CaseTag::A14,
        CaseTag::A15,
        CaseTag::A16,
        CaseTag::A17,
    ];

    /// One-based coordinates that may be nonzero in the representative.
    pub fn allowed(self) -> &'static [usize] {
        match self {
            CaseTag::A11 => &[6],
            CaseTag::A12 => &[1, 4],
            CaseTag::A13 => &[2, 5],
            CaseTag::A14 => &[3, 6],
            CaseTag::A15 => &[1, 2, 6],
            CaseTag::A16 => &[1, 3, 4],
            CaseTag::A17 => &[2, 3, 5],
        }
    }

    /// Coordinate normalized to 1.
    pub fn leading(self) -> usize {
        self.allowed()[0]
    }

    /// Coordinates holding the `(a, b)` parameters.
    fn param_slots(self) -> (Option<usize>, Option<usize>) {
        match self {
            CaseTag::A11 => (None, None),
            CaseTag::A12 => (None, Some(4)),
            CaseTag::A13 => (None, Some(5)),
            CaseTag::A14 => (None, Some(6)),
            CaseTag::A15 => (Some(2), Some(6)),
            CaseTag::A16 => (Some(3), Some(4)),
            CaseTag::A17 => (Some(3), Some(5)),
        }
    }

    /// Representative pattern with the given parameters.
    pub fn representative(self, a: f64, b: f64) -> AlgebraElement<f64> {
        let mut c = [0.0; 6];
        c[self.leading() - 1] = 1.0;
        let (sa, sb) = self.param_slots();
        if let Some(k) = sa {
            c[k - 1] = a;
        }
        if let Some(k) = sb {
            c[k - 1] = b;
        }
        AlgebraElement::new(c)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// How the returned word was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Route {
    /// The published parameter formulas worked as stated.
    PrintedFormula,
    /// `ω` was first rotated onto the z axis, then the published formulas applied.
    PreRotation,
    /// The published formulas were ill-defined or left a residual; the case
    /// pattern was reached through the screw normal form instead.
    NumericFallback,
    /// The case selected by the vanishing pattern cannot be reached on this
    /// orbit; the representative belongs to another case.
    Reassigned { pattern_case: CaseTag },
}

/// Result of the seven-case normalization.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OneDimRepresentative {
    pub case_tag: CaseTag,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub word: AdjointWord,
    pub scale: f64,
    pub route: Route,
    /// Residual left by the published formulas, absent when they are ill-defined.
    pub printed_residual: Option<f64>,
    pub representative: AlgebraElement<f64>,
}

impl OneDimRepresentative {
    /// Largest disallowed coordinate of `scale · word(x)`, relative to the
    /// size of the representative.
    pub fn pattern_residual(&self, x: &AlgebraElement<f64>) -> f64 {
        pattern_residual(self.case_tag, &apply_word(&self.word, x).scale(&self.scale))
    }
}

fn pattern_residual(case: CaseTag, y: &AlgebraElement<f64>) -> f64 {
    let disallowed = (1..=6)
        .filter(|k| !case.allowed().contains(k))
        .fold(0.0_f64, |m, k| m.max(y.coeff(k).abs()));
    disallowed / y.max_abs().max(1.0)
}

/// Case selected by the vanishing pattern of `(a1, a2, a3)`.
pub fn pattern_case(x: &AlgebraElement<f64>) -> CaseTag {
    let tol = FLOAT_TOL * x.max_abs();
    let nz = |i: usize| x.coeff(i).abs() > tol;
    match (nz(1), nz(2), nz(3)) {
        (false, false, false) => CaseTag::A11,
        (true, false, false) => CaseTag::A12,
        (false, true, false) => CaseTag::A13,
        (false, false, true) => CaseTag::A14,
        (true, true, _) => CaseTag::A15,
        (true, false, true) => CaseTag::A16,
        (false, true, true) => CaseTag::A17,
    }
}

/// Word given by the published parameter formulas, steps in index order.
/// `None` when a formula divides by zero.
fn printed_word(case: CaseTag, x: &AlgebraElement<f64>) -> Option<AdjointWord> {
    let a = |i: usize| *x.coeff(i);
    let steps: Vec<(usize, f64)> = match case {
        CaseTag::A11 => vec![(4, -(a(5) / a(6)).atan()), (5, (a(4) / a(6)).atan())],
        CaseTag::A12 => vec![(2, -a(6) / a(1)), (3, a(5) / a(1))],
        CaseTag::A13 => vec![(1, a(6) / a(2)), (3, -a(4) / a(2))],
        CaseTag::A14 => vec![(1, -a(5) / a(3)), (2, a(4) / a(3))],
        CaseTag::A15 => vec![(1, a(6) / a(2)), (3, a(5) / a(1)), (4, -(a(3) / a(2)).atan())],
        CaseTag::A16 => vec![(1, -a(5) / a(3)), (2, -a(6) / a(1)), (4, -(a(3) / a(2)).atan())],
        CaseTag::A17 => vec![(1, a(6) / a(2)), (2, a(4) / a(3))],
    };
    if steps.iter().any(|(_, s)| !s.is_finite()) {
        return None;
    }
    let mut word = AdjointWord::empty();
    for (i, s) in steps {
        word.push(i, s);
    }
    Some(word)
}

/// Orbit type that decides which case patterns are reachable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum OrbitType {
    Translation,
    Rotation,
    Screw,
}

fn orbit_type(x: &AlgebraElement<f64>, kind: ScrewKind) -> OrbitType {
    match kind {
        ScrewKind::Translation => OrbitType::Translation,
        ScrewKind::Screw if has_zero_pitch(x) => OrbitType::Rotation,
        ScrewKind::Screw => OrbitType::Screw,
    }
}

fn reachable(case: CaseTag, orbit: OrbitType) -> bool {
    use CaseTag::*;
    match orbit {
        OrbitType::Translation => case != A11,
        OrbitType::Rotation => matches!(case, A11 | A15),
        OrbitType::Screw => !matches!(case, A11 | A15),
    }
}

/// Fixed word from the screw normal form (`X1`, `X6` or `X6 + p·X3`) to the
/// pattern of `case`.
fn normal_form_to_case(case: CaseTag, orbit: OrbitType) -> AdjointWord {
    use CaseTag::*;
    let steps: &[(usize, f64)] = match (orbit, case) {
        (OrbitType::Rotation, A15) => &[(2, 1.0), (1, -1.0)],
        (OrbitType::Screw, A12) => &[(5, FRAC_PI_2)],
        (OrbitType::Screw, A13) => &[(4, -FRAC_PI_2)],
        (OrbitType::Screw, A16) => &[(5, FRAC_PI_2), (2, -1.0)],
        (OrbitType::Screw, A17) => &[(4, -FRAC_PI_2), (1, 1.0)],
        (OrbitType::Translation, A13) => &[(6, FRAC_PI_2)],
        (OrbitType::Translation, A14) => &[(5, -FRAC_PI_2)],
        (OrbitType::Translation, A15) => &[(6, FRAC_PI_4)],
        (OrbitType::Translation, A16) => &[(5, -FRAC_PI_4)],
        (OrbitType::Translation, A17) => &[(6, FRAC_PI_2), (4, FRAC_PI_4)],
        _ => &[],
    };
    AdjointWord::new(steps.iter().copied()).expect("fixed words are valid")
}

fn finish(
    case: CaseTag,
    x: &AlgebraElement<f64>,
    word: AdjointWord,
    route: Route,
    printed_residual: Option<f64>,
) -> Option<OneDimRepresentative> {
    let image = apply_word(&word, x);
    let lead = *image.coeff(case.leading());
    if lead.abs() <= FLOAT_TOL * image.max_abs() {
        return None;
    }
    let scale = 1.0 / lead;
    let representative = image.scale(&scale);
    if pattern_residual(case, &representative) >= FLOAT_TOL {
        return None;
    }
    let (sa, sb) = case.param_slots();
    let a = sa.map(|k| *representative.coeff(k));
    let b = sb.map(|k| *representative.coeff(k));
    if a.is_some_and(|a| a.abs() <= FLOAT_TOL) {
        return None;
    }
    Some(OneDimRepresentative { case_tag: case, a, b, word, scale, route, printed_residual, representative })
}

fn printed_attempt(case: CaseTag, x: &AlgebraElement<f64>) -> (Option<AdjointWord>, Option<f64>) {
    match printed_word(case, x) {
        Some(word) => {
            let image = apply_word(&word, x);
            let lead = *image.coeff(case.leading());
            let residual = if lead == 0.0 {
                f64::INFINITY
            } else {
                pattern_residual(case, &image.scale(&(1.0 / lead)))
            };
            (Some(word), Some(residual))
        }
        None => (None, None),
    }
}

/// Normalizes `x` to one of the seven published 1-d representatives.
///
/// The case comes from the vanishing pattern of `(a1, a2, a3)` and the
/// published parameter formulas are tried first. When they are undefined or
/// miss the pattern, the word is built from the screw normal form instead;
/// when the selected pattern is not on the orbit of `x` at all, the nearest
/// reachable case is returned and the result is flagged.
pub fn classify_1d_paper(x: &AlgebraElement<f64>) -> Result<OneDimRepresentative> {
    if x.max_abs() == 0.0 || !x.is_finite() {
        return Err(Error::ZeroElement);
    }
    let case = pattern_case(x);
    let (word, printed_residual) = printed_attempt(case, x);
    if let Some(word) = word {
        if let Some(rep) = finish(case, x, word, Route::PrintedFormula, printed_residual) {
            return Ok(rep);
        }
    } else if case == CaseTag::A11 {
        let pre = align_to_z(&x.rotation());
        let rotated = apply_word(&pre, x);
        if let (Some(w), _) = printed_attempt(case, &rotated) {
            if let Some(rep) = finish(case, x, pre.then(&w), Route::PreRotation, None) {
                return Ok(rep);
            }
        }
    }

    let form = canonicalize_screw(x)?;
    let orbit = orbit_type(x, form.kind);
    let (target, route) = if reachable(case, orbit) {
        (case, Route::NumericFallback)
    } else {
        let target = match orbit {
            OrbitType::Rotation => CaseTag::A11,
            OrbitType::Translation | OrbitType::Screw => CaseTag::A12,
        };
        (target, Route::Reassigned { pattern_case: case })
    };
    let word = form.word.then(&normal_form_to_case(target, orbit));
    finish(target, x, word, route, printed_residual).ok_or_else(|| {
        Error::InvalidArgument(format!("could not normalize {x} to case {target}; element is ill-conditioned"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_in_case_form() {
        let r = classify_1d_paper(&AlgebraElement::new([0.0, 0.0, 0.0, 0.0, 0.0, 2.0])).unwrap();
        assert_eq!(r.case_tag, CaseTag::A11);
        assert!(r.word.is_empty());
        assert_eq!(r.scale, 0.5);
        assert_eq!(r.route, Route::PrintedFormula);
    }

    #[test]
    fn screw_with_translation_along_x() {
        let x = AlgebraElement::new([1.0, 0.0, 0.0, 3.0, 1.0, 2.0]);
        assert_eq!(pattern_case(&x), CaseTag::A12);
        // The published word leaves ω untouched, so it cannot reach the pattern.
        let printed = printed_word(CaseTag::A12, &x).unwrap();
        assert_eq!(printed, AdjointWord::new([(2, -2.0), (3, 1.0)]).unwrap());
        let r = classify_1d_paper(&x).unwrap();
        assert_eq!(r.case_tag, CaseTag::A12);
        assert_eq!(r.route, Route::NumericFallback);
        assert!(r.printed_residual.unwrap() > 1e-3);
        assert!(r.pattern_residual(&x) < 1e-9);
        // v·ω = 3 and ‖ω‖² = 14 force b = 14/3.
        assert!((r.b.unwrap() - 14.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn rotation_about_x_axis_is_pre_rotated() {
        let x = AlgebraElement::basis(4);
        let r = classify_1d_paper(&x).unwrap();
        assert_eq!(r.case_tag, CaseTag::A11);
        assert_eq!(r.route, Route::PreRotation);
        let image = apply_word(&r.word, &x).scale(&r.scale);
        assert!((image - AlgebraElement::basis(6)).max_abs() < 1e-15);
        let quarter = AdjointWord::new([(5, FRAC_PI_2)]).unwrap();
        let turned = apply_word(&quarter, &x);
        assert!((turned.scale(&-1.0) - AlgebraElement::basis(6)).max_abs() < 1e-15);
    }

    #[test]
    fn generic_element_is_reassigned() {
        let x = AlgebraElement::new([0.3, -0.8, 0.5, 0.2, -0.6, 0.9]);
        let r = classify_1d_paper(&x).unwrap();
        assert_eq!(r.route, Route::Reassigned { pattern_case: CaseTag::A15 });
        assert!(r.pattern_residual(&x) < 1e-9);
    }

    #[test]
    fn fallback_reaches_every_reachable_pattern() {
        let samples = [
            (OrbitType::Translation, AlgebraElement::new([0.4, -0.1, 0.9, 0.0, 0.0, 0.0])),
            (OrbitType::Rotation, AlgebraElement::new([1.0, 0.0, 0.0, 0.0, 1.0, 0.0])),
            (OrbitType::Screw, AlgebraElement::new([0.3, -0.8, 0.5, 0.2, -0.6, 0.9])),
        ];
        for (orbit, x) in samples {
            let form = canonicalize_screw(&x).unwrap();
            assert_eq!(orbit_type(&x, form.kind), orbit);
            for case in CaseTag::ALL.into_iter().filter(|&c| reachable(c, orbit)) {
                let word = form.word.then(&normal_form_to_case(case, orbit));
                let rep = finish(case, &x, word, Route::NumericFallback, None);
                assert!(rep.is_some(), "{case} unreachable for {orbit:?}");
            }
        }
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(classify_1d_paper(&AlgebraElement::zero()).unwrap_err(), Error::ZeroElement);
    }
}
