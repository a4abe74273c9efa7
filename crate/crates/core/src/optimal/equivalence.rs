//! Decision procedure for adjoint equivalence of 1-d subalgebras.

use serde::Serialize;

use crate::adjoint::{apply_word, AdjointWord};
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::optimal::screw::{canonicalize_screw, ScrewForm, ScrewKind};
use crate::scalar::FLOAT_TOL;

/// A word `g` and factor `μ` with `Ad(g)·x = μ·y`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Equivalence {
    pub word: AdjointWord,
    pub factor: f64,
}

/// Relative distance of `a` from the line spanned by `b`, with the best factor.
fn proportionality(a: &AlgebraElement<f64>, b: &AlgebraElement<f64>) -> (f64, f64) {
    let dot: f64 = a.coeffs().iter().zip(b.coeffs()).map(|(p, q)| p * q).sum();
    let bb: f64 = b.coeffs().iter().map(|q| q * q).sum();
    let mu = dot / bb;
    let err = (a.clone() - b.scale(&mu)).max_abs() / a.max_abs().max(b.max_abs() * mu.abs());
    (err, mu)
}

fn verify(word: AdjointWord, x: &AlgebraElement<f64>, y: &AlgebraElement<f64>) -> Option<Equivalence> {
    let (err, mu) = proportionality(&apply_word(&word, x), y);
    (err <= FLOAT_TOL && mu != 0.0).then_some(Equivalence { word, factor: mu })
}

fn same_orbit(fx: &ScrewForm, fy: &ScrewForm) -> bool {
    match (fx.kind, fy.kind) {
        (ScrewKind::Translation, ScrewKind::Translation) => true,
        (ScrewKind::Screw, ScrewKind::Screw) => {
            let (p, q) = (fx.pitch.unwrap_or(0.0), fy.pitch.unwrap_or(0.0));
            (p - q).abs() <= FLOAT_TOL * p.abs().max(q.abs()).max(1.0)
        }
        _ => false,
    }
}

/// Plane `(a, b)` rotated by `exp(s·X_k)`, `a → b` counter-clockwise.
fn rotation_plane(k: usize) -> (usize, usize) {
    match k {
        4 => (1, 2),
        5 => (2, 0),
        _ => (0, 1),
    }
}

fn single_step_candidates(x: &AlgebraElement<f64>, y: &AlgebraElement<f64>) -> Vec<AdjointWord> {
    let mut out = Vec::new();
    let (wx, wy) = (x.rotation(), y.rotation());
    let (vx, vy) = (x.translation(), y.translation());
    // Rotations act identically on v and ω; use whichever part carries the angle.
    for k in 4..=6 {
        let (a, b) = rotation_plane(k);
        for (px, py) in [(&wx, &wy), (&vx, &vy)] {
            let (rx, ry) = (px[a].hypot(px[b]), py[a].hypot(py[b]));
            if rx > 0.0 && ry > 0.0 {
                let angle = py[b].atan2(py[a]) - px[b].atan2(px[a]);
                for s in [angle, angle + std::f64::consts::PI, -angle, std::f64::consts::PI - angle] {
                    if let Ok(w) = AdjointWord::new([(k, s)]) {
                        out.push(w);
                    }
                }
            }
        }
    }
    let wy2: f64 = wy.iter().map(|c| c * c).sum();
    if wy2 > 0.0 {
        let mu = wx.iter().zip(&wy).map(|(p, q)| p * q).sum::<f64>() / wy2;
        for i in 0..3 {
            // e_i × ω_x
            let mut e = [0.0; 3];
            e[i] = 1.0;
            let d = [e[1] * wx[2] - e[2] * wx[1], e[2] * wx[0] - e[0] * wx[2], e[0] * wx[1] - e[1] * wx[0]];
            let dd: f64 = d.iter().map(|c| c * c).sum();
            if dd > 0.0 {
                let s = (0..3).map(|j| (mu * vy[j] - vx[j]) * d[j]).sum::<f64>() / dd;
                if let Ok(w) = AdjointWord::new([(i + 1, s)]) {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Finds a word mapping `span{x}` onto `span{y}`, or `None` when the two
/// elements have different screw invariants.
pub fn equivalence_search(x: &AlgebraElement<f64>, y: &AlgebraElement<f64>) -> Result<Option<Equivalence>> {
    let fx = canonicalize_screw(x)?;
    let fy = canonicalize_screw(y)?;
    if !same_orbit(&fx, &fy) {
        return Ok(None);
    }
    if let Some(e) = verify(AdjointWord::empty(), x, y) {
        return Ok(Some(e));
    }
    let mut single: Vec<_> = single_step_candidates(x, y).into_iter().filter_map(|w| verify(w, x, y)).collect();
    single.sort_by(|a, b| {
        let s = |e: &Equivalence| e.word.steps()[0].param.abs();
        s(a).total_cmp(&s(b))
    });
    if let Some(e) = single.into_iter().next() {
        return Ok(Some(e));
    }
    let word = fx.word.then(&fy.word.inverse());
    match verify(word, x, y) {
        Some(e) => Ok(Some(e)),
        None => Err(Error::InvalidArgument(format!(
            "equal invariants but no verified word between {x} and {y}; inputs are ill-conditioned"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn quarter_turn_about_z() {
        let x = AlgebraElement::new([1.0, 0.0, 0.0, 2.0, 0.0, 0.0]);
        let y = AlgebraElement::new([0.0, 1.0, 0.0, 0.0, 2.0, 0.0]);
        let e = equivalence_search(&x, &y).unwrap().unwrap();
        assert_eq!(e.word.len(), 1);
        assert_eq!(e.word.steps()[0].generator, 6);
        assert!((e.word.steps()[0].param - FRAC_PI_2).abs() < 1e-12);
        assert!((e.factor - 1.0).abs() < 1e-12);
    }

    #[test]
    fn distinct_pitches_are_inequivalent() {
        let x = AlgebraElement::basis(4);
        let y = AlgebraElement::new([1.0, 0.0, 0.0, 1.0, 0.0, 0.0]);
        assert_eq!(equivalence_search(&x, &y).unwrap(), None);
        let t = AlgebraElement::basis(1);
        assert_eq!(equivalence_search(&t, &x).unwrap(), None);
    }

    #[test]
    fn mirror_screws_are_inequivalent() {
        let x = AlgebraElement::new([1.0, 0.0, 0.0, 1.0, 0.0, 0.0]);
        let y = AlgebraElement::new([-1.0, 0.0, 0.0, 1.0, 0.0, 0.0]);
        assert_eq!(equivalence_search(&x, &y).unwrap(), None);
    }

    #[test]
    fn general_pair_uses_normal_forms() {
        let x = AlgebraElement::new([0.3, -1.2, 0.7, -0.4, 0.9, -2.0]);
        let g = AdjointWord::new([(1, 0.4), (5, -1.1), (3, 2.0), (6, 0.3)]).unwrap();
        let y = apply_word(&g, &x).scale(&-3.0);
        let e = equivalence_search(&x, &y).unwrap().unwrap();
        let (err, _) = proportionality(&apply_word(&e.word, &x), &y);
        assert!(err < 1e-9);
    }

    #[test]
    fn zero_input_is_an_error() {
        assert!(equivalence_search(&AlgebraElement::zero(), &AlgebraElement::basis(1)).is_err());
    }
}
