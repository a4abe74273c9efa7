//! The six solution transformations and their finite-difference verification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::solutions::field::{ScalarField, SourceTerm};
use crate::solutions::flow::closed_form_map;

/// Half-width of the test box `[−1, 1]³`.
pub const BOX: f64 = 1.0;

/// Finite-difference step used by [`verify_invariance`].
pub const FD_STEP: f64 = 1e-3;

/// `g_k(s)·h : p ↦ h(exp(s X_k) p)`.
pub fn transform_solution(k: usize, s: f64, h: &ScalarField) -> Result<ScalarField> {
    closed_form_map(k, s, [0.0; 3])?;
    if !s.is_finite() {
        return Err(Error::NonFiniteParameter(s));
    }
    let label = format!("g{k}({s})[{}]", h.label());
    Ok(h.compose(label, move |p| closed_form_map(k, s, p).expect("index checked")))
}

/// `∇h − f(h)` at `p` by the seven-point central stencil.
pub fn pde_residual(h: &ScalarField, p: [f64; 3], step: f64) -> Result<f64> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidArgument(format!("finite-difference step must be positive, got {step}")));
    }
    if p.iter().any(|c| !c.is_finite() || c.abs() + 2.0 * step > BOX) {
        return Err(Error::OutsideBox { x: p[0], y: p[1], z: p[2] });
    }
    let u = h.eval(p);
    let mut lap = 0.0;
    for i in 0..3 {
        let (mut a, mut b) = (p, p);
        a[i] += step;
        b[i] -= step;
        lap += h.eval(a) - 2.0 * u + h.eval(b);
    }
    Ok(lap / (step * step) - h.source().eval(u))
}

/// `pde_residual(step) / pde_residual(step / 2)`.
pub fn convergence_ratio(h: &ScalarField, p: [f64; 3], step: f64) -> Result<f64> {
    Ok(pde_residual(h, p, step)?.abs() / pde_residual(h, p, step / 2.0)?.abs())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvarianceReport {
    pub field: String,
    pub source: SourceTerm,
    pub generator: usize,
    pub parameter: f64,
    pub samples: usize,
    pub seed: u64,
    pub step: f64,
    pub max_residual: f64,
    pub worst_point: [f64; 3],
}

/// Largest `|pde_residual|` of `g_k(s)·h` over `samples` seeded points of the
/// box interior.
pub fn verify_invariance(h: &ScalarField, k: usize, s: f64, samples: usize, seed: u64) -> Result<InvarianceReport> {
    let g = transform_solution(k, s, h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reach = BOX - 2.0 * FD_STEP - 1e-9;
    let mut worst = (0.0_f64, [0.0; 3]);
    for _ in 0..samples {
        let p: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-reach..=reach));
        let r = pde_residual(&g, p, FD_STEP)?.abs();
        if r > worst.0 || r.is_nan() {
            worst = (r, p);
        }
    }
    Ok(InvarianceReport {
        field: h.label().to_string(),
        source: h.source(),
        generator: k,
        parameter: s,
        samples,
        seed,
        step: FD_STEP,
        max_residual: worst.0,
        worst_point: worst.1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solutions::field::family;

    #[test]
    fn transform_examples() {
        let r2 = family("r2").unwrap();
        let t = transform_solution(2, 0.5, &r2).unwrap();
        let p = [0.1, 0.2, 0.3];
        assert!((t.eval(p) - (0.01 + 0.7 * 0.7 + 0.09)).abs() < 1e-15);
        let t = transform_solution(4, 0.9, &r2).unwrap();
        assert!((t.eval(p) - r2.eval(p)).abs() < 1e-15);
        let e = family("exp-x").unwrap();
        let t = transform_solution(6, 0.4, &e).unwrap();
        assert!((t.eval(p) - (0.1 * 0.4f64.cos() - 0.2 * 0.4f64.sin()).exp()).abs() < 1e-15);
    }

    #[test]
    fn residual_examples() {
        let p = [0.2, -0.3, 0.4];
        assert!(pde_residual(&family("r2").unwrap(), p, FD_STEP).unwrap().abs() < 1e-8);
        assert!(pde_residual(&family("xy").unwrap(), p, FD_STEP).unwrap().abs() < 1e-9);
        assert!(pde_residual(&family("exp-x").unwrap(), [0.0; 3], FD_STEP).unwrap().abs() <= 1e-6);
        let e = pde_residual(&family("xy").unwrap(), [0.9995, 0.0, 0.0], FD_STEP).unwrap_err();
        assert!(matches!(e, Error::OutsideBox { .. }));
    }

    #[test]
    fn second_order_convergence() {
        let r = convergence_ratio(&family("exp-x").unwrap(), [0.0; 3], 1e-2).unwrap();
        assert!((3.5..=4.5).contains(&r), "{r}");
    }
}
