//! One-parameter groups of se(3) acting on points.

use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};

/// Integration step of [`flow_point`].
pub const FLOW_STEP: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FlowResult {
    /// `(x, y, z, u)`; `u` is carried unchanged since the generators have no `∂u` part.
    pub endpoint: [f64; 4],
    pub steps: usize,
    pub order: u32,
}

impl FlowResult {
    pub fn point(&self) -> [f64; 3] {
        [self.endpoint[0], self.endpoint[1], self.endpoint[2]]
    }
}

fn velocity(a: &[f64; 6], p: [f64; 3]) -> [f64; 3] {
    let [x, y, z] = p;
    [a[0] + a[4] * z - a[5] * y, a[1] + a[5] * x - a[3] * z, a[2] + a[3] * y - a[4] * x]
}

fn axpy(p: [f64; 3], h: f64, k: [f64; 3]) -> [f64; 3] {
    [p[0] + h * k[0], p[1] + h * k[1], p[2] + h * k[2]]
}

/// Classical fourth-order Runge–Kutta integration of `Σ a_i X_i` from `p`
/// for parameter time `s` with `⌈|s| / 10⁻³⌉` equal steps.
pub fn flow_point(x: &AlgebraElement<f64>, s: f64, p: [f64; 3]) -> Result<FlowResult> {
    if !s.is_finite() {
        return Err(Error::NonFiniteParameter(s));
    }
    let a = x.coeffs();
    let steps = (s.abs() / FLOW_STEP).ceil() as usize;
    let mut q = p;
    if steps > 0 {
        let h = s / steps as f64;
        for step in 0..steps {
            let k1 = velocity(a, q);
            let k2 = velocity(a, axpy(q, h / 2.0, k1));
            let k3 = velocity(a, axpy(q, h / 2.0, k2));
            let k4 = velocity(a, axpy(q, h, k3));
            for i in 0..3 {
                q[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            }
            if q.iter().any(|c| !c.is_finite()) {
                return Err(Error::NonFiniteFlow { step });
            }
        }
    }
    Ok(FlowResult { endpoint: [q[0], q[1], q[2], 0.0], steps, order: 4 })
}

/// Coordinate map of `exp(s X_k)` in closed form.
pub fn closed_form_map(k: usize, s: f64, p: [f64; 3]) -> Result<[f64; 3]> {
    let [x, y, z] = p;
    let (sn, c) = s.sin_cos();
    Ok(match k {
        1 => [x + s, y, z],
        2 => [x, y + s, z],
        3 => [x, y, z + s],
        4 => [x, y * c - z * sn, z * c + y * sn],
        5 => [x * c + z * sn, y, z * c - x * sn],
        6 => [x * c - y * sn, x * sn + y * c, z],
        _ => return Err(Error::GeneratorIndex(k)),
    })
}

/// Largest distance between [`flow_point`] on `X_k` and [`closed_form_map`]
/// over all parameter and point pairs.
pub fn flow_vs_closed_form(k: usize, s_grid: &[f64], points: &[[f64; 3]]) -> Result<f64> {
    let x = AlgebraElement::basis(k);
    if !(1..=6).contains(&k) {
        return Err(Error::GeneratorIndex(k));
    }
    let mut worst = 0.0_f64;
    for &s in s_grid {
        for &p in points {
            let a = flow_point(&x, s, p)?.point();
            let b = closed_form_map(k, s, p)?;
            worst = (0..3).fold(worst, |m, i| m.max((a[i] - b[i]).abs()));
        }
    }
    Ok(worst)
}
