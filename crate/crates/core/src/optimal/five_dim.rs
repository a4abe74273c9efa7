//! Falsification search for codimension-1 subalgebras.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::algebra::{bracket, closure_check, AlgebraElement, Closure, SubalgebraBasis};
use crate::error::{Error, Result};
use crate::scalar::Rational;
use num_traits::Zero;

/// Residual below which a hyperplane counts as closed.
pub const CLOSURE_THRESHOLD: f64 = 1e-6;

const GRID_VALUES: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

/// Every nonzero covector with coordinates in `{−1, −½, 0, ½, 1}`.
pub fn grid_covectors() -> Vec<[f64; 6]> {
    let mut out = Vec::with_capacity(15624);
    for n in 0..5usize.pow(6) {
        let mut l = [0.0; 6];
        let mut m = n;
        for c in l.iter_mut() {
            *c = GRID_VALUES[m % 5];
            m /= 5;
        }
        if l.iter().any(|&c| c != 0.0) {
            out.push(l);
        }
    }
    out
}

fn dot(a: &[f64; 6], b: &[f64; 6]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

/// Orthonormal basis of `ker λ`.
pub fn kernel_basis(lambda: &[f64; 6]) -> Vec<[f64; 6]> {
    let p = (0..6).max_by(|&i, &j| lambda[i].abs().total_cmp(&lambda[j].abs())).unwrap_or(0);
    let mut out: Vec<[f64; 6]> = Vec::with_capacity(5);
    for j in (0..6).filter(|&j| j != p) {
        let mut v = [0.0; 6];
        v[j] = 1.0;
        v[p] = -lambda[j] / lambda[p];
        for b in &out {
            let d = dot(&v, b);
            for k in 0..6 {
                v[k] -= d * b[k];
            }
        }
        let n = dot(&v, &v).sqrt();
        out.push(v.map(|c| c / n));
    }
    out
}

/// `max |λ̂·[b_i, b_j]|` over an orthonormal basis of `ker λ`.
pub fn closure_residual(lambda: &[f64; 6]) -> f64 {
    let n = dot(lambda, lambda).sqrt();
    let unit = lambda.map(|c| c / n);
    let basis: Vec<AlgebraElement<f64>> = kernel_basis(lambda).into_iter().map(AlgebraElement::new).collect();
    let mut worst = 0.0_f64;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let b = bracket(&basis[i], &basis[j]);
            worst = worst.max(dot(&unit, b.coeffs()).abs());
        }
    }
    worst
}

/// Exact closure test of `ker λ` for a rational covector.
pub fn hyperplane_closure_exact(lambda: &[Rational; 6]) -> Result<Closure<Rational>> {
    let p = lambda.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroElement)?;
    let gens = (0..6)
        .filter(|&j| j != p)
        .map(|j| {
            let mut c: [Rational; 6] = std::array::from_fn(|_| Rational::zero());
            c[j] = Rational::from_integer(1.into());
            c[p] = -lambda[j].clone() / lambda[p].clone();
            AlgebraElement::new(c)
        })
        .collect();
    Ok(closure_check(&SubalgebraBasis::new(gens)?))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiveDimScan {
    pub grid_points: usize,
    pub samples: usize,
    pub seed: u64,
    pub min_residual: f64,
    pub argmin: [f64; 6],
    pub threshold: f64,
    pub found: bool,
}

/// Scans the grid then `samples` Gaussian covectors drawn from `seed`.
pub fn five_dim_scan(samples: usize, seed: u64) -> Result<FiveDimScan> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    let grid = grid_covectors();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = (0..samples).map(|_| std::array::from_fn::<f64, 6, _>(|_| StandardNormal.sample(&mut rng)));
    let mut best = (f64::INFINITY, [0.0; 6]);
    for lambda in grid.iter().copied().chain(random) {
        if lambda.iter().all(|&c| c == 0.0) {
            continue;
        }
        let r = closure_residual(&lambda);
        if r < best.0 {
            best = (r, lambda);
        }
    }
    Ok(FiveDimScan {
        grid_points: grid.len(),
        samples,
        seed,
        min_residual: best.0,
        argmin: best.1,
        threshold: CLOSURE_THRESHOLD,
        found: best.0 < CLOSURE_THRESHOLD,
    })
}

/// A closed 5-d subspace if the scan finds one.
pub fn five_dim_search(samples: usize, seed: u64) -> Result<Option<SubalgebraBasis<f64>>> {
    let scan = five_dim_scan(samples, seed)?;
    if !scan.found {
        return Ok(None);
    }
    let gens = kernel_basis(&scan.argmin).into_iter().map(AlgebraElement::new).collect();
    SubalgebraBasis::new(gens).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn dual(i: usize) -> [Rational; 6] {
        std::array::from_fn(|k| if k + 1 == i { int(1) } else { int(0) })
    }

    #[test]
    fn coordinate_hyperplanes_have_witnesses() {
        match hyperplane_closure_exact(&dual(5)).unwrap() {
            Closure::Witness { value, .. } => assert_eq!(value, AlgebraElement::basis(5)),
            Closure::Closed => panic!("ker X5* closed"),
        }
        match hyperplane_closure_exact(&dual(6)).unwrap() {
            Closure::Witness { value, .. } => assert_eq!(value, -AlgebraElement::basis(6)),
            Closure::Closed => panic!("ker X6* closed"),
        }
    }

    #[test]
    fn kernel_basis_is_orthonormal() {
        let l = [0.3, -1.0, 0.2, 0.0, 0.7, -0.4];
        let b = kernel_basis(&l);
        for i in 0..5 {
            assert!(dot(&b[i], &l).abs() < 1e-14);
            for j in 0..5 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&b[i], &b[j]) - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn grid_size() {
        assert_eq!(grid_covectors().len(), 15624);
    }

    #[test]
    fn small_scan_finds_nothing() {
        let s = five_dim_scan(1000, 42).unwrap();
        assert!(!s.found && s.min_residual > CLOSURE_THRESHOLD);
        assert_eq!(s, five_dim_scan(1000, 42).unwrap());
    }
}
