//! Linear solve for the `φ` companions of a prescribed `ξ`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jet::field::{defining_equations, FMode, PointVectorField};
use crate::jet::poly::{JetPolynomial, Monomial, Var};
use crate::linalg;
use crate::scalar::Rational;

/// Default degree cap of the `g`, `h` ansatz.
pub const DEFAULT_DEGREE: usize = 3;

/// Admissible `φ = g·u + h`: `particular + span(homogeneous)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissiblePhi {
    pub degree: usize,
    pub particular: JetPolynomial,
    /// `g` of the particular solution.
    pub u_coefficient: JetPolynomial,
    pub homogeneous: Vec<JetPolynomial>,
}

impl AdmissiblePhi {
    pub fn dimension(&self) -> usize {
        self.homogeneous.len()
    }
}

/// Monomials in `x, y, z` of total degree at most `d`, in monomial order.
pub fn spatial_monomials(d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                let m = Monomial::one();
                let m = (0..a).fold(m, |m, _| m.mul(&Monomial::var(Var::X)));
                let m = (0..b).fold(m, |m, _| m.mul(&Monomial::var(Var::Y)));
                let m = (0..c).fold(m, |m, _| m.mul(&Monomial::var(Var::Z)));
                out.push(m);
            }
        }
    }
    out.sort();
    out
}

fn residual_vector(xi: &[JetPolynomial; 3], phi: JetPolynomial, mode: FMode) -> Vec<JetPolynomial> {
    let field = PointVectorField::new(xi.clone(), phi).expect("ansatz stays in point variables");
    defining_equations(&field).into_iter().map(|r| mode.apply(&r.residual)).collect()
}

/// Solves the defining equations for `φ = g(x,y,z)·u + h(x,y,z)` with
/// `deg g, deg h ≤ degree`, given `ξ` in `x, y, z`. `None` when no such `φ` exists.
pub fn solve_phi_for_xi(xi: &[JetPolynomial; 3], mode: FMode, degree: usize) -> Result<Option<AdmissiblePhi>> {
    if degree < 2 {
        return Err(Error::InvalidArgument(format!("degree cap must be at least 2, got {degree}")));
    }
    for c in xi {
        if !c.only_in(&[Var::X, Var::Y, Var::Z]) {
            return Err(Error::JetInVectorField(c.to_string()));
        }
    }
    let monos = spatial_monomials(degree);
    let u = JetPolynomial::var(Var::U);
    let unknowns: Vec<JetPolynomial> = monos
        .iter()
        .map(|m| &JetPolynomial::term(Rational::from_integer(1.into()), *m) * &u)
        .chain(monos.iter().map(|m| JetPolynomial::term(Rational::from_integer(1.into()), *m)))
        .collect();

    let base = residual_vector(xi, JetPolynomial::zero(), mode);
    let columns: Vec<Vec<JetPolynomial>> = unknowns
        .iter()
        .map(|b| {
            residual_vector(xi, b.clone(), mode)
                .into_iter()
                .zip(&base)
                .map(|(r, r0)| &r - r0)
                .collect()
        })
        .collect();

    let mut keys: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    for col in columns.iter().chain([&base]) {
        for (e, p) in col.iter().enumerate() {
            for (m, _) in p.terms() {
                let next = keys.len();
                keys.entry((e, *m)).or_insert(next);
            }
        }
    }
    let n = unknowns.len();
    let rows: Vec<Vec<Rational>> = keys
        .keys()
        .map(|(e, m)| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[*e].coefficient(m)).collect();
            row.push(-base[*e].coefficient(m));
            row
        })
        .collect();
    let Some(sol) = linalg::solve_affine(rows, n) else {
        return Ok(None);
    };
    let combine = |c: &[Rational]| {
        c.iter()
            .zip(&unknowns)
            .filter(|(k, _)| !k.is_zero())
            .fold(JetPolynomial::zero(), |acc, (k, b)| &acc + &b.scale(k))
    };
    let particular = combine(&sol.particular);
    let u_coefficient = particular.partial(Var::U);
    let homogeneous = sol.homogeneous.iter().map(|h| combine(h)).collect();
    Ok(Some(AdmissiblePhi { degree, particular, u_coefficient, homogeneous }))
}
