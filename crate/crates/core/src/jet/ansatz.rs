//! The eleven-coefficient family of candidate generators.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jet::field::{defining_equations, invariance_residual, DefiningResidual, FMode, PointVectorField};
use crate::jet::parse::parse_polynomial;
use crate::jet::poly::JetPolynomial;
use crate::scalar::{format_rational, int, Rational};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetryAnsatz {
    /// `a_1 .. a_11`.
    #[serde(serialize_with = "crate::scalar::serialize_rationals")]
    pub a: [Rational; 11],
    pub f2: Option<JetPolynomial>,
}

impl SymmetryAnsatz {
    pub fn new(a: [Rational; 11], f2: Option<JetPolynomial>) -> Self {
        Self { a, f2 }
    }

    /// Only `a_k = 1` (1-based), `F2 = 0`.
    pub fn unit(k: usize) -> Result<Self> {
        if !(1..=11).contains(&k) {
            return Err(Error::InvalidArgument(format!("coefficient index {k} outside 1..=11")));
        }
        Ok(Self { a: std::array::from_fn(|i| int((i + 1 == k) as i64)), f2: Some(JetPolynomial::zero()) })
    }

    fn poly(&self, template: &str) -> JetPolynomial {
        let mut text = template.to_string();
        for k in (1..=11).rev() {
            text = text.replace(&format!("a{k}"), &format!("({})", format_rational(&self.a[k - 1])));
        }
        parse_polynomial(&text).expect("ansatz templates are well formed")
    }

    /// `a_11 − (a_7 x + a_5 y + a_1 z)`.
    pub fn f1(&self) -> JetPolynomial {
        self.poly("a11 - (a7*x + a5*y + a1*z)")
    }

    pub fn xi(&self) -> [JetPolynomial; 3] {
        [
            self.poly("a7*(x^2 - y^2 - z^2) + 2*(a5*y + a1*z)*x + a6*x + a8*y - a4*z + a9"),
            self.poly("a5*(y^2 - z^2 - x^2) + 2*(a7*x + a1*z)*y - a8*x + a6*y + a2*z + a10"),
            self.poly("a1*(z^2 - x^2 - y^2) + 2*(a7*x + a5*y)*z + a4*x - a2*y + a6*z + a3"),
        ]
    }

    /// `ξ` from the coefficients and `φ = F1·u + F2`.
    pub fn field(&self) -> Result<PointVectorField> {
        let f2 = self.f2.clone().unwrap_or_default();
        if !f2.only_in(&[crate::jet::Var::X, crate::jet::Var::Y, crate::jet::Var::Z]) {
            return Err(Error::JetInVectorField(f2.to_string()));
        }
        let phi = &(&self.f1() * &JetPolynomial::var(crate::jet::Var::U)) + &f2;
        PointVectorField::new(self.xi(), phi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnsatzResiduals {
    pub defining: Vec<DefiningResidual>,
    pub invariance: JetPolynomial,
}

impl AnsatzResiduals {
    pub fn all_zero(&self) -> bool {
        self.invariance.is_zero() && self.defining.iter().all(|r| r.residual.is_zero())
    }
}

/// Defining-equation and invariance residuals of the ansatz under `mode`.
pub fn ansatz_residuals(ansatz: &SymmetryAnsatz, mode: FMode) -> Result<AnsatzResiduals> {
    if mode == FMode::Zero && ansatz.f2.is_none() {
        return Err(Error::InvalidArgument("F2 must be supplied when f = 0".into()));
    }
    let field = ansatz.field()?;
    let defining = defining_equations(&field)
        .into_iter()
        .map(|r| DefiningResidual { residual: mode.apply(&r.residual), ..r })
        .collect();
    let invariance = mode.apply(&invariance_residual(&field));
    Ok(AnsatzResiduals { defining, invariance })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn se3_slices_vanish_for_generic_f() {
        for k in [2, 3, 4, 8, 9, 10] {
            let r = ansatz_residuals(&SymmetryAnsatz::unit(k).unwrap(), FMode::Generic).unwrap();
            assert!(r.all_zero(), "a{k}");
        }
    }

    #[test]
    fn dilation_slice_fails_for_generic_f() {
        let r = ansatz_residuals(&SymmetryAnsatz::unit(6).unwrap(), FMode::Generic).unwrap();
        assert_eq!(r.invariance.to_string(), "-2*f");
        assert_eq!(r.defining.last().unwrap().residual.to_string(), "-2*f");
    }

    #[test]
    fn all_slices_vanish_for_laplace() {
        for k in 1..=11 {
            let r = ansatz_residuals(&SymmetryAnsatz::unit(k).unwrap(), FMode::Zero).unwrap();
            assert!(r.all_zero(), "a{k}: {r:?}");
        }
    }

    #[test]
    fn zero_mode_requires_f2() {
        let a = SymmetryAnsatz::new(std::array::from_fn(|_| int(0)), None);
        assert!(ansatz_residuals(&a, FMode::Zero).is_err());
    }
}
