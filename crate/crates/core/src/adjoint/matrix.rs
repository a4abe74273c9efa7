use std::fmt;

use num_traits::One;

use serde::{Serialize, Serializer};

use crate::adjoint::TrigPoly;
use crate::algebra::{bracket, AlgebraElement};
use crate::error::{Error, Result};
use crate::scalar::{Rational, Ring};

/// 6×6 matrix acting on coordinate rows: row `i` holds the image of `X_{i+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat6<T> {
    rows: [[T; 6]; 6],
}

pub type TrigPolyMatrix = Mat6<TrigPoly>;

impl<T> Mat6<T> {
    pub fn from_rows(rows: [[T; 6]; 6]) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[[T; 6]; 6] {
        &self.rows
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.rows[row][col]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Mat6<U> {
        Mat6 { rows: std::array::from_fn(|r| std::array::from_fn(|c| f(&self.rows[r][c]))) }
    }
}

impl<T: Ring> Mat6<T> {
    pub fn zero() -> Self {
        Self { rows: std::array::from_fn(|_| std::array::from_fn(|_| T::zero())) }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..6 {
            m.rows[i][i] = T::one();
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|e| e.is_zero())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for r in 0..6 {
            for k in 0..6 {
                if self.rows[r][k].is_zero() {
                    continue;
                }
                for c in 0..6 {
                    out.rows[r][c] = out.rows[r][c].clone() + self.rows[r][k].clone() * rhs.rows[k][c].clone();
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self {
            rows: std::array::from_fn(|r| std::array::from_fn(|c| self.rows[r][c].clone() + rhs.rows[r][c].clone())),
        }
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.map(|e| factor.clone() * e.clone())
    }

    /// Image of a coordinate row: `x · M`.
    pub fn apply(&self, x: &AlgebraElement<T>) -> AlgebraElement<T> {
        let xs = x.coeffs();
        AlgebraElement::new(std::array::from_fn(|c| {
            (0..6).fold(T::zero(), |acc, r| {
                if xs[r].is_zero() {
                    acc
                } else {
                    acc + xs[r].clone() * self.rows[r][c].clone()
                }
            })
        }))
    }
}

impl Mat6<f64> {
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.rows
            .iter()
            .flatten()
            .zip(other.rows.iter().flatten())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn determinant(&self) -> f64 {
        crate::linalg::determinant(&self.rows)
    }
}

impl TrigPolyMatrix {
    /// Substitutes `s = σ`, `C = cos σ`, `S = sin σ`.
    pub fn evaluate(&self, sigma: f64) -> Mat6<f64> {
        self.map(|p| p.evaluate(sigma))
    }
}

impl<T: fmt::Display> fmt::Display for Mat6<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for Mat6<f64> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl Serialize for TrigPolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        text.serialize(serializer)
    }
}

/// Matrix of `y ↦ [x, y]`.
pub fn ad_matrix<T: Ring>(x: &AlgebraElement<T>) -> Mat6<T> {
    let rows = std::array::from_fn(|j| bracket(x, &AlgebraElement::basis(j + 1)).into_coeffs());
    Mat6::from_rows(rows)
}

pub(crate) fn check_generator(i: usize) -> Result<()> {
    if (1..=6).contains(&i) {
        Ok(())
    } else {
        Err(Error::GeneratorIndex(i))
    }
}

/// Truncated Lie series `Σ_{k=0}^{N} (−σ)^k ad_{X_i}^k / k!`.
pub fn adjoint_series(i: usize, sigma: f64, order: usize) -> Result<Mat6<f64>> {
    check_generator(i)?;
    if order == 0 {
        return Err(Error::InvalidArgument("series truncation order must be at least 1".into()));
    }
    let ad = ad_matrix(&AlgebraElement::<f64>::basis(i));
    let mut term = Mat6::<f64>::identity();
    let mut sum = term.clone();
    for k in 1..=order {
        term = term.mul(&ad).scale(&(-sigma / k as f64));
        sum = sum.add(&term);
    }
    Ok(sum)
}

/// Exact `Ad(exp(s X_i))` built from the series.
///
/// `ad_{X_i}` is nilpotent for translations, giving a polynomial in `s`, and
/// satisfies `A³ = −A` for rotations, giving `I − S·A + (1 − C)·A²`.
pub fn adjoint_closed_form(i: usize) -> Result<TrigPolyMatrix> {
    check_generator(i)?;
    let ad: Mat6<Rational> = ad_matrix(&AlgebraElement::basis(i));
    let lift = |m: &Mat6<Rational>| m.map(|q| TrigPoly::constant(q.clone()));

    let mut powers = vec![Mat6::<Rational>::identity()];
    while powers.len() <= 6 && !powers.last().unwrap().is_zero() {
        let next = powers.last().unwrap().mul(&ad);
        powers.push(next);
    }
    if powers.last().unwrap().is_zero() {
        let mut out = TrigPolyMatrix::zero();
        let mut coeff = TrigPoly::one();
        for (k, power) in powers.iter().enumerate() {
            if k > 0 {
                coeff = coeff * TrigPoly::param() * TrigPoly::constant(crate::scalar::rational(-1, k as i64));
            }
            out = out.add(&lift(power).scale(&coeff));
        }
        return Ok(out);
    }

    let sq = ad.mul(&ad);
    let cube = sq.mul(&ad);
    if cube.add(&ad).is_zero() {
        let identity = TrigPolyMatrix::identity();
        let linear = lift(&ad).scale(&-TrigPoly::sin());
        let quadratic = lift(&sq).scale(&(TrigPoly::one() - TrigPoly::cos()));
        return Ok(identity.add(&linear).add(&quadratic));
    }
    Err(Error::InvalidArgument(format!("ad(X_{i}) is neither nilpotent nor a rotation generator")))
}
