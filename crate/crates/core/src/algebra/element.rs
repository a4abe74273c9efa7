use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::scalar::{format_rational, Field, Rational, Ring};

/// Coordinates `(a1, .., a6)` of `Σ a_i X_i`. The translation part is
/// `v = (a1, a2, a3)` and the rotation part `ω = (a4, a5, a6)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<T> {
    coeffs: [T; 6],
}

impl<T> AlgebraElement<T> {
    pub fn new(coeffs: [T; 6]) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[T; 6] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> [T; 6] {
        self.coeffs
    }

    /// Coefficient of `X_i` for `i` in `1..=6`.
    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i - 1]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> AlgebraElement<U> {
        AlgebraElement { coeffs: std::array::from_fn(|k| f(&self.coeffs[k])) }
    }
}

impl<T: Ring> AlgebraElement<T> {
    pub fn zero() -> Self {
        Self { coeffs: std::array::from_fn(|_| T::zero()) }
    }

    /// Basis vector `X_i`, `i` in `1..=6`.
    pub fn basis(i: usize) -> Self {
        assert!((1..=6).contains(&i), "basis index {i} outside 1..=6");
        let mut e = Self::zero();
        e.coeffs[i - 1] = T::one();
        e
    }

    pub fn from_ints(coeffs: [i64; 6]) -> Self {
        Self { coeffs: coeffs.map(T::from_int) }
    }

    pub fn translation(&self) -> [T; 3] {
        std::array::from_fn(|k| self.coeffs[k].clone())
    }

    pub fn rotation(&self) -> [T; 3] {
        std::array::from_fn(|k| self.coeffs[k + 3].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.map(|c| factor.clone() * c.clone())
    }

    /// `‖ω‖²`, invariant on adjoint orbits.
    pub fn rotation_norm_sq(&self) -> T {
        let w = self.rotation();
        w.iter().fold(T::zero(), |acc, c| acc + c.clone() * c.clone())
    }

    /// `v·ω`, invariant on adjoint orbits.
    pub fn translation_dot_rotation(&self) -> T {
        let (v, w) = (self.translation(), self.rotation());
        (0..3).fold(T::zero(), |acc, k| acc + v[k].clone() * w[k].clone())
    }
}

impl<T: Field> AlgebraElement<T> {
    pub fn to_f64(&self) -> AlgebraElement<f64> {
        self.map(Field::to_f64)
    }
}

impl AlgebraElement<f64> {
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }
}

impl<T: Ring> Add for AlgebraElement<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (a, b) in out.coeffs.iter_mut().zip(rhs.coeffs) {
            *a = a.clone() + b;
        }
        out
    }
}

impl<T: Ring> Sub for AlgebraElement<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for AlgebraElement<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.map(|c| -c) }
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (usize, bool, String)>) -> fmt::Result {
    let mut first = true;
    for (i, negative, magnitude) in terms {
        let coeff = if magnitude == "1" { String::new() } else { format!("{magnitude}*") };
        match (first, negative) {
            (true, false) => write!(f, "{coeff}X_{i}")?,
            (true, true) => write!(f, "-{coeff}X_{i}")?,
            (false, false) => write!(f, " + {coeff}X_{i}")?,
            (false, true) => write!(f, " - {coeff}X_{i}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for AlgebraElement<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k + 1, c.is_negative(), format_rational(&c.abs()))),
        )
    }
}

impl fmt::Display for AlgebraElement<f64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0.0)
                .map(|(k, c)| (k + 1, *c < 0.0, format!("{}", c.abs()))),
        )
    }
}

impl Serialize for AlgebraElement<f64> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl Serialize for AlgebraElement<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let text: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        text.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn accessors_partition_coordinates() {
        let x = AlgebraElement::<Rational>::from_ints([1, 2, 3, 4, 5, 6]);
        assert_eq!(x.translation(), [int(1), int(2), int(3)]);
        assert_eq!(x.rotation(), [int(4), int(5), int(6)]);
        assert_eq!(x.translation_dot_rotation(), int(32));
        assert_eq!(x.rotation_norm_sq(), int(77));
    }

    #[test]
    fn display_is_readable() {
        let x = AlgebraElement::<Rational>::from_ints([0, 0, -2, 0, 1, 0]);
        assert_eq!(x.to_string(), "-2*X_3 + X_5");
        assert_eq!(AlgebraElement::<Rational>::zero().to_string(), "0");
        assert_eq!(AlgebraElement::<f64>::new([0.0, -1.0, 0.0, 0.0, 0.0, 0.5]).to_string(), "-X_2 + 0.5*X_6");
    }
}
