//! Polynomials in `s`, `C`, `S` with rational coefficients, reduced modulo
//! `C² + S² = 1` so that `C` appears with degree at most one.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{format_rational, int, Rational, Ring};

/// Exponents of `s^s · C^c · S^sn` with `c ∈ {0, 1}` in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrigMonomial {
    pub s: u32,
    pub c: u32,
    pub sn: u32,
}

impl TrigMonomial {
    const ONE: TrigMonomial = TrigMonomial { s: 0, c: 0, sn: 0 };
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TrigPoly {
    terms: BTreeMap<TrigMonomial, Rational>,
}

impl TrigPoly {
    pub fn constant(q: Rational) -> Self {
        let mut p = Self::default();
        p.add_term(TrigMonomial::ONE, q);
        p
    }

    /// The parameter `s` itself.
    pub fn param() -> Self {
        Self::monomial(TrigMonomial { s: 1, c: 0, sn: 0 })
    }

    /// `C = cos s`.
    pub fn cos() -> Self {
        Self::monomial(TrigMonomial { s: 0, c: 1, sn: 0 })
    }

    /// `S = sin s`.
    pub fn sin() -> Self {
        Self::monomial(TrigMonomial { s: 0, c: 0, sn: 1 })
    }

    fn monomial(m: TrigMonomial) -> Self {
        let mut p = Self::default();
        p.add_term(m, Rational::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TrigMonomial, &Rational)> {
        self.terms.iter()
    }

    /// Adds `q · m`, reducing `C^2 → 1 − S^2` until `m` is in normal form.
    fn add_term(&mut self, m: TrigMonomial, q: Rational) {
        if q.is_zero() {
            return;
        }
        if m.c >= 2 {
            let lowered = TrigMonomial { c: m.c - 2, ..m };
            self.add_term(lowered, q.clone());
            self.add_term(TrigMonomial { sn: m.sn + 2, ..lowered }, -q);
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Degree in `C`; at most 1 for every value built by this type.
    pub fn cos_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.c).max().unwrap_or(0)
    }

    /// Whether `C` or `S` occurs.
    pub fn is_trigonometric(&self) -> bool {
        self.terms.keys().any(|m| m.c > 0 || m.sn > 0)
    }

    pub fn evaluate(&self, sigma: f64) -> f64 {
        let (sin, cos) = sigma.sin_cos();
        self.terms
            .iter()
            .map(|(m, q)| {
                let coeff = num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN);
                coeff * sigma.powi(m.s as i32) * cos.powi(m.c as i32) * sin.powi(m.sn as i32)
            })
            .sum()
    }
}

impl Zero for TrigPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for TrigPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for TrigPoly {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (m, q) in rhs.terms {
            self.add_term(m, q);
        }
        self
    }
}

impl Sub for TrigPoly {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for TrigPoly {
    type Output = Self;

    fn neg(mut self) -> Self {
        for q in self.terms.values_mut() {
            *q = -q.clone();
        }
        self
    }
}

impl Mul for TrigPoly {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::default();
        for (a, p) in &self.terms {
            for (b, q) in &rhs.terms {
                let m = TrigMonomial { s: a.s + b.s, c: a.c + b.c, sn: a.sn + b.sn };
                out.add_term(m, p.clone() * q.clone());
            }
        }
        out
    }
}

impl Ring for TrigPoly {
    fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, q)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            for (name, exp) in [("s", m.s), ("C", m.c), ("S", m.sn)] {
                match exp {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            let magnitude = q.abs();
            let body = match (factors.is_empty(), magnitude.is_one()) {
                (true, _) => format_rational(&magnitude),
                (false, true) => factors.join("*"),
                (false, false) => format!("{}*{}", format_rational(&magnitude), factors.join("*")),
            };
            match (n, q.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}
