//! Sparse polynomials with rational coefficients on the second-order jet space.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, int, Rational};

/// Spatial direction of a total or partial derivative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    X,
    Y,
    Z,
}

impl Dir {
    pub const ALL: [Dir; 3] = [Dir::X, Dir::Y, Dir::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Dir {
        Dir::ALL[i]
    }
}

/// Variables in their monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    U,
    Ux,
    Uy,
    Uz,
    Uxx,
    Uxy,
    Uxz,
    Uyy,
    Uyz,
    Uzz,
    F,
    F1,
    F2,
}

pub const NVARS: usize = 16;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::X,
        Var::Y,
        Var::Z,
        Var::U,
        Var::Ux,
        Var::Uy,
        Var::Uz,
        Var::Uxx,
        Var::Uxy,
        Var::Uxz,
        Var::Uyy,
        Var::Uyz,
        Var::Uzz,
        Var::F,
        Var::F1,
        Var::F2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        [
            "x", "y", "z", "u", "u_x", "u_y", "u_z", "u_xx", "u_xy", "u_xz", "u_yy", "u_yz", "u_zz", "f", "f'", "f''",
        ][self.index()]
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    pub fn coordinate(d: Dir) -> Var {
        [Var::X, Var::Y, Var::Z][d.index()]
    }

    pub fn first(d: Dir) -> Var {
        [Var::Ux, Var::Uy, Var::Uz][d.index()]
    }

    pub fn second(a: Dir, b: Dir) -> Var {
        let (i, j) = if a <= b { (a, b) } else { (b, a) };
        match (i, j) {
            (Dir::X, Dir::X) => Var::Uxx,
            (Dir::X, Dir::Y) => Var::Uxy,
            (Dir::X, Dir::Z) => Var::Uxz,
            (Dir::Y, Dir::Y) => Var::Uyy,
            (Dir::Y, Dir::Z) => Var::Uyz,
            _ => Var::Uzz,
        }
    }

    /// Derivative order of a jet coordinate; `None` for base coordinates and atoms.
    pub fn jet_order(self) -> Option<usize> {
        match self.index() {
            3 => Some(0),
            4..=6 => Some(1),
            7..=12 => Some(2),
            _ => None,
        }
    }

    pub fn is_atom(self) -> bool {
        matches!(self, Var::F | Var::F1 | Var::F2)
    }
}

/// Exponent vector, ordered by total degree then lexicographically with
/// `x` most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u8; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> u8 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        Monomial(e)
    }

    fn with_exponent(&self, v: Var, e: u8) -> Monomial {
        let mut m = self.0;
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u8)> + '_ {
        Var::ALL.into_iter().map(|v| (v, self.exponent(v))).filter(|&(_, e)| e > 0)
    }

    /// Monomial restricted to (or with) the given variables.
    pub fn split(&self, keep: &[Var]) -> (Monomial, Monomial) {
        let mut inside = [0; NVARS];
        let mut outside = self.0;
        for v in keep {
            inside[v.index()] = self.0[v.index()];
            outside[v.index()] = 0;
        }
        (Monomial(inside), Monomial(outside))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{e}", v.name())?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Polynomial in the jet variables with exact coefficients; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct JetPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl JetPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// Highest jet order present; `None` when only base coordinates and atoms appear.
    pub fn jet_order(&self) -> Option<usize> {
        self.terms.keys().flat_map(|m| m.vars().filter_map(|(v, _)| v.jet_order())).max()
    }

    /// Whether only the listed variables occur.
    pub fn only_in(&self, vars: &[Var]) -> bool {
        self.terms.keys().all(|m| m.vars().all(|(v, _)| vars.contains(&v)))
    }

    /// Formal partial derivative; atoms are treated as independent symbols.
    pub fn partial(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                out.add_term(m.with_exponent(v, e - 1), c * int(e as i64));
            }
        }
        out
    }

    /// Total derivative `D_dir`, with `f` differentiated along `u`.
    /// Fails when a second-order coordinate or `f''` would be differentiated.
    pub fn total_derivative(&self, dir: Dir) -> Result<Self> {
        let mut out = self.partial(Var::coordinate(dir));
        for m in self.terms.keys() {
            for (v, _) in m.vars() {
                match v {
                    Var::Uxx | Var::Uxy | Var::Uxz | Var::Uyy | Var::Uyz | Var::Uzz => {
                        return Err(Error::OrderOverflow(m.to_string()))
                    }
                    Var::F2 => return Err(Error::SourceDerivativeOverflow(m.to_string())),
                    _ => {}
                }
            }
        }
        let chain = |var: Var, by: JetPolynomial, out: &mut JetPolynomial| {
            let d = self.partial(var);
            if !d.is_zero() {
                *out = &*out + &(&d * &by);
            }
        };
        let ui = Self::var(Var::first(dir));
        chain(Var::U, ui.clone(), &mut out);
        for k in Dir::ALL {
            chain(Var::first(k), Self::var(Var::second(k, dir)), &mut out);
        }
        chain(Var::F, &Self::var(Var::F1) * &ui, &mut out);
        chain(Var::F1, &Self::var(Var::F2) * &ui, &mut out);
        Ok(out)
    }

    /// Replaces every occurrence of `v` by `by`.
    pub fn substitute(&self, v: Var, by: &JetPolynomial) -> Self {
        let mut powers: Vec<JetPolynomial> = vec![Self::one()];
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * by;
                powers.push(next);
            }
            let rest = Self::term(c.clone(), m.with_exponent(v, 0));
            out = &out + &(&rest * &powers[e]);
        }
        out
    }

    /// Groups terms by their part in `outer`; each group is a polynomial in the remaining variables.
    pub fn collect(&self, outer: &[Var]) -> BTreeMap<Monomial, JetPolynomial> {
        let mut out: BTreeMap<Monomial, JetPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (key, rest) = m.split(outer);
            out.entry(key).or_default().add_term(rest, c.clone());
        }
        out
    }

    pub fn evaluate(&self, values: &[f64; NVARS]) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(m, c)| {
                let mono: f64 = m.vars().map(|(v, e)| values[v.index()].powi(e as i32)).product();
                c.to_f64().unwrap_or(f64::NAN) * mono
            })
            .sum()
    }
}

impl Add for &JetPolynomial {
    type Output = JetPolynomial;

    fn add(self, rhs: &JetPolynomial) -> JetPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &JetPolynomial {
    type Output = JetPolynomial;

    fn sub(self, rhs: &JetPolynomial) -> JetPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &JetPolynomial {
    type Output = JetPolynomial;

    fn mul(self, rhs: &JetPolynomial) -> JetPolynomial {
        let mut out = JetPolynomial::zero();
        for (a, p) in &self.terms {
            for (b, q) in &rhs.terms {
                out.add_term(a.mul(b), p * q);
            }
        }
        out
    }
}

impl Neg for &JetPolynomial {
    type Output = JetPolynomial;

    fn neg(self) -> JetPolynomial {
        JetPolynomial { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for JetPolynomial {
            type Output = JetPolynomial;
            fn $f(self, rhs: JetPolynomial) -> JetPolynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&JetPolynomial> for JetPolynomial {
            type Output = JetPolynomial;
            fn $f(self, rhs: &JetPolynomial) -> JetPolynomial {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for JetPolynomial {
    type Output = JetPolynomial;
    fn neg(self) -> JetPolynomial {
        -&self
    }
}

impl fmt::Display for JetPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_one = *m == Monomial::one();
            if magnitude.is_one() && !is_one {
                write!(f, "{m}")?;
            } else if is_one {
                write!(f, "{}", format_rational(&magnitude))?;
            } else {
                write!(f, "{}*{m}", format_rational(&magnitude))?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for JetPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn v(var: Var) -> JetPolynomial {
        JetPolynomial::var(var)
    }

    #[test]
    fn total_derivative_examples() {
        assert_eq!(v(Var::U).total_derivative(Dir::X).unwrap(), v(Var::Ux));
        let p = &v(Var::X) * &v(Var::Uy);
        assert_eq!(p.total_derivative(Dir::X).unwrap(), &v(Var::Uy) + &(&v(Var::X) * &v(Var::Uxy)));
        let u2 = v(Var::U).pow(2);
        assert_eq!(u2.total_derivative(Dir::Z).unwrap(), (&v(Var::U) * &v(Var::Uz)).scale(&int(2)));
        assert_eq!(v(Var::F).total_derivative(Dir::Y).unwrap(), &v(Var::F1) * &v(Var::Uy));
    }

    #[test]
    fn overflow_names_the_monomial() {
        let e = v(Var::Uxy).total_derivative(Dir::X).unwrap_err();
        assert_eq!(e, Error::OrderOverflow("u_xy".into()));
        assert!(matches!(v(Var::F2).total_derivative(Dir::X), Err(Error::SourceDerivativeOverflow(_))));
    }

    #[test]
    fn canonical_form_ignores_construction_order() {
        let a = &(&v(Var::X) + &v(Var::Uzz)) * &v(Var::F);
        let b = &(&v(Var::F) * &v(Var::Uzz)) + &(&v(Var::X) * &v(Var::F));
        assert_eq!(a, b);
        assert!((&a - &b).is_zero());
    }

    #[test]
    fn printing_is_graded() {
        let p = &(&v(Var::Y).pow(2) + &v(Var::X)) - &JetPolynomial::constant(rational(1, 2));
        assert_eq!(p.to_string(), "-1/2 + x + y^2");
    }

    #[test]
    fn substitution_expands_powers() {
        let p = v(Var::Uzz).pow(2);
        let on = &v(Var::F) - &v(Var::Uxx);
        let q = p.substitute(Var::Uzz, &on);
        assert_eq!(q, on.pow(2));
    }
}
