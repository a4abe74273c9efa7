//! Parser for the textual polynomial form produced by `Display`.

use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::jet::poly::{JetPolynomial, Var};
use crate::scalar::{parse_rational, Rational};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<JetPolynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<JetPolynomial> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                self.skip_ws();
                let at = self.pos;
                let d = self.number()?;
                if d.is_zero() {
                    self.pos = at;
                    return self.err("division by zero");
                }
                acc = acc.scale(&(Rational::from_integer(1.into()) / d));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<JetPolynomial> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let n: u32 = match self.src[start..self.pos].parse() {
                Ok(n) if n <= 64 => n,
                _ => {
                    self.pos = start;
                    return self.err("expected an exponent between 0 and 64");
                }
            };
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<Rational> {
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let digits = |p: &mut usize| {
            while *p < bytes.len() && bytes[*p].is_ascii_digit() {
                *p += 1;
            }
        };
        let mut p = self.pos;
        digits(&mut p);
        if p < bytes.len() && bytes[p] == b'.' {
            p += 1;
            digits(&mut p);
        }
        if p < bytes.len() && (bytes[p] == b'e' || bytes[p] == b'E') {
            let mut q = p + 1;
            if q < bytes.len() && (bytes[q] == b'+' || bytes[q] == b'-') {
                q += 1;
            }
            let before = q;
            digits(&mut q);
            if q > before {
                p = q;
            }
        }
        self.pos = p;
        match parse_rational(&self.src[start..p]) {
            Some(r) => Ok(r),
            None => {
                self.pos = start;
                self.err("expected a number")
            }
        }
    }

    fn atom(&mut self) -> Result<JetPolynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => Ok(JetPolynomial::constant(self.number()?)),
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let mut name = self.src[start..self.pos].to_string();
                while let Some(c) = self.peek().filter(|c| *c == '\'' || *c == '′') {
                    self.pos += c.len_utf8();
                    name.push('\'');
                }
                match Var::from_name(&name) {
                    Some(v) => Ok(JetPolynomial::var(v)),
                    None => {
                        self.pos = start;
                        self.err(format!("unknown variable '{name}'"))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial.
pub fn parse_polynomial(text: &str) -> Result<JetPolynomial> {
    let mut p = Parser { src: text, pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

impl FromStr for JetPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}
