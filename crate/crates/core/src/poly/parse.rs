//! Text form of polynomials.
//!
//! ```text
//! expression  := ['+'|'-'] term (('+'|'-') term)*
//! term        := factor ('*' factor)*
//! factor      := coefficient | variable ('^' uint)?
//! coefficient := int | int '/' uint
//! ```
//!
//! Whitespace is ignored and multiplication is always explicit.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{IndexError, Result};
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

/// Ordered list of variable names shared by every polynomial of a job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarContext {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut out = Self {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            let name = name.as_ref().trim();
            if !is_identifier(name) {
                return Err(IndexError::Input(format!("invalid variable name '{name}'")));
            }
            if out
                .index
                .insert(name.to_string(), out.names.len())
                .is_some()
            {
                return Err(IndexError::Input(format!("duplicate variable '{name}'")));
            }
            out.names.push(name.to_string());
        }
        if out.names.is_empty() {
            return Err(IndexError::Input("no variables declared".into()));
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses `text` into a canonical rational polynomial over `vars`.
pub fn parse_polynomial(text: &str, vars: &VarContext) -> Result<Polynomial> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let poly = parser.expression()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VarContext,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> IndexError {
        IndexError::Syntax {
            line: 1,
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expression(&mut self) -> Result<Polynomial> {
        let nvars = self.vars.len();
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            None => return Err(self.error("empty expression")),
            _ => false,
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { -c } else { c }));
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(nvars, terms))
    }

    fn term(&mut self) -> Result<(Monomial, Scalar)> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = BigRational::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.coefficient()?,
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let (var, e) = self.power()?;
                    exps[var] = exps[var]
                        .checked_add(e)
                        .ok_or_else(|| self.error("exponent overflow"))?;
                }
                Some(_) => return Err(self.error("expected a coefficient or a variable")),
                None => return Err(self.error("unexpected end of input")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(exps), Scalar::Rational(coeff)))
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse as integer"))
    }

    fn coefficient(&mut self) -> Result<BigRational> {
        let num = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(self.error("malformed rational coefficient: missing denominator"));
            }
            let den = self.digits()?;
            if den.is_zero() {
                return Err(self.error("malformed rational coefficient: zero denominator"));
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn power(&mut self) -> Result<(usize, u32)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        let var = self.vars.position(name).ok_or_else(|| IndexError::Syntax {
            line: 1,
            column: start + 1,
            message: format!("unknown variable '{name}'"),
        })?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.digits()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            return Ok((var, e));
        }
        Ok((var, 1))
    }
}
