use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::local::LocalOrdering;
use crate::poly::{Monomial, VarContext};
use crate::scalar::{Field, Scalar};

/// Sparse polynomial with exact coefficients.
///
/// Terms are kept sorted strictly descending in the local ordering, with no
/// zero coefficients, so the representation is canonical and the leading
/// term is always `terms[0]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

fn order(a: &Monomial, b: &Monomial) -> Ordering {
    LocalOrdering.compare(a, b)
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn one(nvars: usize, field: Field) -> Self {
        Self::constant(nvars, field.one())
    }

    pub fn variable(nvars: usize, var: usize, field: Field) -> Self {
        Self::term(field.one(), Monomial::variable(nvars, var))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Self {
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order(&b.0, &a.0));
        Self { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The field of the coefficients, or `None` for the zero polynomial.
    pub fn field(&self) -> Option<Field> {
        self.terms.first().map(|(_, c)| c.field())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximal total degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    /// Lowest total degree of a term (the order at the origin).
    pub fn order(&self) -> u32 {
        self.leading_monomial().map_or(0, |m| m.degree())
    }

    /// `deg(p) - deg(LM(p))`.
    pub fn ecart(&self) -> u32 {
        self.degree() - self.order()
    }

    pub fn constant_term(&self) -> Option<&Scalar> {
        self.terms
            .first()
            .filter(|(m, _)| m.is_one())
            .map(|(_, c)| c)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// A unit of the local ring: nonzero constant term.
    pub fn is_local_unit(&self) -> bool {
        self.constant_term().is_some()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms
            .binary_search_by(|(t, _)| order(m, t))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// `self - c * m * other`, by a single merge pass.
    pub fn sub_mul_term(&self, c: &Scalar, m: &Monomial, other: &Polynomial) -> Polynomial {
        let neg = -c;
        let shifted = other.terms.iter().map(|(t, a)| (t.mul(m), a * &neg));
        merge(self.nvars, self.terms.iter().cloned(), shifted)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        merge(
            self.nvars,
            self.terms.iter().cloned(),
            other.terms.iter().cloned(),
        )
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        merge(
            self.nvars,
            self.terms.iter().cloned(),
            other.terms.iter().map(|(m, c)| (m.clone(), -c)),
        )
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        if other.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(c, m);
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(c, m);
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order(&b.0, &a.0));
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, e: u32, field: Field) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars, field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(var);
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            Some((Monomial::new(exps), c.mul_int(e as i64)))
        });
        // Distinct monomials with the same exponent drop stay distinct, so
        // only the order needs restoring (and zero coefficients mod p removed).
        let mut terms: Vec<_> = terms.filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order(&b.0, &a.0));
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Drops every term of total degree `>= bound`.
    pub fn truncate_below(&self, bound: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < bound)
                .cloned()
                .collect(),
        }
    }

    /// Re-reads every coefficient in `field`; only rational inputs can be converted.
    pub fn to_field(&self, field: Field) -> crate::Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let q = c.as_rational().ok_or_else(|| {
                crate::IndexError::Input("only rational polynomials can change field".into())
            })?;
            let v = field.from_rational(q)?;
            if !v.is_zero() {
                terms.push((m.clone(), v));
            }
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn display<'a>(&'a self, vars: &'a VarContext) -> DisplayPoly<'a> {
        DisplayPoly { poly: self, vars }
    }
}

fn merge(
    nvars: usize,
    a: impl Iterator<Item = (Monomial, Scalar)>,
    b: impl Iterator<Item = (Monomial, Scalar)>,
) -> Polynomial {
    let mut a = a.peekable();
    let mut b = b.peekable();
    let mut terms = Vec::new();
    loop {
        let next = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => a.next().unwrap(),
            (None, Some(_)) => b.next().unwrap(),
            (Some(x), Some(y)) => match order(&x.0, &y.0) {
                Ordering::Greater => a.next().unwrap(),
                Ordering::Less => b.next().unwrap(),
                Ordering::Equal => {
                    let (m, c) = a.next().unwrap();
                    let (_, d) = b.next().unwrap();
                    (m, &c + &d)
                }
            },
        };
        if !next.1.is_zero() {
            terms.push(next);
        }
    }
    Polynomial { nvars, terms }
}

/// Canonical text form: `x^2+y^2+z*w`, `1/4*w^2`, `-2*x`, `0`.
pub struct DisplayPoly<'a> {
    poly: &'a Polynomial,
    vars: &'a VarContext,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let names = self.vars.names();
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.write_with(f, names)?;
            }
        }
        Ok(())
    }
}
