use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{IndexError, Result};
use crate::homology::ScalarMatrix;
use crate::local::StandardBasis;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::{Field, Scalar};

/// A zero-dimensional local quotient `O_0 / I` with its staircase basis.
///
/// Every monomial of degree at least `corner` lies in the local ideal (its
/// leading ideal contains all of them), which makes full reduction finite.
#[derive(Debug)]
pub struct QuotientAlgebra {
    reducer: StandardBasis,
    field: Field,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    corner: u32,
    cache: Mutex<HashMap<Polynomial, Arc<ScalarMatrix>>>,
}

/// Installs the staircase basis and reducer of a zero-dimensional standard basis.
pub fn quotient_algebra(sb: StandardBasis) -> Result<QuotientAlgebra> {
    let basis = sb.staircase()?;
    let field = sb
        .generators()
        .iter()
        .find_map(Polynomial::field)
        .unwrap_or(Field::Rational);
    let corner = basis.iter().map(|m| m.degree() + 1).max().unwrap_or(0);
    let index = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    Ok(QuotientAlgebra {
        reducer: sb,
        field,
        basis,
        index,
        corner,
        cache: Mutex::new(HashMap::new()),
    })
}

impl QuotientAlgebra {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.reducer.nvars()
    }

    pub fn reducer(&self) -> &StandardBasis {
        &self.reducer
    }

    /// The unique representative of `p` supported on the staircase.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let nvars = p.nvars();
        let mut done: Vec<(Monomial, Scalar)> = Vec::new();
        let mut h = p.truncate_below(self.corner);
        while let Some((lm, lc)) = h.leading_term() {
            let reducer = self
                .reducer
                .generators()
                .iter()
                .zip(self.reducer.leading_monomials())
                .find(|(_, l)| l.divides(lm));
            match reducer {
                Some((g, l)) => {
                    let m = l.quotient_of(lm).unwrap();
                    let c = lc / g.leading_coefficient().unwrap();
                    h = h.sub_mul_term(&c, &m, g).truncate_below(self.corner);
                }
                None => {
                    let (m, c) = (lm.clone(), lc.clone());
                    done.push((m.clone(), c.clone()));
                    h = h.sub(&Polynomial::term(c, m));
                }
            }
        }
        Polynomial::from_terms(nvars, done)
    }

    /// Coefficient vector of `reduce(p)` in the staircase basis.
    pub fn coordinates(&self, p: &Polynomial) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.basis.len()];
        for (m, c) in self.reduce(p).terms() {
            out[self.index[m]] = c.clone();
        }
        out
    }

    pub fn from_coordinates(&self, v: &[Scalar]) -> Polynomial {
        Polynomial::from_terms(
            self.nvars(),
            self.basis.iter().cloned().zip(v.iter().cloned()),
        )
    }

    /// Matrix of `b -> reduce(p*b)` in the staircase basis; column `j` holds
    /// the coordinates of `p * basis[j]`.
    pub fn multiplication_matrix(&self, p: &Polynomial) -> Arc<ScalarMatrix> {
        let key = self.reduce(p);
        if let Some(m) = self.cache.lock().expect("cache lock").get(&key) {
            return Arc::clone(m);
        }
        let d = self.basis.len();
        let mut m = ScalarMatrix::zeros(d, d, self.field);
        if !key.is_zero() {
            let one = self.field.one();
            for (j, b) in self.basis.iter().enumerate() {
                let col = self.coordinates(&key.mul_term(&one, b));
                for (i, v) in col.into_iter().enumerate() {
                    m.set(i, j, v);
                }
            }
        }
        let m = Arc::new(m);
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, Arc::clone(&m));
        m
    }

    /// Inverse of a unit of the quotient.
    pub fn inverse(&self, u: &Polynomial) -> Result<Polynomial> {
        let m = self.multiplication_matrix(u);
        let one = self.coordinates(&Polynomial::one(self.nvars(), self.field));
        m.solve(&one)
            .map(|x| self.from_coordinates(&x))
            .ok_or_else(|| {
                IndexError::Inconsistency("element is not a unit of the quotient".into())
            })
    }
}
