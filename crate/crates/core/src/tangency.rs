//! The tangency relation `phi X = c f` and Greuel's invariant `tau'`.

use crate::error::{IndexError, Result};
use crate::local::{lift_membership, local_dimension, DegreeCap, Membership};
use crate::poly::{PolyMatrix, Polynomial};

/// A cofactor matrix `c` whose rows may carry local-unit denominators:
/// `c[a][b] = numerators[a][b] / units[a]`, so that
/// `units[a] * (phi X)_a == sum_b numerators[a][b] * f_b` exactly.
///
/// A matrix read from a job, or one lifted without denominators, has every
/// unit equal to `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofactor {
    numerators: PolyMatrix,
    units: Vec<Polynomial>,
}

impl Cofactor {
    pub fn from_matrix(c: PolyMatrix) -> Result<Self> {
        if c.rows() != c.cols() {
            return Err(IndexError::Shape(format!(
                "cofactor matrix must be square, got {}x{}",
                c.rows(),
                c.cols()
            )));
        }
        let field = c
            .entries()
            .iter()
            .find_map(Polynomial::field)
            .unwrap_or(crate::Field::Rational);
        let units = vec![Polynomial::one(c.nvars(), field); c.rows()];
        Ok(Self {
            numerators: c,
            units,
        })
    }

    pub fn numerators(&self) -> &PolyMatrix {
        &self.numerators
    }

    pub fn units(&self) -> &[Polynomial] {
        &self.units
    }

    pub fn k(&self) -> usize {
        self.numerators.rows()
    }

    /// The plain polynomial matrix, when no row has a denominator.
    pub fn as_matrix(&self) -> Option<&PolyMatrix> {
        self.units
            .iter()
            .all(|u| u.is_constant() && u.leading_coefficient().is_some_and(|c| c.is_one()))
            .then_some(&self.numerators)
    }

    /// Checks `units[a] * (phi X)_a == sum_b numerators[a][b] f_b` for every row.
    pub fn verify(&self, f: &[Polynomial], x: &[Polynomial]) -> Result<bool> {
        let nvars = x.len();
        check_shapes(f, x, &self.numerators)?;
        let phi = PolyMatrix::jacobian(f, nvars);
        let lhs = phi.apply(x)?;
        let rhs = self.numerators.apply(f)?;
        Ok(lhs
            .iter()
            .zip(&rhs)
            .zip(&self.units)
            .all(|((l, r), u)| &u.mul(l) == r))
    }
}

fn check_shapes(f: &[Polynomial], x: &[Polynomial], c: &PolyMatrix) -> Result<()> {
    let k = f.len();
    if c.rows() != k || c.cols() != k {
        return Err(IndexError::Shape(format!(
            "c must be {k}x{k}, got {}x{}",
            c.rows(),
            c.cols()
        )));
    }
    if let Some(p) = f.iter().chain(x).find(|p| p.nvars() != x.len()) {
        return Err(IndexError::Shape(format!(
            "X has {} components but polynomials live in {} variables",
            x.len(),
            p.nvars()
        )));
    }
    Ok(())
}

/// `true` iff `phi X == c f` holds exactly, with `phi` the Jacobian of `f`.
pub fn verify_tangency(f: &[Polynomial], x: &[Polynomial], c: &PolyMatrix) -> Result<bool> {
    check_shapes(f, x, c)?;
    let phi = PolyMatrix::jacobian(f, x.len());
    Ok(phi.apply(x)? == c.apply(f)?)
}

/// Recovers a cofactor matrix by lifting every entry of `phi X` against the
/// local ideal `(f)`. Rows come back without denominators whenever the
/// division needs no non-constant unit.
pub fn compute_cofactor(f: &[Polynomial], x: &[Polynomial], cap: DegreeCap) -> Result<Cofactor> {
    let nvars = x.len();
    let k = f.len();
    let phi = PolyMatrix::jacobian(f, nvars);
    let phi_x = phi.apply(x)?;
    let mut numerators = PolyMatrix::zeros(k, k, nvars);
    let mut units = Vec::with_capacity(k);
    for (a, g) in phi_x.iter().enumerate() {
        match lift_membership(g, f, cap)? {
            Membership::Member(lift) => {
                for (b, q) in lift.quotients.into_iter().enumerate() {
                    numerators.set(a, b, q);
                }
                units.push(lift.unit);
            }
            Membership::NotMember => {
                return Err(IndexError::NotTangent(format!(
                    "entry {} of phi X is not in the local ideal (f)",
                    a + 1
                )))
            }
        }
    }
    let c = Cofactor { numerators, units };
    if !c.verify(f, x)? {
        return Err(IndexError::Inconsistency(
            "computed cofactor fails the tangency identity".into(),
        ));
    }
    Ok(c)
}

/// `dim O_0 / ((f) + I_k(phi))`.
pub fn tau_prime(f: &[Polynomial], nvars: usize, cap: DegreeCap) -> Result<usize> {
    let k = f.len();
    if k == 0 || k > nvars {
        return Err(IndexError::Shape(format!(
            "{k} equations in {nvars} variables"
        )));
    }
    let phi = PolyMatrix::jacobian(f, nvars);
    let mut gens = f.to_vec();
    gens.extend(phi.k_minors(k)?);
    if gens.iter().all(Polynomial::is_zero) {
        return Err(IndexError::NotIsolatedSingularity);
    }
    match local_dimension(&gens, cap) {
        Err(IndexError::NotZeroDimensional) => Err(IndexError::NotIsolatedSingularity),
        other => other,
    }
}

/// Validated input of the index computation.
#[derive(Clone, Debug)]
pub struct TangencyData {
    pub f: Vec<Polynomial>,
    pub x: Vec<Polynomial>,
    pub c: Option<Cofactor>,
    pub phi: PolyMatrix,
}

impl TangencyData {
    pub fn new(f: Vec<Polynomial>, x: Vec<Polynomial>, c: Option<PolyMatrix>) -> Result<Self> {
        let nvars = x.len();
        if f.is_empty() {
            return Err(IndexError::Input(
                "at least one equation is required".into(),
            ));
        }
        if nvars <= f.len() {
            return Err(IndexError::Input(format!(
                "n must be positive: {} equations in {} variables",
                f.len(),
                nvars
            )));
        }
        let c = c.map(Cofactor::from_matrix).transpose()?;
        if let Some(c) = &c {
            check_shapes(&f, &x, c.numerators())?;
        }
        let phi = PolyMatrix::jacobian(&f, nvars);
        Ok(Self { f, x, c, phi })
    }

    pub fn ambient_dim(&self) -> usize {
        self.x.len()
    }

    pub fn codim(&self) -> usize {
        self.f.len()
    }

    pub fn dim(&self) -> usize {
        self.x.len() - self.f.len()
    }
}
