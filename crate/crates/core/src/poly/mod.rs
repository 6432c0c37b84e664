//! Exact sparse multivariate polynomials, polynomial matrices and their text form.

mod matrix;
mod monomial;
mod parse;
mod polynomial;

pub use matrix::{subsets, PolyMatrix};
pub use monomial::Monomial;
pub use parse::{parse_polynomial, VarContext};
pub use polynomial::{DisplayPoly, Polynomial};
