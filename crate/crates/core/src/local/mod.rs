//! Computation in the local ring at the origin: standard bases, local
//! dimensions and finite-dimensional quotient algebras.

mod ordering;
mod quotient;
mod standard_basis;

pub use ordering::LocalOrdering;
pub use quotient::{quotient_algebra, QuotientAlgebra};
pub use standard_basis::{
    lift_membership, local_dimension, standard_basis, weak_normal_form, weak_normal_form_with_unit,
    DegreeCap, Lift, Membership, StandardBasis,
};
