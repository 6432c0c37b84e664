//! Homological index of a holomorphic vector field tangent to an isolated
//! complete intersection singularity, computed by exact local linear algebra.
//!
//! The computation runs over the finite-dimensional algebra `B = O_0/(X)`:
//! a small double complex woven from the Koszul data of the defining
//! equations `f` and the tangency cofactors `c` (with `phi X = c f`) gives
//! the lower homology of the contraction complex of Kähler forms, and
//! Greuel's `tau' = dim O_V / I_k(phi)` gives the top one.

pub mod error;
pub mod gobelin;
pub mod homology;
pub mod local;
pub mod pipeline;
pub mod poly;
pub mod scalar;
pub mod tangency;

pub use error::{IndexError, Result};
pub use scalar::{Field, Scalar};
