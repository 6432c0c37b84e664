//! The small Gobelin: a double complex over `B = O/(X)` woven from the
//! Koszul complex of `f` and the divided-power complex driven by `c`, and
//! the explicit low-codimension matrices it specializes to.

mod basis;
mod equivalence;
mod printed;
mod weave;

pub use basis::{monomials_of_degree, term_basis, term_rank, WeaveBasisElement, WeaveTerm};
pub use equivalence::signed_permutation_equivalent;
pub use printed::{printed_complex, PrintedFamily};
pub use weave::{build_complex, weave_differential, BMatrix, Construction, SmallGobelinComplex};
