//! Exact integer linear algebra: matrices, Smith normal form, and the
//! calculus of finitely generated abelian groups.
//!
//! Everything in this module is generic over [`Scalar`], a signed integer
//! type; the crate root fixes `Int = BigInt` and the other modules work
//! with that alias. `i64`/`i128` instantiations are useful in tests and
//! wherever coefficients are provably small.

mod abelian;
mod mat;
mod snf;

pub use abelian::{
    preimage_lattice, quotient_presentation, subquotient, FinAbGroup, GroupMap, Presentation,
    QuotientStructure, Slot,
};
pub use mat::{Matrix, Scalar};
pub use snf::{lattice_contains, smith_normal_form, solve_linear, Snf};
