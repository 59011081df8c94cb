//! Exact-arithmetic toolkit for topological K-theory computations on
//! homogeneous spaces.
//!
//! The crate is organized in layers:
//!
//! * [`exact`] — integer matrices, Smith normal form, and the calculus of
//!   finitely generated abelian groups (kernels, images, cokernels,
//!   subquotients) that everything else reduces to.
//! * [`chars`] — representation-ring characters as Laurent polynomials:
//!   conjugation, exterior powers, restriction along subgroup embeddings,
//!   fixed subrings of central involutions.
//! * [`tate`] — Tate cohomology of involutions on finitely generated
//!   abelian groups and rings.
//! * [`quotient`] — additive structure of Laurent polynomial quotient
//!   rings by window saturation.
//! * [`ahss`] — Atiyah–Hirzebruch spectral sequence pages for K and KO,
//!   comparison maps, and diagonal assembly.
//! * [`classes`] — truncated characteristic-class calculus: Chern,
//!   Pontryagin, Wu, and Stiefel–Whitney classes.
//! * [`criteria`] — decision procedures for surjectivity of the real
//!   Atiyah map on flag manifolds, low dimensions, and sphere products.
//! * [`berger`] — the full K/KO computation for the 13-dimensional
//!   Berger space `B13 = SU(5)/(Sp(2)·S1)`.
//!
//! The linear-algebra core is generic over the integer scalar via
//! [`exact::Scalar`]; the rest of the crate uses the concrete aliases
//! below, with arbitrary-precision integers throughout.

pub mod ahss;
pub mod berger;
pub mod chars;
pub mod classes;
pub mod criteria;
pub mod data;
mod error;
pub mod exact;
pub mod io;
pub mod quotient;
pub mod report;
pub mod tate;

pub use error::Error;

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// The scalar every high-level module computes with.
pub type Int = num_bigint::BigInt;

/// Integer matrix over [`Int`].
pub type IntMatrix = exact::Matrix<Int>;

/// Finitely generated abelian group in canonical form, over [`Int`].
pub type FinAbGroup = exact::FinAbGroup<Int>;

/// Presentation of an abelian group by generators and relator rows.
pub type Presentation = exact::Presentation<Int>;

/// Map between presented abelian groups.
pub type GroupMap = exact::GroupMap<Int>;

/// Convenience constructor for [`Int`] values.
pub fn int(v: i64) -> Int {
    Int::from(v)
}
