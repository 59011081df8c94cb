//! Laurent-polynomial character rings of compact Lie groups on a maximal
//! torus: exact arithmetic, conjugation, exterior powers, restriction, and
//! fixed subrings under central involutions.

mod character;
mod decompose;
mod fixed;
mod groups;
mod lambda;
mod ring;

pub use character::{Character, Monomial};
pub use decompose::{compose_generators, decompose_in_generators, rewrite_in_letters};
pub use fixed::{central_fixed_subring, generator_sign, FixedGenerator, FixedSubring};
pub use groups::{circle, restriction_to_sp2_s1, sp2_s1, sp2_s1_quotient, spin7, su};
pub use lambda::{binomial, exterior_power, virtual_exterior_powers};
pub use ring::{CharacterRingSpec, GroupData, Letter, NamedChar, QuotientModel, RepType};
