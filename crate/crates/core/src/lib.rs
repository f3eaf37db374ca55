//! Exact root-system machinery and the topological checks built on it.
//!
//! The crate is organised bottom-up:
//!
//! * [`roots`] builds finite irreducible root systems with exact rational
//!   arithmetic and exposes Killing numbers and fundamental-weight pairings.
//! * [`flag`] presents fundamental groups of real flag manifolds of split
//!   real forms, decides the parity criterion for root-subgroup orbits and
//!   classifies which root subgroups generate.
//! * [`sl2`] constructs the irreducible representations of `sl(2, C)`, their
//!   exterior powers and the clutching degree of the tautological bundle on
//!   the highest-weight orbit.
//! * [`matrix_checks`] certifies the symplectic compression-semigroup example
//!   and the regular-element criterion for classical embeddings.

pub mod error;
pub mod flag;
pub mod matrix_checks;
pub mod rational;
pub mod roots;
pub mod sl2;

pub use error::{Error, Result};
pub use roots::{Family, LengthClass, LieType, Root, RootSystem};
