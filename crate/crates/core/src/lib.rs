//! Numerical semigroups and their semigroup polynomials.
//!
//! The crate computes the semigroup polynomial `P_S(x) = (1 - x) Σ_{s ∈ S} x^s`,
//! decides whether it is a product of cyclotomic polynomials, and relates that
//! property to the gluing structure of `S` (complete intersections, free
//! semigroups) and to polynomial relations between Hilbert series. The
//! [`survey`] module enumerates semigroups by genus and checks, level by level,
//! that the cyclotomic and complete-intersection properties coincide.

pub mod arith;
pub mod cyclotomy;
pub mod error;
pub mod intpoly;
pub mod relations;
pub mod semigroup;
pub mod structure;
pub mod survey;

pub use error::{Error, Result};
pub use intpoly::{CyclotomicFactorization, IntPolynomial};
pub use semigroup::{NumericalSemigroup, SemigroupDescriptors, SymmetryType};
