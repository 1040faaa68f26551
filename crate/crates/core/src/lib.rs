//! Exact symbolic computation in the Gerstenhaber algebra of
//! polydifferential operators on `ℚ[x₁,…,xₙ]`.
//!
//! * [`cochain`] and [`poly`]: canonical sparse cochains, polynomials and
//!   evaluation.
//! * [`ops`]: cup product, Gerstenhaber bracket, Hochschild coboundary.
//! * [`grading`]: weights, semigroup subalgebras and ideals, involutions,
//!   bigrading and filtration.
//! * [`mc`]: order-by-order Maurer–Cartan solver producing star products on
//!   the plane.
//! * [`document`] and [`cli`]: the s-expression file format and the
//!   command-line frontend.

pub mod cli;
pub mod cochain;
pub mod document;
pub mod error;
pub mod grading;
pub mod index;
pub mod laws;
pub mod mc;
pub mod ops;
pub mod poly;
pub mod random;
pub mod sexpr;

/// Exact rational coefficients in lowest terms.
pub type Rational = num::BigRational;

pub use cochain::{apply, canonicalize, BasisTerm, Cochain};
pub use error::{Error, Result};
pub use index::{IntIndex, NatIndex};
pub use ops::{bracket, cup, delta_via_bracket, hochschild_delta, insert, multiplication};
pub use poly::{leibniz_split, poly_add, poly_derive, poly_mul, Polynomial};
