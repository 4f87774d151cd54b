//! Exact-arithmetic toolkit for combinatorial polytopes.
//!
//! Everything geometric runs on exact rationals: convex hulls, cuts,
//! beyond points, and face lattices are computed with error-free sign
//! tests, so combinatorial conclusions (excess degrees, decomposability
//! certificates, feasibility tables for vertex/edge pairs) are exact.
//!
//! The kernel is generic over the [`Scalar`] trait; the rest of the crate
//! uses the concrete aliases below.

pub mod analysis;
pub mod atlas;
pub mod decomp;
pub mod error;
pub mod families;
pub mod kernel;
pub mod lattice;
pub mod polytope;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// The scalar every public operation is instantiated with.
pub type Rat = num_rational::BigRational;
/// A point with [`Rat`] coordinates.
pub type Point = kernel::geometry::Point<Rat>;
/// A halfspace with [`Rat`] coefficients.
pub type HalfSpace = kernel::geometry::HalfSpace<Rat>;

pub use polytope::Polytope;
