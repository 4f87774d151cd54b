//! Exact rational linear algebra and convex-hull primitives.

pub mod geometry;
pub mod hull;
pub mod matrix;
pub mod ops;

pub use geometry::{affine_dim, affinely_independent, hyperplane_through, HalfSpace, Point};
pub use hull::{convex_hull, HullFacet, HullResult, PointClass};
pub use matrix::{nullspace_basis, rank, rank_and_solve};
pub use ops::{beyond_face_point, beyond_point, cut, facet_halfspaces, supporting_halfspace};
