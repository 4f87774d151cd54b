//! Points, halfspaces, and affine predicates.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::kernel::matrix;
use crate::scalar::Scalar;

/// A point with exact coordinates. Lexicographic order on coordinates is
/// the canonical point order used everywhere for deterministic output.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point<S> {
    pub coords: Vec<S>,
}

impl<S: Scalar> Point<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point {
            coords: coords.iter().map(|&c| S::from_int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn dot(&self, other: &[S]) -> S {
        self.coords
            .iter()
            .zip(other)
            .map(|(a, b)| a.clone() * b.clone())
            .fold(S::zero(), |acc, t| acc + t)
    }

    pub fn sub(&self, other: &Point<S>) -> Vec<S> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.clone() - b.clone())
            .collect()
    }

    pub fn add(&self, v: &[S]) -> Point<S> {
        Point {
            coords: self
                .coords
                .iter()
                .zip(v)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    /// Coordinate-wise mean of a nonempty set of points.
    pub fn centroid(points: &[&Point<S>]) -> Result<Point<S>> {
        let first = points.first().ok_or(Error::EmptyPointSet)?;
        let n = S::from_int(points.len() as i64);
        let mut sums = vec![S::zero(); first.dim()];
        for p in points {
            for (s, c) in sums.iter_mut().zip(&p.coords) {
                *s = s.clone() + c.clone();
            }
        }
        Ok(Point {
            coords: sums.into_iter().map(|s| s / n.clone()).collect(),
        })
    }
}

/// Closed halfspace `normal . x <= offset`. The boundary hyperplane and the
/// outward direction are both meaningful.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace<S> {
    pub normal: Vec<S>,
    pub offset: S,
}

impl<S: Scalar> HalfSpace<S> {
    /// Sign of `normal . p - offset`: `Greater` is strictly outside,
    /// `Equal` on the hyperplane, `Less` strictly inside.
    pub fn side(&self, p: &Point<S>) -> Ordering {
        p.dot(&self.normal).cmp(&self.offset)
    }

    pub fn eval(&self, p: &Point<S>) -> S {
        p.dot(&self.normal) - self.offset.clone()
    }

    /// Scale so the first nonzero normal entry has absolute value one.
    /// Orientation is preserved, so equal normalized halfspaces describe
    /// the same oriented hyperplane.
    pub fn normalized(&self) -> HalfSpace<S> {
        let Some(lead) = self.normal.iter().find(|c| !c.is_zero()) else {
            return self.clone();
        };
        let scale = lead.abs();
        HalfSpace {
            normal: self
                .normal
                .iter()
                .map(|c| c.clone() / scale.clone())
                .collect(),
            offset: self.offset.clone() / scale,
        }
    }
}

fn difference_matrix<S: Scalar>(points: &[Point<S>]) -> Vec<Vec<S>> {
    let base = &points[0];
    points[1..].iter().map(|p| p.sub(base)).collect()
}

/// Dimension of the affine hull. `k + 1` points are affinely independent
/// iff the result is `k`.
pub fn affine_dim<S: Scalar>(points: &[Point<S>]) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let d = points[0].dim();
    if points.iter().any(|p| p.dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: points.iter().find(|p| p.dim() != d).unwrap().dim(),
        });
    }
    if points.len() == 1 {
        return Ok(0);
    }
    matrix::rank(&difference_matrix(points))
}

pub fn affinely_independent<S: Scalar>(points: &[Point<S>]) -> Result<bool> {
    Ok(affine_dim(points)? + 1 == points.len())
}

/// A halfspace whose boundary contains every point of `on` and whose
/// interior strictly contains `inside`. Works in any ambient dimension,
/// also when the points only span a proper affine subspace: the boundary
/// then contains `aff(on)` and separates within any subspace containing
/// all inputs.
pub fn hyperplane_through<S: Scalar>(on: &[&Point<S>], inside: &Point<S>) -> Result<HalfSpace<S>> {
    let d = inside.dim();
    // Unknowns (c, beta) with c.s - beta = 0 for all s in `on`.
    let rows: Vec<Vec<S>> = on
        .iter()
        .map(|p| {
            let mut row = p.coords.clone();
            row.push(-S::one());
            row
        })
        .collect();
    let basis = if rows.is_empty() {
        // Any hyperplane off `inside` will do; pick x_0 = inside_0 + 1.
        let mut v = vec![S::zero(); d + 1];
        v[0] = S::one();
        v[d] = inside.coords[0].clone() + S::one();
        vec![v]
    } else {
        matrix::nullspace_basis(&rows)?
    };
    for mut v in basis {
        let beta = v.pop().expect("nullspace vector has d+1 entries");
        let value = inside.dot(&v) - beta.clone();
        match value.cmp(&S::zero()) {
            Ordering::Less => return Ok(HalfSpace { normal: v, offset: beta }.normalized()),
            Ordering::Greater => {
                return Ok(HalfSpace {
                    normal: v.into_iter().map(|c| -c).collect(),
                    offset: -beta,
                }
                .normalized())
            }
            Ordering::Equal => continue,
        }
    }
    Err(Error::NoSeparatingHyperplane)
}
