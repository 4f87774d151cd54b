//! Exact convex hulls by incremental insertion.
//!
//! Points are inserted in canonical (lexicographic) order with exact side
//! tests. A point on an existing facet hyperplane extends that facet, so
//! coplanar simplicial pieces merge into genuine facets as they appear.
//! Lower-dimensional input is handled by recursing in coordinates of the
//! affine hull and lifting the facet hyperplanes back to ambient space.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::kernel::geometry::{affine_dim, hyperplane_through, HalfSpace, Point};
use crate::kernel::matrix;
use crate::scalar::Scalar;

/// One facet of a hull: its supporting halfspace and the extreme input
/// points lying exactly on it.
#[derive(Clone, Debug)]
pub struct HullFacet<S> {
    pub halfspace: HalfSpace<S>,
    /// Ascending indices into the input point list.
    pub vertices: Vec<usize>,
}

/// Output of [`convex_hull`].
#[derive(Clone, Debug)]
pub struct HullResult<S> {
    /// Dimension of the affine hull of the input.
    pub dim: usize,
    /// Ascending input indices of the extreme points.
    pub vertices: Vec<usize>,
    pub facets: Vec<HullFacet<S>>,
}

/// How an input point sits relative to the hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointClass {
    Vertex,
    OnBoundary,
    Interior,
}

impl<S: Scalar> HullResult<S> {
    /// Exact classification of an input point against the facet list.
    pub fn classify(&self, points: &[Point<S>], idx: usize) -> PointClass {
        if self.vertices.binary_search(&idx).is_ok() {
            return PointClass::Vertex;
        }
        let p = &points[idx];
        let mut on_any = false;
        for f in &self.facets {
            match f.halfspace.side(p) {
                Ordering::Greater => unreachable!("input point outside its own hull"),
                Ordering::Equal => on_any = true,
                Ordering::Less => {}
            }
        }
        if on_any {
            PointClass::OnBoundary
        } else {
            PointClass::Interior
        }
    }
}

struct WorkFacet<S> {
    hs: HalfSpace<S>,
    on: BTreeSet<usize>,
}

/// Full-dimensional hull in `k`-dimensional coordinates. Returns the facet
/// list and the vertex set, as indices into `pts`.
fn hull_full<S: Scalar>(pts: &[Point<S>], k: usize) -> Result<(Vec<WorkFacet<S>>, Vec<usize>)> {
    debug_assert!(pts.iter().all(|p| p.dim() == k));
    if k == 1 {
        // pts are sorted and distinct: first is the minimum, last the maximum.
        let lo = 0;
        let hi = pts.len() - 1;
        let facets = vec![
            WorkFacet {
                hs: HalfSpace {
                    normal: vec![-S::one()],
                    offset: -pts[lo].coords[0].clone(),
                },
                on: BTreeSet::from([lo]),
            },
            WorkFacet {
                hs: HalfSpace {
                    normal: vec![S::one()],
                    offset: pts[hi].coords[0].clone(),
                },
                on: BTreeSet::from([hi]),
            },
        ];
        return Ok((facets, vec![lo, hi]));
    }

    // Initial simplex: greedily take points that grow the affine rank.
    let mut simplex = vec![0usize];
    let mut chosen: Vec<&Point<S>> = vec![&pts[0]];
    for (i, p) in pts.iter().enumerate().skip(1) {
        if simplex.len() == k + 1 {
            break;
        }
        chosen.push(p);
        if affine_dim(&chosen.iter().map(|q| (*q).clone()).collect::<Vec<_>>())?
            == simplex.len()
        {
            simplex.push(i);
        } else {
            chosen.pop();
        }
    }
    debug_assert_eq!(simplex.len(), k + 1);
    let interior_ref = Point::centroid(&chosen)?;

    let mut facets: Vec<WorkFacet<S>> = Vec::new();
    for &skip in &simplex {
        let on: Vec<&Point<S>> = simplex
            .iter()
            .filter(|&&i| i != skip)
            .map(|&i| &pts[i])
            .collect();
        let hs = hyperplane_through(&on, &interior_ref)?;
        facets.push(WorkFacet {
            hs,
            on: simplex.iter().copied().filter(|&i| i != skip).collect(),
        });
    }

    let mut active: Vec<usize> = simplex.clone();
    active.sort_unstable();

    for ip in 0..pts.len() {
        if simplex.contains(&ip) {
            continue;
        }
        let p = &pts[ip];
        let mut beyond = Vec::new();
        let mut on_ids = Vec::new();
        let mut beneath = Vec::new();
        for (fi, f) in facets.iter().enumerate() {
            match f.hs.side(p) {
                Ordering::Greater => beyond.push(fi),
                Ordering::Equal => on_ids.push(fi),
                Ordering::Less => beneath.push(fi),
            }
        }
        if beyond.is_empty() {
            // Inside or on the boundary of the current hull: never a vertex.
            continue;
        }

        // New facets arise from horizon ridges between a visible facet and
        // an invisible one. Facets the point is coplanar with just absorb it.
        let mut new_facets: Vec<WorkFacet<S>> = Vec::new();
        let mut seen: BTreeSet<Vec<(Vec<S>, S)>> = BTreeSet::new();
        for &fv in &beyond {
            for &fb in &beneath {
                let ridge: Vec<usize> = facets[fv].on.intersection(&facets[fb].on).copied().collect();
                if ridge.is_empty() {
                    continue;
                }
                let ridge_pts: Vec<Point<S>> = ridge.iter().map(|&i| pts[i].clone()).collect();
                if affine_dim(&ridge_pts)? != k - 2 {
                    continue;
                }
                let mut on_refs: Vec<&Point<S>> = ridge.iter().map(|&i| &pts[i]).collect();
                on_refs.push(p);
                let hs = hyperplane_through(&on_refs, &interior_ref)?;
                let key = vec![(hs.normal.clone(), hs.offset.clone())];
                if !seen.insert(key) {
                    continue;
                }
                let mut on: BTreeSet<usize> = active
                    .iter()
                    .copied()
                    .filter(|&i| hs.side(&pts[i]) == Ordering::Equal)
                    .collect();
                on.insert(ip);
                debug_assert!(active.iter().all(|&i| hs.side(&pts[i]) != Ordering::Greater));
                new_facets.push(WorkFacet { hs, on });
            }
        }

        let mut next: Vec<WorkFacet<S>> = Vec::new();
        for (fi, f) in facets.into_iter().enumerate() {
            if beyond.contains(&fi) {
                continue;
            }
            let mut f = f;
            if on_ids.contains(&fi) {
                f.on.insert(ip);
            }
            next.push(f);
        }
        next.extend(new_facets);
        facets = next;
        active.push(ip);
        active.sort_unstable();
    }

    // A point is a vertex iff the normals of the facets through it span
    // the whole space (the facet hyperplanes meet in that point alone).
    let mut vertices = Vec::new();
    for &i in &active {
        let normals: Vec<Vec<S>> = facets
            .iter()
            .filter(|f| f.on.contains(&i))
            .map(|f| f.hs.normal.clone())
            .collect();
        if !normals.is_empty() && matrix::rank(&normals)? == k {
            vertices.push(i);
        }
    }
    // Trim facet incidence sets to actual vertices.
    let vset: BTreeSet<usize> = vertices.iter().copied().collect();
    for f in &mut facets {
        f.on = f.on.intersection(&vset).copied().collect();
    }
    Ok((facets, vertices))
}

/// Exact convex hull of a point set.
///
/// Input may contain duplicates and interior points; it may also span only
/// a proper affine subspace, in which case the hull is computed inside the
/// affine hull and `dim` reports its dimension. Fewer than two distinct
/// points is an error.
pub fn convex_hull<S: Scalar>(points: &[Point<S>]) -> Result<HullResult<S>> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let ambient = points[0].dim();
    if points.iter().any(|p| p.dim() != ambient) {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            got: points.iter().find(|p| p.dim() != ambient).unwrap().dim(),
        });
    }

    // Deduplicate, keeping the smallest input index per distinct point,
    // and order canonically.
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]).then(a.cmp(&b)));
    let mut work: Vec<(Point<S>, usize)> = Vec::new();
    for &i in &order {
        match work.last() {
            Some((q, _)) if *q == points[i] => {}
            _ => work.push((points[i].clone(), i)),
        }
    }
    if work.len() < 2 {
        return Err(Error::TooFewPoints(work.len()));
    }

    let distinct: Vec<Point<S>> = work.iter().map(|(p, _)| p.clone()).collect();
    let k = affine_dim(&distinct)?;

    let (facets_local, verts_local) = if k == ambient {
        hull_full(&distinct, k)?
    } else {
        // Map into coordinates of the affine hull and recurse.
        let base = distinct[0].clone();
        let mut basis: Vec<Vec<S>> = Vec::new();
        let mut span: Vec<Point<S>> = vec![base.clone()];
        for p in &distinct[1..] {
            if basis.len() == k {
                break;
            }
            span.push(p.clone());
            if affine_dim(&span)? == basis.len() + 1 {
                basis.push(p.sub(&base));
            } else {
                span.pop();
            }
        }
        // Columns are basis vectors; solve for each point's local coordinates.
        let rows: Vec<Vec<S>> = (0..ambient)
            .map(|r| basis.iter().map(|b| b[r].clone()).collect())
            .collect();
        let mut local = Vec::with_capacity(distinct.len());
        for p in &distinct {
            let rhs = p.sub(&base);
            let (_, sol) = matrix::rank_and_solve(&rows, Some(&rhs))?;
            local.push(Point::new(sol.expect("point lies in its own affine hull")));
        }
        let (mut lf, lv) = hull_full(&local, k)?;
        // Lift each facet hyperplane back to ambient space.
        let all_refs: Vec<&Point<S>> = distinct.iter().collect();
        let inside = Point::centroid(&all_refs)?;
        for f in lf.iter_mut() {
            let on_refs: Vec<&Point<S>> = f.on.iter().map(|&i| &distinct[i]).collect();
            f.hs = hyperplane_through(&on_refs, &inside)?;
        }
        (lf, lv)
    };

    let mut vertices: Vec<usize> = verts_local.iter().map(|&i| work[i].1).collect();
    vertices.sort_unstable();
    let mut facets: Vec<HullFacet<S>> = facets_local
        .into_iter()
        .map(|f| {
            let mut vs: Vec<usize> = f.on.iter().map(|&i| work[i].1).collect();
            vs.sort_unstable();
            HullFacet {
                halfspace: f.hs,
                vertices: vs,
            }
        })
        .collect();
    facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(HullResult {
        dim: k,
        vertices,
        facets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    type P = Point<Rat>;

    fn hull(coords: &[&[i64]]) -> HullResult<Rat> {
        let pts: Vec<P> = coords.iter().map(|c| P::from_ints(c)).collect();
        convex_hull(&pts).unwrap()
    }

    #[test]
    fn unit_square() {
        let h = hull(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(h.dim, 2);
        assert_eq!(h.vertices.len(), 4);
        assert_eq!(h.facets.len(), 4);
        for f in &h.facets {
            assert_eq!(f.vertices.len(), 2);
        }
    }

    #[test]
    fn cube_with_center_discarded() {
        let mut coords: Vec<Vec<i64>> = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    coords.push(vec![2 * x, 2 * y, 2 * z]);
                }
            }
        }
        coords.push(vec![1, 1, 1]);
        let pts: Vec<P> = coords.iter().map(|c| P::from_ints(c)).collect();
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.facets.len(), 6);
        assert!(!h.vertices.contains(&8));
        assert_eq!(h.classify(&pts, 8), PointClass::Interior);
        for f in &h.facets {
            assert_eq!(f.vertices.len(), 4);
        }
    }

    #[test]
    fn collinear_points_make_a_segment() {
        let h = hull(&[&[0, 0, 0], &[2, 2, 2], &[1, 1, 1], &[3, 3, 3]]);
        assert_eq!(h.dim, 1);
        assert_eq!(h.vertices, vec![0, 3]);
        assert_eq!(h.facets.len(), 2);
    }

    #[test]
    fn planar_square_in_three_space() {
        let h = hull(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(h.dim, 2);
        assert_eq!(h.vertices.len(), 4);
        assert_eq!(h.facets.len(), 4);
        // Lifted halfspaces still support all points exactly.
        let pts: Vec<P> = [[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]]
            .iter()
            .map(|c| P::from_ints(c))
            .collect();
        for f in &h.facets {
            for (i, p) in pts.iter().enumerate() {
                let side = f.halfspace.side(p);
                if f.vertices.contains(&i) {
                    assert_eq!(side, std::cmp::Ordering::Equal);
                } else {
                    assert_ne!(side, std::cmp::Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn duplicate_points_collapse() {
        let h = hull(&[&[0, 0], &[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(h.vertices, vec![0, 2, 3]);
    }

    #[test]
    fn hull_is_idempotent_on_its_vertices() {
        let coords: Vec<Vec<i64>> = vec![
            vec![0, 0, 0],
            vec![4, 0, 0],
            vec![0, 4, 0],
            vec![0, 0, 4],
            vec![1, 1, 1],
            vec![4, 4, 4],
        ];
        let pts: Vec<P> = coords.iter().map(|c| P::from_ints(c)).collect();
        let h1 = convex_hull(&pts).unwrap();
        let verts: Vec<P> = h1.vertices.iter().map(|&i| pts[i].clone()).collect();
        let h2 = convex_hull(&verts).unwrap();
        assert_eq!(h2.vertices.len(), h1.vertices.len());
        let sets1: Vec<Vec<P>> = h1
            .facets
            .iter()
            .map(|f| f.vertices.iter().map(|&i| pts[i].clone()).collect())
            .collect();
        let sets2: Vec<Vec<P>> = h2
            .facets
            .iter()
            .map(|f| f.vertices.iter().map(|&i| verts[i].clone()).collect())
            .collect();
        assert_eq!(sets1, sets2);
    }
}
