//! Geometric operations on realized polytopes: supporting halfspaces,
//! beyond points, and exact hyperplane cuts.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::kernel::geometry::{hyperplane_through, HalfSpace};
use crate::polytope::Polytope;
use crate::{Point, Rat, Scalar};

fn interior_point(p: &Polytope) -> Result<Point> {
    let pts = p.require_realization()?;
    let refs: Vec<&Point> = pts.iter().collect();
    Point::centroid(&refs)
}

/// Outer supporting halfspace of every facet, in facet order. Each facet's
/// vertex set lies exactly on its hyperplane and the rest of the polytope
/// strictly inside; anything else is an invalid realization.
pub fn facet_halfspaces(p: &Polytope) -> Result<Vec<HalfSpace<Rat>>> {
    let pts = p.require_realization()?;
    let inside = interior_point(p)?;
    let mut out = Vec::with_capacity(p.facet_count());
    for (fi, facet) in p.facets().iter().enumerate() {
        let on: Vec<&Point> = facet.iter().map(|&v| &pts[v]).collect();
        let hs = hyperplane_through(&on, &inside)?;
        for (v, pt) in pts.iter().enumerate() {
            let side = hs.side(pt);
            let on_facet = facet.contains(&v);
            if (on_facet && side != Ordering::Equal) || (!on_facet && side != Ordering::Less) {
                return Err(Error::InvalidPolytope(format!(
                    "facet {fi} is not supported by a hyperplane through its vertices \
                     (vertex {v} on the wrong side)"
                )));
            }
        }
        out.push(hs);
    }
    Ok(out)
}

/// Supporting halfspace of a face: `c . v = contact` on the face and
/// `c . u < contact` strictly everywhere else. Built as the sum of the
/// outer normals of all facets containing the face.
pub fn supporting_halfspace(p: &Polytope, face: &[usize]) -> Result<(HalfSpace<Rat>, Rat)> {
    let pts = p.require_realization()?;
    if face.is_empty() || face.len() == p.n_vertices() {
        return Err(Error::NotAFace(face.to_vec()));
    }
    let mut sorted = face.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if p.face_closure(&sorted) != sorted {
        return Err(Error::NotAFace(face.to_vec()));
    }
    let halfspaces = facet_halfspaces(p)?;
    let dim = pts[0].dim();
    let mut normal = vec![Rat::from_int(0); dim];
    for (facet, hs) in p.facets().iter().zip(&halfspaces) {
        if sorted.iter().all(|v| facet.contains(v)) {
            for (n, c) in normal.iter_mut().zip(&hs.normal) {
                *n = n.clone() + c.clone();
            }
        }
    }
    let contact = pts[sorted[0]].dot(&normal);
    let hs = HalfSpace {
        normal,
        offset: contact.clone(),
    };
    for (v, pt) in pts.iter().enumerate() {
        let side = hs.side(pt);
        let expect = if sorted.contains(&v) {
            Ordering::Equal
        } else {
            Ordering::Less
        };
        if side != expect {
            return Err(Error::InvalidPolytope(format!(
                "summed facet normals do not support face {sorted:?} strictly (vertex {v})"
            )));
        }
    }
    Ok((hs, contact))
}

fn feasible_step(
    start: &Point,
    direction: &[Rat],
    halfspaces: &[HalfSpace<Rat>],
    skip: &dyn Fn(usize) -> bool,
) -> Rat {
    // Largest t with start + t*direction still strictly beneath every
    // non-skipped facet; midpoint of (0, t_max), or 1 when unbounded.
    let mut best: Option<Rat> = None;
    for (i, hs) in halfspaces.iter().enumerate() {
        if skip(i) {
            continue;
        }
        let rate = Point::new(direction.to_vec()).dot(&hs.normal);
        if rate > Rat::from_int(0) {
            let room = hs.offset.clone() - start.dot(&hs.normal);
            let t = room / rate;
            best = Some(match best {
                Some(b) if b < t => b,
                _ => t,
            });
        }
    }
    match best {
        Some(t) => t / Rat::from_int(2),
        None => Rat::from_int(1),
    }
}

/// A point strictly beyond the given facet and strictly beneath every other
/// facet: facet centroid plus a rational multiple of the outer normal,
/// stepping to the midpoint of the exact feasible interval.
pub fn beyond_point(p: &Polytope, facet_idx: usize) -> Result<Point> {
    let pts = p.require_realization()?;
    let halfspaces = facet_halfspaces(p)?;
    let facet = &p.facets()[facet_idx];
    let refs: Vec<&Point> = facet.iter().map(|&v| &pts[v]).collect();
    let centroid = Point::centroid(&refs)?;
    let dir = &halfspaces[facet_idx].normal;
    let t = feasible_step(&centroid, dir, &halfspaces, &|i| i == facet_idx);
    let step: Vec<Rat> = dir.iter().map(|c| c.clone() * t.clone()).collect();
    let point = centroid.add(&step);
    debug_assert!(halfspaces
        .iter()
        .enumerate()
        .all(|(i, hs)| (i == facet_idx) == (hs.side(&point) == Ordering::Greater)));
    Ok(point)
}

/// A point strictly beyond exactly the facets containing `face` and
/// strictly beneath all others: the face centroid pushed radially away
/// from the polytope's interior point.
pub fn beyond_face_point(p: &Polytope, face: &[usize]) -> Result<Point> {
    let pts = p.require_realization()?;
    let halfspaces = facet_halfspaces(p)?;
    let mut sorted = face.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() || p.face_closure(&sorted) != sorted {
        return Err(Error::NotAFace(face.to_vec()));
    }
    let refs: Vec<&Point> = sorted.iter().map(|&v| &pts[v]).collect();
    let centroid = Point::centroid(&refs)?;
    let inside = interior_point(p)?;
    let dir = centroid.sub(&inside);
    let containing: Vec<bool> = p
        .facets()
        .iter()
        .map(|f| sorted.iter().all(|v| f.contains(v)))
        .collect();
    let t = feasible_step(&centroid, &dir, &halfspaces, &|i| containing[i]);
    let step: Vec<Rat> = dir.iter().map(|c| c.clone() * t.clone()).collect();
    let point = centroid.add(&step);
    debug_assert!(halfspaces
        .iter()
        .enumerate()
        .all(|(i, hs)| containing[i] == (hs.side(&point) == Ordering::Greater)));
    Ok(point)
}

/// Intersect with a halfspace whose hyperplane avoids all vertices and
/// meets the interior. New vertices are exact edge crossings. Returns the
/// cut polytope together with the index of the underfacet (the facet lying
/// on the cutting hyperplane).
pub fn cut(p: &Polytope, h: &HalfSpace<Rat>) -> Result<(Polytope, usize)> {
    let pts = p.require_realization()?;
    let mut kept: Vec<Point> = Vec::new();
    let mut side = Vec::with_capacity(pts.len());
    for (v, pt) in pts.iter().enumerate() {
        let s = h.side(pt);
        if s == Ordering::Equal {
            return Err(Error::VertexOnHyperplane(v));
        }
        side.push(s);
        if s == Ordering::Less {
            kept.push(pt.clone());
        }
    }
    if kept.is_empty() || kept.len() == pts.len() {
        return Err(Error::NoInteriorIntersection);
    }
    for (u, v) in p.edges_from_incidence() {
        if side[u] != side[v] {
            let a = &pts[u];
            let b = &pts[v];
            // a + t (b - a) with h.normal . x = h.offset
            let fa = h.eval(a);
            let fb = h.eval(b);
            let t = fa.clone() / (fa - fb);
            let ab = b.sub(a);
            let step: Vec<Rat> = ab.iter().map(|c| c.clone() * t.clone()).collect();
            kept.push(a.add(&step));
        }
    }
    let result = Polytope::from_points(&kept)?;
    let want = h.normalized();
    let halfspaces = facet_halfspaces(&result)?;
    let under = halfspaces
        .iter()
        .position(|hs| hs.normalized() == want)
        .ok_or(Error::NoInteriorIntersection)?;
    Ok((result, under))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::lattice;

    #[test]
    fn cube_facet_supporting_halfspace_is_its_own() {
        let cube = families::simplex_product(&[1, 1, 1]).unwrap();
        let halfspaces = facet_halfspaces(&cube).unwrap();
        let (hs, _) = supporting_halfspace(&cube, &cube.facets()[0].clone()).unwrap();
        assert_eq!(hs.normalized(), halfspaces[0].normalized());
    }

    #[test]
    fn simplex_vertex_halfspace_separates_strictly() {
        let s = families::simplex(3).unwrap();
        let (hs, contact) = supporting_halfspace(&s, &[2]).unwrap();
        let pts = s.realization().unwrap();
        for (v, pt) in pts.iter().enumerate() {
            let val = pt.dot(&hs.normal);
            if v == 2 {
                assert_eq!(val, contact);
            } else {
                assert!(val < contact);
            }
        }
    }

    #[test]
    fn prism_edge_halfspace() {
        let prism = families::prism(4).unwrap();
        let lat = lattice::build_lattice(&prism).unwrap();
        let edge = lat.faces_of_dim(1)[0].clone();
        let (hs, contact) = supporting_halfspace(&prism, &edge).unwrap();
        let pts = prism.realization().unwrap();
        let mut on = 0;
        for pt in pts.iter() {
            match pt.dot(&hs.normal).cmp(&contact) {
                Ordering::Equal => on += 1,
                Ordering::Less => {}
                Ordering::Greater => panic!("edge halfspace not supporting"),
            }
        }
        assert_eq!(on, 2);
    }

    #[test]
    fn non_face_is_rejected() {
        let cube = families::simplex_product(&[1, 1, 1]).unwrap();
        // Two antipodal vertices of the cube do not form a face.
        let err = supporting_halfspace(&cube, &[0, 7]);
        assert!(matches!(err, Err(Error::NotAFace(_))));
    }

    #[test]
    fn stacking_simplex_gives_bipyramid_counts() {
        let s = families::simplex(3).unwrap();
        let q = families::stack(&s, 0).unwrap();
        let lat = lattice::build_lattice(&q).unwrap();
        assert_eq!(q.n_vertices(), 5);
        assert_eq!(lat.f_vector().counts()[1], 9);
    }

    #[test]
    fn cube_cut_near_vertex() {
        let cube = families::simplex_product(&[1, 1, 1]).unwrap();
        let (hs, contact) = supporting_halfspace(&cube, &[0]).unwrap();
        let pts = cube.realization().unwrap();
        let next_best = pts
            .iter()
            .enumerate()
            .filter(|(v, _)| *v != 0)
            .map(|(_, p)| p.dot(&hs.normal))
            .max()
            .unwrap();
        let offset = (contact + next_best) / Rat::from_int(2);
        // Keeping the <= side removes vertex 0 and leaves the truncated cube.
        let keep = HalfSpace {
            normal: hs.normal,
            offset,
        };
        let (cutp, under) = cut(&cube, &keep).unwrap();
        let lat = lattice::build_lattice(&cutp).unwrap();
        assert_eq!(lat.f_vector().counts(), &[10, 15, 7]);
        assert_eq!(cutp.facets()[under].len(), 3);
    }

    #[test]
    fn cut_through_vertex_is_an_error() {
        let s = families::simplex(2).unwrap();
        let h = HalfSpace {
            normal: vec![Rat::from_int(1), Rat::from_int(0)],
            offset: Rat::from_int(0),
        };
        assert!(matches!(cut(&s, &h), Err(Error::VertexOnHyperplane(_))));
    }
}
