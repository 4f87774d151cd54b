//! The interchange object: dimension, vertex count, facet incidences, and
//! an optional exact realization.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::hull::{convex_hull, HullResult};
use crate::{Point, Rat};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    n_vertices: usize,
    /// Each facet ascending; the list itself sorted lexicographically.
    facets: Vec<Vec<usize>>,
    realization: Option<Vec<Point>>,
    name: Option<String>,
    provenance: Option<String>,
}

impl Polytope {
    /// Build from incidence data, checking the cheap structural invariants:
    /// index bounds, at least `dim + 1` facets, no facet containing another,
    /// and every vertex on at least `dim` facets.
    pub fn new(dim: usize, n_vertices: usize, facets: Vec<Vec<usize>>) -> Result<Polytope> {
        let p = Self::new_unchecked(dim, n_vertices, facets)?;
        p.check_structure()?;
        Ok(p)
    }

    /// Build without the structural checks. For negative-control tests and
    /// internal construction sites that validate by other means.
    pub fn new_unchecked(
        dim: usize,
        n_vertices: usize,
        facets: Vec<Vec<usize>>,
    ) -> Result<Polytope> {
        if n_vertices > MAX_VERTICES {
            return Err(Error::TooManyVertices(n_vertices));
        }
        let mut norm: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|f| {
                let set: BTreeSet<usize> = f.into_iter().collect();
                set.into_iter().collect::<Vec<usize>>()
            })
            .collect();
        norm.sort();
        norm.dedup();
        for f in &norm {
            if let Some(&bad) = f.iter().find(|&&v| v >= n_vertices) {
                return Err(Error::InvalidPolytope(format!(
                    "facet references vertex {bad} but there are {n_vertices} vertices"
                )));
            }
        }
        Ok(Polytope {
            dim,
            n_vertices,
            facets: norm,
            realization: None,
            name: None,
            provenance: None,
        })
    }

    fn check_structure(&self) -> Result<()> {
        if self.facets.len() < self.dim + 1 {
            return Err(Error::InvalidPolytope(format!(
                "{}-polytope needs at least {} facets, found {}",
                self.dim,
                self.dim + 1,
                self.facets.len()
            )));
        }
        for (i, f) in self.facets.iter().enumerate() {
            for (j, g) in self.facets.iter().enumerate() {
                if i != j && f.iter().all(|v| g.contains(v)) {
                    return Err(Error::InvalidPolytope(format!(
                        "facet {f:?} is contained in facet {g:?}"
                    )));
                }
            }
        }
        for v in 0..self.n_vertices {
            let count = self.facets.iter().filter(|f| f.contains(&v)).count();
            if count < self.dim {
                return Err(Error::InvalidPolytope(format!(
                    "vertex {v} lies on {count} facets, fewer than dim {}",
                    self.dim
                )));
            }
        }
        Ok(())
    }

    /// Attach exact coordinates. The ambient dimension may exceed the
    /// combinatorial dimension (faces keep their parent's coordinates).
    pub fn with_realization(mut self, points: Vec<Point>) -> Result<Polytope> {
        if points.len() != self.n_vertices {
            return Err(Error::InvalidPolytope(format!(
                "realization has {} points for {} vertices",
                points.len(),
                self.n_vertices
            )));
        }
        self.realization = Some(points);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Polytope {
        self.name = Some(name.into());
        self
    }

    pub fn with_provenance(mut self, prov: impl Into<String>) -> Polytope {
        self.provenance = Some(prov.into());
        self
    }

    /// Hull a point set and take the result as a realized polytope.
    /// Vertices are reordered canonically (lexicographic coordinates).
    pub fn from_points(points: &[Point]) -> Result<Polytope> {
        let hull = convex_hull(points)?;
        Self::from_hull(points, &hull)
    }

    pub fn from_hull(points: &[Point], hull: &HullResult<Rat>) -> Result<Polytope> {
        if hull.vertices.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(hull.vertices.len()));
        }
        // hull.vertices is ascending by input index; impose canonical
        // coordinate order instead.
        let mut order: Vec<usize> = hull.vertices.clone();
        order.sort_by(|&a, &b| points[a].cmp(&points[b]));
        let index_of = |v: usize| order.iter().position(|&x| x == v).unwrap();
        let facets: Vec<Vec<usize>> = hull
            .facets
            .iter()
            .map(|f| f.vertices.iter().map(|&v| index_of(v)).collect())
            .collect();
        let coords: Vec<Point> = order.iter().map(|&v| points[v].clone()).collect();
        Polytope::new(hull.dim, order.len(), facets)?.with_realization(coords)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn realization(&self) -> Option<&[Point]> {
        self.realization.as_deref()
    }

    pub fn require_realization(&self) -> Result<&[Point]> {
        self.realization.as_deref().ok_or(Error::MissingRealization)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn facet_mask(&self, idx: usize) -> u64 {
        self.facets[idx].iter().fold(0u64, |m, &v| m | (1 << v))
    }

    /// Vertex set of the smallest face containing `set`: the intersection
    /// of all facets containing it, or every vertex when no facet does.
    pub fn face_closure(&self, set: &[usize]) -> Vec<usize> {
        let mut mask: u64 = (0..self.n_vertices).fold(0, |m, v| m | (1 << v));
        let query: u64 = set.iter().fold(0, |m, &v| m | (1 << v));
        let mut any = false;
        for i in 0..self.facets.len() {
            let fm = self.facet_mask(i);
            if fm & query == query {
                mask &= fm;
                any = true;
            }
        }
        if !any {
            return (0..self.n_vertices).collect();
        }
        (0..self.n_vertices).filter(|&v| mask & (1 << v) != 0).collect()
    }

    /// Edges straight from the incidence data: `{u, v}` is an edge iff the
    /// smallest face containing both is exactly `{u, v}`.
    pub fn edges_from_incidence(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for u in 0..self.n_vertices {
            for v in u + 1..self.n_vertices {
                if self.face_closure(&[u, v]) == [u, v] {
                    edges.push((u, v));
                }
            }
        }
        edges
    }
}

// ---------------------------------------------------------------------------
// Interchange format
// ---------------------------------------------------------------------------

fn rat_to_string(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rat_from_string(s: &str) -> Result<Rat> {
    let parse_int =
        |t: &str| BigInt::from_str(t.trim()).map_err(|e| Error::Parse(format!("'{t}': {e}")));
    match s.split_once('/') {
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            Ok(Rat::new(parse_int(num)?, d))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

#[derive(Serialize, Deserialize)]
struct Doc {
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<Vec<String>>>,
    facets: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
}

impl Polytope {
    pub fn to_json(&self) -> String {
        let doc = Doc {
            dim: self.dim,
            vertices: self.realization.as_ref().map(|pts| {
                pts.iter()
                    .map(|p| p.coords.iter().map(rat_to_string).collect())
                    .collect()
            }),
            facets: self.facets.clone(),
            name: self.name.clone(),
            provenance: self.provenance.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Polytope> {
        let doc: Doc = serde_json::from_str(text)?;
        let n = match (&doc.vertices, doc.facets.iter().flatten().max()) {
            (Some(vs), _) => vs.len(),
            (None, Some(&m)) => m + 1,
            (None, None) => return Err(Error::Parse("no vertices and no facets".into())),
        };
        let mut p = Polytope::new(doc.dim, n, doc.facets)?;
        if let Some(vs) = doc.vertices {
            let mut pts = Vec::with_capacity(vs.len());
            for v in vs {
                let coords: Result<Vec<Rat>> = v.iter().map(|s| rat_from_string(s)).collect();
                pts.push(Point::new(coords?));
            }
            p = p.with_realization(pts)?;
        }
        if let Some(name) = doc.name {
            p = p.with_name(name);
        }
        if let Some(prov) = doc.provenance {
            p = p.with_provenance(prov);
        }
        Ok(p)
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (d={}, {} vertices, {} facets)",
            self.name.as_deref().unwrap_or("polytope"),
            self.dim,
            self.n_vertices,
            self.facets.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polytope {
        let pts: Vec<Point> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|c| Point::from_ints(c))
            .collect();
        Polytope::from_points(&pts).unwrap()
    }

    #[test]
    fn square_roundtrips_through_json() {
        let p = square().with_name("square").with_provenance("sprod(1,1)");
        let q = Polytope::from_json(&p.to_json()).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.n_vertices(), 4);
        assert_eq!(q.facets(), p.facets());
        assert_eq!(q.name(), Some("square"));
        assert_eq!(q.realization().unwrap(), p.realization().unwrap());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rat_from_string("3/6").unwrap(), Rat::new(1.into(), 2.into()));
        assert_eq!(rat_from_string("-4").unwrap(), Rat::from_integer((-4).into()));
        assert!(rat_from_string("1/0").is_err());
        let r = Rat::new((-7).into(), 3.into());
        assert_eq!(rat_from_string(&rat_to_string(&r)).unwrap(), r);
    }

    #[test]
    fn edges_from_incidence_on_square() {
        let p = square();
        let edges = p.edges_from_incidence();
        assert_eq!(edges.len(), 4);
    }

    #[test]
    fn containment_between_facets_is_rejected() {
        let err = Polytope::new(2, 4, vec![vec![0, 1], vec![0, 1, 2], vec![2, 3], vec![0, 3]]);
        assert!(err.is_err());
    }
}
