//! Face lattices from vertex-facet incidences, and the operations that
//! read them: f-vectors, skeletons, duals, vertex figures, validation.

pub mod canon;

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::kernel::ops::facet_halfspaces;
use crate::polytope::Polytope;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};

fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&b| mask & (1u64 << b) != 0).collect()
}

/// The f-vector `(f_0, ..., f_{d-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(Vec<usize>);

impl FVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Euler's relation: alternating sum equals `1 - (-1)^d`.
    pub fn euler_holds(&self) -> bool {
        let d = self.0.len();
        let lhs: i64 = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        lhs == 1 - if d % 2 == 0 { 1 } else { -1 }
    }
}

/// All faces of a polytope, graded by dimension from -1 (empty) to d (top).
#[derive(Clone, Debug)]
pub struct FaceLattice {
    dim: usize,
    n_vertices: usize,
    masks: Vec<u64>,
    dims: Vec<i64>,
    /// `by_dim[k]` holds face ids of dimension `k - 1`.
    by_dim: Vec<Vec<usize>>,
    /// Covered-by lists: `lower[f]` are the maximal proper subfaces of `f`.
    lower: Vec<Vec<usize>>,
    degrees: Vec<usize>,
    index: HashMap<u64, usize>,
}

/// Closure of the facet masks under intersection; includes top and bottom.
fn intersection_closure(full: u64, facet_masks: &[u64]) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::new();
    let mut queue: VecDeque<u64> = VecDeque::new();
    seen.insert(full);
    seen.insert(0);
    for &fm in facet_masks {
        if seen.insert(fm) {
            queue.push_back(fm);
        }
    }
    queue.extend(facet_masks.iter().copied());
    while let Some(m) = queue.pop_front() {
        for &fm in facet_masks {
            let x = m & fm;
            if seen.insert(x) {
                queue.push_back(x);
            }
        }
    }
    let mut faces: Vec<u64> = seen.into_iter().collect();
    faces.sort_by_key(|&m| (m.count_ones(), mask_to_vec(m)));
    faces
}

/// Build the face lattice as the intersection closure of the facet vertex
/// sets. Fails with a witness when the result is not a graded lattice with
/// the diamond property.
pub fn build_lattice(p: &Polytope) -> Result<FaceLattice> {
    let n = p.n_vertices();
    let d = p.dim();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let facet_masks: Vec<u64> = (0..p.facet_count()).map(|i| p.facet_mask(i)).collect();
    let masks = intersection_closure(full, &facet_masks);
    let index: HashMap<u64, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();

    // Every vertex must itself be a face.
    for v in 0..n {
        if !index.contains_key(&(1u64 << v)) {
            return Err(Error::InvalidPolytope(format!(
                "vertex {v} is not an intersection of facets"
            )));
        }
    }

    // Covers: maximal proper subfaces. Faces are sorted by popcount, so
    // scanning earlier faces in reverse visits larger candidates first.
    let mut lower: Vec<Vec<usize>> = vec![Vec::new(); masks.len()];
    for (fi, &fm) in masks.iter().enumerate() {
        let mut covered: Vec<usize> = Vec::new();
        for gi in (0..fi).rev() {
            let gm = masks[gi];
            if gm & fm == gm && gm != fm && !covered.iter().any(|&h| gm & masks[h] == gm) {
                covered.push(gi);
            }
        }
        lower[fi] = covered;
    }

    // Dimensions by longest chain from the bottom.
    let mut dims = vec![-1i64; masks.len()];
    for fi in 1..masks.len() {
        dims[fi] = lower[fi].iter().map(|&g| dims[g]).max().unwrap_or(-1) + 1;
    }

    // Graded: every cover relation steps dimension by exactly one.
    for (fi, covered) in lower.iter().enumerate() {
        for &gi in covered {
            if dims[fi] != dims[gi] + 1 {
                return Err(Error::InvalidPolytope(format!(
                    "not graded: {:?} (dim {}) covers {:?} (dim {})",
                    mask_to_vec(masks[fi]),
                    dims[fi],
                    mask_to_vec(masks[gi]),
                    dims[gi]
                )));
            }
        }
    }
    let top = masks.len() - 1;
    if masks[top] != full || dims[top] != d as i64 {
        return Err(Error::InvalidPolytope(format!(
            "lattice height is {}, expected dimension {d}",
            dims[top]
        )));
    }

    // Diamond property: every interval of length two has exactly four
    // elements, i.e. exactly two faces strictly between.
    let mut pair_count: HashMap<(usize, usize), usize> = HashMap::new();
    for (hi, covered) in lower.iter().enumerate() {
        for &gi in covered {
            for &fi in &lower[gi] {
                *pair_count.entry((fi, hi)).or_insert(0) += 1;
            }
        }
    }
    for ((fi, hi), count) in &pair_count {
        if *count != 2 {
            return Err(Error::InvalidPolytope(format!(
                "diamond violated: interval [{:?}, {:?}] has {count} middle faces",
                mask_to_vec(masks[*fi]),
                mask_to_vec(masks[*hi])
            )));
        }
    }

    let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); d + 2];
    for (fi, &dm) in dims.iter().enumerate() {
        let slot = (dm + 1) as usize;
        if slot >= by_dim.len() {
            return Err(Error::InvalidPolytope(format!(
                "face {:?} has dimension {dm} above the polytope dimension {d}",
                mask_to_vec(masks[fi])
            )));
        }
        by_dim[slot].push(fi);
    }

    let mut degrees = vec![0usize; n];
    for &e in &by_dim[2] {
        let vs = mask_to_vec(masks[e]);
        if vs.len() != 2 {
            return Err(Error::InvalidPolytope(format!(
                "one-dimensional face {vs:?} does not have two vertices"
            )));
        }
        degrees[vs[0]] += 1;
        degrees[vs[1]] += 1;
    }

    Ok(FaceLattice {
        dim: d,
        n_vertices: n,
        masks,
        dims,
        by_dim,
        lower,
        degrees,
        index,
    })
}

impl FaceLattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn face_count(&self) -> usize {
        self.masks.len()
    }

    pub fn face_vertices(&self, id: usize) -> Vec<usize> {
        mask_to_vec(self.masks[id])
    }

    pub fn face_mask(&self, id: usize) -> u64 {
        self.masks[id]
    }

    pub fn face_dim(&self, id: usize) -> i64 {
        self.dims[id]
    }

    pub fn face_id(&self, vertices: &[usize]) -> Option<usize> {
        let mask = vertices.iter().fold(0u64, |m, &v| m | (1 << v));
        self.index.get(&mask).copied()
    }

    /// Ids of faces of the given dimension, in canonical order.
    pub fn ids_of_dim(&self, k: i64) -> &[usize] {
        &self.by_dim[(k + 1) as usize]
    }

    /// Vertex lists of all faces of the given dimension.
    pub fn faces_of_dim(&self, k: i64) -> Vec<Vec<usize>> {
        self.ids_of_dim(k)
            .iter()
            .map(|&id| self.face_vertices(id))
            .collect()
    }

    /// Maximal proper subfaces of a face.
    pub fn covered_by(&self, id: usize) -> &[usize] {
        &self.lower[id]
    }

    pub fn f_vector(&self) -> FVector {
        FVector((0..self.dim).map(|k| self.ids_of_dim(k as i64).len()).collect())
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.ids_of_dim(1)
            .iter()
            .map(|&id| {
                let vs = self.face_vertices(id);
                (vs[0], vs[1])
            })
            .collect()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }
}

/// Number of vertices and edges, straight from the lattice.
pub fn f01(lat: &FaceLattice) -> (usize, usize) {
    let f = lat.f_vector();
    (f.counts()[0], f.counts()[1])
}

/// A face of `p` as a standalone polytope. Its facets are the faces of `p`
/// covered by the face; coordinates are inherited when present.
pub fn face_as_polytope(p: &Polytope, lat: &FaceLattice, face_id: usize) -> Result<Polytope> {
    let fdim = lat.face_dim(face_id);
    if fdim < 1 {
        return Err(Error::BadParameter(format!(
            "face of dimension {fdim} cannot stand alone"
        )));
    }
    let verts = lat.face_vertices(face_id);
    let reindex: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let facets: Vec<Vec<usize>> = lat
        .covered_by(face_id)
        .iter()
        .map(|&rid| {
            lat.face_vertices(rid)
                .into_iter()
                .map(|v| reindex[&v])
                .collect()
        })
        .collect();
    let mut out = Polytope::new(fdim as usize, verts.len(), facets)?;
    if let Some(pts) = p.realization() {
        out = out.with_realization(verts.iter().map(|&v| pts[v].clone()).collect())?;
    }
    if let Some(name) = p.name() {
        out = out.with_name(format!("{name}/face{face_id}"));
    }
    Ok(out)
}

/// Combinatorial vertex figure: its vertices are the edges of `p` at `v`,
/// its facets come from the facets of `p` containing `v`.
pub fn vertex_figure(p: &Polytope, lat: &FaceLattice, v: usize) -> Result<Polytope> {
    let mut incident: Vec<usize> = Vec::new();
    for (a, b) in lat.edges() {
        if a == v || b == v {
            incident.push(if a == v { b } else { a });
        }
    }
    incident.sort_unstable();
    let facets: Vec<Vec<usize>> = p
        .facets()
        .iter()
        .filter(|f| f.contains(&v))
        .map(|f| {
            incident
                .iter()
                .enumerate()
                .filter(|(_, w)| f.contains(w))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Polytope::new(p.dim() - 1, incident.len(), facets)
}

/// Transposed incidence structure: vertices and facets swap roles. No
/// realization is carried.
pub fn dual(p: &Polytope) -> Result<Polytope> {
    let m = p.facet_count();
    if m > crate::polytope::MAX_VERTICES {
        return Err(Error::TooManyVertices(m));
    }
    let facets: Vec<Vec<usize>> = (0..p.n_vertices())
        .map(|v| {
            (0..m)
                .filter(|&i| p.facets()[i].contains(&v))
                .collect::<Vec<usize>>()
        })
        .collect();
    let mut out = Polytope::new(p.dim(), m, facets)?;
    if let Some(name) = p.name() {
        out = out.with_name(format!("dual({name})"));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub ok: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<&CheckOutcome> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

fn connected_after_removal(n: usize, adj: &[Vec<usize>], removed: &[usize]) -> bool {
    let gone: u64 = removed.iter().fold(0, |m, &v| m | (1 << v));
    let start = (0..n).find(|&v| gone & (1 << v) == 0);
    let Some(start) = start else { return true };
    let mut seen: u64 = 1 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if gone & (1 << w) == 0 && seen & (1 << w) == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    (0..n).all(|v| gone & (1 << v) != 0 || seen & (1 << v) != 0)
}

fn combinations(n: usize, k: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u64)?;
        acc /= (i + 1) as u64;
    }
    Some(acc)
}

/// Balinski's theorem: the skeleton of a d-polytope is d-connected. Checked
/// by removing every (d-1)-subset of vertices when that is affordable, and
/// a deterministic sample otherwise.
fn balinski_connected(n: usize, d: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    if d == 0 || n <= d {
        return None;
    }
    let k = d - 1;
    let budget = 100_000u64;
    let total = combinations(n, k);
    if total.map_or(false, |t| t <= budget) {
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            if !connected_after_removal(n, &adj, &subset) {
                return Some(subset);
            }
            // next k-combination in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                if subset[i] != i + n - k {
                    break;
                }
                if i == 0 {
                    return None;
                }
            }
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
        }
    } else {
        let mut rng = XorShift(0x9E3779B97F4A7C15);
        for _ in 0..budget {
            let mut subset = Vec::with_capacity(k);
            while subset.len() < k {
                let v = (rng.next() % n as u64) as usize;
                if !subset.contains(&v) {
                    subset.push(v);
                }
            }
            subset.sort_unstable();
            if !connected_after_removal(n, &adj, &subset) {
                return Some(subset);
            }
        }
        None
    }
}

/// Run every structural check and report each outcome with a witness for
/// failures: graded lattice with diamonds, Euler's relation, each ridge in
/// exactly two facets, Balinski connectivity, and consistency of the
/// realization when one is present.
pub fn validate(p: &Polytope) -> ValidationReport {
    let mut checks = Vec::new();
    let lat = match build_lattice(p) {
        Ok(l) => {
            checks.push(CheckOutcome {
                name: "graded lattice with diamond property",
                ok: true,
                witness: None,
            });
            l
        }
        Err(e) => {
            checks.push(CheckOutcome {
                name: "graded lattice with diamond property",
                ok: false,
                witness: Some(e.to_string()),
            });
            return ValidationReport { checks };
        }
    };

    let fv = lat.f_vector();
    checks.push(CheckOutcome {
        name: "Euler relation",
        ok: fv.euler_holds(),
        witness: if fv.euler_holds() {
            None
        } else {
            Some(format!("f-vector {:?}", fv.counts()))
        },
    });

    let mut ridge_ok = true;
    let mut ridge_witness = None;
    for &rid in lat.ids_of_dim(p.dim() as i64 - 2) {
        let rm = lat.face_mask(rid);
        let count = (0..p.facet_count())
            .filter(|&i| p.facet_mask(i) & rm == rm)
            .count();
        if count != 2 {
            ridge_ok = false;
            ridge_witness = Some(format!(
                "ridge {:?} lies in {count} facets",
                lat.face_vertices(rid)
            ));
            break;
        }
    }
    checks.push(CheckOutcome {
        name: "every ridge in exactly two facets",
        ok: ridge_ok,
        witness: ridge_witness,
    });

    let cut = balinski_connected(p.n_vertices(), p.dim(), &lat.edges());
    checks.push(CheckOutcome {
        name: "Balinski d-connectivity",
        ok: cut.is_none(),
        witness: cut.map(|c| format!("removing {c:?} disconnects the skeleton")),
    });

    if p.realization().is_some() {
        match facet_halfspaces(p) {
            Ok(_) => checks.push(CheckOutcome {
                name: "realization supports every facet exactly",
                ok: true,
                witness: None,
            }),
            Err(e) => checks.push(CheckOutcome {
                name: "realization supports every facet exactly",
                ok: false,
                witness: Some(e.to_string()),
            }),
        }
    }

    ValidationReport { checks }
}
