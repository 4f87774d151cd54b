//! Excess degrees and the structural predicates built on them: facet pair
//! profiles, Shephard/Kirkman properties, pyramid recognition, and the
//! classification of polytopes with small excess.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families;
use crate::lattice::{self, build_lattice, canonical_form, is_isomorphic, FaceLattice};
use crate::polytope::Polytope;

/// Per-vertex and total excess. The total is `2 f1 - d f0`, which equals
/// the sum of `deg(u) - d` over the vertices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExcessReport {
    pub total: usize,
    pub per_vertex: Vec<usize>,
    pub nonsimple: Vec<usize>,
}

pub fn excess(p: &Polytope, lat: &FaceLattice) -> ExcessReport {
    let d = p.dim();
    let per_vertex: Vec<usize> = lat
        .degrees()
        .iter()
        .map(|&deg| {
            debug_assert!(deg >= d);
            deg - d
        })
        .collect();
    let total = per_vertex.iter().sum();
    let f = lat.f_vector();
    debug_assert_eq!(total, 2 * f.counts()[1] - d * f.counts()[0]);
    ExcessReport {
        total,
        nonsimple: per_vertex
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, _)| v)
            .collect(),
        per_vertex,
    }
}

pub fn is_simple(p: &Polytope, lat: &FaceLattice) -> bool {
    excess(p, lat).total == 0
}

/// How two distinct facets meet: not at all, or in a face of dimension `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairMeet {
    Disjoint,
    Face { dim: i64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FacetPairProfile {
    pub pairs: Vec<(usize, usize, PairMeet)>,
    pub semisimple: bool,
    pub super_kirkman: bool,
}

/// Intersection dimension of every unordered facet pair. The intersection
/// of two facets is always a face, so its vertex set is in the lattice.
pub fn facet_profile(p: &Polytope, lat: &FaceLattice) -> FacetPairProfile {
    let d = p.dim() as i64;
    let m = p.facet_count();
    let mut pairs = Vec::with_capacity(m * (m - 1) / 2);
    let mut semisimple = true;
    let mut super_kirkman = true;
    for i in 0..m {
        for j in i + 1..m {
            let mask = p.facet_mask(i) & p.facet_mask(j);
            let meet = if mask == 0 {
                super_kirkman = false;
                PairMeet::Disjoint
            } else {
                let verts: Vec<usize> = (0..p.n_vertices())
                    .filter(|&v| mask & (1 << v) != 0)
                    .collect();
                let id = lat
                    .face_id(&verts)
                    .expect("facet intersection is a face of the lattice");
                let dim = lat.face_dim(id);
                if dim != d - 2 {
                    semisimple = false;
                    super_kirkman = false;
                }
                PairMeet::Face { dim }
            };
            pairs.push((i, j, meet));
        }
    }
    FacetPairProfile {
        pairs,
        semisimple,
        super_kirkman,
    }
}

pub fn is_semisimple(p: &Polytope, lat: &FaceLattice) -> bool {
    facet_profile(p, lat).semisimple
}

pub fn is_super_kirkman(p: &Polytope, lat: &FaceLattice) -> bool {
    facet_profile(p, lat).super_kirkman
}

/// Facets in which every vertex has exactly one neighbour outside.
pub fn shephard_facets(p: &Polytope, lat: &FaceLattice) -> Vec<usize> {
    let edges = lat.edges();
    let mut out = Vec::new();
    for (fi, facet) in p.facets().iter().enumerate() {
        let inside: BTreeSet<usize> = facet.iter().copied().collect();
        let good = facet.iter().all(|&v| {
            let outside = edges
                .iter()
                .filter(|&&(a, b)| {
                    (a == v && !inside.contains(&b)) || (b == v && !inside.contains(&a))
                })
                .count();
            outside == 1
        });
        if good {
            out.push(fi);
        }
    }
    out
}

/// Facets met by every other facet in a ridge.
pub fn kirkman_facets(p: &Polytope, lat: &FaceLattice) -> Vec<usize> {
    let profile = facet_profile(p, lat);
    let d = p.dim() as i64;
    let m = p.facet_count();
    (0..m)
        .filter(|&fi| {
            profile
                .pairs
                .iter()
                .filter(|(a, b, _)| *a == fi || *b == fi)
                .all(|(_, _, meet)| matches!(meet, PairMeet::Face { dim } if *dim == d - 2))
        })
        .collect()
}

/// Facets met by every other facet either not at all or in a ridge.
pub fn weak_ks_facets(p: &Polytope, lat: &FaceLattice) -> Vec<usize> {
    let profile = facet_profile(p, lat);
    let d = p.dim() as i64;
    let m = p.facet_count();
    (0..m)
        .filter(|&fi| {
            profile
                .pairs
                .iter()
                .filter(|(a, b, _)| *a == fi || *b == fi)
                .all(|(_, _, meet)| {
                    matches!(meet, PairMeet::Disjoint)
                        || matches!(meet, PairMeet::Face { dim } if *dim == d - 2)
                })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PyramidStructure {
    /// Maximal pyramid fold; 0 when not a pyramid.
    pub fold: usize,
    /// Apexes in the order they were stripped.
    pub apexes: Vec<usize>,
    /// Number of vertices of the base left after stripping.
    pub base_vertices: usize,
}

fn find_apex(p: &Polytope) -> Option<usize> {
    (0..p.n_vertices()).find(|&v| {
        p.facets().iter().filter(|f| !f.contains(&v)).count() == 1
    })
}

/// Maximal r with P an r-fold pyramid: repeatedly strip a vertex that lies
/// on every facet but one, descending into the base facet.
pub fn pyramid_structure(p: &Polytope) -> Result<PyramidStructure> {
    let mut current = p.clone();
    let mut apexes = Vec::new();
    // Track original labels through the restrictions.
    let mut labels: Vec<usize> = (0..p.n_vertices()).collect();
    loop {
        if current.dim() <= 1 {
            break;
        }
        let Some(apex) = find_apex(&current) else { break };
        apexes.push(labels[apex]);
        let base_facet = current
            .facets()
            .iter()
            .position(|f| !f.contains(&apex))
            .expect("apex misses exactly one facet");
        let lat = build_lattice(&current)?;
        let fid = lat
            .face_id(&current.facets()[base_facet].clone())
            .expect("facet is a face");
        let verts = lat.face_vertices(fid);
        labels = verts.iter().map(|&v| labels[v]).collect();
        current = lattice::face_as_polytope(&current, &lat, fid)?;
    }
    Ok(PyramidStructure {
        fold: apexes.len(),
        apexes,
        base_vertices: current.n_vertices(),
    })
}

/// Case tags of the small-excess structure theorems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureCase {
    /// excess d-2: a unique nonsimple vertex, the intersection of two facets.
    LowUniqueVertex,
    /// excess d-2: d-2 vertices of excess one forming a (d-3)-simplex that
    /// is the intersection of two facets.
    LowSimplexOfExcessOne,
    /// excess d-1, d=5: one vertex of excess four with vertex figure the
    /// product of two triangles.
    HighSingleVertex,
    /// excess d-1, d=5: two vertices of excess two joined by an edge that is
    /// the intersection of two facets.
    HighEdge,
    /// excess d-1, d=5: four vertices of excess one forming a quadrilateral
    /// 2-face that is the intersection of two facets.
    HighQuadrilateral,
    /// excess 2 in dimension 3: pentagonal pyramid.
    Dim3PentagonalPyramid,
    /// excess 2 in dimension 3: the tetragonal antiwedge.
    Dim3Antiwedge,
    /// excess 2 in dimension 3: Shephard facet present, not a pyramid.
    Dim3ShephardNotPyramid,
    /// excess 2 in dimension 3: decomposable with no Shephard facet.
    Dim3DecomposableNoShephard,
}

/// Identity of the underfacet produced by truncating the distinguished face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnderfacetKind {
    ProductOfTriangleAndSquare,
    TruncatedProductOfTwoTriangles,
    Tesseract,
    Other(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureVerdict {
    pub case: StructureCase,
    /// Vertices of the distinguished face (vertex, edge, simplex, or
    /// quadrilateral, depending on the case).
    pub distinguished: Vec<usize>,
    /// Facets whose intersection is the distinguished face.
    pub witnesses: Vec<usize>,
    pub underfacet: Option<UnderfacetKind>,
}

fn facet_pair_meeting_exactly(p: &Polytope, target: &[usize]) -> Option<(usize, usize)> {
    let tmask: u64 = target.iter().fold(0, |m, &v| m | (1 << v));
    let m = p.facet_count();
    for i in 0..m {
        for j in i + 1..m {
            if p.facet_mask(i) & p.facet_mask(j) == tmask {
                return Some((i, j));
            }
        }
    }
    None
}

fn facet_triple_meeting_exactly(p: &Polytope, target: &[usize]) -> Option<(usize, usize, usize)> {
    let tmask: u64 = target.iter().fold(0, |m, &v| m | (1 << v));
    let m = p.facet_count();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                if p.facet_mask(i) & p.facet_mask(j) & p.facet_mask(k) == tmask {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

fn classify_underfacet(uf: &Polytope) -> UnderfacetKind {
    let delta112 = families::simplex_product(&[1, 1, 2]).expect("constructor");
    let gamma22 = families::gamma(2, 2).expect("constructor");
    let tesseract = families::simplex_product(&[1, 1, 1, 1]).expect("constructor");
    if is_isomorphic(uf, &delta112) {
        UnderfacetKind::ProductOfTriangleAndSquare
    } else if is_isomorphic(uf, &gamma22) {
        UnderfacetKind::TruncatedProductOfTwoTriangles
    } else if is_isomorphic(uf, &tesseract) {
        UnderfacetKind::Tesseract
    } else {
        UnderfacetKind::Other(canonical_form(uf).hex())
    }
}

/// Truncate the distinguished face and classify the underfacet.
fn underfacet_of(p: &Polytope, face: &[usize]) -> Result<UnderfacetKind> {
    let (cutp, under) = families::truncate(p, face)?;
    let lat = build_lattice(&cutp)?;
    let fid = lat
        .face_id(&cutp.facets()[under].clone())
        .expect("underfacet is a face");
    let uf = lattice::face_as_polytope(&cutp, &lat, fid)?;
    Ok(classify_underfacet(&uf))
}

fn contradiction(p: &Polytope, why: &str) -> Error {
    Error::Contradiction(format!(
        "{}: {why}",
        p.name().unwrap_or("unnamed polytope")
    ))
}

/// Classify a polytope whose excess is d-2 or d-1 according to the
/// structure theorems; any mismatch with their assertions is reported as a
/// contradiction rather than silently tolerated.
pub fn small_excess_structure(p: &Polytope) -> Result<StructureVerdict> {
    let lat = build_lattice(p)?;
    let d = p.dim();
    let rep = excess(p, &lat);
    let xi = rep.total as i64;
    if xi != d as i64 - 2 && xi != d as i64 - 1 {
        return Err(Error::ExcessOutOfRange { d, xi });
    }

    if xi == d as i64 - 2 {
        // Either one vertex carries all the excess, or d-2 vertices of
        // excess one form a (d-3)-simplex; both times the distinguished
        // face is an intersection of two facets.
        if rep.nonsimple.len() == 1 {
            let v = rep.nonsimple[0];
            let pair = facet_pair_meeting_exactly(p, &[v])
                .ok_or_else(|| contradiction(p, "unique nonsimple vertex is not a facet-pair intersection"))?;
            return Ok(StructureVerdict {
                case: StructureCase::LowUniqueVertex,
                distinguished: vec![v],
                witnesses: vec![pair.0, pair.1],
                underfacet: None,
            });
        }
        if rep.nonsimple.len() == d - 2 && rep.nonsimple.iter().all(|&v| rep.per_vertex[v] == 1) {
            let face = rep.nonsimple.clone();
            let fid = lat
                .face_id(&face)
                .ok_or_else(|| contradiction(p, "nonsimple vertices do not form a face"))?;
            if lat.face_dim(fid) != d as i64 - 3 || lat.face_vertices(fid).len() != d - 2 {
                return Err(contradiction(p, "nonsimple vertices do not form a (d-3)-simplex"));
            }
            let pair = facet_pair_meeting_exactly(p, &face)
                .ok_or_else(|| contradiction(p, "simplex of nonsimple vertices is not a facet-pair intersection"))?;
            return Ok(StructureVerdict {
                case: StructureCase::LowSimplexOfExcessOne,
                distinguished: face,
                witnesses: vec![pair.0, pair.1],
                underfacet: None,
            });
        }
        return Err(contradiction(
            p,
            "excess d-2 but the nonsimple vertices match neither case",
        ));
    }

    // xi = d - 1
    if d == 3 {
        return Ok(dim3_excess_two(p, &lat));
    }
    if d != 5 {
        return Err(contradiction(p, "excess d-1 outside dimensions 3 and 5"));
    }
    match rep.nonsimple.len() {
        1 => {
            let v = rep.nonsimple[0];
            if rep.per_vertex[v] != 4 {
                return Err(contradiction(p, "single nonsimple vertex without excess four"));
            }
            let vf = lattice::vertex_figure(p, &lat, v)?;
            let delta22 = families::simplex_product(&[2, 2]).expect("constructor");
            if !is_isomorphic(&vf, &delta22) {
                return Err(contradiction(p, "vertex figure is not the product of two triangles"));
            }
            let triple = facet_triple_meeting_exactly(p, &[v])
                .ok_or_else(|| contradiction(p, "vertex is not the intersection of three facets"))?;
            Ok(StructureVerdict {
                case: StructureCase::HighSingleVertex,
                distinguished: vec![v],
                witnesses: vec![triple.0, triple.1, triple.2],
                underfacet: None,
            })
        }
        2 => {
            let (a, b) = (rep.nonsimple[0], rep.nonsimple[1]);
            if rep.per_vertex[a] != 2 || rep.per_vertex[b] != 2 {
                return Err(contradiction(p, "two nonsimple vertices without excess two each"));
            }
            let face = vec![a.min(b), a.max(b)];
            let fid = lat
                .face_id(&face)
                .filter(|&id| lat.face_dim(id) == 1)
                .ok_or_else(|| contradiction(p, "nonsimple vertices are not joined by an edge"))?;
            let _ = fid;
            let pair = facet_pair_meeting_exactly(p, &face)
                .ok_or_else(|| contradiction(p, "edge is not a facet-pair intersection"))?;
            let uf = underfacet_of(p, &face)?;
            if !matches!(
                uf,
                UnderfacetKind::ProductOfTriangleAndSquare
                    | UnderfacetKind::TruncatedProductOfTwoTriangles
            ) {
                return Err(contradiction(p, "edge underfacet has an unexpected type"));
            }
            Ok(StructureVerdict {
                case: StructureCase::HighEdge,
                distinguished: face,
                witnesses: vec![pair.0, pair.1],
                underfacet: Some(uf),
            })
        }
        4 => {
            let face = rep.nonsimple.clone();
            if face.iter().any(|&v| rep.per_vertex[v] != 1) {
                return Err(contradiction(p, "four nonsimple vertices without excess one each"));
            }
            let fid = lat
                .face_id(&face)
                .filter(|&id| lat.face_dim(id) == 2)
                .ok_or_else(|| contradiction(p, "nonsimple vertices do not form a 2-face"))?;
            if lat.face_vertices(fid).len() != 4 {
                return Err(contradiction(p, "the 2-face is not a quadrilateral"));
            }
            let pair = facet_pair_meeting_exactly(p, &face)
                .ok_or_else(|| contradiction(p, "quadrilateral is not a facet-pair intersection"))?;
            let uf = underfacet_of(p, &face)?;
            if uf != UnderfacetKind::Tesseract {
                return Err(contradiction(p, "quadrilateral underfacet is not the tesseract"));
            }
            Ok(StructureVerdict {
                case: StructureCase::HighQuadrilateral,
                distinguished: face,
                witnesses: vec![pair.0, pair.1],
                underfacet: Some(uf),
            })
        }
        k => Err(contradiction(
            p,
            &format!("excess four spread over {k} nonsimple vertices"),
        )),
    }
}

/// The four shapes of a 3-polytope with excess two.
fn dim3_excess_two(p: &Polytope, lat: &FaceLattice) -> StructureVerdict {
    let rep = excess(p, lat);
    let pyr = pyramid_structure(p).expect("pyramid check");
    if pyr.fold >= 1 && p.n_vertices() == 6 {
        return StructureVerdict {
            case: StructureCase::Dim3PentagonalPyramid,
            distinguished: rep.nonsimple,
            witnesses: Vec::new(),
            underfacet: None,
        };
    }
    let ta = families::antiwedge().expect("constructor");
    if is_isomorphic(p, &ta) {
        return StructureVerdict {
            case: StructureCase::Dim3Antiwedge,
            distinguished: rep.nonsimple,
            witnesses: Vec::new(),
            underfacet: None,
        };
    }
    let shephard = shephard_facets(p, lat);
    if !shephard.is_empty() && pyr.fold == 0 {
        StructureVerdict {
            case: StructureCase::Dim3ShephardNotPyramid,
            distinguished: rep.nonsimple,
            witnesses: shephard,
            underfacet: None,
        }
    } else {
        StructureVerdict {
            case: StructureCase::Dim3DecomposableNoShephard,
            distinguished: rep.nonsimple,
            witnesses: Vec::new(),
            underfacet: None,
        }
    }
}

/// One-stop report for the `analyze` command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub name: Option<String>,
    pub dim: usize,
    pub f_vector: Vec<usize>,
    pub facet_count: usize,
    pub excess: usize,
    pub per_vertex_excess: Vec<usize>,
    pub nonsimple_vertices: Vec<usize>,
    pub simple: bool,
    pub semisimple: bool,
    pub super_kirkman: bool,
    pub pyramid_fold: usize,
    pub shephard_facets: Vec<usize>,
    pub kirkman_facets: Vec<usize>,
    pub weak_ks_facets: Vec<usize>,
    pub structure: Option<StructureVerdict>,
}

pub fn analyze(p: &Polytope) -> Result<AnalysisReport> {
    let lat = build_lattice(p)?;
    let rep = excess(p, &lat);
    let profile = facet_profile(p, &lat);
    let pyr = pyramid_structure(p)?;
    let d = p.dim() as i64;
    let structure = if rep.total as i64 == d - 2 || rep.total as i64 == d - 1 {
        small_excess_structure(p).ok()
    } else {
        None
    };
    Ok(AnalysisReport {
        name: p.name().map(str::to_string),
        dim: p.dim(),
        f_vector: lat.f_vector().counts().to_vec(),
        facet_count: p.facet_count(),
        excess: rep.total,
        per_vertex_excess: rep.per_vertex.clone(),
        nonsimple_vertices: rep.nonsimple.clone(),
        simple: rep.total == 0,
        semisimple: profile.semisimple,
        super_kirkman: profile.super_kirkman,
        pyramid_fold: pyr.fold,
        shephard_facets: shephard_facets(p, &lat),
        kirkman_facets: kirkman_facets(p, &lat),
        weak_ks_facets: weak_ks_facets(p, &lat),
        structure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families as fam;

    fn lat(p: &Polytope) -> FaceLattice {
        build_lattice(p).unwrap()
    }

    #[test]
    fn excess_of_named_families() {
        let d22 = fam::simplex_product(&[2, 2]).unwrap();
        assert_eq!(excess(&d22, &lat(&d22)).total, 0);

        let p5 = fam::pentasm(5).unwrap();
        let rep = excess(&p5, &lat(&p5));
        assert_eq!(rep.total, 3);
        assert_eq!(rep.nonsimple.len(), 3);
        assert!(rep.nonsimple.iter().all(|&v| rep.per_vertex[v] == 1));

        let s5 = fam::family_sigma(5).unwrap();
        let rep = excess(&s5, &lat(&s5));
        assert_eq!(rep.total, 3);
        assert_eq!(rep.nonsimple.len(), 1);
    }

    #[test]
    fn pyramid_over_product_is_semisimple_not_simple() {
        let base = fam::simplex_product(&[2, 2]).unwrap();
        let p = fam::pyramid(&base, 1).unwrap();
        let l = lat(&p);
        assert!(is_semisimple(&p, &l));
        assert!(!is_simple(&p, &l));
        // super-Kirkman with exactly one Shephard facet
        assert!(is_super_kirkman(&p, &l));
        assert_eq!(shephard_facets(&p, &l).len(), 1);
    }

    #[test]
    fn low_dimension_semisimple_is_simple() {
        for p in [
            fam::simplex(4).unwrap(),
            fam::prism(4).unwrap(),
            fam::pentasm(4).unwrap(),
            fam::family_c(4).unwrap(),
            fam::j_family(4).unwrap(),
        ] {
            let l = lat(&p);
            if is_semisimple(&p, &l) {
                assert!(is_simple(&p, &l), "{p}");
            }
        }
    }

    #[test]
    fn prism_facets_are_all_shephard() {
        let p = fam::prism(4).unwrap();
        let l = lat(&p);
        assert_eq!(shephard_facets(&p, &l).len(), p.facet_count());
    }

    #[test]
    fn antiwedge_has_no_shephard_facet() {
        let ta = fam::antiwedge().unwrap();
        let l = lat(&ta);
        assert!(shephard_facets(&ta, &l).is_empty());
    }

    #[test]
    fn pyramid_structure_of_triplexes() {
        for (k, m) in [(2usize, 2usize), (3, 2), (2, 3)] {
            let t = fam::triplex(k, m).unwrap();
            let s = pyramid_structure(&t).unwrap();
            assert_eq!(s.fold, m, "triplex({k},{m})");
            assert_eq!(s.base_vertices, 2 * k);
        }
        let pent = fam::pentasm(4).unwrap();
        assert_eq!(pyramid_structure(&pent).unwrap().fold, 0);
        let p3 = fam::pyramid(&fam::pentagon().unwrap(), 3).unwrap();
        assert_eq!(pyramid_structure(&p3).unwrap().fold, 3);
    }

    #[test]
    fn pentasm_meets_low_simplex_case() {
        let p = fam::pentasm(5).unwrap();
        let v = small_excess_structure(&p).unwrap();
        assert_eq!(v.case, StructureCase::LowSimplexOfExcessOne);
        assert_eq!(v.distinguished.len(), 3);
    }

    #[test]
    fn sigma_meets_low_unique_vertex_case() {
        let p = fam::family_sigma(5).unwrap();
        let v = small_excess_structure(&p).unwrap();
        assert_eq!(v.case, StructureCase::LowUniqueVertex);
    }

    #[test]
    fn pyramid_over_product_meets_high_single_vertex_case() {
        let base = fam::simplex_product(&[2, 2]).unwrap();
        let p = fam::pyramid(&base, 1).unwrap();
        let v = small_excess_structure(&p).unwrap();
        assert_eq!(v.case, StructureCase::HighSingleVertex);
        assert_eq!(v.witnesses.len(), 3);
    }

    #[test]
    fn triplex_32_meets_high_edge_case() {
        let p = fam::triplex(3, 2).unwrap();
        let v = small_excess_structure(&p).unwrap();
        assert_eq!(v.case, StructureCase::HighEdge);
        assert_eq!(
            v.underfacet,
            Some(UnderfacetKind::ProductOfTriangleAndSquare)
        );
    }

    #[test]
    fn a5_meets_high_quadrilateral_case() {
        let p = fam::family_a(5).unwrap();
        let v = small_excess_structure(&p).unwrap();
        assert_eq!(v.case, StructureCase::HighQuadrilateral);
        assert_eq!(v.underfacet, Some(UnderfacetKind::Tesseract));
    }

    #[test]
    fn excess_out_of_range_is_an_error() {
        let p = fam::prism(4).unwrap();
        assert!(matches!(
            small_excess_structure(&p),
            Err(Error::ExcessOutOfRange { .. })
        ));
    }
}
