//! Machine-checkable certificates of Minkowski decomposability and
//! indecomposability.
//!
//! Decomposability comes from a Shephard facet with at least two vertices
//! outside. Indecomposability comes from pyramid structure, from a grown
//! indecomposable geometric subgraph touching every facet, or from having
//! fewer than d facets that could possibly be decomposable. Verdicts apply
//! to the construction's own realization; the families in scope are
//! combinatorially (in)decomposable, so no stronger claim is needed.

use serde::{Deserialize, Serialize};

use crate::analysis::{excess, pyramid_structure, shephard_facets};
use crate::error::{Error, Result};
use crate::kernel::geometry::{affine_dim, affinely_independent};
use crate::lattice::{self, build_lattice, FaceLattice};
use crate::polytope::Polytope;
use crate::Point;

/// A graph drawn on explicit points.
#[derive(Clone, Debug)]
pub struct GeometricGraph {
    pub points: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
}

impl GeometricGraph {
    pub fn skeleton(p: &Polytope, lat: &FaceLattice) -> Result<GeometricGraph> {
        Ok(GeometricGraph {
            points: p.require_realization()?.to_vec(),
            edges: lat.edges(),
        })
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges
            .iter()
            .any(|&(x, y)| (x, y) == (a.min(b), a.max(b)) || (x, y) == (a.max(b), a.min(b)))
    }
}

/// True iff the listed vertices are affinely independent and their
/// consecutive pairs (wrapping) are all edges of the graph.
pub fn check_cycle(g: &GeometricGraph, cycle: &[usize]) -> Result<bool> {
    if cycle.len() < 3 {
        return Err(Error::BadCertificate(format!(
            "cycle of length {} is too short",
            cycle.len()
        )));
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != cycle.len() {
        return Err(Error::BadCertificate("cycle repeats a vertex".into()));
    }
    for i in 0..cycle.len() {
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        if !g.has_edge(a, b) {
            return Err(Error::BadCertificate(format!("missing edge [{a}, {b}]")));
        }
    }
    let pts: Vec<Point> = cycle.iter().map(|&v| g.points[v].clone()).collect();
    affinely_independent(&pts)
}

/// One step in the growth of an indecomposable subgraph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum GrowStep {
    /// Start from an affinely independent cycle.
    SeedCycle { cycle: Vec<usize> },
    /// Union with another independent cycle sharing two covered vertices.
    MergeCycle { cycle: Vec<usize>, shared: [usize; 2] },
    /// Add one vertex adjacent to two covered vertices.
    Absorb { vertex: usize, via: [usize; 2] },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IndecSubgraph {
    pub steps: Vec<GrowStep>,
    pub covered: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Decomposable,
    Indecomposable,
    Unknown,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum Evidence {
    /// A facet with Shephard's property and at least two vertices outside.
    ShephardFacet { facet: usize, outside: usize },
    /// The polytope is a pyramid with this apex.
    Pyramid { apex: usize },
    /// A replayable indecomposable subgraph touching every facet.
    Subgraph(IndecSubgraph),
    /// Fewer than d facets are even possibly decomposable.
    FewDecomposableFacets { sub: Vec<(usize, Verdict)> },
    /// Rule-based verdict for the dual of a polytope with at most d-1
    /// nonsimple vertices. Duals carry no realization, so there is no
    /// geometric witness to attach.
    FewNonsimpleInDual { count: usize, bound: usize },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompCertificate {
    pub verdict: Verdict,
    pub evidence: Option<Evidence>,
    pub note: Option<String>,
}

/// All faces that are simplices of dimension >= 2, largest first; the top
/// face is included when the polytope itself is a simplex. Their vertex
/// sets carry Hamiltonian cycles of affinely independent points.
fn simplex_face_seeds(p: &Polytope, lat: &FaceLattice) -> Vec<Vec<usize>> {
    let mut seeds = Vec::new();
    for k in (2..=p.dim() as i64).rev() {
        for &id in lat.ids_of_dim(k) {
            let verts = lat.face_vertices(id);
            if verts.len() == k as usize + 1 {
                seeds.push(verts);
            }
        }
    }
    seeds
}

fn grow_from(
    start: usize,
    seeds: &[Vec<usize>],
    g: &GeometricGraph,
    p: &Polytope,
) -> Option<IndecSubgraph> {
    let mut steps = vec![GrowStep::SeedCycle {
        cycle: seeds[start].clone(),
    }];
    let mut covered: Vec<usize> = seeds[start].clone();
    let mut used = vec![false; seeds.len()];
    used[start] = true;
    loop {
        let mut progressed = false;
        // merges first
        for (si, seed) in seeds.iter().enumerate() {
            if used[si] {
                continue;
            }
            let shared: Vec<usize> = seed.iter().copied().filter(|v| covered.contains(v)).collect();
            if shared.len() >= 2 {
                used[si] = true;
                steps.push(GrowStep::MergeCycle {
                    cycle: seed.clone(),
                    shared: [shared[0], shared[1]],
                });
                for &v in seed {
                    if !covered.contains(&v) {
                        covered.push(v);
                    }
                }
                progressed = true;
            }
        }
        // then absorptions
        for v in 0..p.n_vertices() {
            if covered.contains(&v) {
                continue;
            }
            let nbrs: Vec<usize> = g
                .edges
                .iter()
                .filter_map(|&(a, b)| {
                    if a == v && covered.contains(&b) {
                        Some(b)
                    } else if b == v && covered.contains(&a) {
                        Some(a)
                    } else {
                        None
                    }
                })
                .collect();
            if nbrs.len() >= 2 {
                steps.push(GrowStep::Absorb {
                    vertex: v,
                    via: [nbrs[0], nbrs[1]],
                });
                covered.push(v);
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
    let touches_all = p
        .facets()
        .iter()
        .all(|f| f.iter().any(|v| covered.contains(v)));
    if touches_all {
        covered.sort_unstable();
        Some(IndecSubgraph { steps, covered })
    } else {
        None
    }
}

/// Greedy construction of an indecomposable subgraph certificate: seed with
/// Hamiltonian cycles of simplex faces, merge seeds sharing two vertices,
/// absorb vertices with two covered neighbours, and succeed when the
/// covered set touches every facet. Absence of a certificate is a valid
/// outcome, not an error.
pub fn grow_certificate(p: &Polytope) -> Result<Option<IndecSubgraph>> {
    let lat = build_lattice(p)?;
    let g = GeometricGraph::skeleton(p, &lat)?;
    let seeds = simplex_face_seeds(p, &lat);
    for seed in &seeds {
        let pts: Vec<Point> = seed.iter().map(|&v| g.points[v].clone()).collect();
        debug_assert!(affine_dim(&pts)? + 1 == pts.len());
    }
    for start in 0..seeds.len() {
        if let Some(cert) = grow_from(start, &seeds, &g, p) {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Replay an indecomposable-subgraph certificate against the polytope.
pub fn verify_subgraph(p: &Polytope, cert: &IndecSubgraph) -> Result<()> {
    let lat = build_lattice(p)?;
    let g = GeometricGraph::skeleton(p, &lat)?;
    let mut covered: Vec<usize> = Vec::new();
    for step in &cert.steps {
        match step {
            GrowStep::SeedCycle { cycle } => {
                if !check_cycle(&g, cycle)? {
                    return Err(Error::BadCertificate(format!(
                        "seed cycle {cycle:?} is not affinely independent"
                    )));
                }
                if !covered.is_empty() {
                    return Err(Error::BadCertificate("second seed without a merge".into()));
                }
                covered.extend(cycle);
            }
            GrowStep::MergeCycle { cycle, shared } => {
                if !check_cycle(&g, cycle)? {
                    return Err(Error::BadCertificate(format!(
                        "merged cycle {cycle:?} is not affinely independent"
                    )));
                }
                for s in shared {
                    if !covered.contains(s) || !cycle.contains(s) {
                        return Err(Error::BadCertificate(format!(
                            "shared vertex {s} is not in both graphs"
                        )));
                    }
                }
                if shared[0] == shared[1] {
                    return Err(Error::BadCertificate("merge shares only one vertex".into()));
                }
                for &v in cycle {
                    if !covered.contains(&v) {
                        covered.push(v);
                    }
                }
            }
            GrowStep::Absorb { vertex, via } => {
                if via[0] == via[1] {
                    return Err(Error::BadCertificate("absorb needs two neighbours".into()));
                }
                for w in via {
                    if !covered.contains(w) || !g.has_edge(*vertex, *w) {
                        return Err(Error::BadCertificate(format!(
                            "absorbed vertex {vertex} is not adjacent to covered {w}"
                        )));
                    }
                }
                covered.push(*vertex);
            }
        }
    }
    let mut sorted = covered.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted != cert.covered {
        return Err(Error::BadCertificate(
            "claimed covered set does not match the replay".into(),
        ));
    }
    for (fi, f) in p.facets().iter().enumerate() {
        if !f.iter().any(|v| sorted.binary_search(v).is_ok()) {
            return Err(Error::BadCertificate(format!(
                "facet {fi} is untouched by the subgraph"
            )));
        }
    }
    Ok(())
}

/// The decision procedure. In order: a Shephard facet with two or more
/// outside vertices decides Decomposable; pyramids and grown subgraph
/// certificates decide Indecomposable; with `depth > 0` the facets are
/// classified as standalone polytopes and fewer than d possibly
/// decomposable ones decide Indecomposable; otherwise Unknown.
pub fn classify(p: &Polytope, depth: usize) -> Result<DecompCertificate> {
    let lat = build_lattice(p)?;

    for fi in shephard_facets(p, &lat) {
        let outside = p.n_vertices() - p.facets()[fi].len();
        if outside >= 2 {
            return Ok(DecompCertificate {
                verdict: Verdict::Decomposable,
                evidence: Some(Evidence::ShephardFacet { facet: fi, outside }),
                note: None,
            });
        }
    }

    let pyr = pyramid_structure(p)?;
    if pyr.fold >= 1 {
        return Ok(DecompCertificate {
            verdict: Verdict::Indecomposable,
            evidence: Some(Evidence::Pyramid {
                apex: pyr.apexes[0],
            }),
            note: None,
        });
    }

    if p.realization().is_some() {
        if let Some(cert) = grow_certificate(p)? {
            return Ok(DecompCertificate {
                verdict: Verdict::Indecomposable,
                evidence: Some(Evidence::Subgraph(cert)),
                note: None,
            });
        }
    }

    if depth > 0 {
        let mut sub = Vec::with_capacity(p.facet_count());
        let mut possibly_decomposable = 0;
        for k in lat.ids_of_dim(p.dim() as i64 - 1) {
            let facet = lattice::face_as_polytope(p, &lat, *k)?;
            let verdict = if facet.dim() == 1 {
                Verdict::Indecomposable
            } else {
                classify(&facet, depth - 1)?.verdict
            };
            if verdict != Verdict::Indecomposable {
                possibly_decomposable += 1;
            }
            sub.push((*k, verdict));
        }
        if possibly_decomposable < p.dim() {
            return Ok(DecompCertificate {
                verdict: Verdict::Indecomposable,
                evidence: Some(Evidence::FewDecomposableFacets { sub }),
                note: None,
            });
        }
    }

    Ok(DecompCertificate {
        verdict: Verdict::Unknown,
        evidence: None,
        note: if p.realization().is_none() {
            Some("no realization, geometric certificates unavailable".into())
        } else {
            None
        },
    })
}

/// Rule: a polytope with at most d-1 nonsimple vertices has an
/// indecomposable dual. Emits the dual's certificate when applicable.
pub fn count_nonsimple_dual_rule(p: &Polytope) -> Result<Option<DecompCertificate>> {
    let lat = build_lattice(p)?;
    let rep = excess(p, &lat);
    let count = rep.nonsimple.len();
    if count <= p.dim() - 1 {
        Ok(Some(DecompCertificate {
            verdict: Verdict::Indecomposable,
            evidence: Some(Evidence::FewNonsimpleInDual {
                count,
                bound: p.dim() - 1,
            }),
            note: Some("verdict is about the dual polytope".into()),
        }))
    } else {
        Ok(None)
    }
}

/// Re-verify any certificate against the polytope it claims to describe.
pub fn verify_certificate(p: &Polytope, cert: &DecompCertificate) -> Result<()> {
    match (&cert.verdict, &cert.evidence) {
        (Verdict::Unknown, _) => Ok(()),
        (_, None) => Err(Error::BadCertificate(
            "definite verdict without evidence".into(),
        )),
        (v, Some(Evidence::ShephardFacet { facet, outside })) => {
            if *v != Verdict::Decomposable {
                return Err(Error::BadCertificate("Shephard evidence proves decomposability".into()));
            }
            let lat = build_lattice(p)?;
            if !shephard_facets(p, &lat).contains(facet) {
                return Err(Error::BadCertificate(format!(
                    "facet {facet} does not have Shephard's property"
                )));
            }
            let real_outside = p.n_vertices() - p.facets()[*facet].len();
            if real_outside != *outside || real_outside < 2 {
                return Err(Error::BadCertificate(format!(
                    "facet {facet} has {real_outside} outside vertices"
                )));
            }
            Ok(())
        }
        (v, Some(Evidence::Pyramid { apex })) => {
            if *v != Verdict::Indecomposable {
                return Err(Error::BadCertificate("pyramid evidence proves indecomposability".into()));
            }
            let missing = p.facets().iter().filter(|f| !f.contains(apex)).count();
            if missing != 1 {
                return Err(Error::BadCertificate(format!(
                    "vertex {apex} misses {missing} facets, not exactly one"
                )));
            }
            Ok(())
        }
        (v, Some(Evidence::Subgraph(sg))) => {
            if *v != Verdict::Indecomposable {
                return Err(Error::BadCertificate("subgraph evidence proves indecomposability".into()));
            }
            verify_subgraph(p, sg)
        }
        (v, Some(Evidence::FewDecomposableFacets { sub })) => {
            if *v != Verdict::Indecomposable {
                return Err(Error::BadCertificate("facet-count evidence proves indecomposability".into()));
            }
            if sub.len() != p.facet_count() {
                return Err(Error::BadCertificate("facet verdict list is incomplete".into()));
            }
            let possibly = sub
                .iter()
                .filter(|(_, w)| *w != Verdict::Indecomposable)
                .count();
            if possibly >= p.dim() {
                return Err(Error::BadCertificate(format!(
                    "{possibly} facets possibly decomposable, not fewer than {}",
                    p.dim()
                )));
            }
            Ok(())
        }
        (v, Some(Evidence::FewNonsimpleInDual { count, bound })) => {
            if *v != Verdict::Indecomposable {
                return Err(Error::BadCertificate("dual rule proves indecomposability".into()));
            }
            // The certificate describes this polytope as a dual: count the
            // nonsimple vertices of its dual.
            let primal = lattice::dual(p)?;
            let lat = build_lattice(&primal)?;
            let rep = excess(&primal, &lat);
            if rep.nonsimple.len() != *count || *count > *bound || *bound != p.dim() - 1 {
                return Err(Error::BadCertificate(format!(
                    "dual has {} nonsimple vertices, certificate says {count} <= {bound}",
                    rep.nonsimple.len()
                )));
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families as fam;

    #[test]
    fn cycles_checked_exactly() {
        let cube = fam::simplex_product(&[1, 1, 1]).unwrap();
        let lat = build_lattice(&cube).unwrap();
        let g = GeometricGraph::skeleton(&cube, &lat).unwrap();
        // a quadrilateral 2-face is a planar 4-cycle
        let quad = lat.faces_of_dim(2)[0].clone();
        let cycle = vec![quad[0], quad[1], quad[3], quad[2]];
        let ok = check_cycle(&g, &cycle).unwrap_or(false)
            || check_cycle(&g, &[quad[0], quad[1], quad[2], quad[3]]).unwrap_or(false)
            || check_cycle(&g, &[quad[0], quad[2], quad[3], quad[1]]).unwrap_or(false);
        assert!(!ok, "planar quadrilateral must fail the cycle test");

        let s = fam::simplex(4).unwrap();
        let lat = build_lattice(&s).unwrap();
        let g = GeometricGraph::skeleton(&s, &lat).unwrap();
        assert!(check_cycle(&g, &[0, 1, 2, 3, 4]).unwrap());
    }

    #[test]
    fn simplex_certificate_from_hamiltonian_cycle() {
        let s = fam::simplex(4).unwrap();
        let cert = grow_certificate(&s).unwrap().unwrap();
        assert_eq!(cert.covered, vec![0, 1, 2, 3, 4]);
        verify_subgraph(&s, &cert).unwrap();
    }

    #[test]
    fn bipyramid_over_simplex_has_certificate() {
        let b = fam::bipyramid(5).unwrap();
        let cert = grow_certificate(&b).unwrap().unwrap();
        verify_subgraph(&b, &cert).unwrap();
        let full = classify(&b, 1).unwrap();
        assert_eq!(full.verdict, Verdict::Indecomposable);
    }

    #[test]
    fn prism_has_no_certificate_and_is_decomposable() {
        let p = fam::prism(4).unwrap();
        assert!(grow_certificate(&p).unwrap().is_none());
        let cert = classify(&p, 1).unwrap();
        assert_eq!(cert.verdict, Verdict::Decomposable);
        verify_certificate(&p, &cert).unwrap();
    }

    #[test]
    fn named_decomposables() {
        for p in [
            fam::prism(5).unwrap(),
            fam::capped_prism(3, 4).unwrap(),
            fam::capped_prism(5, 5).unwrap(),
            fam::pentasm(4).unwrap(),
            fam::family_sigma(3).unwrap(),
            fam::simplex_product(&[2, 2]).unwrap(),
        ] {
            let cert = classify(&p, 1).unwrap();
            assert_eq!(cert.verdict, Verdict::Decomposable, "{p}");
            verify_certificate(&p, &cert).unwrap();
        }
    }

    #[test]
    fn antiwedge_is_indecomposable_but_not_a_pyramid() {
        let ta = fam::antiwedge().unwrap();
        assert_eq!(pyramid_structure(&ta).unwrap().fold, 0);
        let cert = classify(&ta, 1).unwrap();
        assert_eq!(cert.verdict, Verdict::Indecomposable);
        verify_certificate(&ta, &cert).unwrap();
    }

    #[test]
    fn pyramids_are_indecomposable() {
        let p = fam::pyramid(&fam::simplex_product(&[2, 2]).unwrap(), 1).unwrap();
        let cert = classify(&p, 0).unwrap();
        assert_eq!(cert.verdict, Verdict::Indecomposable);
        assert!(matches!(cert.evidence, Some(Evidence::Pyramid { .. })));
    }

    #[test]
    fn dual_rule_on_pentasm_and_its_boundary_case() {
        let p = fam::pentasm(5).unwrap();
        let cert = count_nonsimple_dual_rule(&p).unwrap().unwrap();
        let d = lattice::dual(&p).unwrap();
        verify_certificate(&d, &cert).unwrap();
        // the bipyramid has exactly d nonsimple vertices: rule must not fire
        let b = fam::bipyramid(5).unwrap();
        assert!(count_nonsimple_dual_rule(&b).unwrap().is_none());
        // a simple polytope: rule fires (dual of simple is indecomposable)
        let pr = fam::prism(4).unwrap();
        assert!(count_nonsimple_dual_rule(&pr).unwrap().is_some());
    }

    #[test]
    fn certificates_roundtrip_through_json() {
        let p = fam::pentasm(4).unwrap();
        let cert = classify(&p, 1).unwrap();
        let text = serde_json::to_string(&cert).unwrap();
        let back: DecompCertificate = serde_json::from_str(&text).unwrap();
        verify_certificate(&p, &back).unwrap();
    }
}
