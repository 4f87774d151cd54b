//! Corpus generation, excess spectra, feasibility rules, and constructive
//! witnesses for (dimension, vertex count, edge count) queries.

pub mod catalog;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families as fam;
use crate::lattice::build_lattice;
use crate::polytope::Polytope;

pub use catalog::{Catalog, CatalogEntry};

// ---------------------------------------------------------------------------
// Rule layer
// ---------------------------------------------------------------------------

/// Why a pair is infeasible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RuleId {
    /// Degree sum and binomial bound (plus the planarity bound in d = 3).
    EdgeBounds,
    /// No excess strictly between 0 and d-2.
    ExcessGap,
    /// Excess d-1 needs dimension 3 or 5.
    ExcessD1Dim,
    /// Minimum edges for d+1 <= f0 <= 2d vertices.
    TriplexLB,
    /// Minimum edges at 2d+1 vertices.
    PentasmLB,
    /// No 5-polytope with 9 vertices and 25 edges.
    FivePoly925,
    /// No 5-polytope with 13 vertices and 35 edges.
    FivePoly1335,
    /// Simple 5-polytopes need 6 vertices or an even count >= 10.
    Simple5Census,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Feasibility {
    Feasible { witness: String },
    Infeasible { rule: RuleId },
    Unknown,
}

fn binom2(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

/// The rule layer: decide infeasibility outright or defer to the witness
/// search. Never claims feasibility itself.
pub fn feasibility(d: usize, f0: usize, f1: usize) -> Result<Feasibility> {
    if d < 2 || f0 < d + 1 {
        return Err(Error::BadParameter(format!(
            "need d >= 2 and f0 >= d+1, got d={d}, f0={f0}"
        )));
    }
    use Feasibility::Infeasible;
    // 1. coarse edge bounds
    if 2 * f1 < d * f0 || f1 > binom2(f0) {
        return Ok(Infeasible { rule: RuleId::EdgeBounds });
    }
    if d == 2 && f1 != f0 {
        return Ok(Infeasible { rule: RuleId::EdgeBounds });
    }
    if d == 3 && f1 > 3 * f0 - 6 {
        return Ok(Infeasible { rule: RuleId::EdgeBounds });
    }
    let xi = 2 * f1 - d * f0;
    // 2. the excess gap
    if d >= 3 && xi >= 1 && xi + 3 <= d {
        return Ok(Infeasible { rule: RuleId::ExcessGap });
    }
    // 3. excess d-1 only in dimensions 3 and 5
    if d >= 4 && xi + 1 == d && d != 5 {
        return Ok(Infeasible { rule: RuleId::ExcessD1Dim });
    }
    // 4. triplex lower bound for at most 2d vertices
    if f0 <= 2 * d {
        let k = f0 - d;
        if 2 * f1 < d * (d + k) + (k - 1) * (d - k) {
            return Ok(Infeasible { rule: RuleId::TriplexLB });
        }
    }
    // 5. pentasm lower bound at 2d+1 vertices
    if f0 == 2 * d + 1 && f1 < d * d + d - 1 && !(d == 4 && f1 == 18) {
        return Ok(Infeasible { rule: RuleId::PentasmLB });
    }
    // 6. the two sporadic 5-dimensional exclusions
    if d == 5 && (f0, f1) == (9, 25) {
        return Ok(Infeasible { rule: RuleId::FivePoly925 });
    }
    if d == 5 && (f0, f1) == (13, 35) {
        return Ok(Infeasible { rule: RuleId::FivePoly1335 });
    }
    // 7. census of simple 5-polytopes
    if d == 5 && xi == 0 && !(f0 == 6 || (f0 % 2 == 0 && f0 >= 10)) {
        return Ok(Infeasible { rule: RuleId::Simple5Census });
    }
    Ok(Feasibility::Unknown)
}

/// The classical planar region for 3-polytopes.
pub fn classical_feasible_3(v: usize, e: usize) -> bool {
    v >= 4 && 2 * e >= 3 * v && e <= 3 * v - 6
}

/// Grünbaum's table of edge counts of 4-polytopes.
pub fn grunbaum_feasible_4(f0: usize, f1: usize) -> bool {
    match f0 {
        0..=4 => false,
        5 => f1 == 10,
        6 => (13..=15).contains(&f1),
        7 => (15..=21).contains(&f1),
        8 => f1 == 16 || (18..=28).contains(&f1),
        9 => (18..=36).contains(&f1),
        10 => (21..=45).contains(&f1),
        _ => (2 * f0..=binom2(f0)).contains(&f1),
    }
}

// ---------------------------------------------------------------------------
// Witness search
// ---------------------------------------------------------------------------

/// Explicit 3-dimensional witness: a pyramid over a polygon followed by
/// stackings on triangles (many edges) or truncations of simple vertices
/// (few edges). The arithmetic is exercised against the hull in the tests.
fn d3_witness(v: usize, e: usize) -> Result<Option<Polytope>> {
    if !classical_feasible_3(v, e) {
        return Ok(None);
    }
    let p = if e >= 2 * v - 2 {
        let m = 3 * v - e - 3;
        let mut p = fam::pyramid(&fam::polygon(m)?, 1)?;
        for _ in 0..e - (2 * v - 2) {
            p = fam::stack_first(&p)?;
        }
        p
    } else {
        let m = 2 * e - 3 * v + 3;
        let mut p = fam::pyramid(&fam::polygon(m)?, 1)?;
        for _ in 0..(2 * v - 2) - e {
            p = fam::truncate_first_simple_vertex(&p)?;
        }
        p
    };
    Ok(Some(p))
}

struct Entry {
    prov: String,
    poly: Polytope,
    /// Rich entries get the expensive beyond-face expansion.
    rich: bool,
}

/// Memoized witness constructions for one target dimension, including the
/// lower-dimensional tables the lifts draw from.
pub struct WitnessTable {
    pub dim: usize,
    pub f0_max: usize,
    tables: HashMap<usize, BTreeMap<(usize, usize), Entry>>,
}

fn insert_entry(
    table: &mut BTreeMap<(usize, usize), Entry>,
    bound: usize,
    poly: Polytope,
    rich: bool,
) -> Result<bool> {
    let (f0, f1) = fam::vertex_edge_counts(&poly)?;
    if f0 > bound || table.contains_key(&(f0, f1)) {
        return Ok(false);
    }
    let prov = poly
        .provenance()
        .ok_or_else(|| Error::BadParameter("witness without provenance".into()))?
        .to_string();
    table.insert((f0, f1), Entry { prov, poly, rich });
    Ok(true)
}

fn named_seeds(k: usize, bound: usize) -> Vec<Polytope> {
    let mut seeds: Vec<Polytope> = Vec::new();
    let mut push = |p: Result<Polytope>| {
        if let Ok(p) = p {
            seeds.push(p);
        }
    };
    push(fam::simplex(k));
    push(fam::prism(k));
    for a in 1..=k / 2 {
        push(fam::simplex_product(&[a, k - a]));
    }
    if k >= 3 {
        for a in 1..=k - 2 {
            for b in a..=k - a - 1 {
                let c = k - a - b;
                if c >= b {
                    push(fam::simplex_product(&[a, b, c]));
                }
            }
        }
    }
    for kk in 2..=k {
        push(fam::triplex(kk, k - kk));
        push(fam::capped_prism(kk, k));
    }
    push(fam::pentasm(k));
    if k >= 3 {
        push(fam::family_a(k));
        push(fam::family_b(k));
        push(fam::family_c(k));
        push(fam::family_sigma(k));
    }
    for m in 1..k {
        push(fam::gamma(m, k - m));
    }
    if k == 3 {
        push(fam::antiwedge());
    }
    push(fam::bipyramid(k));
    for a in 2..=k / 2 {
        push(fam::free_sum(&fam::simplex(a).unwrap(), &fam::simplex(k - a).unwrap()));
    }
    if k == 4 {
        for m in 3..=bound.saturating_sub(3) {
            for n in 3..=m {
                if m + n <= bound {
                    push(fam::free_sum(&fam::polygon(m).unwrap(), &fam::polygon(n).unwrap()));
                }
            }
        }
    }
    for n in k + 1..=bound {
        push(fam::cyclic(n, k));
    }
    seeds
}

/// Predicted (f0, f1) after adding a point beyond every facet containing
/// the face: one new vertex adjacent to the whole union of those facets,
/// minus the edges that lie in no other facet.
fn predict_beyond(p: &Polytope, edges: &[(usize, usize)], face_mask: u64, f0: usize, f1: usize) -> (usize, usize) {
    let visible: Vec<u64> = (0..p.facet_count())
        .map(|i| p.facet_mask(i))
        .filter(|fm| fm & face_mask == face_mask)
        .collect();
    let union = visible.iter().fold(0u64, |m, fm| m | fm);
    let gained = union.count_ones() as usize;
    let mut dead = 0;
    for &(a, b) in edges {
        let em = (1u64 << a) | (1u64 << b);
        let survives = (0..p.facet_count())
            .any(|i| {
                let fm = p.facet_mask(i);
                fm & em == em && fm & face_mask != face_mask
            });
        if !survives {
            dead += 1;
        }
    }
    (f0 + 1, f1 + gained - dead)
}

impl WitnessTable {
    /// Build the table bottom-up: polygons, then the explicit 3-dimensional
    /// scheme, then per dimension the named seeds, pyramid and free-sum
    /// lifts from below, and a closure under truncation, stacking, and
    /// beyond-face points.
    pub fn build(dim: usize, f0_max: usize) -> Result<WitnessTable> {
        let mut tables: HashMap<usize, BTreeMap<(usize, usize), Entry>> = HashMap::new();
        let bound = |k: usize| f0_max.saturating_sub(dim - k);

        // polygons
        let mut t2 = BTreeMap::new();
        if dim >= 2 {
            let b = if dim == 2 { f0_max } else { bound(2).max(9) };
            for n in 3..=b {
                insert_entry(&mut t2, b, fam::polygon(n)?, false)?;
            }
        }
        tables.insert(2, t2);

        // the 3-dimensional region, by the explicit scheme
        if dim >= 3 {
            let b3 = if dim == 3 { f0_max } else { bound(3).max(4) };
            let mut t3 = BTreeMap::new();
            for v in 4..=b3 {
                for e in (3 * v).div_ceil(2)..=3 * v - 6 {
                    if let Some(p) = d3_witness(v, e)? {
                        insert_entry(&mut t3, b3, p, false)?;
                    }
                }
            }
            tables.insert(3, t3);
        }

        for k in 4..=dim {
            let bk = bound(k);
            let mut tk: BTreeMap<(usize, usize), Entry> = BTreeMap::new();
            for seed in named_seeds(k, bk) {
                let rich = seed
                    .provenance()
                    .map(|s| s.starts_with("cyclic") || s.starts_with("fsum"))
                    .unwrap_or(false);
                insert_entry(&mut tk, bk, seed, rich)?;
            }
            // pyramid lifts
            let lower: Vec<(Polytope, usize, usize)> = tables[&(k - 1)]
                .iter()
                .map(|(&(v, e), entry)| (entry.poly.clone(), v, e))
                .collect();
            for (poly, v, e) in &lower {
                if v + 1 <= bk && !tk.contains_key(&(v + 1, e + v)) {
                    insert_entry(&mut tk, bk, fam::pyramid(poly, 1)?, false)?;
                }
            }
            // free sums with a segment
            for (poly, v, e) in &lower {
                if v + 2 <= bk && !tk.contains_key(&(v + 2, e + 2 * v)) && poly.realization().is_some() {
                    if let Ok(p) = fam::free_sum(&fam::segment()?, poly) {
                        insert_entry(&mut tk, bk, p, true)?;
                    }
                }
            }
            // free sums of a polygon with a 3-polytope
            if k == 5 {
                let three: Vec<(Polytope, usize, usize)> = tables[&3]
                    .iter()
                    .map(|(&(v, e), entry)| (entry.poly.clone(), v, e))
                    .collect();
                for m in 3..=bk.saturating_sub(4) {
                    for (poly, v, e) in &three {
                        let cell = (m + v, m + e + m * v);
                        if cell.0 <= bk && !tk.contains_key(&cell) {
                            if let Ok(p) = fam::free_sum(&fam::polygon(m)?, poly) {
                                insert_entry(&mut tk, bk, p, true)?;
                            }
                        }
                    }
                }
            }
            // closure under the operations, per vertex layer
            for f0_layer in k + 1..=bk {
                let layer: Vec<(usize, usize)> = tk
                    .keys()
                    .filter(|&&(v, _)| v == f0_layer)
                    .copied()
                    .collect();
                for cell in layer {
                    let (poly, rich) = {
                        let entry = &tk[&cell];
                        (entry.poly.clone(), entry.rich)
                    };
                    if poly.realization().is_none() {
                        continue;
                    }
                    if let Ok(p) = fam::truncate_first_simple_vertex(&poly) {
                        insert_entry(&mut tk, bk, p, rich)?;
                    }
                    if let Ok(p) = fam::truncate_first_simple_edge(&poly) {
                        insert_entry(&mut tk, bk, p, rich)?;
                    }
                    if let Ok(p) = fam::stack_first(&poly) {
                        insert_entry(&mut tk, bk, p, rich)?;
                    }
                    if !rich || cell.0 + 1 > bk {
                        continue;
                    }
                    let lat = build_lattice(&poly)?;
                    let edges = lat.edges();
                    let (f0, f1) = (lat.f_vector().counts()[0], lat.f_vector().counts()[1]);
                    for face_dim in [k as i64 - 2, k as i64 - 3] {
                        if face_dim < 1 {
                            continue;
                        }
                        for (idx, &fid) in lat.ids_of_dim(face_dim).iter().enumerate() {
                            let mask = lat.face_mask(fid);
                            let predicted = predict_beyond(&poly, &edges, mask, f0, f1);
                            if tk.contains_key(&predicted) {
                                continue;
                            }
                            let verts = lat.face_vertices(fid);
                            if let Ok(child) = fam::stack_beyond_face(&poly, &verts) {
                                let child = child.with_provenance(format!(
                                    "beyond({},{face_dim},{idx})",
                                    poly.provenance().unwrap_or("?")
                                ));
                                insert_entry(&mut tk, bk, child, true)?;
                            }
                        }
                    }
                }
            }
            tables.insert(k, tk);
        }

        Ok(WitnessTable {
            dim,
            f0_max,
            tables,
        })
    }

    pub fn lookup(&self, f0: usize, f1: usize) -> Option<&str> {
        self.tables
            .get(&self.dim)
            .and_then(|t| t.get(&(f0, f1)))
            .map(|e| e.prov.as_str())
    }

    pub fn witness_poly(&self, f0: usize, f1: usize) -> Option<&Polytope> {
        self.tables
            .get(&self.dim)
            .and_then(|t| t.get(&(f0, f1)))
            .map(|e| &e.poly)
    }
}

/// Rule layer first, then the constructive search.
pub fn witness(d: usize, f0: usize, f1: usize) -> Result<Feasibility> {
    match feasibility(d, f0, f1)? {
        Feasibility::Unknown => {}
        decided => return Ok(decided),
    }
    let table = WitnessTable::build(d, f0)?;
    Ok(match table.lookup(f0, f1) {
        Some(prov) => Feasibility::Feasible {
            witness: prov.to_string(),
        },
        None => Feasibility::Unknown,
    })
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ERow {
    pub f0: usize,
    pub f1: usize,
    pub verdict: Feasibility,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ETable {
    pub dim: usize,
    pub f0_max: usize,
    pub rows: Vec<ERow>,
}

/// Every (f0, f1) cell with f0 up to the bound and f1 within the coarse
/// edge bounds, each carrying its verdict.
pub fn e_table(d: usize, f0_max: usize) -> Result<ETable> {
    let table = WitnessTable::build(d, f0_max)?;
    let mut rows = Vec::new();
    for f0 in d + 1..=f0_max {
        for f1 in (d * f0).div_ceil(2)..=binom2(f0) {
            let verdict = match feasibility(d, f0, f1)? {
                Feasibility::Unknown => match table.lookup(f0, f1) {
                    Some(prov) => Feasibility::Feasible {
                        witness: prov.to_string(),
                    },
                    None => Feasibility::Unknown,
                },
                decided => decided,
            };
            rows.push(ERow { f0, f1, verdict });
        }
    }
    Ok(ETable {
        dim: d,
        f0_max,
        rows,
    })
}

// ---------------------------------------------------------------------------
// Corpus and spectrum
// ---------------------------------------------------------------------------

pub struct Corpus {
    pub members: Vec<Polytope>,
    pub catalog: Catalog,
}

fn corpus_base(d: usize) -> Vec<Polytope> {
    let mut seeds = Vec::new();
    let mut push = |p: Result<Polytope>| {
        if let Ok(p) = p {
            if p.n_vertices() <= crate::polytope::MAX_VERTICES {
                seeds.push(p);
            }
        }
    };
    push(fam::simplex(d));
    push(fam::prism(d));
    for a in 1..=d / 2 {
        push(fam::simplex_product(&[a, d - a]));
    }
    for a in 1..=d {
        for b in a..=d {
            let Some(c) = d.checked_sub(a + b) else { continue };
            if c >= b && c >= 1 {
                push(fam::simplex_product(&[a, b, c]));
            }
        }
    }
    for k in 2..=d {
        push(fam::triplex(k, d - k));
        push(fam::capped_prism(k, d));
    }
    push(fam::pentasm(d));
    if d >= 3 {
        push(fam::family_a(d));
        push(fam::family_b(d));
        push(fam::family_c(d));
        push(fam::family_sigma(d));
    }
    for m in 1..d {
        push(fam::gamma(m, d - m));
    }
    push(fam::j_family(d));
    if d == 3 {
        push(fam::antiwedge());
        for n in 7..=8 {
            push(fam::cyclic(n, 3));
        }
    }
    push(fam::bipyramid(d));
    for a in 2..=d / 2 {
        push(fam::free_sum(&fam::simplex(a).unwrap(), &fam::simplex(d - a).unwrap()));
    }
    if d == 4 {
        for (m, n) in [(3, 3), (3, 4), (4, 4), (3, 5), (4, 5)] {
            push(fam::free_sum(&fam::polygon(m).unwrap(), &fam::polygon(n).unwrap()));
        }
    }
    if d == 5 {
        for m in 3..=5 {
            push(fam::free_sum(&fam::polygon(m).unwrap(), &fam::simplex(3).unwrap()));
        }
    }
    for n in d + 2..=d + 4 {
        push(fam::cyclic(n, d));
    }
    seeds
}

fn corpus_seeds(d: usize) -> Vec<Polytope> {
    if d == 2 {
        return (3..=9).filter_map(|n| fam::polygon(n).ok()).collect();
    }
    let mut seeds = corpus_base(d);
    for lower in corpus_seeds(d - 1) {
        if lower.realization().is_some() {
            if let Ok(p) = fam::pyramid(&lower, 1) {
                seeds.push(p);
            }
        }
    }
    seeds
}

/// All named families of the dimension, plus `depth` rounds of vertex
/// truncation and stacking, deduplicated by canonical form.
pub fn generate_corpus(d: usize, depth: usize) -> Result<Corpus> {
    let mut pool = corpus_seeds(d);
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in &pool {
            if p.realization().is_none() {
                continue;
            }
            if let Ok(q) = fam::truncate_first_simple_vertex(p) {
                next.push(q);
            }
            if let Ok(q) = fam::stack_first(p) {
                next.push(q);
            }
        }
        pool.extend(next);
    }
    let mut catalog = Catalog::new();
    let mut members = Vec::new();
    for p in pool {
        let entry = CatalogEntry::describe(&p)?;
        if catalog.insert(entry) {
            members.push(p);
        }
    }
    Ok(Corpus { members, catalog })
}

/// Achieved excess values over a corpus, optionally bounded by vertex count.
pub fn spectrum(corpus: &Corpus, f0_max: Option<usize>) -> BTreeSet<usize> {
    corpus
        .catalog
        .entries()
        .filter(|e| f0_max.map_or(true, |b| e.f_vector[0] <= b))
        .map(|e| e.excess)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_layer_examples() {
        assert_eq!(
            feasibility(5, 9, 25).unwrap(),
            Feasibility::Infeasible { rule: RuleId::FivePoly925 }
        );
        assert_eq!(
            feasibility(5, 13, 35).unwrap(),
            Feasibility::Infeasible { rule: RuleId::FivePoly1335 }
        );
        assert_eq!(
            feasibility(5, 10, 26).unwrap(),
            Feasibility::Infeasible { rule: RuleId::ExcessGap }
        );
        // the triplex bound already rules this out, in rule order
        assert_eq!(
            feasibility(5, 8, 20).unwrap(),
            Feasibility::Infeasible { rule: RuleId::TriplexLB }
        );
        // a would-be simple 6-polytope with 13 vertices dies here
        assert_eq!(
            feasibility(6, 13, 39).unwrap(),
            Feasibility::Infeasible { rule: RuleId::PentasmLB }
        );
        assert_eq!(
            feasibility(7, 14, 52).unwrap(),
            Feasibility::Infeasible { rule: RuleId::ExcessD1Dim }
        );
        // excess 4 = d-2 is admissible, but nine vertices need 30 edges
        assert_eq!(
            feasibility(6, 9, 29).unwrap(),
            Feasibility::Infeasible { rule: RuleId::TriplexLB }
        );
        assert_eq!(feasibility(5, 11, 29).unwrap(), Feasibility::Unknown);
    }

    #[test]
    fn d3_scheme_is_verified_by_the_hull() {
        for v in 4usize..=9 {
            for e in (3 * v).div_ceil(2)..=3 * v - 6 {
                let p = d3_witness(v, e).unwrap().unwrap();
                let (got_v, got_e) = fam::vertex_edge_counts(&p).unwrap();
                assert_eq!((got_v, got_e), (v, e), "scheme for ({v},{e})");
            }
        }
    }

    #[test]
    fn witness_small_cases() {
        let table = WitnessTable::build(5, 11).unwrap();
        assert!(table.lookup(11, 29).is_some());
        assert!(table.lookup(11, 30).is_some());
        let w = witness(3, 7, 11).unwrap();
        assert!(matches!(w, Feasibility::Feasible { .. }));
    }

    #[test]
    fn witness_provenances_replay() {
        let table = WitnessTable::build(4, 8).unwrap();
        for ((f0, f1), entry) in table.tables[&4].iter() {
            let p = crate::families::expr::replay(&entry.prov).unwrap();
            let (v, e) = fam::vertex_edge_counts(&p).unwrap();
            assert_eq!((v, e), (*f0, *f1), "replaying {}", entry.prov);
        }
    }

    #[test]
    fn corpus_has_expected_members() {
        let corpus = generate_corpus(4, 0).unwrap();
        assert!(corpus.members.len() >= 20);
        let xs = spectrum(&corpus, None);
        assert!(xs.contains(&0));
        assert!(xs.contains(&2));
        assert!(xs.contains(&4));
    }

    #[test]
    fn spectrum_5_contains_named_values() {
        let corpus = generate_corpus(5, 0).unwrap();
        let xs = spectrum(&corpus, None);
        // 4 from the (3,2)-triplex, 6 from the 3-fold pyramid over the
        // pentagon, 7 from the cyclic polytope with d+2 vertices
        for want in [0usize, 3, 4, 5, 6, 7] {
            assert!(xs.contains(&want), "missing excess {want}: {xs:?}");
        }
    }
}
