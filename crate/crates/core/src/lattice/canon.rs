//! Canonical form of the vertex-facet incidence structure.
//!
//! The bipartite incidence graph, with the two sides distinguished, is
//! canonically labeled by iterative degree refinement plus backtracking
//! over the first non-singleton cell. Branches are restricted to children
//! with the minimal partition invariant; the invariant is computed from
//! label-independent data, so the minimum leaf code is the same for any
//! relabeling of vertices and facets.

use std::collections::BTreeMap;

use crate::polytope::Polytope;

/// Canonical byte code. Equal codes iff the polytopes have isomorphic
/// vertex-facet incidences (hence isomorphic face lattices).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

struct Graph {
    n: usize,
    m: usize,
    dim: usize,
    adj: Vec<Vec<usize>>,
}

type Partition = Vec<Vec<usize>>;

fn signature(g: &Graph, node_cell: &[usize], ncells: usize, u: usize) -> Vec<u32> {
    let mut sig = vec![0u32; ncells];
    for &w in &g.adj[u] {
        sig[node_cell[w]] += 1;
    }
    sig
}

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let mut node_cell = vec![0usize; g.n + g.m];
        for (ci, cell) in cells.iter().enumerate() {
            for &u in cell {
                node_cell[u] = ci;
            }
        }
        let ncells = cells.len();
        let mut next: Partition = Vec::with_capacity(ncells);
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &u in cell {
                groups
                    .entry(signature(g, &node_cell, ncells, u))
                    .or_default()
                    .push(u);
            }
            if groups.len() > 1 {
                changed = true;
            }
            for (_, members) in groups {
                next.push(members);
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

/// Label-independent summary of an equitable partition: per cell, its size
/// followed by the common neighbor-count vector of its members.
fn invariant(g: &Graph, cells: &Partition) -> Vec<Vec<u32>> {
    let mut node_cell = vec![0usize; g.n + g.m];
    for (ci, cell) in cells.iter().enumerate() {
        for &u in cell {
            node_cell[u] = ci;
        }
    }
    cells
        .iter()
        .map(|cell| {
            let mut row = vec![cell.len() as u32];
            row.extend(signature(g, &node_cell, cells.len(), cell[0]));
            row
        })
        .collect()
}

fn leaf_code(g: &Graph, cells: &Partition) -> Vec<u8> {
    let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
    let vertices: Vec<usize> = order.iter().copied().filter(|&u| u < g.n).collect();
    let facets: Vec<usize> = order.iter().copied().filter(|&u| u >= g.n).collect();
    let mut facet_pos = vec![0usize; g.m];
    for (pos, &f) in facets.iter().enumerate() {
        facet_pos[f - g.n] = pos;
    }
    let mut code = Vec::new();
    for x in [g.dim, g.n, g.m] {
        code.extend((x as u16).to_le_bytes());
    }
    let row_bytes = g.m.div_ceil(8);
    for &v in &vertices {
        let mut row = vec![0u8; row_bytes];
        for &f in &g.adj[v] {
            let pos = facet_pos[f - g.n];
            row[pos / 8] |= 1 << (pos % 8);
        }
        code.extend(row);
    }
    code
}

fn search(g: &Graph, cells: Partition) -> Vec<u8> {
    let target = cells.iter().position(|c| c.len() > 1);
    let Some(ti) = target else {
        return leaf_code(g, &cells);
    };
    let mut children: Vec<(Vec<Vec<u32>>, Partition)> = Vec::new();
    for &x in &cells[ti] {
        let mut split: Partition = Vec::with_capacity(cells.len() + 1);
        for (ci, cell) in cells.iter().enumerate() {
            if ci == ti {
                split.push(vec![x]);
                split.push(cell.iter().copied().filter(|&u| u != x).collect());
            } else {
                split.push(cell.clone());
            }
        }
        let refined = refine(g, split);
        children.push((invariant(g, &refined), refined));
    }
    let min_inv = children.iter().map(|(inv, _)| inv.clone()).min().unwrap();
    let mut best: Option<Vec<u8>> = None;
    for (inv, child) in children {
        if inv != min_inv {
            continue;
        }
        let code = search(g, child);
        if best.as_ref().map_or(true, |b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap()
}

/// Canonical form of the side-distinguished bipartite incidence graph.
pub fn canonical_form(p: &Polytope) -> CanonicalForm {
    let n = p.n_vertices();
    let m = p.facet_count();
    let mut adj = vec![Vec::new(); n + m];
    for (fi, facet) in p.facets().iter().enumerate() {
        for &v in facet {
            adj[v].push(n + fi);
            adj[n + fi].push(v);
        }
    }
    let g = Graph {
        n,
        m,
        dim: p.dim(),
        adj,
    };
    let initial: Partition = vec![(0..n).collect(), (n..n + m).collect()];
    let code = search(&g, refine(&g, initial));
    CanonicalForm(code)
}

pub fn is_isomorphic(a: &Polytope, b: &Polytope) -> bool {
    a.dim() == b.dim()
        && a.n_vertices() == b.n_vertices()
        && a.facet_count() == b.facet_count()
        && canonical_form(a) == canonical_form(b)
}
