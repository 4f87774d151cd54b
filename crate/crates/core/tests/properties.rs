//! Structural invariants exercised across generated corpora, plus the
//! independent combinatorial oracles for cyclic polytopes.

use std::collections::BTreeSet;

use polyx::analysis::{self, PairMeet};
use polyx::atlas;
use polyx::decomp::{self, Verdict};
use polyx::families as fam;
use polyx::lattice::{self, build_lattice, canonical_form, is_isomorphic};
use polyx::polytope::Polytope;

/// Gale's evenness condition: a d-subset of the n moment-curve parameters
/// spans a facet iff any two omitted elements have an even number of
/// chosen elements between them, i.e. every interior block of consecutive
/// chosen elements has even size.
fn gale_facets(n: usize, d: usize) -> BTreeSet<Vec<usize>> {
    fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::<usize>::new(), 0usize)];
        while let Some((chosen, from)) = stack.pop() {
            if chosen.len() == k {
                out.push(chosen);
                continue;
            }
            for next in from..n {
                let mut c = chosen.clone();
                c.push(next);
                stack.push((c, next + 1));
            }
        }
        out
    }
    let mut facets = BTreeSet::new();
    for subset in choose(n, d) {
        let mut ok = true;
        let mut x = 0;
        while x < n {
            if !subset.contains(&x) {
                x += 1;
                continue;
            }
            let start = x;
            while x < n && subset.contains(&x) {
                x += 1;
            }
            let interior = start > 0 && x < n;
            if interior && (x - start) % 2 == 1 {
                ok = false;
                break;
            }
        }
        if ok {
            facets.insert(subset);
        }
    }
    facets
}

#[test]
fn cyclic_polytopes_match_gale_evenness() {
    for (n, d) in [(7usize, 5usize), (6, 4), (8, 4), (6, 3), (9, 5)] {
        let p = fam::cyclic(n, d).unwrap();
        // moment-curve points sort by parameter, so vertex i is t = i + 1
        let got: BTreeSet<Vec<usize>> = p.facets().iter().cloned().collect();
        let want = gale_facets(n, d);
        assert_eq!(got, want, "cyclic({n},{d}) facets");
    }
    // seven points in dimension five: every pair adjacent
    let p = fam::cyclic(7, 5).unwrap();
    let lat = build_lattice(&p).unwrap();
    assert_eq!(lat.f_vector().counts()[1], 21);
}

#[test]
fn degree_sum_and_excess_identity_corpus_wide() {
    for d in 3..=5usize {
        let corpus = atlas::generate_corpus(d, 1).unwrap();
        for p in &corpus.members {
            let lat = build_lattice(p).unwrap();
            let f = lat.f_vector();
            let deg_sum: usize = lat.degrees().iter().sum();
            assert_eq!(deg_sum, 2 * f.counts()[1], "{p}");
            let rep = analysis::excess(p, &lat);
            assert_eq!(rep.total, 2 * f.counts()[1] - d * f.counts()[0], "{p}");
            assert!(f.euler_holds(), "{p}");
        }
    }
}

#[test]
fn facet_pair_bound_on_vertex_excess() {
    // every vertex shared by two facets meeting in dimension j has excess
    // at least d - 2 - j
    for p in [
        fam::pentasm(5).unwrap(),
        fam::family_sigma(5).unwrap(),
        fam::triplex(3, 2).unwrap(),
        fam::capped_prism(4, 5).unwrap(),
        fam::family_a(5).unwrap(),
    ] {
        let d = p.dim() as i64;
        let lat = build_lattice(&p).unwrap();
        let rep = analysis::excess(&p, &lat);
        let profile = analysis::facet_profile(&p, &lat);
        for (i, j, meet) in &profile.pairs {
            let PairMeet::Face { dim } = meet else { continue };
            let need = d - 2 - dim;
            if need <= 0 {
                continue;
            }
            for v in 0..p.n_vertices() {
                if p.facets()[*i].contains(&v) && p.facets()[*j].contains(&v) {
                    assert!(
                        rep.per_vertex[v] as i64 >= need,
                        "{p}: vertex {v} in facets {i},{j} (j={dim})"
                    );
                }
            }
        }
    }
    // pentasms exhibit the extreme pair: two facets meeting in a (d-3)-simplex
    for d in 4..=6usize {
        let p = fam::pentasm(d).unwrap();
        let lat = build_lattice(&p).unwrap();
        let profile = analysis::facet_profile(&p, &lat);
        assert!(
            profile
                .pairs
                .iter()
                .any(|(_, _, m)| matches!(m, PairMeet::Face { dim } if *dim == d as i64 - 3)),
            "pentasm({d}) has no deep facet pair"
        );
    }
}

#[test]
fn facet_excess_is_strictly_below_polytope_excess() {
    for d in 3..=5usize {
        let corpus = atlas::generate_corpus(d, 0).unwrap();
        for p in &corpus.members {
            let lat = build_lattice(p).unwrap();
            let xi = analysis::excess(p, &lat).total;
            if xi == 0 {
                continue;
            }
            for &fid in lat.ids_of_dim(d as i64 - 1) {
                let facet = lattice::face_as_polytope(p, &lat, fid).unwrap();
                let flat = build_lattice(&facet).unwrap();
                let fxi = analysis::excess(&facet, &flat).total;
                assert!(fxi < xi, "{p}: facet excess {fxi} >= {xi}");
            }
        }
    }
}

#[test]
fn semisimple_nonsimple_vertices_are_nonsimple_in_their_facets() {
    for d in 3..=5usize {
        let corpus = atlas::generate_corpus(d, 0).unwrap();
        for p in &corpus.members {
            let lat = build_lattice(p).unwrap();
            if !analysis::is_semisimple(p, &lat) {
                continue;
            }
            let rep = analysis::excess(p, &lat);
            for &v in &rep.nonsimple {
                for &fid in lat.ids_of_dim(d as i64 - 1) {
                    let verts = lat.face_vertices(fid);
                    let Some(pos) = verts.iter().position(|&w| w == v) else {
                        continue;
                    };
                    let facet = lattice::face_as_polytope(p, &lat, fid).unwrap();
                    let flat = build_lattice(&facet).unwrap();
                    assert!(
                        flat.degrees()[pos] > facet.dim(),
                        "{p}: vertex {v} is simple inside a facet"
                    );
                }
            }
        }
    }
}

#[test]
fn simple_polytope_census_over_corpus() {
    for d in 3..=5usize {
        let corpus = atlas::generate_corpus(d, 1).unwrap();
        for p in &corpus.members {
            let lat = build_lattice(p).unwrap();
            if analysis::excess(p, &lat).total != 0 {
                continue;
            }
            let f0 = p.n_vertices();
            if f0 < 2 * d {
                assert!(is_isomorphic(p, &fam::simplex(d).unwrap()), "{p}");
            } else if f0 <= 3 * d - 4 {
                assert!(is_isomorphic(p, &fam::prism(d).unwrap()), "{p}");
            } else if f0 == 3 * d - 3 {
                assert!(
                    is_isomorphic(p, &fam::simplex_product(&[2, d - 2]).unwrap()),
                    "{p}"
                );
            }
        }
    }
}

#[test]
fn decomposables_with_few_vertices_are_the_known_ones() {
    for d in 3..=5usize {
        let corpus = atlas::generate_corpus(d, 1).unwrap();
        let mut prism_like = 0;
        let mut at_2d_plus_1 = 0;
        for p in &corpus.members {
            if p.n_vertices() > 2 * d + 1 || p.realization().is_none() {
                continue;
            }
            let cert = decomp::classify(p, 1).unwrap();
            if cert.verdict != Verdict::Decomposable {
                continue;
            }
            if p.n_vertices() <= 2 * d {
                assert!(
                    is_isomorphic(p, &fam::prism(d).unwrap()),
                    "decomposable {p} with at most 2d vertices is not the prism"
                );
                prism_like += 1;
            } else {
                let known = is_isomorphic(p, &fam::pentasm(d).unwrap())
                    || (3..=d).any(|k| is_isomorphic(p, &fam::capped_prism(k, d).unwrap()))
                    || (d == 3 && is_isomorphic(p, &fam::family_sigma(3).unwrap()))
                    || (d == 4 && is_isomorphic(p, &fam::simplex_product(&[2, 2]).unwrap()));
                assert!(known, "unexpected decomposable {p} with 2d+1 vertices");
                at_2d_plus_1 += 1;
            }
        }
        assert!(prism_like >= 1, "d={d}: no prism found");
        assert!(at_2d_plus_1 >= 2, "d={d}: too few 2d+1 cases");
    }
}

#[test]
fn ten_vertex_four_polytopes_with_few_edges() {
    // over the corpus, every 4-polytope with ten vertices and at most 21
    // edges is one of the four named constructions
    let references = [
        fam::family_a(4).unwrap(),
        fam::family_b(4).unwrap(),
        fam::family_c(4).unwrap(),
        fam::family_sigma(4).unwrap(),
    ];
    let ref_forms: BTreeSet<_> = references.iter().map(canonical_form).collect();
    let corpus = atlas::generate_corpus(4, 1).unwrap();
    let mut found = BTreeSet::new();
    for p in &corpus.members {
        let lat = build_lattice(p).unwrap();
        let f = lat.f_vector();
        if f.counts()[0] == 10 && f.counts()[1] <= 21 {
            let form = canonical_form(p);
            assert!(ref_forms.contains(&form), "unexpected sparse 4-polytope {p}");
            found.insert(form);
        }
    }
    assert_eq!(found.len(), 4, "not all four constructions appeared");
}

#[test]
fn pyramid_excess_formula() {
    for base in [
        fam::polygon(5).unwrap(),
        fam::simplex_product(&[2, 2]).unwrap(),
        fam::pentasm(4).unwrap(),
        fam::capped_prism(3, 4).unwrap(),
    ] {
        let blat = build_lattice(&base).unwrap();
        let bxi = analysis::excess(&base, &blat).total;
        let p = fam::pyramid(&base, 1).unwrap();
        let plat = build_lattice(&p).unwrap();
        let pxi = analysis::excess(&p, &plat).total;
        assert_eq!(pxi, bxi + base.n_vertices() - p.dim(), "{base}");
    }
    // the worked example: a 3-fold pyramid over the pentagon
    let p = fam::pyramid(&fam::polygon(5).unwrap(), 3).unwrap();
    let lat = build_lattice(&p).unwrap();
    assert_eq!(lat.f_vector().counts()[0], 8);
    assert_eq!(lat.f_vector().counts()[1], 23);
    assert_eq!(analysis::excess(&p, &lat).total, 6);
}

#[test]
fn dual_involution_and_named_duals() {
    for p in [
        fam::simplex(4).unwrap(),
        fam::prism(4).unwrap(),
        fam::pentasm(4).unwrap(),
        fam::antiwedge().unwrap(),
        fam::gamma(2, 2).unwrap(),
    ] {
        let dd = lattice::dual(&lattice::dual(&p).unwrap()).unwrap();
        assert_eq!(canonical_form(&dd), canonical_form(&p), "{p}");
    }
    let bipyr = fam::bipyramid(5).unwrap();
    assert!(is_isomorphic(
        &lattice::dual(&bipyr).unwrap(),
        &fam::prism(5).unwrap()
    ));
}

#[test]
fn capped_prism_graphs_agree_with_the_edge_description() {
    // u_1..u_d pairwise adjacent, v_0..v_d pairwise adjacent, u_i ~ v_i;
    // the graphs coincide for all cap parameters while the lattices differ
    for d in 4..=6usize {
        let mut forms = BTreeSet::new();
        for k in 3..=d {
            let p = fam::capped_prism(k, d).unwrap();
            let lat = build_lattice(&p).unwrap();
            let mut want = BTreeSet::new();
            for i in 0..d {
                for j in i + 1..d {
                    want.insert((i, j));
                }
            }
            for i in d..=2 * d {
                for j in i + 1..=2 * d {
                    want.insert((i, j));
                }
            }
            for i in 1..=d {
                want.insert((i - 1, d + i));
            }
            let got: BTreeSet<(usize, usize)> = lat.edges().into_iter().collect();
            assert_eq!(got, want, "cp({k},{d}) edges");
            forms.insert(canonical_form(&p));
        }
        assert_eq!(forms.len(), d - 2, "cp(*,{d}) lattices collapsed");
    }
}

#[test]
fn no_witness_contradicts_an_infeasibility_rule() {
    // every constructed polytope must land on a cell the rule layer does
    // not reject, and every corpus member likewise
    let table = atlas::e_table(4, 9).unwrap();
    for row in &table.rows {
        if let atlas::Feasibility::Feasible { witness } = &row.verdict {
            if let atlas::Feasibility::Infeasible { rule } =
                atlas::feasibility(4, row.f0, row.f1).unwrap()
            {
                panic!("witness {witness} contradicts rule {rule:?}");
            }
        }
    }
    for d in 3..=5usize {
        let corpus = atlas::generate_corpus(d, 1).unwrap();
        for entry in corpus.catalog.entries() {
            let (f0, f1) = (entry.f_vector[0], entry.f_vector[1]);
            if let atlas::Feasibility::Infeasible { rule } = atlas::feasibility(d, f0, f1).unwrap()
            {
                panic!("corpus member {:?} contradicts rule {rule:?}", entry.provenances);
            }
        }
    }
}

#[test]
fn truncating_a_simple_edge_in_dimension_five() {
    // Slicing a simple edge off a capped 5-prism lands on (17, 45). The
    // underfacet is a simplicial 4-prism with 16 edges, so the exact edge
    // delta is +15: an edge underfacet on 8 vertices can never contribute
    // 17 edges, since no 4-polytope has 8 vertices and 17 edges.
    let cp = fam::capped_prism(5, 5).unwrap();
    let t = fam::truncate_first_simple_edge(&cp).unwrap();
    let (f0, f1) = fam::vertex_edge_counts(&t).unwrap();
    assert_eq!((f0, f1), (17, 45));

    let pent = fam::pentasm(5).unwrap();
    let t = fam::truncate_first_simple_edge(&pent).unwrap();
    let (f0, f1) = fam::vertex_edge_counts(&t).unwrap();
    assert_eq!((f0, f1), (17, 44));
}

#[test]
fn euler_holds_after_cuts_up_to_dimension_seven() {
    for d in 3..=7usize {
        let s = fam::simplex(d).unwrap();
        let (cut, _) = fam::truncate(&s, &[0]).unwrap();
        let lat = build_lattice(&cut).unwrap();
        assert!(lat.f_vector().euler_holds(), "truncated simplex({d})");
    }
    let p = fam::prism(5).unwrap();
    let (cut, _) = fam::truncate(&p, &[0]).unwrap();
    assert!(build_lattice(&cut).unwrap().f_vector().euler_holds());
    assert_eq!(cut.n_vertices(), 14);
    assert!(is_isomorphic(&cut, &fam::j_family(5).unwrap()));
}

#[test]
fn stacked_cube_counts() {
    let cube = fam::simplex_product(&[1, 1, 1]).unwrap();
    let apex = polyx::kernel::beyond_point(&cube, 0).unwrap();
    let mut pts = cube.realization().unwrap().to_vec();
    pts.push(apex);
    let stacked = Polytope::from_points(&pts).unwrap();
    let lat = build_lattice(&stacked).unwrap();
    assert_eq!(lat.f_vector().counts(), &[9, 16, 9]);
}

#[test]
fn facet_of_product_is_a_prism() {
    let p = fam::simplex_product(&[2, 2]).unwrap();
    let lat = build_lattice(&p).unwrap();
    let fid = lat.ids_of_dim(3)[0];
    let facet = lattice::face_as_polytope(&p, &lat, fid).unwrap();
    assert!(is_isomorphic(&facet, &fam::prism(3).unwrap()));
}

#[test]
fn vertex_figure_of_pyramid_apex_is_the_base() {
    let base = fam::pentasm(3).unwrap();
    let p = fam::pyramid(&base, 1).unwrap();
    let lat = build_lattice(&p).unwrap();
    let apex = p.n_vertices() - 1;
    let vf = lattice::vertex_figure(&p, &lat, apex).unwrap();
    assert!(is_isomorphic(&vf, &base));
}

#[test]
fn sigma_coordinates_arise_as_a_minkowski_sum_of_two_simplices() {
    // sum of conv{0, e1, e2} and conv{0, e1+e2, segments...}: check instead
    // that the constructor's polytope is decomposable and its excess sits in
    // one vertex, as the coordinate description demands
    for d in 3..=5usize {
        let s = fam::family_sigma(d).unwrap();
        let lat = build_lattice(&s).unwrap();
        let rep = analysis::excess(&s, &lat);
        assert_eq!(rep.nonsimple.len(), 1);
        assert_eq!(rep.per_vertex[rep.nonsimple[0]], d - 2);
        assert_eq!(
            decomp::classify(&s, 1).unwrap().verdict,
            Verdict::Decomposable
        );
    }
}
