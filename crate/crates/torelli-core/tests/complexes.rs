use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torelli_core::catalog::{self, Catalog};
use torelli_core::cliques::Graph;
use torelli_core::complexes::*;
use torelli_core::{cut, marking, CombSurface, CurveClass, Error};

fn default(g: u32, p: u32) -> (CombSurface, Catalog) {
    let s = CombSurface::build(g, p).unwrap();
    let cat = catalog::default_catalog(&s).unwrap();
    (s, cat)
}

/// Maximal cliques by checking every vertex subset.
fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.len();
    let cliques: Vec<u32> = (1u32..1 << n)
        .filter(|&m| {
            let set: Vec<usize> = (0..n).filter(|&u| m >> u & 1 == 1).collect();
            g.is_clique(&set)
        })
        .collect();
    let is_clique = |m: u32| m == 0 || cliques.binary_search(&m).is_ok();
    let mut out: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|&&m| (0..n).all(|u| m >> u & 1 == 1 || !is_clique(m | 1 << u)))
        .map(|&m| (0..n).filter(|&u| m >> u & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

fn check_cliques(g: &Graph) {
    let (mut found, truncated) = g.maximal_cliques(usize::MAX);
    assert!(!truncated);
    found.sort();
    let brute = brute_maximal_cliques(g);
    assert_eq!(found, brute);
    let best = brute.iter().map(|c| c.len()).max().unwrap_or(0);
    let m = g.maximum_clique();
    assert_eq!(m.len(), best);
    assert!(g.is_clique(&m));
}

#[test]
fn clique_enumeration_matches_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let n = rng.random_range(1..=16);
        let density = rng.random_range(0.1..0.9);
        let g = Graph::from_fn(n, |_, _| rng.random_bool(density));
        check_cliques(&g);
    }
}

#[test]
fn clique_enumeration_matches_brute_force_on_catalog_views() {
    let (_, cat) = default(1, 3);
    for kind in [ComplexKind::C, ComplexKind::Cs, ComplexKind::T] {
        let view = build_complex(&cat, kind);
        for start in [0, 20, 40] {
            let ids: Vec<usize> = (start..view.len()).take(20).collect();
            let g = Graph::from_fn(ids.len(), |a, b| view.graph.has_edge(ids[a], ids[b]));
            check_cliques(&g);
        }
    }
}

#[test]
fn clique_cap_truncates() {
    let g = Graph::new(5);
    let (c, truncated) = g.maximal_cliques(3);
    assert_eq!(c.len(), 3);
    assert!(truncated);
    assert_eq!(g.maximal_cliques(5), (vec![vec![0], vec![1], vec![2], vec![3], vec![4]], false));
}

#[test]
fn views_have_the_right_vertices() {
    let (_, cat) = default(1, 3);
    let cs = build_complex(&cat, ComplexKind::Cs);
    assert!(cs.vertices.iter().all(|v| matches!(v, Vertex::Curve(u) if cat.separating[*u])));
    let t = build_complex(&cat, ComplexKind::T);
    let seps = cat.separating.iter().filter(|&&x| x).count();
    assert_eq!(t.len(), seps + cat.bps.len());
    for a in 0..t.len() {
        assert!(!t.graph.has_edge(a, a));
        for b in 0..t.len() {
            assert_eq!(t.graph.has_edge(a, b), t.graph.has_edge(b, a));
        }
    }

    let (_, cat) = default(0, 5);
    let c = build_complex(&cat, ComplexKind::C);
    let cs = build_complex(&cat, ComplexKind::Cs);
    assert_eq!(c.vertices, cs.vertices);
}

#[test]
fn bps_sharing_a_curve_are_adjacent() {
    let (s, cat) = default(1, 3);
    let neck: Vec<usize> = marking::necklace(&s).unwrap().iter().map(|c| cat.id_of(c).unwrap()).collect();
    let t = build_complex(&cat, ComplexKind::T);
    let bp = |u: usize, v: usize| t.index_of(Vertex::Bp(u.min(v), u.max(v))).unwrap();
    assert!(t.graph.has_edge(bp(neck[0], neck[1]), bp(neck[0], neck[2])));
    let mut tri: Vec<Vertex> = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| Vertex::Bp(neck[i].min(neck[j]), neck[i].max(neck[j])))
        .collect();
    tri.sort();
    let (max, truncated) = maximal_simplices(&t, 1_000_000);
    assert!(!truncated);
    assert!(max.contains(&tri));
}

#[test]
fn cs_simplices_obey_the_size_bound() {
    let (s, cat) = default(2, 2);
    let cs = build_complex(&cat, ComplexKind::Cs);
    let (max, truncated) = maximal_simplices(&cs, 100_000);
    assert!(!truncated);
    for sigma in &max {
        assert!(sigma.len() <= 3);
        if sigma.len() == 3 {
            let curves: Vec<CurveClass> = sigma.iter().map(|v| cat.curves[v.curves()[0]].clone()).collect();
            let cut = cut::census(&s, &curves).unwrap();
            assert_eq!(cut.components.iter().filter(|q| q.is_handle()).count(), 2);
            assert_eq!(cut.components.iter().filter(|q| q.is_pants()).count(), 2);
        }
    }
}

#[test]
fn single_vertex_view() {
    let s = CombSurface::build(1, 3).unwrap();
    let cat = Catalog::from_curves(&s, vec![marking::pair_curve(&s, 1, 2).unwrap()]).unwrap();
    let cs = build_complex(&cat, ComplexKind::Cs);
    assert_eq!(maximal_simplices(&cs, 10).0, vec![vec![Vertex::Curve(0)]]);
}

#[test]
fn dimension_formula_on_small_surfaces() {
    for (g, p, size, dim) in [(1, 3, 3, 2), (2, 2, 4, 3)] {
        let (_, cat) = default(g, p);
        let r = dim_formula_check(&cat).unwrap();
        assert_eq!((r.expected_size, r.dim), (size, dim));
        assert_eq!(r.witness.len() as u64, size);
        assert_eq!(r.cs_dim, (2 * g + p) as i64 - 4);
        assert!(r.pass, "{r:?}");
    }
    let s = CombSurface::build(1, 1).unwrap();
    let cat = catalog::default_catalog(&s).unwrap();
    assert!(matches!(dim_formula_check(&cat), Err(Error::Unsupported(_))));
}

#[test]
fn adjacency_graph_of_a_maximal_simplex() {
    let s = CombSurface::build(2, 2).unwrap();
    let (_, cat) = default(2, 2);
    let cs = build_complex(&cat, ComplexKind::Cs);
    let (max, _) = maximal_simplices(&cs, 100_000);
    let sigma = max.iter().find(|m| m.len() == 3).unwrap();
    let curves: Vec<CurveClass> = sigma.iter().map(|v| cat.curves[v.curves()[0]].clone()).collect();
    let g = adjacency_graph(&s, &curves).unwrap();
    assert_eq!(g.len(), 3);
    assert!(g.is_connected());
    assert!(matches!(adjacency_graph(&s, &curves[..2]), Err(Error::NotMaximal { size: 2, expected: 3 })));

    let s = CombSurface::build(0, 4).unwrap();
    let c = marking::pair_curve(&s, 1, 2).unwrap();
    let g = adjacency_graph(&s, &[c]).unwrap();
    assert_eq!((g.len(), g.edge_count()), (1, 0));
}

#[test]
fn abc_types_and_rank() {
    let s = CombSurface::build(2, 2).unwrap();
    let alpha = marking::alpha_curves(&s).unwrap();
    let t = abc_types(&s, &alpha).unwrap();
    assert_eq!(t.types, vec![Abc::A]);
    let r = torelli_rank(&s, &alpha).unwrap();
    assert_eq!((r.rank, r.nu), (1, 2));
    assert!(r.pass);

    let s = CombSurface::build(1, 3).unwrap();
    let neck = marking::necklace(&s).unwrap();
    let t = abc_types(&s, &neck).unwrap();
    assert_eq!(t.types, vec![Abc::B; 3]);
    assert_eq!(t.classes, vec![vec![0, 1, 2]]);
    let r = torelli_rank(&s, &neck).unwrap();
    assert_eq!(r.rank, 2);
    assert!(r.rank_plus_omega_le && r.pass);

    let (a, _) = marking::handle_cycles(&s, 0).unwrap();
    assert_eq!(abc_types(&s, &[a]).unwrap().types, vec![Abc::C]);
}

#[test]
fn reduction_graph_shapes() {
    let s = CombSurface::build(2, 2).unwrap();
    let alpha = marking::alpha_curves(&s).unwrap();
    let r = reduction_graph(&s, &alpha).unwrap();
    assert_eq!((r.vertices.len(), r.edges.len(), r.loops().len()), (2, 1, 0));

    let (a, _) = marking::handle_cycles(&s, 0).unwrap();
    let r = reduction_graph(&s, &[a]).unwrap();
    assert_eq!((r.vertices.len(), r.loops()), (1, vec![0]));

    let neck = marking::necklace(&s).unwrap();
    let r = reduction_graph(&s, &neck[..2]).unwrap();
    assert_eq!(r.vertices.len(), 2);
    let unordered = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    assert_eq!(unordered(r.edges[0]), unordered(r.edges[1]));
    assert!(r.loops().is_empty());
    assert!(r.to_dot("g").contains("--"));
}

/// Both curves of a BP lie in one component of `S_b` for any disjoint
/// separating curve `b`.
#[test]
fn bp_lies_on_one_side_of_a_disjoint_separating_curve() {
    for (g, p) in [(1, 3), (2, 2)] {
        let (s, cat) = default(g, p);
        for &(u, v) in &cat.bps {
            for w in (0..cat.len()).filter(|&w| cat.separating[w] && cat.i(u, w) == 0 && cat.i(v, w) == 0) {
                let m = [cat.curves[w].clone()];
                let cut = cut::census(&s, &m).unwrap();
                let qu = cut::locate(&s, &m, &cut, &cat.curves[u]).unwrap();
                let qv = cut::locate(&s, &m, &cut, &cat.curves[v]).unwrap();
                assert_eq!(qu, qv, "S_{{{g},{p}}} BP ({u},{v}) split by {w}");
            }
        }
    }
}

/// For disjoint, non-equivalent BPs `b` and `c`, each component of `S_b`
/// carries both curves of `b` and `c` lies in one component.
#[test]
fn two_bp_classes_separate_cleanly() {
    let (s, cat) = default(2, 2);
    let mut checked = 0;
    for (k, &(b1, b2)) in cat.bps.iter().enumerate() {
        let m = [cat.curves[b1].clone(), cat.curves[b2].clone()];
        let cut = cut::census(&s, &m).unwrap();
        for q in &cut.components {
            let mut ids: Vec<usize> = q.curve_sides.iter().map(|x| x.0).collect();
            ids.sort_unstable();
            assert_eq!(ids, vec![0, 1]);
        }
        for &(c1, c2) in &cat.bps[k + 1..] {
            let disjoint = [b1, b2].iter().all(|&x| cat.i(x, c1) == 0 && cat.i(x, c2) == 0);
            let distinct = ![b1, b2].contains(&c1) && ![b1, b2].contains(&c2);
            let equivalent = cat.is_bp(b1, c1) || cat.is_bp(b1, c2);
            if disjoint && distinct && !equivalent {
                let q1 = cut::locate(&s, &m, &cut, &cat.curves[c1]).unwrap();
                let q2 = cut::locate(&s, &m, &cut, &cat.curves[c2]).unwrap();
                assert_eq!(q1, q2);
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}
