use torelli_core::catalog::{self, enumerate_orbit, standard_generators, standard_marking, Catalog};
use torelli_core::curve::is_bp;
use torelli_core::intersect::intersection;
use torelli_core::{marking, CombSurface, Error};

fn build(g: u32, p: u32, depth: u32, cap: u64) -> (CombSurface, Catalog) {
    let s = CombSurface::build(g, p).unwrap();
    let cat = enumerate_orbit(&s, &standard_marking(&s).unwrap(), &standard_generators(&s).unwrap(), depth, cap).unwrap();
    (s, cat)
}

#[test]
fn depth_zero_is_the_deduplicated_base() {
    for (g, p) in [(1, 3), (2, 2), (0, 5), (2, 0)] {
        let s = CombSurface::build(g, p).unwrap();
        let base = standard_marking(&s).unwrap();
        let cat = enumerate_orbit(&s, &base, &standard_generators(&s).unwrap(), 0, u64::MAX).unwrap();
        assert!(cat.len() <= base.len());
        for c in &base {
            assert!(cat.find_class(c).unwrap().is_some(), "S_{{{g},{p}}} lost a base curve");
        }
    }
}

#[test]
fn repeated_base_curves_are_merged() {
    let s = CombSurface::build(1, 3).unwrap();
    let mut base = standard_marking(&s).unwrap();
    let n = base.len();
    base.extend(base.clone());
    let cat = enumerate_orbit(&s, &base, &[], 3, u64::MAX).unwrap();
    assert_eq!(cat.len(), n);
}

#[test]
fn empty_base_is_rejected() {
    let s = CombSurface::build(1, 3).unwrap();
    assert!(matches!(enumerate_orbit(&s, &[], &[], 1, 10), Err(Error::EmptyBase)));
}

#[test]
fn builds_are_deterministic() {
    let (_, a) = build(1, 3, 2, 40);
    let (_, b) = build(1, 3, 2, 40);
    assert_eq!(a, b);
}

#[test]
fn matrix_is_symmetric_and_exact() {
    let (s, cat) = build(1, 3, 2, 30);
    for u in 0..cat.len() {
        assert_eq!(cat.i(u, u), 0);
        for v in 0..cat.len() {
            assert_eq!(cat.i(u, v), cat.i(v, u));
        }
    }
    for u in (0..cat.len()).step_by(7) {
        for v in (0..cat.len()).step_by(5) {
            if u != v {
                let x = intersection(&s, &cat.curves[u], &cat.curves[v]).unwrap();
                assert_eq!(x as u32, cat.i(u, v));
            }
        }
    }
}

#[test]
fn bounding_pairs_are_complete() {
    for (g, p, d, w) in [(1, 3, 2, 40), (2, 1, 1, 60)] {
        let (s, cat) = build(g, p, d, w);
        for u in 0..cat.len() {
            for v in u + 1..cat.len() {
                let expect = cat.i(u, v) == 0
                    && !cat.separating[u]
                    && !cat.separating[v]
                    && is_bp(&s, &cat.curves[u], &cat.curves[v]).unwrap().is_some();
                assert_eq!(cat.is_bp(u, v), expect, "S_{{{g},{p}}} pair ({u},{v})");
            }
        }
    }
}

#[test]
fn provenance_words_reach_every_curve() {
    let (s, cat) = build(1, 3, 2, 40);
    let base = standard_marking(&s).unwrap();
    for (u, (root, word)) in cat.provenance.iter().enumerate() {
        assert_eq!(word.apply(&s, &base[*root]).unwrap(), cat.curves[u]);
    }
}

#[test]
fn curves_respect_the_weight_cap() {
    let (_, cat) = build(1, 4, 2, 30);
    for (c, (_, w)) in cat.curves.iter().zip(&cat.provenance) {
        assert!(c.total_weight() <= 30 || w.is_empty());
    }
}

#[test]
fn marking_contains_the_expected_simplices() {
    let s = CombSurface::build(1, 3).unwrap();
    let cat = catalog::default_catalog(&s).unwrap();
    let neck: Vec<usize> = marking::necklace(&s).unwrap().iter().map(|c| cat.id_of(c).unwrap()).collect();
    assert_eq!(neck.len(), 3);
    for (k, &u) in neck.iter().enumerate() {
        for &v in &neck[k + 1..] {
            assert!(cat.is_bp(u, v));
        }
    }

    let s = CombSurface::build(2, 2).unwrap();
    let cat = catalog::default_catalog(&s).unwrap();
    let alphas = marking::alpha_curves(&s).unwrap();
    assert_eq!(alphas.len(), 1);
    assert!(cat.id_of(&alphas[0]).is_some());
    assert_eq!(marking::necklace(&s).unwrap().len(), 3);

    let s = CombSurface::build(0, 5).unwrap();
    let cat = catalog::default_catalog(&s).unwrap();
    for i in 1..=5 {
        for j in i + 1..=5 {
            let c = marking::pair_curve(&s, i, j).unwrap();
            assert!(cat.id_of(&c).is_some(), "pair curve {i},{j}");
        }
    }
}

#[test]
fn restriction_renumbers_consistently() {
    let (_, cat) = build(1, 3, 2, 30);
    let ids: Vec<usize> = (0..cat.len()).filter(|u| u % 3 == 0).collect();
    let sub = cat.restrict(&ids);
    assert_eq!(sub.len(), ids.len());
    for (a, &u) in ids.iter().enumerate() {
        assert_eq!(sub.curves[a], cat.curves[u]);
        for (b, &v) in ids.iter().enumerate() {
            assert_eq!(sub.i(a, b), cat.i(u, v));
            if a < b {
                assert_eq!(sub.is_bp(a, b), cat.is_bp(u, v));
            }
        }
    }
}
