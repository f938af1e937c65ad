mod common;

use torelli_core::catalog::{self, Catalog};
use torelli_core::complexes::{build_complex, ComplexKind, ComplexView, Vertex};
use torelli_core::motifs::{vertex_type, VertexType};
use torelli_core::reconstruction::*;
use torelli_core::twist::{MappingWord, Token};
use torelli_core::{marking, CombSurface, Error};

fn setup(g: u32, p: u32, kind: ComplexKind) -> (CombSurface, Catalog, ComplexView) {
    let s = CombSurface::build(g, p).unwrap();
    let cat = catalog::default_catalog(&s).unwrap();
    let view = build_complex(&cat, kind);
    (s, cat, view)
}

fn agrees_with_action(cat: &Catalog, m: &CurveMap, f: &MappingWord) -> bool {
    let act = curve_action(cat, f).unwrap();
    m.entries.iter().all(|e| act[e.curve] == Some(e.image))
}

#[test]
fn identity_extends_to_identity() {
    let (_, cat, view) = setup(1, 3, ComplexKind::T);
    let phi = induced_map(&cat, &view, &MappingWord::identity()).unwrap();
    assert_eq!(phi, VertexMap::identity(&view));
    assert!(preservation_check(&cat, &phi).pass);
    let m = phi_extend(&cat, &phi).unwrap();
    assert!(m.entries.iter().all(|e| e.image == e.curve));
    assert!(m.entries.iter().any(|e| e.rule == Rule::RootCurve));
    assert!(verify_simplicial_injective(&cat, &m, Some(&phi)).pass);
}

#[test]
fn twists_fix_disjoint_vertices() {
    let (s, cat, view) = setup(1, 3, ComplexKind::T);
    let c = &marking::necklace(&s).unwrap()[0];
    let f = MappingWord::single(Token::Dehn { curve: c.clone(), power: 1 });
    let phi = induced_map(&cat, &view, &f).unwrap();
    let cid = cat.id_of(c).unwrap();
    for &(v, w) in &phi.pairs {
        if v.curves().iter().all(|&u| cat.i(u, cid) == 0) {
            assert_eq!(v, w);
        }
    }
}

#[test]
fn bp_twists_keep_bp_vertices() {
    let (s, cat, view) = setup(1, 3, ComplexKind::T);
    let (u, v) = cat.bps[0];
    let f = torelli_core::twist::twist_about_pair(&s, &cat.curves[u], &cat.curves[v]).unwrap();
    let phi = induced_map(&cat, &view, &f).unwrap();
    assert!(!phi.pairs.is_empty());
    for &(a, b) in &phi.pairs {
        assert_eq!(matches!(a, Vertex::Bp(..)), matches!(b, Vertex::Bp(..)));
    }
    assert!(preservation_check(&cat, &phi).pass);
}

#[test]
fn preservation_violations_are_reported() {
    let (_, cat, view) = setup(1, 3, ComplexKind::Cs);
    let h = (0..cat.len()).find(|&u| cat.separating[u] && vertex_type(&cat, Vertex::Curve(u)) == VertexType::H).unwrap();
    let p = (0..cat.len()).find(|&u| cat.separating[u] && vertex_type(&cat, Vertex::Curve(u)) == VertexType::P).unwrap();
    let id = VertexMap::identity(&view);
    let bad = corrupt(&id, Vertex::Curve(h), Vertex::Curve(p));
    let r = preservation_check(&cat, &bad);
    assert!(!r.pass);
    assert!(r.violations.iter().any(|v| v.contains("type")));
    assert!(r.violations.iter().any(|v| v.contains("both map to")));
}

#[test]
fn extensions_match_the_action() {
    for (g, p, kind) in [(1, 3, ComplexKind::T), (1, 3, ComplexKind::Cs), (2, 2, ComplexKind::Cs)] {
        let (s, cat, view) = setup(g, p, kind);
        for seed in 0..3 {
            let f = common::random_word(&s, seed, 2);
            let phi = induced_map(&cat, &view, &f).unwrap();
            assert!(preservation_check(&cat, &phi).pass);
            let m = phi_extend(&cat, &phi).unwrap();
            assert!(agrees_with_action(&cat, &m, &f), "S_({g},{p}) {kind:?} seed {seed}");
            let bps = if kind == ComplexKind::T { Some(&phi) } else { None };
            assert!(verify_simplicial_injective(&cat, &m, bps).pass);
            assert!(!m.evidence_only);
        }
    }
}

#[test]
fn both_views_of_s13_agree() {
    let s = CombSurface::build(1, 3).unwrap();
    let cat = catalog::default_catalog(&s).unwrap();
    let (tv, cv) = (build_complex(&cat, ComplexKind::T), build_complex(&cat, ComplexKind::Cs));
    for seed in 0..3 {
        let f = common::random_word(&s, seed, 2);
        let mt = phi_extend(&cat, &induced_map(&cat, &tv, &f).unwrap()).unwrap();
        let mc = phi_extend(&cat, &induced_map(&cat, &cv, &f).unwrap()).unwrap();
        for e in &mc.entries {
            if let Some(x) = mt.get(e.curve) {
                assert_eq!(x, e.image);
            }
        }
    }
}

#[test]
fn extension_respects_composition() {
    let (s, cat, view) = setup(1, 3, ComplexKind::T);
    let f = common::random_word(&s, 7, 1);
    let g = common::random_word(&s, 8, 1);
    let (pf, pg) = (induced_map(&cat, &view, &f).unwrap(), induced_map(&cat, &view, &g).unwrap());
    let (mf, mg) = (phi_extend(&cat, &pf).unwrap(), phi_extend(&cat, &pg).unwrap());
    let mfg = phi_extend(&cat, &pf.compose(&pg)).unwrap();
    let mut compared = 0;
    for e in &mfg.entries {
        if let Some(y) = mg.get(e.curve).and_then(|x| mf.get(x)) {
            assert_eq!(y, e.image);
            compared += 1;
        }
    }
    assert!(compared > 0);
}

#[test]
fn corrupted_bp_image_is_inconsistent() {
    let (s, cat, view) = setup(1, 3, ComplexKind::T);
    let f = common::random_word(&s, 1, 2);
    let phi = induced_map(&cat, &view, &f).unwrap();
    let bps: Vec<Vertex> = phi.pairs.iter().map(|p| p.0).filter(|v| matches!(v, Vertex::Bp(..))).collect();
    let (x, y) = (bps[0], *bps.iter().find(|b| b.curves().iter().all(|u| !bps[0].curves().contains(u))).unwrap());
    let bad = corrupt(&phi, x, phi.get(y).unwrap());
    match phi_extend(&cat, &bad) {
        Err(Error::Inconsistent(cert)) => assert!(cert.contains("rooted pair")),
        other => panic!("expected Inconsistent, got {other:?}"),
    }
}

#[test]
fn corrupted_h_image_is_inconsistent() {
    let (s, cat, view) = setup(2, 2, ComplexKind::Cs);
    let f = common::random_word(&s, 2, 2);
    let phi = induced_map(&cat, &view, &f).unwrap();
    let pairs = catalog_sharing_pairs(&cat).unwrap();
    let (a, b, _) = pairs[0];
    let bad = corrupt(&phi, Vertex::Curve(a), phi.get(Vertex::Curve(b)).unwrap());
    match phi_extend_with_pairs(&cat, &bad, &pairs) {
        Err(Error::Inconsistent(cert)) => assert!(cert.contains("sharing pair")),
        other => panic!("expected Inconsistent, got {other:?}"),
    }
}

#[test]
fn merged_curves_fail_injectivity() {
    let (_, cat, _) = setup(1, 3, ComplexKind::T);
    let mut pairs: Vec<(usize, usize)> = (0..cat.len()).map(|u| (u, u)).collect();
    pairs[1].1 = 0;
    let r = verify_simplicial_injective(&cat, &CurveMap::from_pairs(&pairs), None);
    assert!(!r.pass);
    assert_eq!(r.not_injective, vec![(0, 1)]);
}

#[test]
fn unsupported_regimes_are_rejected() {
    let (_, cat, view) = setup(2, 2, ComplexKind::T);
    assert!(matches!(phi_extend(&cat, &VertexMap::identity(&view)), Err(Error::Unsupported(_))));
}

#[test]
fn genus_zero_graphs_are_connected() {
    let s = CombSurface::build(0, 5).unwrap();
    let cat = catalog::default_catalog(&s).unwrap();
    for kind in [EvidenceKind::D, EvidenceKind::E] {
        let (r, g) = connectivity_evidence(kind, &cat, 1, 2).unwrap();
        assert!(r.connected, "{kind:?}");
        assert!(!r.vertices.is_empty());
        if kind == EvidenceKind::E {
            for a in 0..g.len() {
                for b in g.neighbours(a) {
                    assert_eq!(cat.i(r.vertices[a], r.vertices[b]), 4);
                }
            }
        }
    }
    let (r, _) = connectivity_evidence(EvidenceKind::D, &cat, 1, 2).unwrap();
    let one = cat.restrict(&r.vertices[..1]);
    let (r1, _) = connectivity_evidence(EvidenceKind::D, &one, 1, 2).unwrap();
    assert!(r1.connected);
    assert_eq!(r1.vertices.len(), 1);
    assert!(connectivity_evidence(EvidenceKind::F, &cat, 1, 2).is_err());
}
