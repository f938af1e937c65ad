use torelli::format::*;
use torelli_core::catalog;
use torelli_core::twist::twist_about_pair;
use torelli_core::{marking, CombSurface};

#[test]
fn surface_specs() {
    assert_eq!(parse_surface("1,3").unwrap(), (1, 3));
    assert_eq!(parse_surface(" 2 , 0 ").unwrap(), (2, 0));
    assert!(parse_surface("13").is_err());
    assert!(parse_surface("a,b").is_err());
}

#[test]
fn curves_round_trip() {
    let s = CombSurface::build(2, 2).unwrap();
    for c in catalog::standard_marking(&s).unwrap() {
        let f = CurveFile::new(&s, &c);
        let text = serde_json::to_string(&f).unwrap();
        let back: CurveFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.load(&s).unwrap(), c);
    }
}

#[test]
fn invalid_curves_are_rejected() {
    let s = CombSurface::build(1, 3).unwrap();
    assert!(from_sparse(&s, &vec![(0, 1)]).is_err());
    assert!(from_sparse(&s, &vec![(999, 1)]).is_err());
    let other = CombSurface::build(2, 2).unwrap();
    let c = &catalog::standard_marking(&other).unwrap()[0];
    assert!(matches!(CurveFile::new(&other, c).load(&s), Err(FormatError::WrongSurface(2, 2))));
}

#[test]
fn words_round_trip() {
    let s = CombSurface::build(1, 3).unwrap();
    let neck = marking::necklace(&s).unwrap();
    let mut w = twist_about_pair(&s, &neck[0], &neck[1]).unwrap();
    for g in catalog::standard_generators(&s).unwrap().iter().take(4) {
        w = g.compose(&w);
    }
    let text = serde_json::to_string(&word_to_records(&w)).unwrap();
    let back: Vec<TokenRecord> = serde_json::from_str(&text).unwrap();
    assert_eq!(word_from_records(&s, &back).unwrap(), w);
}

#[test]
fn bp_tokens_need_a_bounding_pair() {
    let s = CombSurface::build(1, 3).unwrap();
    let (a, b) = marking::handle_cycles(&s, 0).unwrap();
    let rec = vec![TokenRecord::Bp { first: to_sparse(&a), second: to_sparse(&b), power: 1 }];
    assert!(word_from_records(&s, &rec).is_err());
}

#[test]
fn catalogs_round_trip() {
    for (g, p) in [(1, 3), (2, 0), (0, 5)] {
        let s = CombSurface::build(g, p).unwrap();
        let cat = catalog::default_catalog(&s).unwrap();
        let text = serde_json::to_string(&CatalogFile::new(&cat)).unwrap();
        let back: CatalogFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_catalog().unwrap(), cat);
    }
}

#[test]
fn tampered_catalogs_are_rejected() {
    let s = CombSurface::build(1, 3).unwrap();
    let cat = catalog::default_catalog(&s).unwrap();
    let good = CatalogFile::new(&cat);

    let mut f = good.clone();
    f.curves.swap(0, 1);
    assert!(f.into_catalog().is_err());

    let mut f = good.clone();
    let (u, _) = f.bps[0];
    let sep = (0..cat.len()).find(|&w| cat.separating[w] && w > u && cat.i(u, w) == 0).unwrap();
    f.bps[0] = (u, sep);
    f.bps.sort();
    assert!(f.into_catalog().is_err());

    let mut f = good.clone();
    f.version = 9;
    assert!(matches!(f.into_catalog(), Err(FormatError::Version(9))));
}
