use torelli_core::braid::*;
use torelli_core::Error;

#[test]
fn p_on_examples() {
    assert_eq!(p_hom(&Word::parse("s1 s2^-1").unwrap()), (0, 0));
    assert_eq!(p_hom(&Word::parse("a^2 b^-1").unwrap()), (2, -1));
    assert_eq!(p_hom(&Word::empty()), (0, 0));
    assert!(matches!(Word::parse("c"), Err(Error::UnknownGenerator(_))));
    let pres = BraidPresentation::new(3).unwrap();
    assert!(matches!(pres.p(&Word::s(3)), Err(Error::UnknownGenerator(_))));
}

#[test]
fn relation_lists_have_the_expected_shape() {
    for n in 2..=8u32 {
        let pres = BraidPresentation::new(n).unwrap();
        let count = |f: &str| pres.relations.iter().filter(|r| r.family == f).count() as u32;
        let m = n - 1;
        assert_eq!(count("BR1"), if m >= 3 { (m - 1) * (m - 2) / 2 } else { 0 });
        assert_eq!(count("BR2"), m.saturating_sub(1));
        assert_eq!(count("R1"), 2 * (m - 1));
        assert_eq!((count("R2"), count("R3"), count("TR")), (2, 1, 1));
    }
    let pres = BraidPresentation::new(3).unwrap();
    assert!(pres.relations.len() >= 7);
    let tr = pres.relations.iter().find(|r| r.family == "TR").unwrap();
    assert_eq!(format!("{}", tr.rhs), "s1 s2^2 s1");
    assert_eq!(format!("{}", tr.lhs), "a b^-1 a^-1 b");
    assert!(BraidPresentation::new(1).is_err());
}

#[test]
fn p_is_well_defined() {
    for n in 2..=8 {
        let r = check_p_well_defined(&BraidPresentation::new(n).unwrap()).unwrap();
        assert!(r.pass, "n = {n}");
    }
}

#[test]
fn center_maps_to_n_times_the_lattice() {
    for n in 2..=12i64 {
        let pres = BraidPresentation::new(n as u32).unwrap();
        assert_eq!(p_of_center(&pres).unwrap(), [(n, 0), (0, n)]);
        let (za, zb) = center_words(&pres);
        assert_eq!(za.count(Gen::A), n as u32);
        assert_eq!(zb.count(Gen::B), n as u32);
        assert_eq!(za.count(Gen::B), 0);
    }
    let pres = BraidPresentation::new(3).unwrap();
    assert_eq!(format!("{}", center_words(&pres).0), "a s1^-1 a s1^-1 s2^-1 s1^-1 a s1^-1 s2^-1");
}

#[test]
fn commensurator_reports() {
    let r = commensurator_report(3).unwrap();
    assert_eq!(r.p_center, [(3, 0), (0, 3)]);
    assert!(r.relations_pass);
    assert!(r.notes.iter().any(|x| x.contains("<(3,0), (0,3)>")));
    let r = commensurator_report(2).unwrap();
    assert!(r.notes.iter().any(|x| x.contains("free group of rank two")));
    assert!(matches!(commensurator_report(1), Err(Error::Unsupported(_))));
}

mod fuzz {
    use super::*;
    use proptest::prelude::*;

    fn letter(n: u32) -> impl Strategy<Value = (u32, i32)> {
        (0..n + 1, prop_oneof![Just(1), Just(-1)])
    }

    fn word(n: u32, letters: &[(u32, i32)]) -> Word {
        let mut w = Word::empty();
        for &(g, e) in letters {
            let gen = match g {
                0 => Gen::A,
                1 => Gen::B,
                i => Gen::Sigma(i - 1),
            };
            if let Gen::Sigma(i) = gen {
                if i >= n {
                    continue;
                }
            }
            w.push(gen, e);
        }
        w
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn relation_substitution_preserves_p(
            n in 2u32..9,
            pre in proptest::collection::vec(letter(8), 0..12),
            post in proptest::collection::vec(letter(8), 0..12),
            pick in 0usize..64,
            flip in any::<bool>(),
        ) {
            let pres = BraidPresentation::new(n).unwrap();
            let r = &pres.relations[pick % pres.relations.len()];
            let (x, y) = if flip { (&r.lhs, &r.rhs) } else { (&r.rhs, &r.lhs) };
            let (u, v) = (word(n, &pre), word(n, &post));
            let before = Word::concat(&[u.clone(), x.clone(), v.clone()]);
            let after = Word::concat(&[u, y.clone(), v]);
            prop_assert_eq!(pres.p(&before).unwrap(), pres.p(&after).unwrap());
        }
    }
}
