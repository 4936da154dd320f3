use proptest::prelude::*;

use super::*;

fn wxyz() -> Arc<Universe> {
    Universe::new(["w", "x", "y", "z"], ["e1", "e2"]).unwrap()
}

fn sections(u: &Arc<Universe>, e1: &[&str], e2: &[&str]) -> SoftSet {
    SoftSet::from_sections(u, [("e1", e1.to_vec()), ("e2", e2.to_vec())]).unwrap()
}

/// The four-point space with opens `Φ, F, G, H, X`.
fn four_point() -> (Arc<Universe>, SoftTopology, [SoftSet; 3]) {
    let u = wxyz();
    let f = sections(&u, &["x", "z"], &["w", "x"]);
    let g = sections(&u, &["w", "x", "y", "z"], &["y", "z"]);
    let h = sections(&u, &["x", "z"], &[]);
    let t = SoftTopology::generate(&u, [f.clone(), g.clone()]).unwrap();
    (u, t, [f, g, h])
}

fn xyz() -> Arc<Universe> {
    Universe::new(["x", "y", "z"], ["e1", "e2"]).unwrap()
}

#[test]
fn generation_matches_listed_family() {
    let (u, t, [f, g, h]) = four_point();
    let listed = [SoftSet::null(&u), f, g, h, SoftSet::absolute(&u)];
    assert!(SoftTopology::validate(&u, &listed).is_ok());
    assert_eq!(t, SoftTopology::new(&u, listed).unwrap());
    assert_eq!(t.len(), 5);
}

#[test]
fn validation_names_the_missing_set() {
    let (u, _, [f, g, h]) = four_point();
    let family = [SoftSet::null(&u), f.clone(), g.clone(), SoftSet::absolute(&u)];
    match SoftTopology::validate(&u, &family) {
        Err(Violation::MissingIntersection { meet, .. }) => assert_eq!(meet, h),
        other => panic!("unexpected {other:?}"),
    }
    assert_eq!(SoftTopology::validate(&u, &[f]), Err(Violation::MissingNull));
    assert_eq!(
        SoftTopology::validate(&u, &[SoftSet::null(&u)]),
        Err(Violation::MissingAbsolute)
    );
}

#[test]
fn trivial_generation() {
    let u = Universe::anonymous(1, 3).unwrap();
    assert_eq!(SoftTopology::generate(&u, []).unwrap(), SoftTopology::indiscrete(&u));
    let points = (0..3).map(|c| SoftSet::from_bits(&u, 1 << c).unwrap());
    let t = SoftTopology::generate(&u, points).unwrap();
    assert_eq!(t, SoftTopology::discrete(&u));
    assert_eq!(t.len(), 8);
}

#[test]
fn dense_subspace_example() {
    let (u, t, _) = four_point();
    let y = SoftSet::uniform(&u, ["x", "y"]).unwrap();
    let i = sections(&u, &["x"], &["x"]);
    let j = sections(&u, &["x", "y"], &["y"]);
    let k = sections(&u, &["x"], &[]);

    let sub = t.subspace(&y).unwrap();
    let listed: Vec<u32> = {
        let mut v = vec![0, i.bits(), j.bits(), k.bits(), y.bits()];
        v.sort();
        v
    };
    assert_eq!(sub.open_bits(), listed.as_slice());
    assert_eq!(t.closure(&y).unwrap(), SoftSet::absolute(&u));
    assert!(t.classify(&y).unwrap().dense);

    assert_eq!(t.interior(&i).unwrap(), SoftSet::null(&u));
    assert!(!t.classify(&i).unwrap().sw_open);
    assert!(sub.classify(&i).unwrap().sw_open);
    assert!(t.space().relative(y.bits()).is_sw_open(i.bits(), Conventions::STANDARD));
    assert_eq!(t.int_sw(&i).unwrap(), SoftSet::null(&u));
}

#[test]
fn identity_example_set() {
    let u = xyz();
    let f = SoftSet::uniform(&u, ["y"]).unwrap();
    let g = SoftSet::uniform(&u, ["x", "z"]).unwrap();
    let h = sections(&u, &["x", "y", "z"], &["x", "y"]);
    let t = SoftTopology::new(&u, [SoftSet::null(&u), f.clone(), g, SoftSet::absolute(&u)]).unwrap();

    assert_eq!(t.interior(&h).unwrap(), f);
    assert_eq!(t.closure(&f).unwrap(), f);
    let v = t.classify(&h).unwrap();
    assert!(v.sw_open);
    assert!(!v.semiopen);
    assert!(!t.properties(Separation::SameParameter).connected);
}

#[test]
fn three_point_table() {
    let u = Universe::anonymous(1, 3).unwrap();
    let a = SoftSet::uniform(&u, ["a"]).unwrap();
    let b = SoftSet::uniform(&u, ["b"]).unwrap();
    let t = SoftTopology::generate(&u, [a, b]).unwrap();
    let c = t.classify(&SoftSet::uniform(&u, ["c"]).unwrap()).unwrap();
    assert!(!c.somewhere_dense);
    assert!(!c.sw_open);
    assert!(t.classify(&SoftSet::uniform(&u, ["a", "c"]).unwrap()).unwrap().sw_open);
}

#[test]
fn null_set_conventions() {
    let u = Universe::anonymous(2, 2).unwrap();
    let t = SoftTopology::indiscrete(&u);
    let v = t.classify(&SoftSet::null(&u)).unwrap();
    assert!(v.sw_open && v.somewhere_dense && !v.dense);

    let bare = Conventions {
        null_somewhere_dense: false,
        null_sw_open: false,
    };
    let v = t.classify_with(&SoftSet::null(&u), bare).unwrap();
    assert!(!v.sw_open && !v.somewhere_dense);
}

#[test]
fn trivial_operators() {
    let (u, t, _) = four_point();
    let full = SoftSet::absolute(&u);
    let null = SoftSet::null(&u);
    assert_eq!(t.interior(&full).unwrap(), full);
    assert_eq!(t.closure(&null).unwrap(), null);
    assert_eq!(t.int_sw(&null).unwrap(), null);
    assert_eq!(t.cl_sw(&full).unwrap(), full);
    assert_eq!(t.subspace(&full).unwrap(), t);
    assert_eq!(t.subspace(&null).unwrap_err(), Error::NullCarrier);
}

#[test]
fn subspace_of_indiscrete() {
    let u = Universe::anonymous(2, 2).unwrap();
    let t = SoftTopology::indiscrete(&u);
    for s in 1..=u.full_mask() {
        let sub = t.subspace(&SoftSet::from_bits(&u, s).unwrap()).unwrap();
        assert_eq!(sub.open_bits(), &[0, s]);
    }
}

#[test]
fn space_property_extremes() {
    let u = Universe::anonymous(2, 2).unwrap();
    let p = SoftTopology::indiscrete(&u).properties(Separation::SameParameter);
    assert!(p.hyperconnected && p.connected && !p.t0);
    let p = SoftTopology::discrete(&u).properties(Separation::AllPoints);
    assert!(!p.hyperconnected && p.t2 && p.t1 && p.t0);
    assert!(p.separable && p.compact);

    let single = Universe::anonymous(2, 1).unwrap();
    let p = SoftTopology::indiscrete(&single).properties(Separation::SameParameter);
    assert!(p.t0 && p.t1 && p.t2);
    let p = SoftTopology::indiscrete(&single).properties(Separation::AllPoints);
    assert!(!p.t0);
}

#[test]
fn rejects_foreign_and_outside_sets() {
    let (u, t, _) = four_point();
    let other = Universe::anonymous(1, 2).unwrap();
    assert_eq!(
        t.interior(&SoftSet::null(&other)).unwrap_err(),
        Error::UniverseMismatch
    );
    let y = SoftSet::uniform(&u, ["x"]).unwrap();
    let sub = t.subspace(&y).unwrap();
    assert_eq!(
        sub.classify(&SoftSet::absolute(&u)).unwrap_err(),
        Error::OutsideCarrier
    );
}

/// A topology on `cells` cells generated by up to four random sets.
fn arb_space() -> impl Strategy<Value = (SoftTopology, u32, u32)> {
    (1usize..=3, 1usize..=3)
        .prop_flat_map(|(params, points)| {
            let full = (1u32 << (params * points)) - 1;
            (
                Just((params, points)),
                proptest::collection::vec(0..=full, 0..4),
                0..=full,
                0..=full,
            )
        })
        .prop_map(|((params, points), family, g, h)| {
            let u = Universe::anonymous(params, points).unwrap();
            let family = family
                .into_iter()
                .map(|b| SoftSet::from_bits(&u, b).unwrap());
            (SoftTopology::generate(&u, family).unwrap(), g, h)
        })
}

proptest! {
    #[test]
    fn generated_families_are_topologies((t, _, _) in arb_space()) {
        let family: Vec<SoftSet> = t.opens().collect();
        prop_assert!(SoftTopology::validate(t.universe(), &family).is_ok());
    }

    #[test]
    fn interior_and_closure_laws((t, g, h) in arb_space()) {
        let s = t.space();
        let full = t.carrier_bits();
        let (int, cl) = (s.interior(g), s.closure(g));
        prop_assert_eq!(int & !g, 0);
        prop_assert_eq!(g & !cl, 0);
        prop_assert_eq!(s.interior(int), int);
        prop_assert_eq!(s.closure(cl), cl);
        prop_assert_eq!(s.interior(full & !g), full & !cl);
        prop_assert!(t.opens.binary_search(&int).is_ok());
        if g & !h == 0 {
            prop_assert_eq!(int & !s.interior(h), 0);
        }
    }

    #[test]
    fn classifier_lattice((t, g, _) in arb_space()) {
        let v = t.space().classify(g, Conventions::STANDARD);
        prop_assert!(!v.semiopen || v.sw_open);
        prop_assert!(!v.semiopen || v.beta_open);
        prop_assert!(!v.sw_open || v.somewhere_dense);
        prop_assert!(!v.beta_open || v.somewhere_dense);
        prop_assert!(!v.open || v.semiopen);
    }

    #[test]
    fn semiopen_characterisations((t, g, _) in arb_space()) {
        let s = t.space();
        let conv = Conventions::STANDARD;
        prop_assert_eq!(s.is_semiopen(g), s.closure(g) == s.closure(s.interior(g)));
        if g != 0 && s.is_semiopen(g) {
            prop_assert_ne!(s.interior(g), 0);
        }
        let every_meet_sw = t.opens.iter().all(|&u| s.is_sw_open(g & u, conv));
        prop_assert_eq!(s.is_semiopen(g), every_meet_sw);
        if s.is_semiclosed(g) && s.is_somewhere_dense(g, conv) {
            prop_assert!(s.is_sw_open(g, conv));
        }
    }

    #[test]
    fn closure_meets_open((t, g, _) in arb_space()) {
        let s = t.space();
        for &u in &t.opens {
            prop_assert_eq!(s.closure(g) & u & !s.closure(g & u), 0);
        }
    }

    #[test]
    fn sw_operators_closed_forms((t, g, h) in arb_space()) {
        let s = t.space();
        let conv = Conventions::STANDARD;
        let full = t.carrier_bits();
        let int = s.int_sw(g, conv);
        prop_assert!(int == 0 || int == g);
        let cl = s.cl_sw(g);
        prop_assert!(cl == g || cl == full);
        prop_assert_eq!(s.is_sw_open(g, conv), int == g);
        prop_assert_eq!(s.is_sw_closed(g), cl == g);
        // Supersets of `Φ_E` are the one exception.
        if g != 0 && s.is_sw_open(g, conv) {
            prop_assert!(s.is_sw_open(g | h, conv));
            if s.is_sw_open(h, conv) && s.is_hyperconnected() {
                prop_assert!(s.is_sw_open(g & h, conv));
            }
        }
    }

    #[test]
    fn view_matches_materialised_subspace((t, y, g) in arb_space()) {
        prop_assume!(y != 0);
        let sub = t.subspace(&t.set(y)).unwrap();
        let view = t.space().relative(y);
        let g = g & y;
        prop_assert_eq!(view.interior(g), sub.space().interior(g));
        prop_assert_eq!(view.closure(g), sub.space().closure(g));
        prop_assert_eq!(
            view.classify(g, Conventions::STANDARD),
            sub.space().classify(g, Conventions::STANDARD)
        );
        prop_assert_eq!(
            view.properties(Separation::AllPoints),
            sub.properties(Separation::AllPoints)
        );
    }

    #[test]
    fn separation_chain((t, _, _) in arb_space()) {
        for sep in [Separation::SameParameter, Separation::AllPoints] {
            let p = t.properties(sep);
            prop_assert!(!p.t2 || p.t1);
            prop_assert!(!p.t1 || p.t0);
        }
        let strict = t.properties(Separation::AllPoints);
        let loose = t.properties(Separation::SameParameter);
        prop_assert!(!strict.t0 || loose.t0);
    }
}
