//! Law-level properties over randomly generated small structures.

use std::sync::OnceLock;

use proptest::prelude::*;

use orderlab::{
    closed_elements, closure_from_moore_family, cut_quotient, poset_isomorphism,
    quotient_by_closure, verify_order_iso, FiniteLattice, FuzzyMap, Poset, SetFamily,
};

/// Posets from arbitrary cover subsets on up to six elements; covers always
/// point from a lower index to a higher one, so no cycles arise.
fn arb_poset() -> impl Strategy<Value = Poset> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |picks| {
            let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let covers: Vec<(String, String)> = pairs
                .iter()
                .zip(picks.iter())
                .filter(|(_, keep)| **keep)
                .map(|((i, j), _)| (format!("x{i}"), format!("x{j}")))
                .collect();
            Poset::from_covers(&names, &covers).expect("acyclic covers")
        })
    })
}

fn lattice_pool() -> &'static Vec<FiniteLattice> {
    static POOL: OnceLock<Vec<FiniteLattice>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut all = orderlab::enumerate::labeled_lattices(&["a", "b", "c", "d"]);
        all.extend(orderlab::enumerate::labeled_lattices(&["a", "b", "c", "d", "e"]));
        all
    })
}

fn arb_lattice() -> impl Strategy<Value = FiniteLattice> {
    (0..lattice_pool().len()).prop_map(|i| lattice_pool()[i].clone())
}

/// A Moore family: any subset closed under meets with the top added.
fn moore_closure(lattice: &FiniteLattice, seed: &[bool]) -> Vec<String> {
    let names = lattice.order().elements();
    let mut family: Vec<String> = vec![lattice.top().to_owned()];
    for (i, keep) in seed.iter().take(names.len()).enumerate() {
        if *keep && !family.contains(&names[i]) {
            family.push(names[i].clone());
        }
    }
    loop {
        let mut grew = false;
        let snapshot = family.clone();
        for a in &snapshot {
            for b in &snapshot {
                let m = lattice.meet(a, b).unwrap().to_owned();
                if !family.contains(&m) {
                    family.push(m);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    family
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covers_regenerate_the_order(p in arb_poset()) {
        let covers = p.covers();
        let again = Poset::from_covers(p.elements(), &covers).unwrap();
        prop_assert_eq!(p, again);
    }

    #[test]
    fn up_set_family_laws(p in arb_poset()) {
        let fam = p.up_set_family(None).unwrap();
        prop_assert!(fam.contains_set(&[] as &[&str]).unwrap());
        prop_assert!(fam.contains_full_base());
        // Closed under pairwise union and intersection.
        let members: Vec<Vec<String>> = (0..fam.len()).map(|i| fam.member(i)).collect();
        for a in &members {
            for b in &members {
                let mut union: Vec<String> = a.clone();
                for x in b {
                    if !union.contains(x) {
                        union.push(x.clone());
                    }
                }
                let inter: Vec<String> =
                    a.iter().filter(|x| b.contains(x)).cloned().collect();
                prop_assert!(fam.contains_set(&union).unwrap());
                prop_assert!(fam.contains_set(&inter).unwrap());
            }
        }
        // Every member really is an up-set.
        for m in &members {
            prop_assert!(p.is_up_set(m).unwrap());
        }
    }

    #[test]
    fn principal_filters_are_up_sets(p in arb_poset()) {
        for x in p.elements() {
            let filter = p.principal_filter(x).unwrap();
            prop_assert!(p.is_up_set(&filter).unwrap());
            prop_assert!(filter.contains(x));
        }
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(p in arb_poset(), q in arb_poset()) {
        let refl = poset_isomorphism(&p, &p).expect("reflexive");
        prop_assert!(verify_order_iso(&p, &p, &refl));
        if let Some(w) = poset_isomorphism(&p, &q) {
            prop_assert!(verify_order_iso(&p, &q, &w));
            prop_assert!(verify_order_iso(&q, &p, &w.inverted()));
            prop_assert!(poset_isomorphism(&q, &p).is_some());
        }
    }

    #[test]
    fn moore_round_trip(l in arb_lattice(), seed in proptest::collection::vec(any::<bool>(), 5)) {
        let family = moore_closure(&l, &seed);
        let c = closure_from_moore_family(&l, &family).unwrap();
        let mut closed = closed_elements(&l, &c).unwrap();
        let mut family = family;
        closed.sort();
        family.sort();
        prop_assert_eq!(closed, family);
    }

    #[test]
    fn quotient_matches_closed_elements(
        l in arb_lattice(),
        seed in proptest::collection::vec(any::<bool>(), 5),
    ) {
        let family = moore_closure(&l, &seed);
        let c = closure_from_moore_family(&l, &family).unwrap();
        let q = quotient_by_closure(&c);
        let closed_poset = l.order().induced(&c.fixed_points()).unwrap();
        prop_assert!(verify_order_iso(q.poset(), &closed_poset, q.closed_iso()));
        prop_assert!(poset_isomorphism(q.poset(), &closed_poset).is_some());
    }

    #[test]
    fn cut_laws_hold_for_every_map(
        l in arb_lattice(),
        values in proptest::collection::vec(0usize..5, 4),
    ) {
        let space = Poset::from_covers(
            &["p", "q", "r", "s"],
            &[("p", "q"), ("p", "r")],
        ).unwrap();
        let entries: Vec<(String, String)> = space
            .elements()
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let v = l.order().element(values[i] % l.len()).to_owned();
                (x.clone(), v)
            })
            .collect();
        let m = FuzzyMap::new(space.clone(), l.clone(), &entries).unwrap();
        // Cut at the bottom is the space.
        prop_assert_eq!(m.p_cut(l.bottom()).unwrap(), space.elements().to_vec());
        for p in l.order().elements() {
            for q in l.order().elements() {
                let join = l.join(p, q).unwrap();
                let cut_join = m.p_cut(join).unwrap();
                let cut_p = m.p_cut(p).unwrap();
                let cut_q = m.p_cut(q).unwrap();
                let inter: Vec<String> = cut_p
                    .iter()
                    .filter(|x| cut_q.contains(x))
                    .cloned()
                    .collect();
                prop_assert_eq!(&cut_join, &inter);
                // Antitone in the cut parameter.
                if l.order().leq(p, q).unwrap() {
                    prop_assert!(cut_q.iter().all(|x| cut_p.contains(x)));
                }
            }
        }
        // The family is intersection-closed and contains the space.
        let report = m.cut_family();
        prop_assert!(report.family.is_intersection_closed());
        prop_assert!(report.family.contains_full_base());
        // Class tops reproduce their class's cut.
        for (k, top) in report.class_tops().iter().enumerate() {
            let top_idx = l.order().index_of(top).unwrap();
            prop_assert_eq!(report.cut_index_of(top_idx), k);
        }
    }

    #[test]
    fn cut_quotient_matches_family(
        l in arb_lattice(),
        values in proptest::collection::vec(0usize..5, 3),
    ) {
        let space = Poset::antichain(&["p", "q", "r"]).unwrap();
        let entries: Vec<(String, String)> = space
            .elements()
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), l.order().element(values[i] % l.len()).to_owned()))
            .collect();
        let m = FuzzyMap::new(space, l, &entries).unwrap();
        let (quotient, witness) = cut_quotient(&m);
        let family_poset = m.cut_family().family.reverse_inclusion_poset();
        prop_assert!(verify_order_iso(quotient.poset(), &family_poset, &witness));
    }

    #[test]
    fn family_lattice_bound_formulas(p in arb_poset()) {
        let fam = p.up_set_family(None).unwrap();
        let fl = orderlab::FamilyLattice::new(fam.clone()).unwrap();
        let members: Vec<Vec<String>> = (0..fam.len()).map(|i| fam.member(i)).collect();
        for a in &members {
            for b in &members {
                // Up-set families are union-closed: meet is the union.
                let mut union: Vec<String> = a.clone();
                for x in b {
                    if !union.contains(x) {
                        union.push(x.clone());
                    }
                }
                union.sort();
                let mut meet = fl.meet_of_members(&[a.clone(), b.clone()]).unwrap();
                meet.sort();
                prop_assert_eq!(meet, union);
                let mut inter: Vec<String> =
                    a.iter().filter(|x| b.contains(x)).cloned().collect();
                inter.sort();
                let mut join = fl.join_of_members(&[a.clone(), b.clone()]).unwrap();
                join.sort();
                prop_assert_eq!(join, inter);
            }
        }
    }
}

#[test]
fn set_family_rejects_foreign_members() {
    let err = SetFamily::new(&["a"], &[vec!["b"]]).unwrap_err();
    assert!(matches!(err, orderlab::OrderError::UnknownName(_)));
}
