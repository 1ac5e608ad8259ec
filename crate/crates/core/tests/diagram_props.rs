use std::cmp::Ordering;

use braid_orders::{
    class_of, enumerate_classes, full_twist, loose_isotopic, min_positive, realize, Anchor, Arc, BraidWord,
    CurveDiagram, DiagramClass, DiagramOrder, FreeWord,
};
use proptest::prelude::*;

const N: usize = 4;

fn braid(n: usize, max: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n as i32, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }), 0..max)
        .prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn class(n: usize) -> impl Strategy<Value = DiagramClass> {
    let all = enumerate_classes(n).unwrap();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

/// The same diagram with every arc re-entered as a loop on itself.
fn as_self_loops(d: &CurveDiagram, flip: bool) -> CurveDiagram {
    let arcs = d
        .arcs()
        .iter()
        .map(|a| {
            let l = match a.anchor() {
                Anchor::Puncture(i) => {
                    let g = FreeWord::generator(d.n(), *i);
                    let g = if flip { g.inverse() } else { g };
                    g.conjugate_by(a.word())
                }
                _ => a.word().clone(),
            };
            Arc::new(a.label(), a.slot(), FreeWord::identity(d.n()), Anchor::SelfLoop(l))
        })
        .collect();
    CurveDiagram::new(d.n(), arcs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn isotopy_is_equivariant_and_symmetric(c1 in class(N), c2 in class(N), a in braid(N, 6), b in braid(N, 6), g in braid(N, 6)) {
        let d1 = realize(&c1).unwrap().act(&a).unwrap();
        let d2 = realize(&c2).unwrap().act(&b).unwrap();
        let iso = loose_isotopic(&d1, &d2).unwrap();
        prop_assert_eq!(iso, loose_isotopic(&d2, &d1).unwrap());
        prop_assert_eq!(iso, loose_isotopic(&d1.act(&g).unwrap(), &d2.act(&g).unwrap()).unwrap());
    }

    #[test]
    fn isotopic_diagrams_share_class_and_order(c in class(N), b in braid(N, 5), probes in prop::collection::vec(braid(N, 8), 8)) {
        let d = realize(&c).unwrap();
        let moved = d.act(&b).unwrap();
        if loose_isotopic(&moved, &d).unwrap() {
            prop_assert_eq!(class_of(&moved).unwrap(), c);
            let (o1, o2) = (DiagramOrder::new(&d).unwrap(), DiagramOrder::new(&moved).unwrap());
            for p in &probes {
                prop_assert_eq!(o1.sign(p).unwrap(), o2.sign(p).unwrap());
            }
        }
    }

    #[test]
    fn stabilizing_braids_keep_the_order(c in class(N), k in -2i64..=2, j in -3i64..=3, probes in prop::collection::vec(braid(N, 8), 8)) {
        let d = realize(&c).unwrap();
        let b = full_twist(N).unwrap().pow(k).compose(&min_positive(&c).unwrap().pow(j)).unwrap();
        let moved = d.act(&b).unwrap();
        prop_assert!(loose_isotopic(&moved, &d).unwrap());
        let (o1, o2) = (DiagramOrder::new(&d).unwrap(), DiagramOrder::new(&moved).unwrap());
        for p in &probes {
            prop_assert_eq!(o1.sign(p).unwrap(), o2.sign(p).unwrap());
        }
    }

    #[test]
    fn pulling_tight_preserves_the_order(c in class(N), b in braid(N, 6), flip in any::<bool>(), x in braid(N, 8), y in braid(N, 8)) {
        let d = realize(&c).unwrap().act(&b).unwrap().without_provenance();
        let loose = as_self_loops(&d, flip);
        prop_assert_eq!(loose.pull_tight().endpoints().unwrap(), d.endpoints().unwrap());
        prop_assert_eq!(
            DiagramOrder::new(&loose).unwrap().compare(&x, &y).unwrap(),
            DiagramOrder::new(&d).unwrap().compare(&x, &y).unwrap()
        );
    }

    #[test]
    fn conjugation_is_right_translation(c in class(N), rho in braid(N, 6), b1 in braid(N, 8), b2 in braid(N, 8)) {
        let d = realize(&c).unwrap();
        let moved = DiagramOrder::new(&d.act(&rho).unwrap()).unwrap();
        let o = DiagramOrder::new(&d).unwrap();
        prop_assert_eq!(
            moved.compare(&b1, &b2).unwrap(),
            o.compare(&b1.compose(&rho).unwrap(), &b2.compose(&rho).unwrap()).unwrap()
        );
    }

    #[test]
    fn total_orders_separate_distinct_braids(c in class(N), b1 in braid(N, 8), b2 in braid(N, 8)) {
        let o = DiagramOrder::new(&realize(&c).unwrap()).unwrap();
        let equal = o.compare(&b1, &b2).unwrap() == Ordering::Equal;
        prop_assert_eq!(equal, b2.invert().compose(&b1).unwrap().is_trivial());
        prop_assert_eq!(o.sign(&b1.invert()).unwrap(), o.sign(&b1).unwrap().reverse());
    }

    #[test]
    fn class_is_constant_on_orbits(c in class(5), b in braid(5, 12)) {
        let d = realize(&c).unwrap().act(&b).unwrap();
        prop_assert_eq!(class_of(&d.without_provenance()).unwrap(), c);
    }

    #[test]
    fn components_follow_the_permutation(c in class(5), b in braid(5, 10), m in 1usize..4) {
        let d = realize(&c).unwrap().truncate(m);
        let perm = b.permutation();
        let mut expected: Vec<Vec<usize>> = d
            .components()
            .unwrap()
            .iter()
            .map(|block| {
                let mut v: Vec<usize> = block.iter().map(|&p| perm.apply(p)).collect();
                v.sort();
                v
            })
            .collect();
        expected.sort();
        prop_assert_eq!(d.act(&b).unwrap().components().unwrap(), expected);
    }
}

#[test]
fn isotopy_is_transitive_on_twisted_copies() {
    let t = full_twist(N).unwrap();
    for c in enumerate_classes(N).unwrap() {
        let d = realize(&c).unwrap();
        let copies: Vec<CurveDiagram> = [
            BraidWord::identity(N),
            t.clone(),
            t.invert(),
            BraidWord::generator(N, 3).unwrap(),
            BraidWord::new(N, vec![1, 2, -1]).unwrap(),
        ]
        .iter()
        .map(|b| d.act(b).unwrap())
        .collect();
        let iso = |i: usize, j: usize| loose_isotopic(&copies[i], &copies[j]).unwrap();
        for i in 0..copies.len() {
            assert!(iso(i, i));
            for j in 0..copies.len() {
                for k in 0..copies.len() {
                    if iso(i, j) && iso(j, k) {
                        assert!(iso(i, k), "{c}: {i} ~ {j} ~ {k}");
                    }
                }
            }
        }
    }
}

#[test]
fn partial_diagram_cannot_see_inner_twists() {
    let d = realize(&DiagramClass::dehornoy(N).unwrap()).unwrap().truncate(2);
    let o = DiagramOrder::new(&d).unwrap();
    let inner = BraidWord::new(N, vec![3, 3, 3]).unwrap();
    assert!(!inner.is_trivial());
    assert_eq!(o.sign(&inner).unwrap(), Ordering::Equal);
    assert!(!d.validate().unwrap().total);
}
