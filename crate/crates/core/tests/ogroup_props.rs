use flechains::{Direction, GroupElement, HomKind, Homomorphism, OrderedGroup, Sampling};
use proptest::prelude::*;

fn element(rank: usize) -> impl Strategy<Value = GroupElement> {
    prop::collection::vec(-50i64..=50, rank).prop_map(GroupElement::new)
}

fn triple() -> impl Strategy<Value = (OrderedGroup, GroupElement, GroupElement, GroupElement)> {
    (0usize..=3).prop_flat_map(|k| (Just(OrderedGroup::new(k)), element(k), element(k), element(k)))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

proptest! {
    #[test]
    fn abelian_group_laws((g, a, b, c) in triple()) {
        let ab = g.mul(&a, &b).unwrap();
        prop_assert_eq!(g.mul(&ab, &c).unwrap(), g.mul(&a, &g.mul(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(&ab, &g.mul(&b, &a).unwrap());
        prop_assert_eq!(g.mul(&a, &g.unit()).unwrap(), a.clone());
        prop_assert_eq!(g.mul(&a, &g.inv(&a).unwrap()).unwrap(), g.unit());
    }

    #[test]
    fn order_is_lexicographic_and_translation_invariant((g, a, b, c) in triple()) {
        let expected = a.coords().iter().zip(b.coords()).map(|(x, y)| x.cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal);
        prop_assert_eq!(g.cmp(&a, &b).unwrap(), expected);
        let (ac, bc) = (g.mul(&a, &c).unwrap(), g.mul(&b, &c).unwrap());
        prop_assert_eq!(g.cmp(&ac, &bc).unwrap(), expected);
    }

    #[test]
    fn covers_are_immediate((g, a, b, _c) in triple()) {
        prop_assume!(g.rank() > 0);
        let up = g.cover(&a, Direction::Up).unwrap();
        prop_assert!(g.cmp(&a, &up).unwrap().is_lt());
        prop_assert!(!(g.cmp(&a, &b).unwrap().is_lt() && g.cmp(&b, &up).unwrap().is_lt()));
        prop_assert_eq!(g.cover(&up, Direction::Down).unwrap(), a);
    }

    #[test]
    fn matrix_maps_are_additive(
        (src, tgt, rows, a, b) in (0usize..=3, 0usize..=3).prop_flat_map(|(m, n)| {
            (Just(OrderedGroup::new(m)), Just(OrderedGroup::new(n)), matrix(n, m), element(m), element(m))
        })
    ) {
        let h = Homomorphism::new(src, tgt, HomKind::Matrix(rows)).unwrap();
        let sum = src.mul(&a, &b).unwrap();
        prop_assert_eq!(h.apply(&sum).unwrap(), tgt.mul(&h.apply(&a).unwrap(), &h.apply(&b).unwrap()).unwrap());
        let n = h.normalized();
        prop_assert!(n.same_map(&h));
        prop_assert_eq!(n.apply(&a).unwrap(), h.apply(&a).unwrap());
        let again = Homomorphism::new(src, tgt, HomKind::Matrix(h.to_matrix())).unwrap();
        prop_assert!(again.same_map(&h));
    }

    #[test]
    fn composition_applies_in_order(
        (m, k, n, f_rows, g_rows, a) in (0usize..=3, 0usize..=3, 0usize..=3).prop_flat_map(|(m, k, n)| {
            (Just(m), Just(k), Just(n), matrix(k, m), matrix(n, k), element(m))
        })
    ) {
        let (gm, gk, gn) = (OrderedGroup::new(m), OrderedGroup::new(k), OrderedGroup::new(n));
        let f = Homomorphism::new(gm, gk, HomKind::Matrix(f_rows)).unwrap();
        let g = Homomorphism::new(gk, gn, HomKind::Matrix(g_rows)).unwrap();
        let gf = f.then(&g).unwrap();
        prop_assert_eq!(gf.apply(&a).unwrap(), g.apply(&f.apply(&a).unwrap()).unwrap());
    }

    #[test]
    fn named_kinds_are_order_preserving(k in 0usize..=3, j in 0usize..=3, a in element(3), b in element(3)) {
        prop_assume!(j <= k);
        let g = OrderedGroup::new(k);
        let (a, b) = (GroupElement::new(a.coords()[..k].to_vec()), GroupElement::new(b.coords()[..k].to_vec()));
        let t = Homomorphism::new(g, OrderedGroup::new(j), HomKind::Truncate(j)).unwrap();
        prop_assert!(t.validate(&Sampling::default()).is_valid());
        if g.cmp(&a, &b).unwrap().is_le() {
            prop_assert!(t.apply(&a).unwrap() <= t.apply(&b).unwrap());
        }
        let image = t.apply(&a).unwrap();
        prop_assert_eq!(image.coords(), &a.coords()[..j]);
    }
}

#[test]
fn validation_flags_order_reversal() {
    let z = OrderedGroup::integers();
    let flip = Homomorphism::new(z, z, HomKind::Matrix(vec![vec![-1]])).unwrap();
    let report = flip.validate(&Sampling::default());
    assert!(!report.is_valid());
    assert!(!report.counterexamples.is_empty());
}

#[test]
fn rank_mismatches_are_errors() {
    let z = OrderedGroup::integers();
    assert!(z.mul(&GroupElement::from(1), &GroupElement::new(vec![1, 2])).is_err());
    assert!(OrderedGroup::trivial().cover(&GroupElement::new(vec![]), Direction::Up).is_err());
    assert!(Homomorphism::new(z, OrderedGroup::new(2), HomKind::Identity).is_err());
}
