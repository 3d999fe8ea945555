//! Round trips between chains, bunches of layer algebras and bunches of
//! layer groups, and the composite check that a group bunch is recovered
//! from the chain it derives.

use std::sync::Arc;

use super::{
    algebras_to_groups, compare_algebra_bunches, decompose_chain, derive_chain, groups_to_algebras, layer_position,
    validate_bunch_algebras, validate_bunch_groups, BunchOfLayerAlgebras, BunchOfLayerGroups, LayerClass, LayerElem,
};
use crate::chain::{check_embedding, classify_parity, run_law_suite, Chain, Charted};
use crate::convert::{is_dotted_in, SplitElem};
use crate::ogroup::Direction;
use crate::report::Report;
use crate::sampling::Sampling;

/// Chain to bunch and back: `derive(decompose(c))` is isomorphic to `c`
/// via `x -> (layer of x, x)`.
pub fn check_derive_decompose<C: Chain>(c: Arc<C>, sampling: &Sampling) -> Report {
    let mut r = Report::new("chain-algebras-chain");
    let bunch = match decompose_chain(Arc::clone(&c), sampling) {
        Ok(b) => b,
        Err(e) => {
            r.fail("decompose", e.to_string());
            return r;
        }
    };
    let derived = match derive_chain(bunch.clone()) {
        Ok(d) => d,
        Err(e) => {
            r.fail("derive", e.to_string());
            return r;
        }
    };
    let iso = check_embedding(
        &*c,
        &derived,
        |x| LayerElem::new(layer_position(&bunch, x).unwrap_or(usize::MAX), x.clone()),
        |e| e.elem.clone(),
        sampling,
    );
    r.merge(iso);
    r
}

/// Bunch to chain and back: the layers of `derive(a)` are the layers of
/// `a` tagged with their index, with the same homomorphisms.
pub fn check_decompose_derive<L: Chain>(a: &BunchOfLayerAlgebras<L>, sampling: &Sampling) -> Report {
    let mut r = Report::new("algebras-chain-algebras");
    let derived = match derive_chain(a.clone()) {
        Ok(d) => Arc::new(d),
        Err(e) => {
            r.fail("derive", e.to_string());
            return r;
        }
    };
    match decompose_chain(derived, sampling) {
        Ok(back) => r.merge(compare_algebra_bunches(a, &back, |u, x| LayerElem::new(u, x.clone()), |_, e| e.elem.clone(), sampling)),
        Err(e) => r.fail("decompose", e.to_string()),
    }
    r
}

/// Groups to algebras and back gives the same group bunch.
pub fn check_groups_algebras_groups(g: &BunchOfLayerGroups, sampling: &Sampling) -> Report {
    let mut r = Report::new("groups-algebras-groups");
    match groups_to_algebras(g).and_then(|a| algebras_to_groups(&a, sampling)) {
        Ok(back) => {
            r.check("same-bunch", back.same_as(g), || format!("started from\n{g}recovered\n{back}"));
        }
        Err(e) => r.fail("convert", e.to_string()),
    }
    r
}

/// Algebras to groups and back: every layer of the rebuilt bunch is
/// isomorphic to the original one through its coordinates (dotted
/// elements of split layers map to dotted coordinates).
pub fn check_algebras_groups_algebras<L: Charted>(a: &BunchOfLayerAlgebras<L>, sampling: &Sampling) -> Report {
    let mut r = Report::new("algebras-groups-algebras");
    let rebuilt = match algebras_to_groups(a, sampling).and_then(|g| groups_to_algebras(&g)) {
        Ok(b) => b,
        Err(e) => {
            r.fail("convert", e.to_string());
            return r;
        }
    };
    let idx = a.index();
    let embed = |u: usize, x: &L::Elem| {
        let layer = a.layer(u);
        let g = layer.coords(x);
        if idx.class(u) == LayerClass::Theta && is_dotted_in(&**layer, x) {
            SplitElem::Dotted(g)
        } else {
            SplitElem::Plain(g)
        }
    };
    let back = |u: usize, y: &SplitElem<_>| {
        let layer = a.layer(u);
        let p = layer.point_at(&layer.unit(), y.payload());
        if y.is_dotted() {
            layer.mul(&p, &layer.falsum())
        } else {
            p
        }
    };
    r.merge(compare_algebra_bunches(a, &rebuilt, embed, back, sampling));
    r
}

/// Everything at once for a bunch of layer groups: validity, the law suite
/// on the derived chain, layer tags and lifts, all four round trips, and
/// recovery of the original group bunch from the derived chain alone.
pub fn verify_main_theorem(g: &BunchOfLayerGroups, sampling: &Sampling) -> Report {
    let mut r = Report::new("main-theorem");
    let vg = validate_bunch_groups(g, sampling);
    let valid = vg.passed();
    r.merge_prefixed("groups", vg);
    if !valid {
        return r;
    }
    let algebras = match groups_to_algebras(g) {
        Ok(a) => a,
        Err(e) => {
            r.fail("groups-to-algebras", e.to_string());
            return r;
        }
    };
    r.merge_prefixed("algebras", validate_bunch_algebras(&algebras, sampling));
    let chain = match derive_chain(algebras.clone()) {
        Ok(c) => Arc::new(c),
        Err(e) => {
            r.fail("derive", e.to_string());
            return r;
        }
    };
    r.merge_prefixed("laws", run_law_suite(&*chain, sampling));
    let parity = classify_parity(&*chain);
    r.check("parity", parity == Ok(g.index().xi()), || format!("derived chain has parity {parity:?}"));

    let mut rng = sampling.rng(0x746167);
    for _ in 0..sampling.samples {
        let x = chain.sample(&mut rng, sampling.window);
        let layer = algebras.layer(x.layer);
        let expected = LayerElem::new(x.layer, layer.unit());
        let tx = chain.tau(&x);
        r.check("layer-tags", tx == expected, || format!("tau({x}) = {tx}, expected {expected}"));
        for v in x.layer + 1..algebras.len() {
            let lifted = LayerElem::new(v, algebras.apply(x.layer, v, &x.elem));
            let above = chain.compare(&x, &lifted).is_lt();
            let below = algebras
                .layer(v)
                .cover(&lifted.elem, Direction::Down)
                .map(|c| chain.compare(&LayerElem::new(v, c), &x).is_lt())
                .unwrap_or(true);
            r.check("layer-lift", above && below, || format!("{lifted} is not the least element of layer {v} above {x}"));
        }
    }

    r.merge_prefixed("round-trip", check_decompose_derive(&algebras, sampling));
    r.merge_prefixed("round-trip", check_derive_decompose(Arc::clone(&chain), sampling));
    r.merge_prefixed("round-trip", check_groups_algebras_groups(g, sampling));
    r.merge_prefixed("round-trip", check_algebras_groups_algebras(&algebras, sampling));

    match decompose_chain(chain, sampling).and_then(|a| algebras_to_groups(&a, sampling)) {
        Ok(recovered) => {
            r.check("recovered-groups", recovered.same_as(g), || format!("started from\n{g}recovered\n{recovered}"));
        }
        Err(e) => r.fail("recovered-groups", e.to_string()),
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bunch::Part;
    use crate::chain::{FiniteChainTable, Parity};
    use crate::ogroup::{GroupElement, OrderedGroup};

    fn derived(g: &BunchOfLayerGroups) -> crate::bunch::Derived<crate::bunch::GroupLayer> {
        derive_chain(groups_to_algebras(g).unwrap()).unwrap()
    }

    /// The table of a finite chain read off through its own operations.
    fn table_of<C: Chain>(c: &C) -> FiniteChainTable {
        let all = c.elements().unwrap();
        let pos = |x: &C::Elem| all.iter().position(|y| y == x).unwrap();
        let mul = all.iter().map(|x| all.iter().map(|y| pos(&c.mul(x, y))).collect()).collect();
        FiniteChainTable::new(mul, pos(&c.unit()), pos(&c.falsum())).unwrap()
    }

    #[test]
    fn odd_sugihara_with_two_layers_is_the_three_element_chain() {
        let x = derived(&BunchOfLayerGroups::trivial(Parity::Odd, vec![Part::I]));
        let all = x.elements().unwrap();
        assert_eq!(all.len(), 3);
        let (ud, t, u) = (&all[0], &all[1], &all[2]);
        assert!(ud.elem.is_dotted() && ud.layer == 1);
        assert_eq!(*t, x.unit());
        assert_eq!(x.mul(u, u), *u);
        assert_eq!(x.mul(ud, ud), *ud);
        assert_eq!(x.mul(u, ud), *ud);
        assert_eq!(x.complement(t), *t);
        assert_eq!(x.complement(u), *ud);
        assert_eq!(x.res(ud, ud), *u);
        assert_eq!(x.tau(ud), *u);
        let s3 = FiniteChainTable::new(vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]], 1, 1).unwrap();
        assert_eq!(table_of(&x), s3);
    }

    #[test]
    fn even_sugihara_with_two_layers_has_four_elements() {
        let x = derived(&BunchOfLayerGroups::trivial(Parity::EvenIdempotentFalsum, vec![Part::I]));
        let t = table_of(&x);
        assert_eq!(t.n(), 4);
        assert_eq!((t.f_pos(), t.t_pos()), (1, 2));
        assert_eq!(classify_parity(&x), Ok(Parity::EvenIdempotentFalsum));
    }

    #[test]
    fn single_integer_layer_is_the_integers() {
        let x = derived(&BunchOfLayerGroups::single(OrderedGroup::integers(), Parity::Odd));
        let e = |v: i64| x.element(0, GroupElement::from(v), false);
        assert_eq!(x.mul(&e(2), &e(3)), e(5));
        assert_eq!(x.res(&e(2), &e(5)), e(3));
        assert_eq!(classify_parity(&x), Ok(Parity::Odd));
    }

    #[test]
    fn main_theorem_on_small_bunches() {
        let s = Sampling::new(8, 120, 7);
        for g in [
            BunchOfLayerGroups::single(OrderedGroup::integers(), Parity::Odd),
            BunchOfLayerGroups::single(OrderedGroup::integers(), Parity::EvenNonIdempotentFalsum),
            BunchOfLayerGroups::trivial(Parity::Odd, vec![Part::I, Part::I]),
        ] {
            let r = verify_main_theorem(&g, &s);
            assert!(r.passed(), "{g}\n{r}");
        }
    }
}
