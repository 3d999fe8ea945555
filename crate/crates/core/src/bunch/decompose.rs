//! Splitting an odd or even chain into its bunch of layer algebras.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{BunchError, BunchOfLayerAlgebras, KappaIndex, Layer, LayerHom, Part};
use crate::chain::{classify_parity, run_law_suite_exhaustive, Chain};
use crate::sampling::Sampling;

/// The bunch of layer algebras of `c`.
///
/// The index is the set of positive idempotents (the range of `tau`), each
/// layer is `{x : tau(x) = u}` with falsum `u'`, a layer is in part I when
/// `u'` is idempotent and in part J otherwise, and `rho^{u->v}(x) = v * x`.
/// Finite chains must pass the exhaustive law suite first; for infinite
/// chains the layer units come from the chain's own layer structure and
/// are checked against `tau` on samples.
pub fn decompose_chain<C: Chain>(c: Arc<C>, sampling: &Sampling) -> Result<BunchOfLayerAlgebras<Layer<C>>, BunchError> {
    let xi = classify_parity(&*c)?;
    if let Some(report) = run_law_suite_exhaustive(&*c) {
        if !report.passed() {
            let bad: Vec<&str> = report.laws.iter().filter(|l| l.violations > 0).map(|l| l.law.as_str()).collect();
            return Err(BunchError::Invalid(format!("finite chain violates {}", bad.join(", "))));
        }
    }
    let units = c.layer_units();
    if units.first() != Some(&c.unit()) {
        return Err(BunchError::Invalid(format!("the least layer unit is not t = {}", c.unit())));
    }
    for (i, u) in units.iter().enumerate() {
        let tu = c.tau(u);
        if tu != *u {
            return Err(BunchError::Invalid(format!("layer unit {u} has tau = {tu}")));
        }
        if i > 0 && !c.leq(&units[i - 1], u) {
            return Err(BunchError::Invalid(format!("layer units {} and {u} are not ascending", units[i - 1])));
        }
        let mut rng = sampling.rng(0x6463 + i as u64);
        for _ in 0..sampling.samples.div_ceil(units.len()) {
            let x = c.sample_layer(u, &mut rng, sampling.window);
            let tx = c.tau(&x);
            if tx != *u {
                return Err(BunchError::Invalid(format!("{x} is tagged with layer {u} but tau({x}) = {tx}")));
            }
        }
    }
    let parts = units[1..]
        .iter()
        .map(|u| {
            let f = c.complement(u);
            if c.mul(&f, &f) == f {
                Part::I
            } else {
                Part::J
            }
        })
        .collect();
    let index = KappaIndex::with_default_labels(parts, xi);
    let layers = units.iter().map(|u| Arc::new(Layer::new(Arc::clone(&c), u.clone()))).collect();
    let mut homs: BTreeMap<(usize, usize), LayerHom<C::Elem>> = BTreeMap::new();
    for u in 0..units.len() {
        for (v, unit_v) in units.iter().enumerate().skip(u + 1) {
            let (chain, unit_v) = (Arc::clone(&c), unit_v.clone());
            homs.insert((u, v), Arc::new(move |x: &C::Elem| chain.mul(&unit_v, x)));
        }
    }
    BunchOfLayerAlgebras::new(index, layers, homs)
}

/// The index of the layer containing `x`, found through `tau(x)`.
pub fn layer_position<C: Chain>(bunch: &BunchOfLayerAlgebras<Layer<C>>, x: &C::Elem) -> Option<usize> {
    let parent = bunch.layer(0).parent();
    let tx = parent.tau(x);
    (0..bunch.len()).find(|&u| bunch.layer(u).unit() == tx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bunch::LayerClass;
    use crate::chain::{FiniteChainTable, Parity};
    use crate::convert::iota_group_to_chain;
    use crate::ogroup::OrderedGroup;

    #[test]
    fn sugihara_three_decomposes_into_two_layers() {
        let s3 = FiniteChainTable::new(vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]], 1, 1).unwrap();
        let a = decompose_chain(Arc::new(s3), &Sampling::default()).unwrap();
        assert_eq!(a.index().classes(), vec![LayerClass::Omega, LayerClass::Theta]);
        assert_eq!(a.layer(1).elements(), Some(vec![0, 2]));
        assert_eq!(a.apply(0, 1, &1), 2);
        assert_eq!(layer_position(&a, &0), Some(1));
    }

    #[test]
    fn boolean_and_integers() {
        let b = FiniteChainTable::new(vec![vec![0, 0], vec![0, 1]], 1, 0).unwrap();
        let a = decompose_chain(Arc::new(b), &Sampling::default()).unwrap();
        assert_eq!(a.index().xi(), Parity::EvenIdempotentFalsum);
        assert_eq!(a.index().classes(), vec![LayerClass::Theta]);
        let z = decompose_chain(Arc::new(iota_group_to_chain(&OrderedGroup::integers())), &Sampling::default()).unwrap();
        assert_eq!(z.len(), 1);
    }

    #[test]
    fn broken_tables_are_rejected() {
        let bad = FiniteChainTable::new(vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]], 1, 1).unwrap();
        assert!(matches!(decompose_chain(Arc::new(bad), &Sampling::default()), Err(BunchError::Invalid(_))));
    }
}
