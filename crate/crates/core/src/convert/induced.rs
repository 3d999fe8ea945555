//! The cancellative odd chain induced by an ordered group, and the group
//! induced by a cancellative odd chain.

use std::cmp::Ordering;
use std::fmt;

use rand::RngCore;

use super::ConvertError;
use crate::chain::{cancellativity_witness, Chain, ChainKind, Charted};
use crate::ogroup::{self, Direction, GroupElement, OrderedGroup};
use crate::sampling::Sampling;

/// `Z^k` viewed as an odd involutive chain: the product is addition, the
/// complement is negation and `t = f = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedChain {
    group: OrderedGroup,
}

impl InducedChain {
    pub fn new(group: OrderedGroup) -> Self {
        InducedChain { group }
    }

    pub fn group(&self) -> OrderedGroup {
        self.group
    }
}

impl fmt::Display for InducedChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "iota({})", self.group)
    }
}

pub fn iota_group_to_chain(group: &OrderedGroup) -> InducedChain {
    InducedChain::new(*group)
}

impl Chain for InducedChain {
    type Elem = GroupElement;

    fn kind(&self) -> ChainKind {
        ChainKind::InducedGroup
    }

    fn unit(&self) -> GroupElement {
        self.group.unit()
    }

    fn falsum(&self) -> GroupElement {
        self.group.unit()
    }

    fn contains(&self, x: &GroupElement) -> bool {
        self.group.contains(x)
    }

    fn compare(&self, x: &GroupElement, y: &GroupElement) -> Ordering {
        x.cmp(y)
    }

    fn mul(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        ogroup::add(x, y)
    }

    fn complement(&self, x: &GroupElement) -> GroupElement {
        ogroup::neg(x)
    }

    fn res(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        ogroup::add(&ogroup::neg(x), y)
    }

    fn tau(&self, _x: &GroupElement) -> GroupElement {
        self.group.unit()
    }

    fn cover(&self, x: &GroupElement, dir: Direction) -> Option<GroupElement> {
        self.group.cover(x, dir).ok()
    }

    fn sample(&self, rng: &mut dyn RngCore, window: i64) -> GroupElement {
        self.group.sample(rng, window)
    }

    fn slice(&self, radius: i64) -> Vec<GroupElement> {
        self.group.slice(radius)
    }

    fn elements(&self) -> Option<Vec<GroupElement>> {
        (self.group.rank() == 0).then(|| vec![self.group.unit()])
    }

    fn cancellative_hint(&self) -> Option<bool> {
        Some(true)
    }
}

impl Charted for InducedChain {
    fn rank_at(&self, _unit: &GroupElement) -> usize {
        self.group.rank()
    }

    fn point_at(&self, _unit: &GroupElement, g: &GroupElement) -> GroupElement {
        g.clone()
    }

    fn coords(&self, x: &GroupElement) -> GroupElement {
        x.clone()
    }
}

/// The ordered group induced by a cancellative odd chain: same carrier,
/// order and product, with inverse `x^-1 = x'`.
#[derive(Debug, Clone)]
pub struct InducedGroup<C> {
    chain: C,
}

pub fn iota_chain_to_group<C: Chain>(chain: C) -> Result<InducedGroup<C>, ConvertError> {
    iota_chain_to_group_with(chain, &Sampling::default())
}

pub fn iota_chain_to_group_with<C: Chain>(chain: C, sampling: &Sampling) -> Result<InducedGroup<C>, ConvertError> {
    let t = chain.unit();
    let ct = chain.complement(&t);
    if ct != t {
        return Err(ConvertError::NotOdd(format!("t' = {ct} differs from t = {t}")));
    }
    if let Some(w) = cancellativity_witness(&chain, sampling) {
        return Err(ConvertError::NotCancellative(w));
    }
    Ok(InducedGroup { chain })
}

impl<C: Chain> InducedGroup<C> {
    pub fn chain(&self) -> &C {
        &self.chain
    }

    pub fn into_chain(self) -> C {
        self.chain
    }

    pub fn unit(&self) -> C::Elem {
        self.chain.unit()
    }

    pub fn mul(&self, a: &C::Elem, b: &C::Elem) -> C::Elem {
        self.chain.mul(a, b)
    }

    pub fn inv(&self, a: &C::Elem) -> C::Elem {
        self.chain.complement(a)
    }

    pub fn cmp(&self, a: &C::Elem, b: &C::Elem) -> Ordering {
        self.chain.compare(a, b)
    }

    pub fn contains(&self, a: &C::Elem) -> bool {
        self.chain.contains(a)
    }
}

impl<C: Charted> InducedGroup<C> {
    /// The concrete `Z^k` this group is charted on.
    pub fn ordered_group(&self) -> OrderedGroup {
        OrderedGroup::new(self.chain.rank_at(&self.chain.unit()))
    }

    pub fn to_coords(&self, a: &C::Elem) -> GroupElement {
        self.chain.coords(a)
    }

    pub fn from_coords(&self, g: &GroupElement) -> C::Elem {
        self.chain.point_at(&self.chain.unit(), g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::FiniteChainTable;

    #[test]
    fn induced_integers() {
        let z = iota_group_to_chain(&OrderedGroup::integers());
        assert_eq!(z.res(&2.into(), &5.into()), GroupElement::from(3));
        assert_eq!(z.complement(&4.into()), GroupElement::from(-4));
        assert_eq!(z.tau(&5.into()), GroupElement::from(0));
        let z2 = iota_group_to_chain(&OrderedGroup::new(2));
        assert_eq!(z2.complement(&vec![1, -2].into()), GroupElement::from(vec![-1, 2]));
        let one = iota_group_to_chain(&OrderedGroup::trivial());
        assert_eq!(one.elements(), Some(vec![GroupElement::zero(0)]));
    }

    #[test]
    fn round_trip_through_group() {
        let z = iota_group_to_chain(&OrderedGroup::integers());
        let g = iota_chain_to_group(z.clone()).unwrap();
        assert_eq!(g.ordered_group(), OrderedGroup::integers());
        assert_eq!(g.inv(&GroupElement::from(4)), GroupElement::from(-4));
        assert_eq!(iota_group_to_chain(&g.ordered_group()), z);
        let trivial = iota_chain_to_group(iota_group_to_chain(&OrderedGroup::trivial())).unwrap();
        assert_eq!(trivial.ordered_group(), OrderedGroup::trivial());
    }

    #[test]
    fn sugihara_is_not_a_group() {
        let s3 = FiniteChainTable::new(vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]], 1, 1).unwrap();
        assert!(matches!(iota_chain_to_group(s3), Err(ConvertError::NotCancellative(_))));
    }
}
