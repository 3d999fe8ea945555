//! Concrete layer chains: the three layer shapes built from groups, and the
//! restriction of a chain to one of its layers.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rand::RngCore;

use super::LayerClass;
use crate::chain::{Chain, ChainKind, Charted};
use crate::convert::{
    downshift, iota_group_to_chain, split, ConvertError, Downshift, InducedChain, PrefixSubgroup, Split, SplitElem,
};
use crate::ogroup::{Direction, GroupElement, OrderedGroup};

/// A layer built from a group: `iota(G)`, its downshift, or its split
/// along a prefix subgroup. Elements of the first two are always plain.
#[derive(Debug, Clone)]
pub enum GroupLayer {
    Odd(InducedChain),
    Shifted(Downshift<InducedChain>),
    Split(Split<InducedChain, PrefixSubgroup>),
}

impl GroupLayer {
    pub fn build(class: LayerClass, group: OrderedGroup, subgroup: Option<PrefixSubgroup>) -> Result<Self, ConvertError> {
        let base = iota_group_to_chain(&group);
        Ok(match class {
            LayerClass::Omega => GroupLayer::Odd(base),
            LayerClass::Psi => GroupLayer::Shifted(downshift(base)?),
            LayerClass::Theta => {
                let h = subgroup.ok_or_else(|| ConvertError::InvalidSubgroup("split layer without a subgroup".into()))?;
                GroupLayer::Split(split(base, h)?)
            }
        })
    }

    pub fn group(&self) -> OrderedGroup {
        match self {
            GroupLayer::Odd(c) => c.group(),
            GroupLayer::Shifted(c) => c.base().group(),
            GroupLayer::Split(c) => c.base().group(),
        }
    }
}

fn plain(x: GroupElement) -> SplitElem<GroupElement> {
    SplitElem::Plain(x)
}

fn plains(xs: Vec<GroupElement>) -> Vec<SplitElem<GroupElement>> {
    xs.into_iter().map(plain).collect()
}

/// Dispatches a call to the underlying chain, rewrapping plain results.
macro_rules! dispatch {
    ($self:ident, $c:ident => $plain:expr, $s:ident => $split:expr) => {
        match $self {
            GroupLayer::Odd($c) => $plain,
            GroupLayer::Shifted($c) => $plain,
            GroupLayer::Split($s) => $split,
        }
    };
}

impl Chain for GroupLayer {
    type Elem = SplitElem<GroupElement>;

    fn kind(&self) -> ChainKind {
        dispatch!(self, c => c.kind(), s => s.kind())
    }

    fn unit(&self) -> Self::Elem {
        dispatch!(self, c => plain(c.unit()), s => s.unit())
    }

    fn falsum(&self) -> Self::Elem {
        dispatch!(self, c => plain(c.falsum()), s => s.falsum())
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        dispatch!(self, c => !x.is_dotted() && c.contains(x.payload()), s => s.contains(x))
    }

    fn compare(&self, x: &Self::Elem, y: &Self::Elem) -> Ordering {
        dispatch!(self, c => c.compare(x.payload(), y.payload()), s => s.compare(x, y))
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        dispatch!(self, c => plain(c.mul(x.payload(), y.payload())), s => s.mul(x, y))
    }

    fn complement(&self, x: &Self::Elem) -> Self::Elem {
        dispatch!(self, c => plain(c.complement(x.payload())), s => s.complement(x))
    }

    fn res(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        dispatch!(self, c => plain(c.res(x.payload(), y.payload())), s => s.res(x, y))
    }

    fn cover(&self, x: &Self::Elem, dir: Direction) -> Option<Self::Elem> {
        dispatch!(self, c => c.cover(x.payload(), dir).map(plain), s => s.cover(x, dir))
    }

    fn sample(&self, rng: &mut dyn RngCore, window: i64) -> Self::Elem {
        dispatch!(self, c => plain(c.sample(rng, window)), s => s.sample(rng, window))
    }

    fn slice(&self, radius: i64) -> Vec<Self::Elem> {
        dispatch!(self, c => plains(c.slice(radius)), s => s.slice(radius))
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        dispatch!(self, c => c.elements().map(plains), s => s.elements())
    }

    fn cancellative_hint(&self) -> Option<bool> {
        dispatch!(self, c => c.cancellative_hint(), s => s.cancellative_hint())
    }
}

impl Charted for GroupLayer {
    fn rank_at(&self, _unit: &Self::Elem) -> usize {
        self.group().rank()
    }

    fn point_at(&self, _unit: &Self::Elem, g: &GroupElement) -> Self::Elem {
        plain(g.clone())
    }

    fn coords(&self, x: &Self::Elem) -> GroupElement {
        x.payload().clone()
    }
}

impl fmt::Display for GroupLayer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLayer::Odd(c) => write!(f, "{c}"),
            GroupLayer::Shifted(c) => write!(f, "{c}"),
            GroupLayer::Split(c) => {
                let h = c.subgroup();
                write!(f, "split({}, prefix {})", c.base(), h.prefix())
            }
        }
    }
}

/// The layer `{x : tau(x) = unit}` of a parent chain, with falsum `unit'`.
#[derive(Debug)]
pub struct Layer<C: Chain + ?Sized> {
    parent: Arc<C>,
    unit: C::Elem,
    falsum: C::Elem,
}

impl<C: Chain + ?Sized> Clone for Layer<C> {
    fn clone(&self) -> Self {
        Layer { parent: Arc::clone(&self.parent), unit: self.unit.clone(), falsum: self.falsum.clone() }
    }
}

impl<C: Chain + ?Sized> Layer<C> {
    pub fn new(parent: Arc<C>, unit: C::Elem) -> Self {
        let falsum = parent.complement(&unit);
        Layer { parent, unit, falsum }
    }

    pub fn parent(&self) -> &Arc<C> {
        &self.parent
    }
}

impl<C: Chain + ?Sized> Chain for Layer<C> {
    type Elem = C::Elem;

    fn kind(&self) -> ChainKind {
        ChainKind::Layer
    }

    fn unit(&self) -> C::Elem {
        self.unit.clone()
    }

    fn falsum(&self) -> C::Elem {
        self.falsum.clone()
    }

    fn contains(&self, x: &C::Elem) -> bool {
        self.parent.contains(x) && self.parent.tau(x) == self.unit
    }

    fn compare(&self, x: &C::Elem, y: &C::Elem) -> Ordering {
        self.parent.compare(x, y)
    }

    fn mul(&self, x: &C::Elem, y: &C::Elem) -> C::Elem {
        self.parent.mul(x, y)
    }

    fn complement(&self, x: &C::Elem) -> C::Elem {
        self.parent.complement(x)
    }

    fn res(&self, x: &C::Elem, y: &C::Elem) -> C::Elem {
        self.parent.res(x, y)
    }

    fn cover(&self, x: &C::Elem, dir: Direction) -> Option<C::Elem> {
        self.parent.layer_cover(x, dir)
    }

    fn sample(&self, rng: &mut dyn RngCore, window: i64) -> C::Elem {
        self.parent.sample_layer(&self.unit, rng, window)
    }

    fn slice(&self, radius: i64) -> Vec<C::Elem> {
        self.parent.slice(radius).into_iter().filter(|x| self.parent.tau(x) == self.unit).collect()
    }

    fn elements(&self) -> Option<Vec<C::Elem>> {
        let all = self.parent.elements()?;
        Some(all.into_iter().filter(|x| self.parent.tau(x) == self.unit).collect())
    }
}

impl<C: Charted + ?Sized> Charted for Layer<C> {
    fn rank_at(&self, unit: &C::Elem) -> usize {
        self.parent.rank_at(unit)
    }

    fn point_at(&self, unit: &C::Elem, g: &GroupElement) -> C::Elem {
        self.parent.point_at(unit, g)
    }

    fn coords(&self, x: &C::Elem) -> GroupElement {
        self.parent.coords(x)
    }
}
