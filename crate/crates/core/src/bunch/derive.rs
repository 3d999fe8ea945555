//! The chain derived from a bunch of layer algebras: the disjoint union of
//! the layers, ordered and multiplied through the layer homomorphisms.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, RngCore};

use super::{BunchError, BunchOfLayerAlgebras, GroupLayer};
use crate::chain::{Chain, ChainKind, Charted};
use crate::convert::SplitElem;
use crate::ogroup::{Direction, GroupElement};

/// An element of a derived chain: a layer index and an element of that
/// layer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LayerElem<E> {
    pub layer: usize,
    pub elem: E,
}

impl<E> LayerElem<E> {
    pub fn new(layer: usize, elem: E) -> Self {
        LayerElem { layer, elem }
    }
}

impl<E: fmt::Display> fmt::Display for LayerElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.elem, self.layer)
    }
}

/// Elements of chains derived from bunches of layer groups.
pub type ChainElement = LayerElem<SplitElem<GroupElement>>;

/// The involutive chain derived from a bunch of layer algebras.
#[derive(Debug, Clone)]
pub struct Derived<L: Chain> {
    bunch: BunchOfLayerAlgebras<L>,
}

/// Builds the derived chain. Only the shape is checked here; semantic
/// validity is the job of the bunch validator.
pub fn derive_chain<L: Chain>(bunch: BunchOfLayerAlgebras<L>) -> Result<Derived<L>, BunchError> {
    if bunch.is_empty() {
        return Err(BunchError::Structure("a bunch needs at least one layer".into()));
    }
    Ok(Derived { bunch })
}

impl<L: Chain> Derived<L> {
    pub fn bunch(&self) -> &BunchOfLayerAlgebras<L> {
        &self.bunch
    }

    /// `rho_v(x)`: `x` moved up to layer `v >= x.layer`.
    pub fn lift(&self, x: &LayerElem<L::Elem>, v: usize) -> L::Elem {
        self.bunch.apply(x.layer, v, &x.elem)
    }

    fn wrap(&self, layer: usize, elem: L::Elem) -> LayerElem<L::Elem> {
        LayerElem { layer, elem }
    }
}

impl<L: Chain> Chain for Derived<L> {
    type Elem = LayerElem<L::Elem>;

    fn kind(&self) -> ChainKind {
        ChainKind::Derived
    }

    fn unit(&self) -> Self::Elem {
        self.wrap(0, self.bunch.layer(0).unit())
    }

    fn falsum(&self) -> Self::Elem {
        self.wrap(0, self.bunch.layer(0).falsum())
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        x.layer < self.bunch.len() && self.bunch.layer(x.layer).contains(&x.elem)
    }

    /// Same layer: the layer order. Lower layer `u` against higher `v`:
    /// `x <= y` iff `rho_v(x) <= y`. Higher against lower: `x <= y` iff
    /// `x < rho_u(y)`.
    fn compare(&self, x: &Self::Elem, y: &Self::Elem) -> Ordering {
        match x.layer.cmp(&y.layer) {
            Ordering::Equal => self.bunch.layer(x.layer).compare(&x.elem, &y.elem),
            Ordering::Less => {
                let lx = self.lift(x, y.layer);
                if self.bunch.layer(y.layer).leq(&lx, &y.elem) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            Ordering::Greater => {
                let ly = self.lift(y, x.layer);
                if self.bunch.layer(x.layer).compare(&x.elem, &ly) == Ordering::Less {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let w = x.layer.max(y.layer);
        let p = self.bunch.layer(w).mul(&self.lift(x, w), &self.lift(y, w));
        self.wrap(w, p)
    }

    fn complement(&self, x: &Self::Elem) -> Self::Elem {
        self.wrap(x.layer, self.bunch.layer(x.layer).complement(&x.elem))
    }

    /// Exact in the least layer when the layer neighbor has the same image
    /// in every higher layer (so no element of a higher layer fits
    /// between). Elsewhere the neighbor is not computed.
    fn cover(&self, x: &Self::Elem, dir: Direction) -> Option<Self::Elem> {
        if x.layer != 0 {
            return None;
        }
        let c = self.bunch.layer(0).cover(&x.elem, dir)?;
        let agree = (1..self.bunch.len()).all(|v| self.bunch.apply(0, v, &x.elem) == self.bunch.apply(0, v, &c));
        agree.then(|| self.wrap(0, c))
    }

    fn sample(&self, rng: &mut dyn RngCore, window: i64) -> Self::Elem {
        let layer = rng.gen_range(0..self.bunch.len());
        self.wrap(layer, self.bunch.layer(layer).sample(rng, window))
    }

    fn slice(&self, radius: i64) -> Vec<Self::Elem> {
        let mut all: Vec<Self::Elem> = (0..self.bunch.len())
            .flat_map(|u| self.bunch.layer(u).slice(radius).into_iter().map(move |e| LayerElem { layer: u, elem: e }))
            .collect();
        all.sort_by(|a, b| self.compare(a, b));
        all
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let mut all = Vec::new();
        for u in 0..self.bunch.len() {
            all.extend(self.bunch.layer(u).elements()?.into_iter().map(|e| self.wrap(u, e)));
        }
        all.sort_by(|a, b| self.compare(a, b));
        Some(all)
    }

    fn cancellative_hint(&self) -> Option<bool> {
        if self.bunch.len() > 1 {
            Some(false)
        } else {
            self.bunch.layer(0).cancellative_hint()
        }
    }

    fn layer_units(&self) -> Vec<Self::Elem> {
        (0..self.bunch.len()).map(|u| self.wrap(u, self.bunch.layer(u).unit())).collect()
    }

    fn sample_layer(&self, unit: &Self::Elem, rng: &mut dyn RngCore, window: i64) -> Self::Elem {
        self.wrap(unit.layer, self.bunch.layer(unit.layer).sample(rng, window))
    }

    fn layer_cover(&self, x: &Self::Elem, dir: Direction) -> Option<Self::Elem> {
        self.bunch.layer(x.layer).cover(&x.elem, dir).map(|c| self.wrap(x.layer, c))
    }
}

impl<L: Charted> Charted for Derived<L> {
    fn rank_at(&self, unit: &Self::Elem) -> usize {
        self.bunch.layer(unit.layer).rank_at(&unit.elem)
    }

    fn point_at(&self, unit: &Self::Elem, g: &GroupElement) -> Self::Elem {
        self.wrap(unit.layer, self.bunch.layer(unit.layer).point_at(&unit.elem, g))
    }

    fn coords(&self, x: &Self::Elem) -> GroupElement {
        self.bunch.layer(x.layer).coords(&x.elem)
    }
}

impl Derived<GroupLayer> {
    /// The element with group coordinates `g` in layer `layer`, dotted or
    /// plain.
    pub fn element(&self, layer: usize, g: GroupElement, dotted: bool) -> ChainElement {
        let e = if dotted { SplitElem::Dotted(g) } else { SplitElem::Plain(g) };
        LayerElem { layer, elem: e }
    }
}
