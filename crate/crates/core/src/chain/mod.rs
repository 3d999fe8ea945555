//! Involutive FLe-chains: a totally ordered commutative residuated monoid
//! with unit `t` and a falsum `f`, where `x' = x -> f` is an involution.
//!
//! Carriers may be infinite, so a chain is a bundle of computable operations
//! plus a sampler. The residual is derived from the complement,
//! `x -> y = (x * y')'`, which holds in every involutive FLe-algebra.

mod iso;
mod laws;
mod table;

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use rand::RngCore;
use thiserror::Error;

use crate::ogroup::{Direction, GroupElement};
use crate::sampling::Sampling;

pub use iso::check_embedding;
pub use laws::{run_law_suite, run_law_suite_exhaustive};
pub use table::{FiniteChainTable, TableError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("element {0} does not belong to the chain")]
    ForeignElement(String),
    #[error("unsupported parity: {0}")]
    UnsupportedParity(String),
}

/// How a chain value was built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainKind {
    InducedGroup,
    Downshifted,
    Upshifted,
    Split,
    Unsplit,
    Derived,
    FiniteTable,
    Layer,
}

/// The three chain classes covered by the representation: odd, and even
/// with an idempotent or a non-idempotent falsum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Odd,
    EvenIdempotentFalsum,
    EvenNonIdempotentFalsum,
}

impl Parity {
    pub const ALL: [Parity; 3] = [Parity::Odd, Parity::EvenIdempotentFalsum, Parity::EvenNonIdempotentFalsum];

    pub fn name(&self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::EvenIdempotentFalsum => "even-idempotent-f",
            Parity::EvenNonIdempotentFalsum => "even-nonidempotent-f",
        }
    }

    pub fn from_name(s: &str) -> Option<Parity> {
        Parity::ALL.into_iter().find(|p| p.name() == s)
    }

    pub fn is_even(&self) -> bool {
        !matches!(self, Parity::Odd)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An involutive FLe-chain given by its operations.
///
/// Methods assume their arguments belong to the chain; [`ChainExt`] offers
/// checked variants. The layer methods default to the single-layer case,
/// which is correct for every cancellative chain (its local unit is
/// constantly `t`).
pub trait Chain: Send + Sync + 'static {
    type Elem: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static;

    fn kind(&self) -> ChainKind;
    fn unit(&self) -> Self::Elem;
    fn falsum(&self) -> Self::Elem;
    fn contains(&self, x: &Self::Elem) -> bool;
    fn compare(&self, x: &Self::Elem, y: &Self::Elem) -> Ordering;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn complement(&self, x: &Self::Elem) -> Self::Elem;

    fn res(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.complement(&self.mul(x, &self.complement(y)))
    }

    /// Local unit: the greatest element stabilizing `x`, i.e. `x -> x`.
    fn tau(&self, x: &Self::Elem) -> Self::Elem {
        self.res(x, x)
    }

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.compare(x, y) != Ordering::Greater
    }

    fn max_of(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        if self.leq(x, y) {
            y.clone()
        } else {
            x.clone()
        }
    }

    /// The unique cover or cocover of `x`; `None` if there is none or it
    /// cannot be computed.
    fn cover(&self, x: &Self::Elem, dir: Direction) -> Option<Self::Elem>;

    fn sample(&self, rng: &mut dyn RngCore, window: i64) -> Self::Elem;

    /// A finite slice of the carrier: every element whose coordinates lie
    /// in `[-radius, radius]`, or the whole carrier when it is finite.
    fn slice(&self, radius: i64) -> Vec<Self::Elem>;

    /// The whole carrier in ascending order, if it is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// Structural knowledge about cancellativity, if any.
    fn cancellative_hint(&self) -> Option<bool> {
        None
    }

    /// The positive idempotents (the range of `tau`), ascending.
    fn layer_units(&self) -> Vec<Self::Elem> {
        vec![self.unit()]
    }

    fn sample_layer(&self, _unit: &Self::Elem, rng: &mut dyn RngCore, window: i64) -> Self::Elem {
        self.sample(rng, window)
    }

    /// Neighbor of `x` inside its own layer `{y : tau(y) = tau(x)}`.
    fn layer_cover(&self, x: &Self::Elem, dir: Direction) -> Option<Self::Elem> {
        self.cover(x, dir)
    }
}

/// Chains whose layers carry `Z^k` coordinates.
///
/// For the layer with unit `unit`, `point_at` embeds the layer group
/// (the layer itself, its upshift, or its first split projection) and
/// `coords` reads the group coordinates back (dotted elements report the
/// coordinates of their cover).
pub trait Charted: Chain {
    fn rank_at(&self, unit: &Self::Elem) -> usize;
    fn point_at(&self, unit: &Self::Elem, g: &GroupElement) -> Self::Elem;
    fn coords(&self, x: &Self::Elem) -> GroupElement;
}

impl<C: Chain + ?Sized> Chain for Arc<C> {
    type Elem = C::Elem;

    fn kind(&self) -> ChainKind {
        (**self).kind()
    }
    fn unit(&self) -> Self::Elem {
        (**self).unit()
    }
    fn falsum(&self) -> Self::Elem {
        (**self).falsum()
    }
    fn contains(&self, x: &Self::Elem) -> bool {
        (**self).contains(x)
    }
    fn compare(&self, x: &Self::Elem, y: &Self::Elem) -> Ordering {
        (**self).compare(x, y)
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        (**self).mul(x, y)
    }
    fn complement(&self, x: &Self::Elem) -> Self::Elem {
        (**self).complement(x)
    }
    fn res(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        (**self).res(x, y)
    }
    fn tau(&self, x: &Self::Elem) -> Self::Elem {
        (**self).tau(x)
    }
    fn cover(&self, x: &Self::Elem, dir: Direction) -> Option<Self::Elem> {
        (**self).cover(x, dir)
    }
    fn sample(&self, rng: &mut dyn RngCore, window: i64) -> Self::Elem {
        (**self).sample(rng, window)
    }
    fn slice(&self, radius: i64) -> Vec<Self::Elem> {
        (**self).slice(radius)
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        (**self).elements()
    }
    fn cancellative_hint(&self) -> Option<bool> {
        (**self).cancellative_hint()
    }
    fn layer_units(&self) -> Vec<Self::Elem> {
        (**self).layer_units()
    }
    fn sample_layer(&self, unit: &Self::Elem, rng: &mut dyn RngCore, window: i64) -> Self::Elem {
        (**self).sample_layer(unit, rng, window)
    }
    fn layer_cover(&self, x: &Self::Elem, dir: Direction) -> Option<Self::Elem> {
        (**self).layer_cover(x, dir)
    }
}

impl<C: Charted + ?Sized> Charted for Arc<C> {
    fn rank_at(&self, unit: &Self::Elem) -> usize {
        (**self).rank_at(unit)
    }
    fn point_at(&self, unit: &Self::Elem, g: &GroupElement) -> Self::Elem {
        (**self).point_at(unit, g)
    }
    fn coords(&self, x: &Self::Elem) -> GroupElement {
        (**self).coords(x)
    }
}

/// Membership-checked operations.
pub trait ChainExt: Chain {
    fn check_member(&self, x: &Self::Elem) -> Result<(), ChainError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(ChainError::ForeignElement(x.to_string()))
        }
    }

    fn try_leq(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool, ChainError> {
        self.check_member(x)?;
        self.check_member(y)?;
        Ok(self.leq(x, y))
    }

    fn try_mul(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, ChainError> {
        self.check_member(x)?;
        self.check_member(y)?;
        Ok(self.mul(x, y))
    }

    fn try_res(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, ChainError> {
        self.check_member(x)?;
        self.check_member(y)?;
        Ok(self.res(x, y))
    }

    fn try_complement(&self, x: &Self::Elem) -> Result<Self::Elem, ChainError> {
        self.check_member(x)?;
        Ok(self.complement(x))
    }

    fn try_tau(&self, x: &Self::Elem) -> Result<Self::Elem, ChainError> {
        self.check_member(x)?;
        Ok(self.tau(x))
    }
}

impl<C: Chain + ?Sized> ChainExt for C {}

/// Odd iff `t' = t`; even iff `t` covers `f = t'`. The falsum is then
/// classified by idempotency.
pub fn classify_parity<C: Chain + ?Sized>(c: &C) -> Result<Parity, ChainError> {
    let t = c.unit();
    let f = c.complement(&t);
    if f == t {
        return Ok(Parity::Odd);
    }
    if c.compare(&f, &t) != Ordering::Less || c.cover(&f, Direction::Up).as_ref() != Some(&t) {
        return Err(ChainError::UnsupportedParity(format!("t = {t} neither equals nor covers t' = {f}")));
    }
    if c.mul(&f, &f) == f {
        Ok(Parity::EvenIdempotentFalsum)
    } else {
        Ok(Parity::EvenNonIdempotentFalsum)
    }
}

/// Looks for a failure of cancellativity.
///
/// `x * z = y * z` with `x != y` happens exactly when `z -> (x * z)` differs
/// from `x`, so every sampled pair is a complete test for its own `x, z`.
/// Finite chains are checked exhaustively.
pub fn cancellativity_witness<C: Chain + ?Sized>(c: &C, sampling: &Sampling) -> Option<String> {
    let test = |x: &C::Elem, z: &C::Elem| {
        let p = c.mul(x, z);
        let y = c.res(z, &p);
        (y != *x).then(|| format!("{x} * {z} = {y} * {z} = {p}"))
    };
    if let Some(all) = c.elements() {
        return all.iter().find_map(|x| all.iter().find_map(|z| test(x, z)));
    }
    if c.cancellative_hint() == Some(true) {
        return None;
    }
    let mut rng = sampling.rng(0x63616e63);
    let mut pool = vec![c.unit(), c.falsum()];
    pool.extend((0..sampling.samples).map(|_| c.sample(&mut rng, sampling.window)));
    for (i, x) in pool.iter().enumerate() {
        let z = &pool[(i * 7 + 3) % pool.len()];
        if let Some(w) = test(x, z).or_else(|| test(x, x)) {
            return Some(w);
        }
    }
    if c.cancellative_hint() == Some(false) {
        return Some("chain is structurally non-cancellative".into());
    }
    None
}

/// Looks for an element without a strict lower or upper neighbor.
pub fn discreteness_witness<C: Chain + ?Sized>(c: &C, sampling: &Sampling) -> Option<String> {
    let test = |x: &C::Elem| {
        let up = c.cover(x, Direction::Up);
        let down = c.cover(x, Direction::Down);
        match (down, up) {
            (Some(d), Some(u))
                if c.compare(&d, x) == Ordering::Less && c.compare(x, &u) == Ordering::Less =>
            {
                None
            }
            _ => Some(format!("{x} has no strict neighbors on both sides")),
        }
    };
    if let Some(w) = test(&c.unit()) {
        return Some(w);
    }
    let mut rng = sampling.rng(0x64697363);
    (0..sampling.samples).find_map(|_| test(&c.sample(&mut rng, sampling.window)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_names_round_trip() {
        for p in Parity::ALL {
            assert_eq!(Parity::from_name(p.name()), Some(p));
        }
        assert!(Parity::from_name("weird").is_none());
    }
}
