//! Splitting an odd chain along a subgroup `H`: every `a` in `H` gets a
//! dotted copy placed directly below it. The result is even with an
//! idempotent falsum; [`unsplit`] recovers the odd chain and `H`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, RngCore};

use super::ConvertError;
use crate::chain::{classify_parity, Chain, ChainKind, Charted, Parity};
use crate::ogroup::{Direction, GroupElement};
use crate::sampling::Sampling;

/// An element of a split chain: an original element or the dotted copy of
/// a subgroup element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SplitElem<E> {
    Plain(E),
    Dotted(E),
}

impl<E> SplitElem<E> {
    /// The underlying element (the canonical projection onto the base).
    pub fn payload(&self) -> &E {
        match self {
            SplitElem::Plain(e) | SplitElem::Dotted(e) => e,
        }
    }

    pub fn is_dotted(&self) -> bool {
        matches!(self, SplitElem::Dotted(_))
    }
}

impl<E: fmt::Display> fmt::Display for SplitElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitElem::Plain(e) => write!(f, "{e}"),
            SplitElem::Dotted(e) => write!(f, "dot({e})"),
        }
    }
}

/// A subgroup given by membership and a sampler.
pub trait Subgroup<E>: Send + Sync + 'static {
    fn contains(&self, x: &E) -> bool;
    fn sample(&self, rng: &mut dyn RngCore, window: i64) -> E;
}

/// Subgroup descriptions of `Z^k`: everything, `{0}`, or the lex prefix
/// `Z^j x {0}^(k-j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubgroupSpec {
    Full,
    Trivial,
    Prefix(usize),
}

impl SubgroupSpec {
    /// Number of free leading coordinates inside `Z^rank`.
    pub fn prefix_len(&self, rank: usize) -> usize {
        match *self {
            SubgroupSpec::Full => rank,
            SubgroupSpec::Trivial => 0,
            SubgroupSpec::Prefix(j) => j,
        }
    }

    pub fn in_group(&self, rank: usize) -> Result<PrefixSubgroup, ConvertError> {
        PrefixSubgroup::new(rank, self.prefix_len(rank))
    }
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupSpec::Full => f.write_str("full"),
            SubgroupSpec::Trivial => f.write_str("trivial"),
            SubgroupSpec::Prefix(j) => write!(f, "prefix {j}"),
        }
    }
}

/// `Z^prefix x {0}^(rank - prefix)` inside `Z^rank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrefixSubgroup {
    rank: usize,
    prefix: usize,
}

impl PrefixSubgroup {
    pub fn new(rank: usize, prefix: usize) -> Result<Self, ConvertError> {
        if prefix > rank {
            return Err(ConvertError::InvalidSubgroup(format!("prefix {prefix} exceeds rank {rank}")));
        }
        Ok(PrefixSubgroup { rank, prefix })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn prefix(&self) -> usize {
        self.prefix
    }
}

impl Subgroup<GroupElement> for PrefixSubgroup {
    fn contains(&self, x: &GroupElement) -> bool {
        x.rank() == self.rank && x.coords()[self.prefix..].iter().all(|&c| c == 0)
    }

    fn sample(&self, rng: &mut dyn RngCore, window: i64) -> GroupElement {
        let w = window.max(0);
        let mut v = vec![0; self.rank];
        for c in &mut v[..self.prefix] {
            *c = rng.gen_range(-w..=w);
        }
        GroupElement::new(v)
    }
}

/// The split of an odd chain `X` along a subgroup `H`.
#[derive(Debug, Clone)]
pub struct Split<C, S> {
    base: C,
    subgroup: S,
}

pub fn split<C: Chain, S: Subgroup<C::Elem>>(base: C, subgroup: S) -> Result<Split<C, S>, ConvertError> {
    split_with(base, subgroup, &Sampling::default())
}

/// Checks that the base is odd and that `H` contains `t`, is closed under
/// product and complement, and is cancellative (on samples).
pub fn split_with<C: Chain, S: Subgroup<C::Elem>>(
    base: C,
    subgroup: S,
    sampling: &Sampling,
) -> Result<Split<C, S>, ConvertError> {
    let t = base.unit();
    let ct = base.complement(&t);
    if ct != t {
        return Err(ConvertError::NotOdd(format!("t' = {ct} differs from t = {t}")));
    }
    if !subgroup.contains(&t) {
        return Err(ConvertError::InvalidSubgroup(format!("unit {t} is not in the subgroup")));
    }
    let mut rng = sampling.rng(0x73706c74);
    for _ in 0..sampling.samples {
        let a = subgroup.sample(&mut rng, sampling.window);
        let b = subgroup.sample(&mut rng, sampling.window);
        if !base.contains(&a) {
            return Err(ConvertError::InvalidSubgroup(format!("{a} is not in the base chain")));
        }
        let ab = base.mul(&a, &b);
        if !subgroup.contains(&ab) {
            return Err(ConvertError::InvalidSubgroup(format!("not closed: {a} * {b} = {ab}")));
        }
        let ac = base.complement(&a);
        if !subgroup.contains(&ac) {
            return Err(ConvertError::InvalidSubgroup(format!("not closed: {a}' = {ac}")));
        }
        let back = base.res(&b, &ab);
        if back != a {
            return Err(ConvertError::InvalidSubgroup(format!("not cancellative: {a} * {b} = {back} * {b}")));
        }
    }
    Ok(Split { base, subgroup })
}

impl<C: Chain, S: Subgroup<C::Elem>> Split<C, S> {
    pub fn base(&self) -> &C {
        &self.base
    }

    pub fn subgroup(&self) -> &S {
        &self.subgroup
    }

    fn plain_or_dotted(&self, p: C::Elem, dotted: bool) -> SplitElem<C::Elem> {
        if dotted {
            SplitElem::Dotted(p)
        } else {
            SplitElem::Plain(p)
        }
    }

    fn lift_base(&self, xs: Vec<C::Elem>) -> Vec<SplitElem<C::Elem>> {
        let mut out = Vec::with_capacity(xs.len() * 2);
        for x in xs {
            if self.subgroup.contains(&x) {
                out.push(SplitElem::Dotted(x.clone()));
            }
            out.push(SplitElem::Plain(x));
        }
        out
    }
}

impl<C: Chain, S: Subgroup<C::Elem>> Chain for Split<C, S> {
    type Elem = SplitElem<C::Elem>;

    fn kind(&self) -> ChainKind {
        ChainKind::Split
    }

    fn unit(&self) -> Self::Elem {
        SplitElem::Plain(self.base.unit())
    }

    fn falsum(&self) -> Self::Elem {
        SplitElem::Dotted(self.base.unit())
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        match x {
            SplitElem::Plain(e) => self.base.contains(e),
            SplitElem::Dotted(e) => self.base.contains(e) && self.subgroup.contains(e),
        }
    }

    fn compare(&self, x: &Self::Elem, y: &Self::Elem) -> Ordering {
        self.base
            .compare(x.payload(), y.payload())
            .then_with(|| (!x.is_dotted()).cmp(&!y.is_dotted()))
    }

    /// The product of the payloads, dotted exactly when it lies in `H`
    /// while the factors are not both plain elements of `H`.
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let p = self.base.mul(x.payload(), y.payload());
        let both_plain_in_h = matches!((x, y), (SplitElem::Plain(a), SplitElem::Plain(b))
            if self.subgroup.contains(a) && self.subgroup.contains(b));
        let dotted = !both_plain_in_h && self.subgroup.contains(&p);
        self.plain_or_dotted(p, dotted)
    }

    fn complement(&self, x: &Self::Elem) -> Self::Elem {
        match x {
            SplitElem::Plain(e) => {
                let c = self.base.complement(e);
                let dotted = self.subgroup.contains(e);
                self.plain_or_dotted(c, dotted)
            }
            SplitElem::Dotted(e) => SplitElem::Plain(self.base.complement(e)),
        }
    }

    fn cover(&self, x: &Self::Elem, dir: Direction) -> Option<Self::Elem> {
        match (x, dir) {
            (SplitElem::Dotted(a), Direction::Up) => Some(SplitElem::Plain(a.clone())),
            (SplitElem::Plain(a), Direction::Down) if self.subgroup.contains(a) => {
                Some(SplitElem::Dotted(a.clone()))
            }
            (SplitElem::Plain(a), Direction::Up) => {
                let c = self.base.cover(a, Direction::Up)?;
                let dotted = self.subgroup.contains(&c);
                Some(self.plain_or_dotted(c, dotted))
            }
            (SplitElem::Plain(a) | SplitElem::Dotted(a), Direction::Down) => {
                Some(SplitElem::Plain(self.base.cover(a, Direction::Down)?))
            }
        }
    }

    fn sample(&self, rng: &mut dyn RngCore, window: i64) -> Self::Elem {
        let x = if rng.gen_range(0..3) == 0 {
            self.subgroup.sample(rng, window)
        } else {
            self.base.sample(rng, window)
        };
        let dotted = self.subgroup.contains(&x) && rng.gen_bool(0.5);
        self.plain_or_dotted(x, dotted)
    }

    fn slice(&self, radius: i64) -> Vec<Self::Elem> {
        self.lift_base(self.base.slice(radius))
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        self.base.elements().map(|xs| self.lift_base(xs))
    }

    fn cancellative_hint(&self) -> Option<bool> {
        Some(false)
    }
}

impl<C: Charted, S: Subgroup<C::Elem>> Charted for Split<C, S> {
    fn rank_at(&self, unit: &Self::Elem) -> usize {
        self.base.rank_at(unit.payload())
    }

    fn point_at(&self, unit: &Self::Elem, g: &GroupElement) -> Self::Elem {
        SplitElem::Plain(self.base.point_at(unit.payload(), g))
    }

    fn coords(&self, x: &Self::Elem) -> GroupElement {
        self.base.coords(x.payload())
    }
}

/// The dotted/plain structure of an even chain `Y` with idempotent falsum,
/// read off from its operations.
#[derive(Debug)]
struct Shape<Y> {
    y: Arc<Y>,
}

impl<Y> Clone for Shape<Y> {
    fn clone(&self) -> Self {
        Shape { y: Arc::clone(&self.y) }
    }
}

impl<Y: Chain> Shape<Y> {
    fn in_h(&self, x: &Y::Elem) -> bool {
        in_split_subgroup(&*self.y, x)
    }

    fn is_dotted(&self, x: &Y::Elem) -> bool {
        is_dotted_in(&*self.y, x)
    }

    fn project(&self, x: &Y::Elem) -> Y::Elem {
        canonical_projection(&*self.y, x)
    }
}

/// `x * f < x`: the elements of an even chain with idempotent falsum whose
/// dotted copy is present.
pub fn in_split_subgroup<Y: Chain + ?Sized>(y: &Y, x: &Y::Elem) -> bool {
    y.compare(&y.mul(x, &y.falsum()), x) == Ordering::Less
}

/// Whether `x` is the dotted copy `c * f` of its own cover `c`.
pub fn is_dotted_in<Y: Chain + ?Sized>(y: &Y, x: &Y::Elem) -> bool {
    match y.cover(x, Direction::Up) {
        Some(c) => in_split_subgroup(y, &c) && y.mul(&c, &y.falsum()) == *x,
        None => false,
    }
}

/// The canonical projection: a dotted element goes to its cover.
pub fn canonical_projection<Y: Chain + ?Sized>(y: &Y, x: &Y::Elem) -> Y::Elem {
    match y.cover(x, Direction::Up) {
        Some(c) if in_split_subgroup(y, &c) && y.mul(&c, &y.falsum()) == *x => c,
        _ => x.clone(),
    }
}

/// The odd chain `Y` without its dotted elements, with the operations of
/// `Y` followed by the canonical projection.
#[derive(Debug, Clone)]
pub struct Unsplit<Y> {
    shape: Shape<Y>,
}

/// The subgroup `H = {x : x * f < x}` of [`Unsplit`].
#[derive(Debug, Clone)]
pub struct Pi2<Y> {
    shape: Shape<Y>,
}

/// Result of [`unsplit`]: the odd chain, its subgroup, and the canonical
/// homomorphism from `Y`.
#[derive(Debug, Clone)]
pub struct Unsplitting<Y> {
    pub chain: Unsplit<Y>,
    pub subgroup: Pi2<Y>,
}

pub fn unsplit<Y: Chain>(y: Y) -> Result<Unsplitting<Y>, ConvertError> {
    match classify_parity(&y) {
        Ok(Parity::EvenIdempotentFalsum) => {}
        Ok(Parity::EvenNonIdempotentFalsum) => {
            let f = y.falsum();
            return Err(ConvertError::FalsumNotIdempotent(format!("{f} * {f} = {}", y.mul(&f, &f))));
        }
        Ok(Parity::Odd) => return Err(ConvertError::NotEven(format!("t' = t = {}", y.unit()))),
        Err(e) => return Err(ConvertError::NotEven(e.to_string())),
    }
    let shape = Shape { y: Arc::new(y) };
    Ok(Unsplitting { chain: Unsplit { shape: shape.clone() }, subgroup: Pi2 { shape } })
}

impl<Y: Chain> Unsplitting<Y> {
    pub fn source(&self) -> &Y {
        &self.chain.shape.y
    }

    /// The canonical homomorphism `Y -> X`.
    pub fn canonical_hom(&self, x: &Y::Elem) -> Y::Elem {
        self.chain.shape.project(x)
    }

    pub fn is_dotted(&self, x: &Y::Elem) -> bool {
        self.chain.shape.is_dotted(x)
    }
}

impl<Y: Chain> Unsplit<Y> {
    pub fn source(&self) -> &Y {
        &self.shape.y
    }

    pub fn canonical_hom(&self, x: &Y::Elem) -> Y::Elem {
        self.shape.project(x)
    }
}

impl<Y: Chain> Chain for Unsplit<Y> {
    type Elem = Y::Elem;

    fn kind(&self) -> ChainKind {
        ChainKind::Unsplit
    }

    fn unit(&self) -> Y::Elem {
        self.shape.y.unit()
    }

    fn falsum(&self) -> Y::Elem {
        self.shape.y.unit()
    }

    fn contains(&self, x: &Y::Elem) -> bool {
        self.shape.y.contains(x) && !self.shape.is_dotted(x)
    }

    fn compare(&self, x: &Y::Elem, y: &Y::Elem) -> Ordering {
        self.shape.y.compare(x, y)
    }

    fn mul(&self, x: &Y::Elem, y: &Y::Elem) -> Y::Elem {
        self.shape.project(&self.shape.y.mul(x, y))
    }

    fn res(&self, x: &Y::Elem, y: &Y::Elem) -> Y::Elem {
        self.shape.project(&self.shape.y.res(x, y))
    }

    fn complement(&self, x: &Y::Elem) -> Y::Elem {
        self.res(x, &self.shape.y.unit())
    }

    fn cover(&self, x: &Y::Elem, dir: Direction) -> Option<Y::Elem> {
        let c = self.shape.y.cover(x, dir)?;
        if self.shape.is_dotted(&c) {
            self.shape.y.cover(&c, dir)
        } else {
            Some(c)
        }
    }

    fn sample(&self, rng: &mut dyn RngCore, window: i64) -> Y::Elem {
        self.shape.project(&self.shape.y.sample(rng, window))
    }

    fn slice(&self, radius: i64) -> Vec<Y::Elem> {
        self.shape.y.slice(radius).into_iter().filter(|x| !self.shape.is_dotted(x)).collect()
    }

    fn elements(&self) -> Option<Vec<Y::Elem>> {
        let all = self.shape.y.elements()?;
        Some(all.into_iter().filter(|x| !self.shape.is_dotted(x)).collect())
    }
}

impl<Y: Charted> Charted for Unsplit<Y> {
    fn rank_at(&self, unit: &Y::Elem) -> usize {
        self.shape.y.rank_at(unit)
    }

    fn point_at(&self, unit: &Y::Elem, g: &GroupElement) -> Y::Elem {
        self.shape.y.point_at(unit, g)
    }

    fn coords(&self, x: &Y::Elem) -> GroupElement {
        self.shape.y.coords(x)
    }
}

impl<Y: Chain> Subgroup<Y::Elem> for Pi2<Y> {
    fn contains(&self, x: &Y::Elem) -> bool {
        self.shape.y.contains(x) && !self.shape.is_dotted(x) && self.shape.in_h(x)
    }

    /// Rejection sampling through `Y`; dotted draws are mapped to their
    /// cover, which always lies in `H`.
    fn sample(&self, rng: &mut dyn RngCore, window: i64) -> Y::Elem {
        for _ in 0..64 {
            let s = self.shape.y.sample(rng, window);
            if self.shape.is_dotted(&s) {
                return self.shape.project(&s);
            }
            if self.shape.in_h(&s) {
                return s;
            }
        }
        self.shape.y.unit()
    }
}
