//! Moving the falsum of a discrete cancellative chain one step down (odd to
//! even) or back up (even to odd). The residuated reduct is unchanged.

use std::cmp::Ordering;
use std::fmt;

use rand::RngCore;

use super::ConvertError;
use crate::chain::{cancellativity_witness, discreteness_witness, Chain, ChainKind, Charted};
use crate::ogroup::{Direction, GroupElement};
use crate::sampling::Sampling;

/// `X` with falsum `t_down`; the complement becomes `x -> (x')_down`.
#[derive(Debug, Clone)]
pub struct Downshift<C: Chain> {
    base: C,
    falsum: C::Elem,
}

/// `Y` with falsum `t`; the complement becomes `x -> (x')_up`.
#[derive(Debug, Clone)]
pub struct Upshift<C: Chain> {
    base: C,
}

fn check_discrete_cancellative<C: Chain>(c: &C, sampling: &Sampling) -> Result<(), ConvertError> {
    if let Some(w) = discreteness_witness(c, sampling) {
        return Err(ConvertError::NotDiscrete(w));
    }
    if let Some(w) = cancellativity_witness(c, sampling) {
        return Err(ConvertError::NotCancellative(w));
    }
    Ok(())
}

pub fn downshift<C: Chain>(base: C) -> Result<Downshift<C>, ConvertError> {
    downshift_with(base, &Sampling::default())
}

pub fn downshift_with<C: Chain>(base: C, sampling: &Sampling) -> Result<Downshift<C>, ConvertError> {
    let t = base.unit();
    let ct = base.complement(&t);
    if ct != t {
        return Err(ConvertError::NotOdd(format!("t' = {ct} differs from t = {t}")));
    }
    check_discrete_cancellative(&base, sampling)?;
    let falsum = base
        .cover(&t, Direction::Down)
        .ok_or_else(|| ConvertError::NotDiscrete(format!("{t} has no lower cover")))?;
    Ok(Downshift { base, falsum })
}

pub fn upshift<C: Chain>(base: C) -> Result<Upshift<C>, ConvertError> {
    upshift_with(base, &Sampling::default())
}

pub fn upshift_with<C: Chain>(base: C, sampling: &Sampling) -> Result<Upshift<C>, ConvertError> {
    let t = base.unit();
    let f = base.complement(&t);
    if f == t {
        return Err(ConvertError::NotEven(format!("t' = t = {t}")));
    }
    check_discrete_cancellative(&base, sampling)?;
    if base.cover(&f, Direction::Up).as_ref() != Some(&t) {
        return Err(ConvertError::NotEven(format!("t = {t} does not cover f = {f}")));
    }
    let ff = base.mul(&f, &f);
    if ff == f {
        return Err(ConvertError::FalsumIdempotent(format!("{f} * {f} = {f}")));
    }
    Ok(Upshift { base })
}

impl<C: Chain> Downshift<C> {
    pub fn base(&self) -> &C {
        &self.base
    }

    pub fn into_base(self) -> C {
        self.base
    }
}

impl<C: Chain> Upshift<C> {
    pub fn base(&self) -> &C {
        &self.base
    }

    pub fn into_base(self) -> C {
        self.base
    }
}

impl<C: Chain + fmt::Display> fmt::Display for Downshift<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "down({})", self.base)
    }
}

impl<C: Chain + fmt::Display> fmt::Display for Upshift<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "up({})", self.base)
    }
}

fn neighbor<C: Chain>(c: &C, x: &C::Elem, dir: Direction) -> C::Elem {
    c.cover(x, dir).expect("discrete chain element without a cover")
}

/// Everything except the falsum and complement is inherited from the base.
macro_rules! delegate_reduct {
    () => {
        fn unit(&self) -> C::Elem {
            self.base.unit()
        }
        fn contains(&self, x: &C::Elem) -> bool {
            self.base.contains(x)
        }
        fn compare(&self, x: &C::Elem, y: &C::Elem) -> Ordering {
            self.base.compare(x, y)
        }
        fn mul(&self, x: &C::Elem, y: &C::Elem) -> C::Elem {
            self.base.mul(x, y)
        }
        fn res(&self, x: &C::Elem, y: &C::Elem) -> C::Elem {
            self.base.res(x, y)
        }
        fn tau(&self, x: &C::Elem) -> C::Elem {
            self.base.tau(x)
        }
        fn cover(&self, x: &C::Elem, dir: Direction) -> Option<C::Elem> {
            self.base.cover(x, dir)
        }
        fn sample(&self, rng: &mut dyn RngCore, window: i64) -> C::Elem {
            self.base.sample(rng, window)
        }
        fn slice(&self, radius: i64) -> Vec<C::Elem> {
            self.base.slice(radius)
        }
        fn elements(&self) -> Option<Vec<C::Elem>> {
            self.base.elements()
        }
        fn cancellative_hint(&self) -> Option<bool> {
            self.base.cancellative_hint()
        }
    };
}

impl<C: Chain> Chain for Downshift<C> {
    type Elem = C::Elem;

    delegate_reduct!();

    fn kind(&self) -> ChainKind {
        ChainKind::Downshifted
    }

    fn falsum(&self) -> C::Elem {
        self.falsum.clone()
    }

    fn complement(&self, x: &C::Elem) -> C::Elem {
        neighbor(&self.base, &self.base.complement(x), Direction::Down)
    }
}

impl<C: Chain> Chain for Upshift<C> {
    type Elem = C::Elem;

    delegate_reduct!();

    fn kind(&self) -> ChainKind {
        ChainKind::Upshifted
    }

    fn falsum(&self) -> C::Elem {
        self.base.unit()
    }

    fn complement(&self, x: &C::Elem) -> C::Elem {
        neighbor(&self.base, &self.base.complement(x), Direction::Up)
    }
}

macro_rules! delegate_chart {
    ($ty:ident) => {
        impl<C: Charted> Charted for $ty<C> {
            fn rank_at(&self, unit: &C::Elem) -> usize {
                self.base.rank_at(unit)
            }
            fn point_at(&self, unit: &C::Elem, g: &GroupElement) -> C::Elem {
                self.base.point_at(unit, g)
            }
            fn coords(&self, x: &C::Elem) -> GroupElement {
                self.base.coords(x)
            }
        }
    };
}

delegate_chart!(Downshift);
delegate_chart!(Upshift);
