//! Executable laws of involutive FLe-chains and of the local unit `tau`.

use std::cmp::Ordering;

use rand::{Rng, RngCore};
use rayon::prelude::*;

use super::{classify_parity, Chain, Parity};
use crate::report::Report;
use crate::sampling::Sampling;

const WORKERS: u64 = 4;
const TERM_DEPTH: usize = 3;
const EXHAUSTIVE_TERMS: usize = 300;

/// Checks the chain laws on `sampling.samples` random tuples.
///
/// Sampling runs on a fixed number of workers with independent streams, and
/// their reports are merged in worker order, so the result only depends on
/// the seed.
pub fn run_law_suite<C: Chain + ?Sized>(c: &C, sampling: &Sampling) -> Report {
    let checker = Checker::new(c);
    let mut report = Report::new("laws");
    checker.global(&mut report);
    let per_worker = sampling.samples.div_ceil(WORKERS as usize);
    let parts: Vec<Report> = (0..WORKERS)
        .into_par_iter()
        .map(|w| {
            let mut rng = sampling.rng(0x6c617773 + w);
            let mut r = Report::new("laws");
            for i in 0..per_worker {
                if w as usize * per_worker + i >= sampling.samples {
                    break;
                }
                let [x, y, z, w2] = std::array::from_fn(|_| c.sample(&mut rng, sampling.window));
                checker.single(&x, &mut r);
                checker.pair(&x, &y, &mut r);
                checker.triple(&x, &y, &z, &mut r);
                checker.strict(&x, &y, &z, &w2, &mut r);
                let leaves = [x, y, z, w2];
                checker.term(&leaves, &mut rng, &mut r);
            }
            r
        })
        .collect();
    for p in parts {
        report.merge(p);
    }
    report
}

/// Checks every law on every tuple of a finite chain; `None` for infinite
/// carriers. Finite tables also compare the residual with a max-search.
pub fn run_law_suite_exhaustive<C: Chain + ?Sized>(c: &C) -> Option<Report> {
    let all = c.elements()?;
    let checker = Checker::new(c);
    let mut report = Report::new("laws-exhaustive");
    checker.global(&mut report);
    for x in &all {
        checker.single(x, &mut report);
        for y in &all {
            checker.pair(x, y, &mut report);
            let searched = all.iter().rev().find(|z| c.leq(&c.mul(x, z), y));
            report.check("residual-search", searched == Some(&c.res(x, y)), || {
                format!("{x} -> {y} = {} but max search gives {searched:?}", c.res(x, y))
            });
            for z in &all {
                checker.triple(x, y, z, &mut report);
            }
        }
    }
    for x in &all {
        for y in &all {
            for x1 in &all {
                for y1 in &all {
                    checker.strict(x, y, x1, y1, &mut report);
                }
            }
        }
    }
    let mut rng = Sampling::default().rng(0x7465726d);
    for _ in 0..EXHAUSTIVE_TERMS {
        let leaves: Vec<C::Elem> = (0..4).map(|_| all[rng.gen_range(0..all.len())].clone()).collect();
        checker.term(&leaves, &mut rng, &mut report);
    }
    Some(report)
}

struct Checker<'a, C: Chain + ?Sized> {
    c: &'a C,
    parity: Option<Parity>,
    t: C::Elem,
    f: C::Elem,
}

impl<'a, C: Chain + ?Sized> Checker<'a, C> {
    fn new(c: &'a C) -> Self {
        Checker { c, parity: classify_parity(c).ok(), t: c.unit(), f: c.falsum() }
    }

    fn global(&self, r: &mut Report) {
        let c = self.c;
        let ct = c.complement(&self.t);
        r.check("complement-of-unit", ct == self.f, || format!("t' = {ct}, f = {}", self.f));
        match classify_parity(c) {
            Ok(_) => r.pass("parity"),
            Err(e) => r.fail("parity", e.to_string()),
        }
    }

    fn single(&self, x: &C::Elem, r: &mut Report) {
        let c = self.c;
        let xc = c.complement(x);
        let xcc = c.complement(&xc);
        r.check("involutivity", xcc == *x, || format!("x = {x}, x'' = {xcc}"));
        let tx = c.tau(x);
        r.check("tau-complement", c.tau(&xc) == tx, || {
            format!("tau({x}) = {tx}, tau({xc}) = {}", c.tau(&xc))
        });
        let ok = c.leq(&self.t, &tx) && c.mul(&tx, &tx) == tx && c.mul(&tx, x) == *x;
        r.check("tau-positive-idempotent", ok, || format!("x = {x}, tau(x) = {tx}"));
        if c.leq(&self.t, x) {
            r.check("tau-bounded", c.leq(&tx, x), || format!("x = {x} >= t but tau(x) = {tx}"));
        }
        let tx2 = c.mul(&self.t, x);
        r.check("unit", tx2 == *x, || format!("t * {x} = {tx2}"));
    }

    fn pair(&self, x: &C::Elem, y: &C::Elem, r: &mut Report) {
        let c = self.c;
        let xy = c.mul(x, y);
        let yx = c.mul(y, x);
        r.check("commutativity", xy == yx, || format!("{x} * {y} = {xy}, {y} * {x} = {yx}"));
        let (oxy, oyx) = (c.compare(x, y), c.compare(y, x));
        r.check("total-order", oxy == oyx.reverse() && (oxy == Ordering::Equal) == (x == y), || {
            format!("compare({x}, {y}) = {oxy:?}, compare({y}, {x}) = {oyx:?}")
        });
        if c.leq(x, y) {
            let (xc, yc) = (c.complement(x), c.complement(y));
            r.check("complement-antitone", c.leq(&yc, &xc), || format!("{x} <= {y} but {y}' = {yc} > {x}' = {xc}"));
        }
        if c.leq(&self.f, &self.t) {
            let rhs = c.complement(&c.mul(&c.complement(x), &c.complement(y)));
            r.check("reflection", c.leq(&xy, &rhs), || format!("{x} * {y} = {xy} > (x' * y')' = {rhs}"));
        }
        if self.parity.is_some() {
            let (txy, tmax) = (c.tau(&xy), c.max_of(&c.tau(x), &c.tau(y)));
            r.check("tau-of-product", txy == tmax, || {
                format!("tau({x} * {y}) = {txy}, max of taus = {tmax}")
            });
        }
    }

    fn triple(&self, x: &C::Elem, y: &C::Elem, z: &C::Elem, r: &mut Report) {
        let c = self.c;
        let xy = c.mul(x, y);
        let xz = c.res(x, z);
        let lhs = c.leq(&xy, z);
        let rhs = c.leq(y, &xz);
        r.check("adjointness", lhs == rhs, || {
            format!("x = {x}, y = {y}, z = {z}: x*y = {xy}, x->z = {xz}, x*y<=z is {lhs}, y<=x->z is {rhs}")
        });
        let a = c.mul(&xy, z);
        let b = c.mul(x, &c.mul(y, z));
        r.check("associativity", a == b, || format!("({x}*{y})*{z} = {a}, {x}*({y}*{z}) = {b}"));
        if c.leq(x, y) {
            let (xz, yz) = (c.mul(x, z), c.mul(y, z));
            r.check("monotonicity", c.leq(&xz, &yz), || format!("{x} <= {y} but {x}*{z} = {xz} > {y}*{z} = {yz}"));
        }
    }

    /// Strict bi-monotonicity on two pairs, each ordered so the second
    /// element is the larger one.
    fn strict(&self, a: &C::Elem, b: &C::Elem, p: &C::Elem, q: &C::Elem, r: &mut Report) {
        if self.parity.is_none() {
            return;
        }
        let c = self.c;
        let order = |u: &C::Elem, v: &C::Elem| match c.compare(u, v) {
            Ordering::Less => Some((u.clone(), v.clone())),
            Ordering::Greater => Some((v.clone(), u.clone())),
            Ordering::Equal => None,
        };
        let (Some((x, x1)), Some((y, y1))) = (order(a, b), order(p, q)) else {
            return;
        };
        let (lo, hi) = (c.mul(&x, &y), c.mul(&x1, &y1));
        r.check("strict-bimonotonicity", c.compare(&lo, &hi) == Ordering::Less, || {
            format!("{x} < {x1}, {y} < {y1} but {x}*{y} = {lo} >= {x1}*{y1} = {hi}")
        });
    }

    fn term(&self, leaves: &[C::Elem], rng: &mut dyn RngCore, r: &mut Report) {
        if self.parity.is_none() {
            return;
        }
        let c = self.c;
        let mut used = Vec::new();
        let (value, text) = self.random_term(leaves, TERM_DEPTH, rng, &mut used);
        let expected = used.iter().fold(self.t.clone(), |m, l| c.max_of(&m, &c.tau(l)));
        let got = c.tau(&value);
        r.check("tau-of-terms", got == expected, || format!("tau({text}) = {got}, max tau of leaves = {expected}"));
    }

    fn random_term(
        &self,
        leaves: &[C::Elem],
        depth: usize,
        rng: &mut dyn RngCore,
        used: &mut Vec<C::Elem>,
    ) -> (C::Elem, String) {
        let c = self.c;
        if depth == 0 || rng.gen_range(0..4) == 0 {
            return match rng.gen_range(0..leaves.len() + 2) {
                i if i < leaves.len() => {
                    used.push(leaves[i].clone());
                    (leaves[i].clone(), leaves[i].to_string())
                }
                i if i == leaves.len() => (self.t.clone(), "t".into()),
                _ => (self.f.clone(), "f".into()),
            };
        }
        match rng.gen_range(0..3) {
            0 => {
                let (v, s) = self.random_term(leaves, depth - 1, rng, used);
                (c.complement(&v), format!("{s}'"))
            }
            1 => {
                let (a, sa) = self.random_term(leaves, depth - 1, rng, used);
                let (b, sb) = self.random_term(leaves, depth - 1, rng, used);
                (c.mul(&a, &b), format!("({sa} * {sb})"))
            }
            _ => {
                let (a, sa) = self.random_term(leaves, depth - 1, rng, used);
                let (b, sb) = self.random_term(leaves, depth - 1, rng, used);
                (c.res(&a, &b), format!("({sa} -> {sb})"))
            }
        }
    }
}
