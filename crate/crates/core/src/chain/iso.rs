//! Sampled isomorphism checks between two chains.

use super::Chain;
use crate::report::Report;
use crate::sampling::Sampling;

/// Checks that `phi: A -> B` and `psi: B -> A` are mutually inverse
/// isomorphisms of involutive chains on samples drawn from both sides.
///
/// Laws: `inverse` on both sides, preservation of constants, order,
/// product, complement and residual by `phi`, and membership of images.
pub fn check_embedding<A, B, Phi, Psi>(a: &A, b: &B, phi: Phi, psi: Psi, sampling: &Sampling) -> Report
where
    A: Chain + ?Sized,
    B: Chain + ?Sized,
    Phi: Fn(&A::Elem) -> B::Elem,
    Psi: Fn(&B::Elem) -> A::Elem,
{
    let mut r = Report::new("isomorphism");
    let (ta, fa) = (a.unit(), a.falsum());
    let pt = phi(&ta);
    r.check("unit", pt == b.unit(), || format!("phi({ta}) = {pt}, unit is {}", b.unit()));
    let pf = phi(&fa);
    r.check("falsum", pf == b.falsum(), || format!("phi({fa}) = {pf}, falsum is {}", b.falsum()));

    let mut rng = sampling.rng(0x69736f);
    let mut pool_a = vec![ta.clone(), fa.clone()];
    let mut pool_b = vec![b.unit(), b.falsum()];
    for _ in 0..sampling.samples {
        pool_a.push(a.sample(&mut rng, sampling.window));
        pool_b.push(b.sample(&mut rng, sampling.window));
    }
    for y in &pool_b {
        let x = psi(y);
        let back = phi(&x);
        r.check("inverse-b", back == *y && a.contains(&x), || format!("{y} -> {x} -> {back}"));
        if a.contains(&x) {
            pool_a.push(x);
        }
    }
    let n = pool_a.len();
    for (i, x) in pool_a.iter().enumerate() {
        let px = phi(x);
        r.check("membership", b.contains(&px), || format!("phi({x}) = {px} is not in the target"));
        let back = psi(&px);
        r.check("inverse-a", back == *x, || format!("{x} -> {px} -> {back}"));
        let y = &pool_a[(i * 31 + 7) % n];
        let py = phi(y);
        let (oa, ob) = (a.compare(x, y), b.compare(&px, &py));
        r.check("order", oa == ob, || format!("{x} vs {y} is {oa:?}, images {px} vs {py} give {ob:?}"));
        let (m, pm) = (phi(&a.mul(x, y)), b.mul(&px, &py));
        r.check("product", m == pm, || format!("phi({x} * {y}) = {m}, phi({x}) * phi({y}) = {pm}"));
        let (cx, pcx) = (phi(&a.complement(x)), b.complement(&px));
        r.check("complement", cx == pcx, || format!("phi({x}') = {cx}, phi({x})' = {pcx}"));
        let (rs, prs) = (phi(&a.res(x, y)), b.res(&px, &py));
        r.check("residual", rs == prs, || format!("phi({x} -> {y}) = {rs}, images give {prs}"));
    }
    r
}
