//! Bunches of layer algebras and their validator.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::RngCore;

use super::{BunchError, KappaIndex, LayerClass};
use crate::chain::{cancellativity_witness, check_embedding, classify_parity, discreteness_witness, Chain, Parity};
use crate::report::Report;
use crate::sampling::Sampling;

/// A layer homomorphism `rho^{u->v}`.
pub type LayerHom<E> = Arc<dyn Fn(&E) -> E + Send + Sync>;

/// Layers `X_u` indexed by `kappa` and homomorphisms `rho^{u->v}` for
/// every pair `u < v`.
pub struct BunchOfLayerAlgebras<L: Chain> {
    index: KappaIndex,
    layers: Vec<Arc<L>>,
    homs: BTreeMap<(usize, usize), LayerHom<L::Elem>>,
}

impl<L: Chain> Clone for BunchOfLayerAlgebras<L> {
    fn clone(&self) -> Self {
        BunchOfLayerAlgebras { index: self.index.clone(), layers: self.layers.clone(), homs: self.homs.clone() }
    }
}

impl<L: Chain> fmt::Debug for BunchOfLayerAlgebras<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BunchOfLayerAlgebras")
            .field("index", &self.index)
            .field("homs", &self.homs.keys().collect::<Vec<_>>())
            .finish_non_exhaustive()
    }
}

impl<L: Chain> BunchOfLayerAlgebras<L> {
    pub fn new(
        index: KappaIndex,
        layers: Vec<Arc<L>>,
        homs: BTreeMap<(usize, usize), LayerHom<L::Elem>>,
    ) -> Result<Self, BunchError> {
        let n = index.len();
        if layers.len() != n {
            return Err(BunchError::Structure(format!("{} layers for an index of size {n}", layers.len())));
        }
        for u in 0..n {
            for v in u + 1..n {
                if !homs.contains_key(&(u, v)) {
                    return Err(BunchError::Structure(format!(
                        "missing homomorphism {} -> {}",
                        index.label(u),
                        index.label(v)
                    )));
                }
            }
        }
        if let Some((u, v)) = homs.keys().find(|(u, v)| u >= v || *v >= n) {
            return Err(BunchError::Structure(format!("homomorphism over a non-increasing pair ({u}, {v})")));
        }
        Ok(BunchOfLayerAlgebras { index, layers, homs })
    }

    pub fn index(&self) -> &KappaIndex {
        &self.index
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn layer(&self, u: usize) -> &Arc<L> {
        &self.layers[u]
    }

    pub fn layers(&self) -> &[Arc<L>] {
        &self.layers
    }

    pub fn hom(&self, u: usize, v: usize) -> &LayerHom<L::Elem> {
        &self.homs[&(u, v)]
    }

    /// `rho^{u->v}(x)`, with `rho^{u->u}` the identity.
    pub fn apply(&self, u: usize, v: usize, x: &L::Elem) -> L::Elem {
        if u == v {
            x.clone()
        } else {
            (self.homs[&(u, v)])(x)
        }
    }

    /// Replaces one homomorphism (used to build deliberately broken bunches).
    pub fn set_hom(&mut self, u: usize, v: usize, hom: LayerHom<L::Elem>) -> Result<(), BunchError> {
        if u >= v || v >= self.len() {
            return Err(BunchError::Structure(format!("homomorphism over a non-increasing pair ({u}, {v})")));
        }
        self.homs.insert((u, v), hom);
        Ok(())
    }
}

fn layer_pool<L: Chain>(layer: &L, rng: &mut dyn RngCore, sampling: &Sampling) -> Vec<L::Elem> {
    let mut pool = vec![layer.unit(), layer.falsum()];
    pool.extend((0..sampling.samples).map(|_| layer.sample(rng, sampling.window)));
    pool
}

/// Checks the layer shapes required by each class, the direct system
/// property (A1), the collapse of `u` and `u'` under outgoing homomorphisms
/// of non-odd layers (A2), and that every `rho^{u->v}` preserves unit,
/// order, product and residual.
pub fn validate_bunch_algebras<L: Chain>(a: &BunchOfLayerAlgebras<L>, sampling: &Sampling) -> Report {
    let mut r = Report::new("bunch-algebras");
    let n = a.len();
    let idx = a.index();
    let mut pools = Vec::with_capacity(n);
    for u in 0..n {
        let layer = &a.layers[u];
        let label = idx.label(u);
        let mut rng = sampling.rng(0x6c6179 + u as u64);
        let pool = layer_pool(&**layer, &mut rng, sampling);
        check_layer_kind(label, idx.class(u), &**layer, &pool, sampling, &mut r);
        pools.push(pool);
    }
    for (u, pool) in pools.iter().enumerate() {
        for v in u + 1..n {
            let (lu, lv) = (idx.label(u), idx.label(v));
            let (xu, xv) = (&a.layers[u], &a.layers[v]);
            let ut = xu.unit();
            let image_unit = a.apply(u, v, &ut);
            r.check("hom-unit", image_unit == xv.unit(), || {
                format!("rho^{{{lu}->{lv}}}({ut}) = {image_unit}, unit of {lv} is {}", xv.unit())
            });
            if idx.class(u) != LayerClass::Omega {
                let uf = xu.falsum();
                let (a1, a2) = (a.apply(u, v, &ut), a.apply(u, v, &uf));
                r.check("A2", a1 == a2, || format!("rho^{{{lu}->{lv}}}: {ut} -> {a1} but {uf} -> {a2}"));
            }
            for (i, x) in pool.iter().enumerate() {
                let y = &pool[(i * 13 + 5) % pool.len()];
                let (px, py) = (a.apply(u, v, x), a.apply(u, v, y));
                r.check("hom-membership", xv.contains(&px), || format!("rho^{{{lu}->{lv}}}({x}) = {px} lies outside {lv}"));
                let (m, pm) = (a.apply(u, v, &xu.mul(x, y)), xv.mul(&px, &py));
                r.check("hom-product", m == pm, || format!("rho^{{{lu}->{lv}}}({x} * {y}) = {m}, product of images {pm}"));
                let (rs, prs) = (a.apply(u, v, &xu.res(x, y)), xv.res(&px, &py));
                r.check("hom-residual", rs == prs, || format!("rho^{{{lu}->{lv}}}({x} -> {y}) = {rs}, residual of images {prs}"));
                if xu.leq(x, y) {
                    r.check("hom-order", xv.leq(&px, &py), || format!("{x} <= {y} but images {px} > {py}"));
                }
                for w in v + 1..n {
                    let lw = idx.label(w);
                    let (two, one) = (a.apply(v, w, &px), a.apply(u, w, x));
                    r.check("A1", two == one, || {
                        format!("rho^{{{lv}->{lw}}}(rho^{{{lu}->{lv}}}({x})) = {two}, rho^{{{lu}->{lw}}}({x}) = {one}")
                    });
                }
            }
        }
    }
    r
}

fn check_layer_kind<L: Chain>(
    label: &str,
    class: LayerClass,
    layer: &L,
    pool: &[L::Elem],
    sampling: &Sampling,
    r: &mut Report,
) {
    let law = "layer-kind";
    let parity = classify_parity(layer);
    let cancellative = || cancellativity_witness(layer, sampling);
    match class {
        LayerClass::Omega => {
            r.check(law, parity == Ok(Parity::Odd), || format!("layer {label} ({class}) is not odd: {parity:?}"));
            if let Some(w) = cancellative() {
                r.fail(law, format!("layer {label} ({class}) is not cancellative: {w}"));
            }
        }
        LayerClass::Psi => {
            let even = matches!(parity, Ok(p) if p.is_even());
            r.check(law, even, || format!("layer {label} ({class}) is not even: {parity:?}"));
            if let Some(w) = discreteness_witness(layer, sampling) {
                r.fail(law, format!("layer {label} ({class}) is not discretely ordered: {w}"));
            }
            if let Some(w) = cancellative() {
                r.fail(law, format!("layer {label} ({class}) is not cancellative: {w}"));
            }
        }
        LayerClass::Theta => {
            let f = layer.falsum();
            r.check(law, parity == Ok(Parity::EvenIdempotentFalsum), || match parity {
                Ok(Parity::EvenNonIdempotentFalsum) => {
                    format!("layer {label} ({class}): falsum not idempotent, {f} * {f} = {}", layer.mul(&f, &f))
                }
                other => format!("layer {label} ({class}) is not even with idempotent falsum: {other:?}"),
            });
            for x in pool {
                let xc = layer.complement(x);
                let p = layer.mul(x, &xc);
                r.check(law, p == f, || format!("layer {label} ({class}): {x} * {xc} = {p}, falsum is {f}"));
            }
        }
    }
}

/// Compares two bunches over the same index shape: every layer pair must
/// be isomorphic through `embed`/`back`, and the homomorphisms must
/// commute with the embeddings.
pub fn compare_algebra_bunches<A, B, E, K>(
    a: &BunchOfLayerAlgebras<A>,
    b: &BunchOfLayerAlgebras<B>,
    embed: E,
    back: K,
    sampling: &Sampling,
) -> Report
where
    A: Chain,
    B: Chain,
    E: Fn(usize, &A::Elem) -> B::Elem,
    K: Fn(usize, &B::Elem) -> A::Elem,
{
    let mut r = Report::new("bunch-comparison");
    r.check("index", a.index().same_shape(b.index()), || format!("{} vs {}", a.index(), b.index()));
    if a.len() != b.len() {
        return r;
    }
    for u in 0..a.len() {
        let label = a.index().label(u);
        let iso = check_embedding(&*a.layers[u], &*b.layers[u], |x| embed(u, x), |y| back(u, y), sampling);
        r.merge_prefixed(&format!("layer {label}"), iso);
        let mut rng = sampling.rng(0x636d70 + u as u64);
        let pool = layer_pool(&*a.layers[u], &mut rng, sampling);
        for v in u + 1..a.len() {
            let lv = a.index().label(v);
            for x in &pool {
                let lhs = embed(v, &a.apply(u, v, x));
                let rhs = b.apply(u, v, &embed(u, x));
                r.check("homs", lhs == rhs, || format!("{label}->{lv} at {x}: {lhs} vs {rhs}"));
            }
        }
    }
    r
}
