//! Moving between bunches of layer groups and bunches of layer algebras.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::groups::pairs;
use super::{
    validate_bunch_algebras, validate_bunch_groups, BunchError, BunchOfLayerAlgebras, BunchOfLayerGroups, GroupLayer,
    LayerClass, LayerHom,
};
use crate::chain::Charted;
use crate::convert::{iota_chain_to_group_with, unsplit, upshift_with, ConvertError, SplitElem, Subgroup, SubgroupSpec};
use crate::ogroup::{GroupElement, HomKind, Homomorphism, OrderedGroup};
use crate::report::Report;
use crate::sampling::Sampling;

fn violated_laws(r: &Report) -> String {
    let bad: Vec<String> =
        r.laws.iter().filter(|l| l.violations > 0).map(|l| format!("{} ({})", l.law, l.witnesses.join("; "))).collect();
    bad.join(", ")
}

/// Layers `iota(G_u)` for odd classes, `iota(G_u)` with its falsum moved
/// down for discrete even classes, and the split of `iota(G_u)` along
/// `H_u` for split classes. Every `rho^{u->v}` applies `sigma^{u->v}` to
/// the undotted payload.
pub fn groups_to_algebras(g: &BunchOfLayerGroups) -> Result<BunchOfLayerAlgebras<GroupLayer>, BunchError> {
    let report = validate_bunch_groups(g, &Sampling::default());
    if !report.passed() {
        return Err(BunchError::Invalid(violated_laws(&report)));
    }
    let idx = g.index();
    let mut layers = Vec::with_capacity(g.len());
    for u in 0..g.len() {
        let layer = GroupLayer::build(idx.class(u), g.group(u), g.subgroup(u))
            .map_err(|source| BunchError::Layer { layer: idx.label(u).to_string(), source })?;
        layers.push(Arc::new(layer));
    }
    let mut homs: BTreeMap<(usize, usize), LayerHom<SplitElem<GroupElement>>> = BTreeMap::new();
    for (u, v) in pairs(g.len()) {
        let h = g.hom(u, v).clone();
        homs.insert((u, v), Arc::new(move |x: &SplitElem<GroupElement>| SplitElem::Plain(h.apply_unchecked(x.payload()))));
    }
    BunchOfLayerAlgebras::new(idx.clone(), layers, homs)
}

/// Recovers the groups: `iota(X_u)` for odd layers, `iota` of the upshift
/// for discrete even layers, and `iota` of the two unsplit components for
/// split layers. Coordinates come from each layer's chart, which is
/// checked to be an isomorphism on samples; the homomorphisms are read off
/// on basis vectors and then checked on samples.
pub fn algebras_to_groups<L: Charted>(
    a: &BunchOfLayerAlgebras<L>,
    sampling: &Sampling,
) -> Result<BunchOfLayerGroups, BunchError> {
    let report = validate_bunch_algebras(a, sampling);
    if !report.passed() {
        return Err(BunchError::Invalid(violated_laws(&report)));
    }
    let idx = a.index();
    let mut groups = Vec::with_capacity(a.len());
    let mut subgroups = Vec::with_capacity(a.len());
    for u in 0..a.len() {
        let label = idx.label(u);
        let layer = Arc::clone(a.layer(u));
        let wrap = |source: ConvertError| BunchError::Layer { layer: label.to_string(), source };
        match idx.class(u) {
            LayerClass::Omega => {
                let g = iota_chain_to_group_with(layer, sampling).map_err(wrap)?;
                groups.push(charted_group(g.chain(), label, sampling)?);
                subgroups.push(None);
            }
            LayerClass::Psi => {
                let up = upshift_with(layer, sampling).map_err(wrap)?;
                let g = iota_chain_to_group_with(up, sampling).map_err(wrap)?;
                groups.push(charted_group(g.chain(), label, sampling)?);
                subgroups.push(None);
            }
            LayerClass::Theta => {
                let parts = unsplit(layer).map_err(wrap)?;
                let g = iota_chain_to_group_with(parts.chain.clone(), sampling).map_err(wrap)?;
                let group = charted_group(g.chain(), label, sampling)?;
                subgroups.push(Some(prefix_subgroup(g.chain(), &parts.subgroup, group, label, sampling)?));
                groups.push(group);
            }
        }
    }
    let mut homs = BTreeMap::new();
    for (u, v) in pairs(a.len()) {
        homs.insert((u, v), read_hom(a, u, v, groups[u], groups[v], sampling)?);
    }
    BunchOfLayerGroups::new(idx.clone(), groups, subgroups, homs)
}

fn point<C: Charted + ?Sized>(c: &C, g: &GroupElement) -> C::Elem {
    c.point_at(&c.unit(), g)
}

/// `Z^k` for the chart of an odd cancellative chain, after checking that
/// the chart is an order and product isomorphism on samples.
fn charted_group<C: Charted>(c: &C, label: &str, sampling: &Sampling) -> Result<OrderedGroup, BunchError> {
    let group = OrderedGroup::new(c.rank_at(&c.unit()));
    let fail = |what: String| Err(BunchError::Invalid(format!("chart of layer {label}: {what}")));
    if point(c, &group.unit()) != c.unit() {
        return fail(format!("0 is not sent to the unit {}", c.unit()));
    }
    let mut rng = sampling.rng(0x6368 + label.len() as u64);
    for _ in 0..sampling.samples {
        let (g, h) = (group.sample(&mut rng, sampling.window), group.sample(&mut rng, sampling.window));
        let (pg, ph) = (point(c, &g), point(c, &h));
        if !c.contains(&pg) || c.coords(&pg) != g {
            return fail(format!("{g} is sent to {pg}, which does not chart back"));
        }
        let sum = group.mul(&g, &h)?;
        if point(c, &sum) != c.mul(&pg, &ph) {
            return fail(format!("product of {g} and {h} is not preserved"));
        }
        if c.compare(&pg, &ph) != g.cmp(&h) {
            return fail(format!("order of {g} and {h} is not preserved"));
        }
        let x = c.sample(&mut rng, sampling.window);
        let back = point(c, &c.coords(&x));
        if back != x {
            return fail(format!("{x} charts to {back}"));
        }
    }
    Ok(group)
}

/// The subgroup of a split layer as a lex prefix `Z^j x 0`.
fn prefix_subgroup<C: Charted, S: Subgroup<C::Elem>>(
    c: &C,
    h: &S,
    group: OrderedGroup,
    label: &str,
    sampling: &Sampling,
) -> Result<SubgroupSpec, BunchError> {
    let k = group.rank();
    let j = (0..k).take_while(|&i| h.contains(&point(c, &GroupElement::basis(k, i)))).count();
    let mut rng = sampling.rng(0x7072 + label.len() as u64);
    for _ in 0..sampling.samples {
        let x = h.sample(&mut rng, sampling.window);
        let coords = c.coords(&x);
        if coords.coords()[j..].iter().any(|&v| v != 0) {
            return Err(BunchError::Invalid(format!(
                "subgroup of layer {label} contains {coords}, outside the prefix Z^{j}"
            )));
        }
        let mut g = group.sample(&mut rng, sampling.window).coords().to_vec();
        g[j..].iter_mut().for_each(|v| *v = 0);
        let g = GroupElement::new(g);
        if !h.contains(&point(c, &g)) {
            return Err(BunchError::Invalid(format!("subgroup of layer {label} misses {g}")));
        }
    }
    Ok(match j {
        0 => SubgroupSpec::Trivial,
        j if j == k => SubgroupSpec::Full,
        j => SubgroupSpec::Prefix(j),
    })
}

fn read_hom<L: Charted>(
    a: &BunchOfLayerAlgebras<L>,
    u: usize,
    v: usize,
    src: OrderedGroup,
    tgt: OrderedGroup,
    sampling: &Sampling,
) -> Result<Homomorphism, BunchError> {
    let (xu, xv) = (a.layer(u), a.layer(v));
    let image = |g: &GroupElement| xv.coords(&a.apply(u, v, &point(&**xu, g)));
    let (m, n) = (src.rank(), tgt.rank());
    let columns: Vec<GroupElement> = (0..m).map(|i| image(&GroupElement::basis(m, i))).collect();
    let rows = (0..n).map(|r| columns.iter().map(|c| c.coords()[r]).collect()).collect();
    let hom = Homomorphism::new(src, tgt, HomKind::Matrix(rows))?.normalized();
    let mut rng = sampling.rng(0x686f6d + (u * a.len() + v) as u64);
    for _ in 0..sampling.samples {
        let g = src.sample(&mut rng, sampling.window);
        let (got, want) = (image(&g), hom.apply_unchecked(&g));
        if got != want {
            return Err(BunchError::Invalid(format!(
                "homomorphism {} -> {} is not linear in coordinates: {g} goes to {got}, expected {want}",
                a.index().label(u),
                a.index().label(v)
            )));
        }
    }
    Ok(hom)
}
