//! Bunches of layer groups and their validator.

use std::collections::BTreeMap;
use std::fmt;

use super::{xi_name, BunchError, KappaIndex, LayerClass, Part};
use crate::chain::Parity;
use crate::convert::{PrefixSubgroup, Subgroup, SubgroupSpec};
use crate::ogroup::{Direction, GroupElement, Homomorphism, OrderedGroup};
use crate::report::Report;
use crate::sampling::Sampling;

/// Groups `G_u` indexed by `kappa`, subgroups `H_u` for split layers, and
/// homomorphisms `sigma^{u->v}` for every pair `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BunchOfLayerGroups {
    index: KappaIndex,
    groups: Vec<OrderedGroup>,
    subgroups: Vec<Option<SubgroupSpec>>,
    homs: BTreeMap<(usize, usize), Homomorphism>,
}

impl BunchOfLayerGroups {
    /// Checks shapes only: one group per index, a subgroup exactly on split
    /// layers, and a homomorphism `G_u -> G_v` for each pair `u < v`.
    pub fn new(
        index: KappaIndex,
        groups: Vec<OrderedGroup>,
        subgroups: Vec<Option<SubgroupSpec>>,
        homs: BTreeMap<(usize, usize), Homomorphism>,
    ) -> Result<Self, BunchError> {
        let n = index.len();
        if groups.len() != n || subgroups.len() != n {
            return Err(BunchError::Structure(format!(
                "index has {n} labels but {} groups and {} subgroups were given",
                groups.len(),
                subgroups.len()
            )));
        }
        for u in 0..n {
            let label = index.label(u);
            match (index.class(u), subgroups[u]) {
                (LayerClass::Theta, None) => {
                    return Err(BunchError::Structure(format!("split layer {label} needs a subgroup")));
                }
                (LayerClass::Theta, Some(h)) => {
                    if h.prefix_len(groups[u].rank()) > groups[u].rank() {
                        return Err(BunchError::Structure(format!(
                            "subgroup {h} of layer {label} exceeds {}",
                            groups[u]
                        )));
                    }
                }
                (class, Some(_)) => {
                    return Err(BunchError::Structure(format!("layer {label} ({class}) cannot have a subgroup")));
                }
                (_, None) => {}
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let h = homs.get(&(u, v)).ok_or_else(|| {
                    BunchError::Structure(format!("missing homomorphism {} -> {}", index.label(u), index.label(v)))
                })?;
                if h.source() != groups[u] || h.target() != groups[v] {
                    return Err(BunchError::Structure(format!(
                        "homomorphism {} -> {} maps {} -> {}, expected {} -> {}",
                        index.label(u),
                        index.label(v),
                        h.source(),
                        h.target(),
                        groups[u],
                        groups[v]
                    )));
                }
            }
        }
        if let Some((u, v)) = homs.keys().find(|(u, v)| u >= v || *v >= n) {
            return Err(BunchError::Structure(format!("homomorphism over a non-increasing pair ({u}, {v})")));
        }
        Ok(BunchOfLayerGroups { index, groups, subgroups, homs })
    }

    /// One layer `G` with parity `xi`; `Theta` layers use the full subgroup.
    pub fn single(group: OrderedGroup, xi: Parity) -> Self {
        let index = KappaIndex::with_default_labels(vec![], xi);
        let sub = (index.class(0) == LayerClass::Theta).then_some(SubgroupSpec::Full);
        BunchOfLayerGroups::new(index, vec![group], vec![sub], BTreeMap::new()).expect("single layer is well formed")
    }

    /// Trivial groups everywhere: the Sugihara-style bunch for `xi` and the
    /// given I/J parts.
    pub fn trivial(xi: Parity, parts: Vec<Part>) -> Self {
        let index = KappaIndex::with_default_labels(parts, xi);
        let n = index.len();
        let subs = (0..n).map(|u| (index.class(u) == LayerClass::Theta).then_some(SubgroupSpec::Trivial)).collect();
        let g = OrderedGroup::trivial();
        let homs = pairs(n).map(|p| (p, Homomorphism::trivial(g, g))).collect();
        BunchOfLayerGroups::new(index, vec![g; n], subs, homs).expect("trivial bunch is well formed")
    }

    pub fn index(&self) -> &KappaIndex {
        &self.index
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn group(&self, u: usize) -> OrderedGroup {
        self.groups[u]
    }

    pub fn groups(&self) -> &[OrderedGroup] {
        &self.groups
    }

    pub fn subgroup_spec(&self, u: usize) -> Option<SubgroupSpec> {
        self.subgroups[u]
    }

    pub fn subgroup(&self, u: usize) -> Option<PrefixSubgroup> {
        let spec = self.subgroups[u]?;
        PrefixSubgroup::new(self.groups[u].rank(), spec.prefix_len(self.groups[u].rank())).ok()
    }

    pub fn hom(&self, u: usize, v: usize) -> &Homomorphism {
        &self.homs[&(u, v)]
    }

    pub fn homs(&self) -> &BTreeMap<(usize, usize), Homomorphism> {
        &self.homs
    }

    /// Replaces one homomorphism, keeping the shape checks.
    pub fn set_hom(&mut self, u: usize, v: usize, hom: Homomorphism) -> Result<(), BunchError> {
        if u >= v || v >= self.len() {
            return Err(BunchError::Structure(format!("homomorphism over a non-increasing pair ({u}, {v})")));
        }
        if hom.source() != self.groups[u] || hom.target() != self.groups[v] {
            return Err(BunchError::Structure(format!("homomorphism {hom} has the wrong shape")));
        }
        self.homs.insert((u, v), hom);
        Ok(())
    }

    /// Equality up to label names and the way subgroups and homomorphisms
    /// are written down.
    pub fn same_as(&self, other: &BunchOfLayerGroups) -> bool {
        self.index.same_shape(&other.index)
            && self.groups == other.groups
            && (0..self.len()).all(|u| self.subgroup(u) == other.subgroup(u))
            && self.homs.len() == other.homs.len()
            && self.homs.iter().all(|(k, h)| other.homs.get(k).is_some_and(|o| h.same_map(o)))
    }
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

impl fmt::Display for BunchOfLayerGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "xi = {}", xi_name(self.index.xi()))?;
        for u in 0..self.len() {
            let label = self.index.label(u);
            write!(f, "{label}: {} ({})", self.groups[u], self.index.class(u))?;
            if let Some(h) = self.subgroups[u] {
                write!(f, ", subgroup {h}")?;
            }
            writeln!(f)?;
        }
        for ((u, v), h) in &self.homs {
            writeln!(f, "{} -> {}: {h}", self.index.label(*u), self.index.label(*v))?;
        }
        Ok(())
    }
}

/// Checks discreteness of `Psi` groups, homomorphism shape and validity,
/// the direct system property (G1), that homomorphisms out of a `Psi`
/// layer identify `0` with its cocover (G2), and that homomorphisms into a
/// `Theta` layer land in its subgroup (G3).
pub fn validate_bunch_groups(g: &BunchOfLayerGroups, sampling: &Sampling) -> Report {
    let mut r = Report::new("bunch-groups");
    let n = g.len();
    let idx = g.index();
    for u in 0..n {
        if idx.class(u) == LayerClass::Psi {
            r.check("discrete", g.groups[u].is_discrete(), || {
                format!("layer {} is in Psi but {} is not discrete", idx.label(u), g.groups[u])
            });
        }
    }
    for (u, v) in pairs(n) {
        let (lu, lv) = (idx.label(u), idx.label(v));
        let h = g.hom(u, v);
        let hr = h.validate(sampling);
        r.check("hom-valid", hr.is_valid(), || {
            format!("{lu} -> {lv} ({h}): {}", hr.counterexamples.first().cloned().unwrap_or_default())
        });
        let src = g.groups[u];
        if idx.class(u) == LayerClass::Psi && src.is_discrete() {
            let zero = src.unit();
            let below = src.cover(&zero, Direction::Down).expect("discrete group");
            let (a, b) = (h.apply_unchecked(&zero), h.apply_unchecked(&below));
            r.check("G2", a == b, || format!("{lu} -> {lv}: 0 -> {a} but {below} -> {b}"));
        }
        let mut rng = sampling.rng(0x67 + (u * n + v) as u64);
        let mut pool = vec![src.unit()];
        pool.extend((0..src.rank()).map(|i| GroupElement::basis(src.rank(), i)));
        pool.extend((0..sampling.samples).map(|_| src.sample(&mut rng, sampling.window)));
        let target_h = g.subgroup(v);
        for a in &pool {
            let img = h.apply_unchecked(a);
            if let Some(hv) = &target_h {
                r.check("G3", hv.contains(&img), || format!("{lu} -> {lv}: {a} -> {img}, outside H_{lv}"));
            }
            for w in v + 1..n {
                let lw = idx.label(w);
                let two = g.hom(v, w).apply_unchecked(&img);
                let one = g.hom(u, w).apply_unchecked(a);
                r.check("G1", two == one, || {
                    format!("{lv} -> {lw} after {lu} -> {lv} sends {a} to {two}, {lu} -> {lw} sends it to {one}")
                });
            }
        }
    }
    r
}
