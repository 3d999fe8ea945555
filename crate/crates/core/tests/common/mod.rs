#![allow(dead_code)]

use flechains::bunch::{BunchOfLayerGroups, Part};
use flechains::dsl::parse_bunch_dsl;
use flechains::{FiniteChainTable, OrderedGroup, Parity, Sampling};

pub const LAYERED: &str = include_str!("../../examples/data/layered.bunch");

pub const MIXED: &str = "\
xi = O
kappa = [t, u, v]
group t = Z^1
class u = I
group u = Z^2
subgroup u = prefix 1
class v = J
group v = Z^1
hom t->u = matrix [[1],[0]]
hom u->v = truncate 1
";

pub fn sampling() -> Sampling {
    Sampling::new(8, 500, 0x5eed)
}

pub fn s3() -> FiniteChainTable {
    FiniteChainTable::new(vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]], 1, 1).unwrap()
}

pub fn bunch(text: &str) -> BunchOfLayerGroups {
    parse_bunch_dsl(text).unwrap().to_bunch().unwrap()
}

/// Odd or even-idempotent Sugihara bunch with `layers` trivial layers.
pub fn sugihara(xi: Parity, layers: usize) -> BunchOfLayerGroups {
    BunchOfLayerGroups::trivial(xi, vec![Part::I; layers - 1])
}

/// Every bunch the round-trip checks run on, with a short name.
pub fn catalog() -> Vec<(String, BunchOfLayerGroups)> {
    let mut out = vec![
        ("iota(Z)".to_string(), BunchOfLayerGroups::single(OrderedGroup::integers(), Parity::Odd)),
        ("iota(Z^2)".to_string(), BunchOfLayerGroups::single(OrderedGroup::new(2), Parity::Odd)),
        ("iota(Z) shifted".to_string(), BunchOfLayerGroups::single(OrderedGroup::integers(), Parity::EvenNonIdempotentFalsum)),
        ("Sp(iota(Z), Z)".to_string(), BunchOfLayerGroups::single(OrderedGroup::integers(), Parity::EvenIdempotentFalsum)),
        ("layered".to_string(), bunch(LAYERED)),
        ("mixed".to_string(), bunch(MIXED)),
    ];
    for layers in 1..=3 {
        out.push((format!("odd Sugihara |kappa|={layers}"), sugihara(Parity::Odd, layers)));
        out.push((format!("even Sugihara |kappa|={layers}"), sugihara(Parity::EvenIdempotentFalsum, layers)));
    }
    out
}
