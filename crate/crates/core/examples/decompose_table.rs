//! Reading a finite chain table, splitting it into layers and recovering
//! its bunch of layer groups.
//!
//! `cargo run --example decompose_table`

use std::sync::Arc;

use flechains::bunch::{algebras_to_groups, decompose_chain};
use flechains::dsl::BunchDocument;
use flechains::{Chain, FiniteChainTable, Sampling};

fn main() {
    let table = FiniteChainTable::parse(include_str!("data/s3.table")).expect("well-formed table");
    let sampling = Sampling::default();
    let bunch = decompose_chain(Arc::new(table), &sampling).expect("odd involutive chain");
    for u in 0..bunch.len() {
        let layer = bunch.layer(u);
        println!(
            "layer {} ({}): unit {}, elements {:?}",
            bunch.index().label(u),
            bunch.index().class(u),
            layer.unit(),
            layer.elements().unwrap()
        );
    }
    let groups = algebras_to_groups(&bunch, &sampling).expect("recoverable");
    print!("{}", BunchDocument::from_bunch(&groups));
}
