//! Odd and even Sugihara chains from bunches of trivial groups.
//!
//! `cargo run --example sugihara`

use flechains::bunch::{derive_chain, groups_to_algebras, BunchOfLayerGroups, Part};
use flechains::emit::emit_table;
use flechains::Parity;

fn main() {
    for xi in [Parity::Odd, Parity::EvenIdempotentFalsum] {
        for layers in 1..=3 {
            let bunch = BunchOfLayerGroups::trivial(xi, vec![Part::I; layers - 1]);
            let chain = derive_chain(groups_to_algebras(&bunch).expect("valid bunch")).expect("well formed");
            println!("{xi}, {layers} layers");
            println!("{}", emit_table(&chain, None).unwrap());
        }
    }
}
