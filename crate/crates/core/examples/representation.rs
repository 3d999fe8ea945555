//! A layered bunch read from the text format, its chain, and the check
//! that the chain gives the bunch back.
//!
//! `cargo run --example representation`

use flechains::bunch::{derive_chain, groups_to_algebras, verify_main_theorem};
use flechains::dsl::parse_bunch_dsl;
use flechains::emit::emit_table;
use flechains::Sampling;

fn main() {
    let text = include_str!("data/layered.bunch");
    let bunch = parse_bunch_dsl(text).and_then(|d| d.to_bunch()).expect("well-formed description");
    println!("{bunch}");

    let chain = derive_chain(groups_to_algebras(&bunch).expect("valid bunch")).expect("well formed");
    println!("{}", emit_table(&chain, Some(1)).unwrap());

    let report = verify_main_theorem(&bunch, &Sampling::new(6, 200, 1));
    println!("{}", report.summary_line());
}
