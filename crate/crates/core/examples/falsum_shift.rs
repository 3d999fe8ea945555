//! Moving the falsum of an odd discrete chain one step down, and back.
//!
//! `cargo run --example falsum_shift`

use flechains::chain::{check_embedding, classify_parity};
use flechains::convert::{downshift, iota_group_to_chain, upshift};
use flechains::{Chain, GroupElement, OrderedGroup, Sampling};

fn main() {
    let z = iota_group_to_chain(&OrderedGroup::integers());
    let down = downshift(z.clone()).expect("odd, discrete and cancellative");
    println!("parity before: {:?}", classify_parity(&z));
    println!("parity after:  {:?}", classify_parity(&down));
    println!("new falsum: {}", down.falsum());
    for v in [-2, 0, 3] {
        let x = GroupElement::from(v);
        println!("complement of {x}: {} before, {} after", z.complement(&x), down.complement(&x));
    }

    let back = upshift(down).expect("even with a non-idempotent falsum");
    let id = |x: &GroupElement| x.clone();
    let report = check_embedding(&z, &back, id, id, &Sampling::default());
    println!("{}", report.summary_line());
}
