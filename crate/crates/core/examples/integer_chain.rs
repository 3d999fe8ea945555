//! The odd chain of a lexicographic group, its operations and its laws.
//!
//! `cargo run --example integer_chain`

use flechains::chain::run_law_suite;
use flechains::convert::{iota_chain_to_group, iota_group_to_chain};
use flechains::{Chain, GroupElement, OrderedGroup, Sampling};

fn main() {
    let z2 = iota_group_to_chain(&OrderedGroup::new(2));
    let a = GroupElement::new(vec![1, -3]);
    let b = GroupElement::new(vec![0, 5]);
    println!("chain: {z2}");
    println!("{a} * {b} = {}", z2.mul(&a, &b));
    println!("{a} -> {b} = {}", z2.res(&a, &b));
    println!("complement of {a} = {}", z2.complement(&a));
    println!("tau({a}) = {}", z2.tau(&a));

    let report = run_law_suite(&z2, &Sampling::default());
    println!("{}", report.summary_line());

    let group = iota_chain_to_group(z2).expect("odd and cancellative");
    println!("recovered group: {}", group.ordered_group());
}
