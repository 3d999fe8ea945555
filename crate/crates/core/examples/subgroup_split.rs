//! Splitting an odd chain along a subgroup, and recovering both from the
//! even chain that results.
//!
//! `cargo run --example subgroup_split`

use flechains::convert::{iota_group_to_chain, split, unsplit, PrefixSubgroup, SplitElem, Subgroup};
use flechains::emit::emit_table;
use flechains::{Chain, GroupElement, OrderedGroup};

fn main() {
    let one = iota_group_to_chain(&OrderedGroup::trivial());
    let boolean = split(one, PrefixSubgroup::new(0, 0).unwrap()).expect("valid split");
    println!("splitting the one-element chain gives:\n{}", emit_table(&boolean, None).unwrap());

    let z2 = iota_group_to_chain(&OrderedGroup::new(2));
    let y = split(z2, PrefixSubgroup::new(2, 1).unwrap()).expect("valid split");
    let x = SplitElem::Plain(GroupElement::new(vec![2, 0]));
    let w = SplitElem::Plain(GroupElement::new(vec![0, 1]));
    println!("{x} * {x}' = {}", y.mul(&x, &y.complement(&x)));
    println!("{w} * {w}' = {}", y.mul(&w, &y.complement(&w)));
    println!("cover below {x}: {:?}", y.cover(&x, flechains::Direction::Down).map(|c| c.to_string()));

    let parts = unsplit(y).expect("even with idempotent falsum");
    for g in [vec![3, 0], vec![3, 1]] {
        let p = SplitElem::Plain(GroupElement::new(g));
        println!("{p} in recovered subgroup: {}", parts.subgroup.contains(&p));
    }
}
