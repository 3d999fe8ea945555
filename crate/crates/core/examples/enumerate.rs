//! Every finite chain up to eight elements, checked against the chains of
//! bunches of trivial groups.
//!
//! `cargo run --release --example enumerate`

use flechains::oracle::{count_line, cross_check, SearchConfig};

fn main() {
    for n in 1..=8 {
        let result = cross_check(&SearchConfig::new(n, None).unwrap());
        for (parity, count) in &result.counts {
            println!("{}", count_line(n, *parity, *count));
        }
        if !result.report.passed() {
            println!("{}", result.report);
        }
    }
    let five = cross_check(&SearchConfig::new(5, None).unwrap());
    println!("\nthe only five-element chain:\n{}", five.tables[0].to_text());
}
