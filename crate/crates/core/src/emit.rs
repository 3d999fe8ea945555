//! Printing a chain, or a window of it, as an annotated product table.
//!
//! The output starts with one comment line per element (position, element,
//! layer index, `tau`, complement) and is followed by a table in the
//! [`FiniteChainTable`](crate::chain::FiniteChainTable) text format. A
//! product that falls outside the window is written `<` or `>` depending on
//! the side it falls on, so only windows closed under products parse back
//! as tables. When `t` or `f` lies outside the window, the header shows `-`.

use std::cmp::Ordering;
use std::fmt::Write as _;

use thiserror::Error;

use crate::chain::Chain;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmitError {
    #[error("window radius {0} selects no elements")]
    EmptyWindow(i64),
    #[error("the carrier is infinite; give a window radius")]
    NeedsWindow,
}

/// The carrier (or its slice of radius `window`) in ascending order.
pub fn carrier<C: Chain + ?Sized>(c: &C, window: Option<i64>) -> Result<Vec<C::Elem>, EmitError> {
    let mut all = match (window, c.elements()) {
        (Some(r), _) if r < 0 => return Err(EmitError::EmptyWindow(r)),
        (None, Some(all)) => all,
        (None, None) => return Err(EmitError::NeedsWindow),
        (Some(r), _) => c.slice(r),
    };
    if all.is_empty() {
        return Err(EmitError::EmptyWindow(window.unwrap_or(0)));
    }
    all.sort_by(|a, b| c.compare(a, b));
    all.dedup();
    Ok(all)
}

pub fn emit_table<C: Chain + ?Sized>(c: &C, window: Option<i64>) -> Result<String, EmitError> {
    let all = carrier(c, window)?;
    let units = c.layer_units();
    let shown = |x: &C::Elem| x.to_string();
    let names: Vec<String> = all.iter().map(shown).collect();
    let wide = names.iter().map(String::len).max().unwrap_or(1).max("element".len());
    let mut out = String::new();
    let _ = writeln!(out, "# {} elements in ascending order", all.len());
    let _ = writeln!(out, "# {:>3}  {:<wide$}  {:>5}  {:<wide$}  complement", "pos", "element", "layer", "tau");
    for (i, x) in all.iter().enumerate() {
        let tau = c.tau(x);
        let layer = units.iter().position(|u| *u == tau).map_or("?".to_string(), |l| l.to_string());
        let comp = c.complement(x);
        let _ = writeln!(out, "# {i:>3}  {:<wide$}  {layer:>5}  {:<wide$}  {}", names[i], shown(&tau), shown(&comp));
    }
    let locate = |x: &C::Elem| -> String {
        if let Some(p) = all.iter().position(|y| y == x) {
            return p.to_string();
        }
        if c.compare(x, &all[0]) == Ordering::Less {
            "<".into()
        } else {
            ">".into()
        }
    };
    let pos_or_dash = |x: &C::Elem| all.iter().position(|y| y == x).map_or("-".to_string(), |p| p.to_string());
    let _ = writeln!(out, "{} {} {}", all.len(), pos_or_dash(&c.unit()), pos_or_dash(&c.falsum()));
    for x in &all {
        let row: Vec<String> = all.iter().map(|y| locate(&c.mul(x, y))).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    Ok(out)
}
