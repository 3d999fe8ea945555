//! Brute-force enumeration of small finite involutive chains, and a cross
//! check of the enumeration against the chains derived from bunches of
//! trivial groups.
//!
//! On a finite chain the complement is an order-reversing involution and
//! so is forced to be `x -> n-1-x`. That pins the positions of `t` and `f`
//! for each parity. Since the only order automorphism of a finite chain is
//! the identity, distinct tables are distinct isomorphism classes.

use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::bunch::{derive_chain, decompose_chain, groups_to_algebras, validate_bunch_algebras, BunchOfLayerGroups, Part};
use crate::chain::{classify_parity, run_law_suite_exhaustive, Chain, FiniteChainTable, Parity};
use crate::report::Report;
use crate::sampling::Sampling;

/// Largest size the search accepts.
pub const MAX_SIZE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("chain size {0} is out of range 1..={MAX_SIZE}")]
    SizeOutOfRange(usize),
}

/// Size and optional parity filter (`None` means every parity).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    n: usize,
    parity: Option<Parity>,
}

impl SearchConfig {
    pub fn new(n: usize, parity: Option<Parity>) -> Result<Self, OracleError> {
        if n == 0 || n > MAX_SIZE {
            return Err(OracleError::SizeOutOfRange(n));
        }
        Ok(SearchConfig { n, parity })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> Option<Parity> {
        self.parity
    }

    /// The parities the filter admits.
    pub fn parities(&self) -> Vec<Parity> {
        match self.parity {
            Some(p) => vec![p],
            None => Parity::ALL.to_vec(),
        }
    }
}

/// `(t_pos, f_pos)` for a chain of size `n` with the given parity, or
/// `None` when no such chain can exist (odd parity needs odd `n`, even
/// parity needs even `n`).
pub fn positions(n: usize, parity: Parity) -> Option<(usize, usize)> {
    match (parity, n % 2) {
        (Parity::Odd, 1) => Some(((n - 1) / 2, (n - 1) / 2)),
        (Parity::EvenIdempotentFalsum | Parity::EvenNonIdempotentFalsum, 0) if n > 0 => Some((n / 2, n / 2 - 1)),
        _ => None,
    }
}

/// All chains of the configured size and parity, in lexicographic order of
/// their tables.
pub fn enumerate_finite_chains(cfg: &SearchConfig) -> Vec<FiniteChainTable> {
    let mut all: Vec<FiniteChainTable> = cfg.parities().into_iter().flat_map(|p| search(cfg.n, p)).collect();
    all.sort_by(|a, b| a.rows().cmp(b.rows()));
    all.dedup();
    all
}

fn search(n: usize, parity: Parity) -> Vec<FiniteChainTable> {
    let Some((t, f)) = positions(n, parity) else {
        return Vec::new();
    };
    let grid = Grid::new(n, t);
    let cells = grid.free_cells();
    let mut found: Vec<FiniteChainTable> = match cells.first() {
        None => grid.finish(f, parity).into_iter().collect(),
        Some(&(x, y)) => {
            let (lo, hi) = grid.bounds(x, y);
            (lo..=hi)
                .into_par_iter()
                .flat_map_iter(|v| {
                    let mut g = grid.clone();
                    let mut out = Vec::new();
                    if g.assign(x, y, v) {
                        g.extend(&cells[1..], f, parity, &mut out);
                    }
                    out
                })
                .collect()
        }
    };
    found.sort_by(|a, b| a.rows().cmp(b.rows()));
    found
}

/// A partially filled commutative table. Row 0 is fixed to 0 and row `t`
/// to the identity.
#[derive(Clone)]
struct Grid {
    n: usize,
    t: usize,
    cells: Vec<Option<usize>>,
}

impl Grid {
    fn new(n: usize, t: usize) -> Self {
        let mut g = Grid { n, t, cells: vec![None; n * n] };
        for y in 0..n {
            g.set(0, y, 0);
            g.set(t, y, y);
        }
        g
    }

    fn get(&self, x: usize, y: usize) -> Option<usize> {
        self.cells[x * self.n + y]
    }

    fn set(&mut self, x: usize, y: usize, v: usize) {
        self.cells[x * self.n + y] = Some(v);
        self.cells[y * self.n + x] = Some(v);
    }

    fn free_cells(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|x| (x..self.n).map(move |y| (x, y))).filter(|&(x, y)| self.get(x, y).is_none()).collect()
    }

    /// Range allowed by monotonicity against the filled neighbours.
    fn bounds(&self, x: usize, y: usize) -> (usize, usize) {
        let mut lo = 0;
        let mut hi = self.n - 1;
        for (a, b) in [(x.wrapping_sub(1), y), (x, y.wrapping_sub(1))] {
            if a < self.n && b < self.n {
                if let Some(v) = self.get(a, b) {
                    lo = lo.max(v);
                }
            }
        }
        for (a, b) in [(x + 1, y), (x, y + 1)] {
            if a < self.n && b < self.n {
                if let Some(v) = self.get(a, b) {
                    hi = hi.min(v);
                }
            }
        }
        (lo, hi)
    }

    /// Sets the cell and checks every fully determined associativity
    /// instance that could involve it.
    fn assign(&mut self, x: usize, y: usize, v: usize) -> bool {
        self.set(x, y, v);
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.get(a, b) else { continue };
                for c in 0..n {
                    let (Some(bc), Some(abc)) = (self.get(b, c), self.get(ab, c)) else { continue };
                    if let Some(a_bc) = self.get(a, bc) {
                        if a_bc != abc {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn extend(&mut self, rest: &[(usize, usize)], f: usize, parity: Parity, out: &mut Vec<FiniteChainTable>) {
        let Some((&(x, y), rest)) = rest.split_first() else {
            out.extend(self.finish(f, parity));
            return;
        };
        let (lo, hi) = self.bounds(x, y);
        for v in lo..=hi {
            let mut g = self.clone();
            if g.assign(x, y, v) {
                g.extend(rest, f, parity, out);
            }
        }
    }

    /// Accepts a complete table whose complement is an involution with
    /// the requested parity.
    fn finish(&self, f: usize, parity: Parity) -> Option<FiniteChainTable> {
        let n = self.n;
        let mul: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| self.get(x, y).unwrap_or(0)).collect()).collect();
        let table = FiniteChainTable::new(mul, self.t, f).ok()?;
        let involutive = (0..n).all(|x| table.complement(&table.complement(&x)) == x);
        (involutive && classify_parity(&table) == Ok(parity)).then_some(table)
    }
}

/// The table of a finite chain, positions following its order.
pub fn tabulate<C: Chain + ?Sized>(c: &C) -> Option<FiniteChainTable> {
    let mut all = c.elements()?;
    all.sort_by(|a, b| c.compare(a, b));
    let pos = |x: &C::Elem| all.iter().position(|y| y == x);
    let mul = all.iter().map(|x| all.iter().map(|y| pos(&c.mul(x, y))).collect::<Option<Vec<_>>>()).collect::<Option<_>>()?;
    FiniteChainTable::new(mul, pos(&c.unit())?, pos(&c.falsum())?).ok()
}

/// Tables of every valid bunch of trivial groups with at most `n` layers
/// whose derived chain has size `n` and the given parity, sorted.
pub fn catalog(n: usize, parity: Parity) -> Vec<FiniteChainTable> {
    let mut out = Vec::new();
    for layers in 1..=n {
        for mask in 0..1usize << (layers - 1) {
            let parts = (0..layers - 1).map(|i| if mask >> i & 1 == 0 { Part::I } else { Part::J }).collect();
            let bunch = BunchOfLayerGroups::trivial(parity, parts);
            let Ok(algebras) = groups_to_algebras(&bunch) else { continue };
            let Ok(derived) = derive_chain(algebras) else { continue };
            if let Some(table) = tabulate(&derived) {
                if table.n() == n && classify_parity(&table) == Ok(parity) {
                    out.push(table);
                }
            }
        }
    }
    out.sort_by(|a, b| a.rows().cmp(b.rows()));
    out
}

/// `n parity count`.
pub fn count_line(n: usize, parity: Parity, count: usize) -> String {
    format!("{n} {} {count}", parity.name())
}

/// Per-parity counts of an enumeration.
pub fn counts(n: usize, tables: &[FiniteChainTable]) -> Vec<(Parity, usize)> {
    Parity::ALL
        .iter()
        .filter(|p| positions(n, **p).is_some())
        .map(|&p| (p, tables.iter().filter(|t| classify_parity(*t) == Ok(p)).count()))
        .collect()
}

/// Outcome of a cross check: the enumerated tables, the report and one
/// count line per parity.
#[derive(Debug, Clone)]
pub struct CrossCheck {
    pub tables: Vec<FiniteChainTable>,
    pub report: Report,
    pub counts: Vec<(Parity, usize)>,
}

/// Every enumerated table passes the exhaustive law suite, decomposes into
/// a valid bunch and derives back to itself cell for cell; per parity, the
/// enumeration coincides with the bunch catalog.
pub fn cross_check(cfg: &SearchConfig) -> CrossCheck {
    let n = cfg.n;
    let tables = enumerate_finite_chains(cfg);
    let mut report = Report::new(format!("oracle n={n}"));
    let sampling = Sampling::default();
    for table in &tables {
        if let Some(laws) = run_law_suite_exhaustive(table) {
            let bad: Vec<&str> = laws.laws.iter().filter(|l| l.violations > 0).map(|l| l.law.as_str()).collect();
            report.check("exhaustive-laws", bad.is_empty(), || format!("{} violates {}", table.to_text(), bad.join(", ")));
        }
        let back = decompose_chain(Arc::new(table.clone()), &sampling).map_err(|e| e.to_string()).and_then(|a| {
            let v = validate_bunch_algebras(&a, &sampling);
            if !v.passed() {
                return Err(format!("decomposed bunch is invalid:\n{v}"));
            }
            let d = derive_chain(a).map_err(|e| e.to_string())?;
            tabulate(&d).ok_or_else(|| "derived chain is not finite".to_string())
        });
        match back {
            Ok(t) => report.check("round-trip", t == *table, || format!("{}rederived as\n{}", table.to_text(), t.to_text())),
            Err(e) => report.check("round-trip", false, || format!("{}{e}", table.to_text())),
        };
    }
    let found = counts(n, &tables);
    for p in cfg.parities() {
        if positions(n, p).is_none() {
            continue;
        }
        let mine: Vec<&FiniteChainTable> = tables.iter().filter(|t| classify_parity(*t) == Ok(p)).collect();
        let predicted = catalog(n, p);
        report.check("catalog-count", mine.len() == predicted.len(), || {
            format!("{}: enumerated {}, catalog predicts {}", p.name(), mine.len(), predicted.len())
        });
        let same = mine.iter().zip(&predicted).all(|(a, b)| *a == b);
        report.check("catalog-tables", same, || format!("{}: enumerated tables differ from the catalog", p.name()));
    }
    let counts = found.into_iter().filter(|(p, _)| cfg.parities().contains(p)).collect();
    CrossCheck { tables, report, counts }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteChainTable {
        FiniteChainTable::new(vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]], 1, 1).unwrap()
    }

    #[test]
    fn sizes_out_of_range_are_rejected() {
        assert_eq!(SearchConfig::new(0, None), Err(OracleError::SizeOutOfRange(0)));
        assert_eq!(SearchConfig::new(9, None), Err(OracleError::SizeOutOfRange(9)));
    }

    #[test]
    fn positions_are_forced() {
        assert_eq!(positions(5, Parity::Odd), Some((2, 2)));
        assert_eq!(positions(6, Parity::EvenIdempotentFalsum), Some((3, 2)));
        assert_eq!(positions(4, Parity::Odd), None);
        assert_eq!(positions(3, Parity::EvenNonIdempotentFalsum), None);
    }

    #[test]
    fn small_odd_chains() {
        let one = enumerate_finite_chains(&SearchConfig::new(1, Some(Parity::Odd)).unwrap());
        assert_eq!(one, vec![FiniteChainTable::new(vec![vec![0]], 0, 0).unwrap()]);
        let three = enumerate_finite_chains(&SearchConfig::new(3, Some(Parity::Odd)).unwrap());
        assert_eq!(three, vec![s3()]);
    }

    #[test]
    fn no_small_even_chain_has_a_non_idempotent_falsum() {
        for n in [2, 4, 6] {
            let cfg = SearchConfig::new(n, Some(Parity::EvenNonIdempotentFalsum)).unwrap();
            assert!(enumerate_finite_chains(&cfg).is_empty());
        }
    }

    #[test]
    fn catalog_matches_sugihara_sizes() {
        assert_eq!(catalog(3, Parity::Odd), vec![s3()]);
        assert_eq!(catalog(4, Parity::EvenIdempotentFalsum).len(), 1);
        assert!(catalog(4, Parity::Odd).is_empty());
        assert!(catalog(4, Parity::EvenNonIdempotentFalsum).is_empty());
    }

    #[test]
    fn cross_check_small_sizes() {
        for n in 1..=5 {
            let c = cross_check(&SearchConfig::new(n, None).unwrap());
            assert!(c.report.passed(), "{}", c.report);
            assert_eq!(c.tables.len(), 1);
        }
    }

    #[test]
    fn count_lines() {
        assert_eq!(count_line(3, Parity::Odd, 1), "3 odd 1");
    }
}
