//! Finite chains given by an explicit multiplication table over positions
//! `0 < 1 < ... < n-1`.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, RngCore};
use thiserror::Error;

use super::{Chain, ChainKind, Charted};
use crate::ogroup::{Direction, GroupElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct TableError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl TableError {
    fn at(line: usize, col: usize, msg: impl Into<String>) -> Self {
        TableError { line, col, msg: msg.into() }
    }
}

/// A finite chain on positions `0..n` with product table `mul`.
///
/// The complement is derived as `x' = max{z : x * z <= f}`; construction
/// only checks shape, not the chain axioms (the law suite does that).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteChainTable {
    mul: Vec<Vec<usize>>,
    t: usize,
    f: usize,
    comp: Vec<usize>,
    tau: Vec<usize>,
}

impl FiniteChainTable {
    pub fn new(mul: Vec<Vec<usize>>, t: usize, f: usize) -> Result<Self, TableError> {
        let n = mul.len();
        if n == 0 {
            return Err(TableError::at(1, 1, "table must have at least one element"));
        }
        if t >= n || f >= n {
            return Err(TableError::at(1, 1, format!("t and f must be positions below {n}")));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(TableError::at(i + 2, 1, format!("row has {} entries, expected {n}", row.len())));
            }
            if let Some(j) = row.iter().position(|&v| v >= n) {
                return Err(TableError::at(i + 2, j + 1, format!("entry {} is not a position below {n}", row[j])));
            }
        }
        let comp: Vec<usize> =
            (0..n).map(|x| (0..n).rev().find(|&z| mul[x][z] <= f).unwrap_or(0)).collect();
        let tau = (0..n).map(|x| comp[mul[x][comp[x]]]).collect();
        Ok(FiniteChainTable { mul, t, f, comp, tau })
    }

    pub fn n(&self) -> usize {
        self.mul.len()
    }

    pub fn t_pos(&self) -> usize {
        self.t
    }

    pub fn f_pos(&self) -> usize {
        self.f
    }

    pub fn cell(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.mul
    }

    /// A copy with the single cell `(x, y)` overwritten.
    pub fn with_cell(&self, x: usize, y: usize, value: usize) -> Result<Self, TableError> {
        let mut mul = self.mul.clone();
        mul[x][y] = value;
        FiniteChainTable::new(mul, self.t, self.f)
    }

    /// `max{z : x * z <= y}` by search, `None` if no such `z` exists.
    pub fn res_by_search(&self, x: usize, y: usize) -> Option<usize> {
        (0..self.n()).rev().find(|&z| self.mul[x][z] <= y)
    }

    /// Parses `n t f` followed by `n` rows of `n` positions. Blank lines and
    /// `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines.next().ok_or_else(|| TableError::at(1, 1, "empty table"))?;
        let head = numbers(hline, header)?;
        let [n, t, f] = head[..] else {
            return Err(TableError::at(hline, 1, "header must be `n t_pos f_pos`"));
        };
        let mut rows = Vec::with_capacity(n);
        let mut last = hline;
        for _ in 0..n {
            let (ln, l) = lines
                .next()
                .ok_or_else(|| TableError::at(last + 1, 1, format!("expected {n} table rows")))?;
            let row = numbers(ln, l)?;
            if row.len() != n {
                return Err(TableError::at(ln, 1, format!("row has {} entries, expected {n}", row.len())));
            }
            if let Some(j) = row.iter().position(|&v| v >= n) {
                return Err(TableError::at(ln, col_of(l, j), format!("entry {} is not a position below {n}", row[j])));
            }
            rows.push(row);
            last = ln;
        }
        if let Some((ln, _)) = lines.next() {
            return Err(TableError::at(ln, 1, "unexpected content after the table"));
        }
        if t >= n || f >= n {
            return Err(TableError::at(hline, 1, format!("t and f must be positions below {n}")));
        }
        FiniteChainTable::new(rows, t, f)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.n(), self.t, self.f);
        for row in &self.mul {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, TableError> {
    let mut out = Vec::new();
    let mut col = 1;
    for part in text.split(' ') {
        for tok in part.split('\t') {
            if !tok.is_empty() {
                let v = tok
                    .parse()
                    .map_err(|_| TableError::at(line, col, format!("expected a position, found `{tok}`")))?;
                out.push(v);
            }
            col += tok.chars().count() + 1;
        }
    }
    Ok(out)
}

fn col_of(text: &str, index: usize) -> usize {
    let mut seen = 0;
    let mut in_tok = false;
    for (i, ch) in text.chars().enumerate() {
        if ch.is_whitespace() {
            in_tok = false;
        } else if !in_tok {
            if seen == index {
                return i + 1;
            }
            seen += 1;
            in_tok = true;
        }
    }
    1
}

impl fmt::Display for FiniteChainTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Chain for FiniteChainTable {
    type Elem = usize;

    fn kind(&self) -> ChainKind {
        ChainKind::FiniteTable
    }

    fn unit(&self) -> usize {
        self.t
    }

    fn falsum(&self) -> usize {
        self.f
    }

    fn contains(&self, x: &usize) -> bool {
        *x < self.n()
    }

    fn compare(&self, x: &usize, y: &usize) -> Ordering {
        x.cmp(y)
    }

    fn mul(&self, x: &usize, y: &usize) -> usize {
        self.mul[*x][*y]
    }

    fn complement(&self, x: &usize) -> usize {
        self.comp[*x]
    }

    fn tau(&self, x: &usize) -> usize {
        self.tau[*x]
    }

    fn cover(&self, x: &usize, dir: Direction) -> Option<usize> {
        match dir {
            Direction::Up => (x + 1 < self.n()).then_some(x + 1),
            Direction::Down => x.checked_sub(1),
        }
    }

    fn sample(&self, rng: &mut dyn RngCore, _window: i64) -> usize {
        rng.gen_range(0..self.n())
    }

    fn slice(&self, _radius: i64) -> Vec<usize> {
        (0..self.n()).collect()
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.n()).collect())
    }

    fn cancellative_hint(&self) -> Option<bool> {
        let n = self.n();
        Some((0..n).all(|x| (0..n).all(|z| self.res(&z, &self.mul[x][z]) == x)))
    }

    fn layer_units(&self) -> Vec<usize> {
        let mut units = self.tau.clone();
        units.sort_unstable();
        units.dedup();
        units
    }

    fn sample_layer(&self, unit: &usize, rng: &mut dyn RngCore, _window: i64) -> usize {
        let members: Vec<usize> = (0..self.n()).filter(|x| self.tau[*x] == *unit).collect();
        if members.is_empty() {
            *unit
        } else {
            members[rng.gen_range(0..members.len())]
        }
    }

    fn layer_cover(&self, x: &usize, dir: Direction) -> Option<usize> {
        let u = self.tau[*x];
        match dir {
            Direction::Up => (x + 1..self.n()).find(|y| self.tau[*y] == u),
            Direction::Down => (0..*x).rev().find(|y| self.tau[*y] == u),
        }
    }
}

/// Every layer of a finite chain has the trivial group as its group part.
impl Charted for FiniteChainTable {
    fn rank_at(&self, _unit: &usize) -> usize {
        0
    }

    fn point_at(&self, unit: &usize, _g: &GroupElement) -> usize {
        *unit
    }

    fn coords(&self, _x: &usize) -> GroupElement {
        GroupElement::zero(0)
    }
}
