//! A line-oriented text format for bunches of layer groups.
//!
//! ```text
//! # odd Sugihara chain with three elements
//! xi = O
//! kappa = [t, u]
//! group t = Z^0
//! class u = I
//! group u = Z^0
//! subgroup u = trivial
//! hom t->u = trivial
//! ```
//!
//! Lines may come in any order. Each key may appear only once. A pair
//! missing its `hom` line gets the composite through an intermediate label
//! when both halves are known, or the trivial map when either group has
//! rank 0.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::bunch::{xi_from_name, xi_name, BunchOfLayerGroups, KappaIndex, LayerClass, Part};
use crate::chain::Parity;
use crate::convert::SubgroupSpec;
use crate::ogroup::{HomKind, Homomorphism, OrderedGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate key `{0}`")]
    DuplicateKey(String),
    #[error("hom over non-increasing pair {0}->{1}")]
    NonIncreasingPair(String, String),
    #[error("{0}")]
    Structure(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub kind: DslErrorKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
struct Pos {
    line: usize,
    col: usize,
}

impl Pos {
    fn err(self, kind: DslErrorKind) -> DslError {
        DslError { line: self.line.max(1), col: self.col.max(1), kind }
    }
}

/// A parsed bunch description, as written (missing homomorphisms stay
/// missing until [`BunchDocument::to_bunch`]).
///
/// Equality ignores where in the source each entry came from.
#[derive(Debug, Clone)]
pub struct BunchDocument {
    pub xi: Parity,
    pub kappa: Vec<String>,
    pub classes: BTreeMap<String, Part>,
    pub groups: BTreeMap<String, usize>,
    pub subgroups: BTreeMap<String, SubgroupSpec>,
    pub homs: BTreeMap<(String, String), HomKind>,
    spans: BTreeMap<String, Pos>,
}

impl PartialEq for BunchDocument {
    fn eq(&self, other: &Self) -> bool {
        self.xi == other.xi
            && self.kappa == other.kappa
            && self.classes == other.classes
            && self.groups == other.groups
            && self.subgroups == other.subgroups
            && self.homs == other.homs
    }
}

impl Eq for BunchDocument {}

/// Parses a description and checks that it denotes a well-formed bunch.
pub fn parse_bunch_dsl(text: &str) -> Result<BunchDocument, DslError> {
    let mut raw = Raw::default();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let mut cur = Cursor::new(i + 1, body);
        cur.skip_ws();
        if cur.at_end() {
            continue;
        }
        raw.statement(&mut cur)?;
    }
    let doc = raw.resolve()?;
    doc.to_bunch()?;
    Ok(doc)
}

impl BunchDocument {
    /// A description that parses back to `g`, with every entry explicit.
    pub fn from_bunch(g: &BunchOfLayerGroups) -> Self {
        let idx = g.index();
        let label = |u: usize| idx.label(u).to_string();
        BunchDocument {
            xi: idx.xi(),
            kappa: idx.labels().to_vec(),
            classes: (1..g.len()).map(|u| (label(u), idx.parts()[u - 1])).collect(),
            groups: (0..g.len()).map(|u| (label(u), g.group(u).rank())).collect(),
            subgroups: (0..g.len()).filter_map(|u| g.subgroup_spec(u).map(|h| (label(u), h))).collect(),
            homs: g.homs().iter().map(|(&(u, v), h)| ((label(u), label(v)), h.kind().clone())).collect(),
            spans: BTreeMap::new(),
        }
    }

    fn at(&self, key: &str) -> Pos {
        self.spans.get(key).copied().unwrap_or(Pos { line: 1, col: 1 })
    }

    /// The bunch of layer groups, with omitted homomorphisms filled in.
    pub fn to_bunch(&self) -> Result<BunchOfLayerGroups, DslError> {
        let structure = |key: &str, msg: String| self.at(key).err(DslErrorKind::Structure(msg));
        let mut parts = Vec::new();
        for l in &self.kappa[1..] {
            match self.classes.get(l) {
                Some(p) => parts.push(*p),
                None => return Err(structure(&format!("label {l}"), format!("label {l} has no `class` line"))),
            }
        }
        let index = KappaIndex::new(self.kappa.clone(), parts, self.xi)
            .map_err(|e| structure("kappa", e.to_string()))?;
        let mut groups = Vec::new();
        let mut subgroups = Vec::new();
        for (u, l) in self.kappa.iter().enumerate() {
            let Some(&rank) = self.groups.get(l) else {
                return Err(structure(&format!("label {l}"), format!("label {l} has no `group` line")));
            };
            groups.push(OrderedGroup::new(rank));
            let sub = self.subgroups.get(l).copied();
            match (index.class(u), sub) {
                (LayerClass::Theta, None) => {
                    return Err(structure(&format!("label {l}"), format!("split layer {l} needs a `subgroup` line")));
                }
                (LayerClass::Theta, Some(h)) if h.prefix_len(rank) > rank => {
                    return Err(structure(&format!("subgroup {l}"), format!("{h} does not fit in Z^{rank}")));
                }
                (class, Some(_)) if class != LayerClass::Theta => {
                    return Err(structure(&format!("subgroup {l}"), format!("layer {l} ({class}) is not split")));
                }
                _ => {}
            }
            subgroups.push(sub);
        }
        let n = self.kappa.len();
        let mut homs: BTreeMap<(usize, usize), Homomorphism> = BTreeMap::new();
        for gap in 1..n {
            for u in 0..n - gap {
                let v = u + gap;
                let key = (self.kappa[u].clone(), self.kappa[v].clone());
                let name = format!("hom {}->{}", key.0, key.1);
                let hom = if let Some(kind) = self.homs.get(&key) {
                    Homomorphism::new(groups[u], groups[v], kind.clone()).map_err(|e| structure(&name, e.to_string()))?
                } else if let Some(h) =
                    (u + 1..v).find_map(|w| homs[&(u, w)].then(&homs[&(w, v)]).ok())
                {
                    h
                } else if groups[u].rank() == 0 || groups[v].rank() == 0 {
                    Homomorphism::trivial(groups[u], groups[v])
                } else {
                    return Err(structure("kappa", format!("missing `{name}` and it is not forced")));
                };
                homs.insert((u, v), hom);
            }
        }
        BunchOfLayerGroups::new(index, groups, subgroups, homs).map_err(|e| structure("kappa", e.to_string()))
    }

    /// Canonical text: `xi`, `kappa`, then per label its class, group and
    /// subgroup, then the homomorphisms that were given.
    pub fn to_dsl(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "xi = {}", xi_name(self.xi));
        let _ = writeln!(s, "kappa = [{}]", self.kappa.join(", "));
        for l in &self.kappa {
            if let Some(p) = self.classes.get(l) {
                let _ = writeln!(s, "class {l} = {}", part_name(*p));
            }
            if let Some(k) = self.groups.get(l) {
                let _ = writeln!(s, "group {l} = Z^{k}");
            }
            if let Some(h) = self.subgroups.get(l) {
                let _ = writeln!(s, "subgroup {l} = {h}");
            }
        }
        for u in &self.kappa {
            for v in &self.kappa {
                if let Some(kind) = self.homs.get(&(u.clone(), v.clone())) {
                    let _ = writeln!(s, "hom {u}->{v} = {kind}");
                }
            }
        }
        s
    }
}

impl fmt::Display for BunchDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dsl())
    }
}

fn part_name(p: Part) -> &'static str {
    match p {
        Part::I => "I",
        Part::J => "J",
    }
}

type Labelled<T> = Vec<(String, Pos, T)>;

/// Statements as read, before labels are resolved against `kappa`.
#[derive(Default)]
struct Raw {
    keys: BTreeMap<String, Pos>,
    xi: Option<(Pos, Parity)>,
    kappa: Option<(Pos, Vec<(String, Pos)>)>,
    classes: Labelled<Part>,
    groups: Labelled<usize>,
    subgroups: Labelled<SubgroupSpec>,
    homs: Vec<RawHom>,
}

/// Source and target labels with their positions, and the map.
type RawHom = ((String, Pos), (String, Pos), HomKind);

impl Raw {
    fn claim(&mut self, key: String, at: Pos) -> Result<(), DslError> {
        if self.keys.contains_key(&key) {
            return Err(at.err(DslErrorKind::DuplicateKey(key)));
        }
        self.keys.insert(key, at);
        Ok(())
    }

    fn statement(&mut self, cur: &mut Cursor) -> Result<(), DslError> {
        let (word, at) = cur.ident()?;
        match word.as_str() {
            "xi" => {
                cur.expect("=")?;
                let (name, p) = cur.ident()?;
                let xi = xi_from_name(&name)
                    .ok_or_else(|| p.err(DslErrorKind::Syntax(format!("expected O, E_id or E_nonid, found `{name}`"))))?;
                cur.end()?;
                self.claim("xi".into(), at)?;
                self.xi = Some((at, xi));
            }
            "kappa" => {
                cur.expect("=")?;
                cur.expect("[")?;
                let mut labels = vec![cur.ident()?];
                while cur.eat(",") {
                    labels.push(cur.ident()?);
                }
                cur.expect("]")?;
                cur.end()?;
                self.claim("kappa".into(), at)?;
                self.kappa = Some((at, labels));
            }
            "class" => {
                let (l, lp) = cur.ident()?;
                cur.expect("=")?;
                let (v, vp) = cur.ident()?;
                let part = match v.as_str() {
                    "I" => Part::I,
                    "J" => Part::J,
                    _ => return Err(vp.err(DslErrorKind::Syntax(format!("expected I or J, found `{v}`")))),
                };
                cur.end()?;
                self.claim(format!("class {l}"), at)?;
                self.classes.push((l, lp, part));
            }
            "group" => {
                let (l, lp) = cur.ident()?;
                cur.expect("=")?;
                let (z, zp) = cur.ident()?;
                if z != "Z" {
                    return Err(zp.err(DslErrorKind::Syntax(format!("expected Z^k, found `{z}`"))));
                }
                cur.expect("^")?;
                let k = cur.natural()?;
                cur.end()?;
                self.claim(format!("group {l}"), at)?;
                self.groups.push((l, lp, k));
            }
            "subgroup" => {
                let (l, lp) = cur.ident()?;
                cur.expect("=")?;
                let (v, vp) = cur.ident()?;
                let spec = match v.as_str() {
                    "full" => SubgroupSpec::Full,
                    "trivial" => SubgroupSpec::Trivial,
                    "prefix" => SubgroupSpec::Prefix(cur.natural()?),
                    _ => {
                        return Err(vp.err(DslErrorKind::Syntax(format!("expected prefix j, full or trivial, found `{v}`"))))
                    }
                };
                cur.end()?;
                self.claim(format!("subgroup {l}"), at)?;
                self.subgroups.push((l, lp, spec));
            }
            "hom" => {
                let a = cur.ident()?;
                cur.expect("->")?;
                let b = cur.ident()?;
                cur.expect("=")?;
                let (v, vp) = cur.ident()?;
                let kind = match v.as_str() {
                    "trivial" => HomKind::Trivial,
                    "identity" => HomKind::Identity,
                    "truncate" => HomKind::Truncate(cur.natural()?),
                    "matrix" => HomKind::Matrix(cur.matrix()?),
                    _ => {
                        return Err(vp.err(DslErrorKind::Syntax(format!(
                            "expected trivial, identity, truncate j or matrix, found `{v}`"
                        ))))
                    }
                };
                cur.end()?;
                self.claim(format!("hom {}->{}", a.0, b.0), at)?;
                self.homs.push((a, b, kind));
            }
            _ => {
                return Err(at.err(DslErrorKind::Syntax(format!(
                    "expected xi, kappa, class, group, subgroup or hom, found `{word}`"
                ))))
            }
        }
        Ok(())
    }

    fn resolve(self) -> Result<BunchDocument, DslError> {
        let top = Pos { line: 1, col: 1 };
        let (_, xi) = self.xi.ok_or_else(|| top.err(DslErrorKind::Structure("missing `xi = ...` line".into())))?;
        let (kp, labels) =
            self.kappa.ok_or_else(|| top.err(DslErrorKind::Structure("missing `kappa = [...]` line".into())))?;
        let mut spans = self.keys;
        spans.insert("kappa".into(), kp);
        let mut kappa = Vec::new();
        for (l, p) in labels {
            if kappa.contains(&l) {
                return Err(p.err(DslErrorKind::Structure(format!("label {l} occurs twice in kappa"))));
            }
            spans.insert(format!("label {l}"), p);
            kappa.push(l);
        }
        let known = |l: &str, p: Pos| {
            if kappa.iter().any(|k| k == l) {
                Ok(())
            } else {
                Err(p.err(DslErrorKind::UnknownLabel(l.to_string())))
            }
        };
        let mut classes = BTreeMap::new();
        for (l, p, part) in self.classes {
            known(&l, p)?;
            if l == kappa[0] {
                return Err(p.err(DslErrorKind::Structure(format!("the least label {l} takes no class"))));
            }
            classes.insert(l, part);
        }
        let mut groups = BTreeMap::new();
        for (l, p, k) in self.groups {
            known(&l, p)?;
            groups.insert(l, k);
        }
        let mut subgroups = BTreeMap::new();
        for (l, p, h) in self.subgroups {
            known(&l, p)?;
            subgroups.insert(l, h);
        }
        let mut homs = BTreeMap::new();
        for ((a, ap), (b, bp), kind) in self.homs {
            known(&a, ap)?;
            known(&b, bp)?;
            let pos = |l: &str| kappa.iter().position(|k| k == l);
            if pos(&a) >= pos(&b) {
                return Err(ap.err(DslErrorKind::NonIncreasingPair(a, b)));
            }
            homs.insert((a, b), kind);
        }
        Ok(BunchDocument { xi, kappa, classes, groups, subgroups, homs, spans })
    }
}

struct Cursor {
    line: usize,
    chars: Vec<char>,
    i: usize,
}

impl Cursor {
    fn new(line: usize, text: &str) -> Self {
        Cursor { line, chars: text.chars().collect(), i: 0 }
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.i + 1 }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.i).is_some_and(|c| c.is_whitespace()) {
            self.i += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.i >= self.chars.len()
    }

    fn describe_here(&self) -> String {
        match self.chars.get(self.i) {
            Some(c) => format!("`{c}`"),
            None => "end of line".into(),
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        let t: Vec<char> = token.chars().collect();
        if self.chars[self.i.min(self.chars.len())..].starts_with(&t) {
            self.i += t.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), DslError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.pos().err(DslErrorKind::Syntax(format!("expected `{token}`, found {}", self.describe_here()))))
        }
    }

    fn end(&mut self) -> Result<(), DslError> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            Err(self.pos().err(DslErrorKind::Syntax(format!("unexpected {}", self.describe_here()))))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), DslError> {
        self.skip_ws();
        let start = self.pos();
        let begin = self.i;
        if self.chars.get(self.i).is_some_and(|c| c.is_alphabetic() || *c == '_') {
            while self.chars.get(self.i).is_some_and(|c| c.is_alphanumeric() || *c == '_' || *c == '\'') {
                self.i += 1;
            }
        }
        if self.i == begin {
            return Err(start.err(DslErrorKind::Syntax(format!("expected a name, found {}", self.describe_here()))));
        }
        Ok((self.chars[begin..self.i].iter().collect(), start))
    }

    fn integer(&mut self) -> Result<i64, DslError> {
        self.skip_ws();
        let start = self.pos();
        let begin = self.i;
        if self.chars.get(self.i) == Some(&'-') {
            self.i += 1;
        }
        while self.chars.get(self.i).is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        let s: String = self.chars[begin..self.i].iter().collect();
        s.parse().map_err(|_| {
            self.i = begin;
            start.err(DslErrorKind::Syntax(format!("expected an integer, found {}", self.describe_here())))
        })
    }

    fn natural(&mut self) -> Result<usize, DslError> {
        self.skip_ws();
        let start = self.pos();
        let v = self.integer()?;
        usize::try_from(v).map_err(|_| start.err(DslErrorKind::Syntax(format!("expected a non-negative integer, found {v}"))))
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, DslError>) -> Result<Vec<T>, DslError> {
        self.expect("[")?;
        let mut out = Vec::new();
        if self.eat("]") {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat("]") {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn matrix(&mut self) -> Result<Vec<Vec<i64>>, DslError> {
        self.list(|c| c.list(Cursor::integer))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bunch::{derive_chain, groups_to_algebras};
    use crate::chain::Chain;

    const SUGIHARA: &str = "\
# odd Sugihara chain with three elements
xi = O
kappa = [t, u]
group t = Z^0
class u = I   # split layer
group u = Z^0
subgroup u = trivial
hom t->u = trivial
";

    fn err(text: &str) -> DslError {
        parse_bunch_dsl(text).unwrap_err()
    }

    #[test]
    fn single_integer_layer() {
        let doc = parse_bunch_dsl("xi = O\nkappa = [t]\ngroup t = Z^1\n").unwrap();
        let g = doc.to_bunch().unwrap();
        assert!(g.same_as(&BunchOfLayerGroups::single(OrderedGroup::integers(), Parity::Odd)));
    }

    #[test]
    fn sugihara_document_derives_three_elements() {
        let g = parse_bunch_dsl(SUGIHARA).unwrap().to_bunch().unwrap();
        let d = derive_chain(groups_to_algebras(&g).unwrap()).unwrap();
        assert_eq!(d.elements().unwrap().len(), 3);
    }

    #[test]
    fn lines_in_any_order() {
        let shuffled: Vec<&str> = SUGIHARA.lines().rev().collect();
        assert_eq!(parse_bunch_dsl(&shuffled.join("\n")).unwrap(), parse_bunch_dsl(SUGIHARA).unwrap());
    }

    #[test]
    fn decreasing_hom_is_rejected() {
        let e = err(&SUGIHARA.replace("hom t->u", "hom u->t"));
        assert_eq!(e.kind, DslErrorKind::NonIncreasingPair("u".into(), "t".into()));
        assert_eq!((e.line, e.col), (8, 5));
        assert!(e.to_string().contains("hom over non-increasing pair"));
    }

    #[test]
    fn errors_carry_locations() {
        let e = err("xi = O\nkappa = [t]\ngroup t = Z^1\ngroup t = Z^2\n");
        assert_eq!((e.line, e.col, e.kind), (4, 1, DslErrorKind::DuplicateKey("group t".into())));
        let e = err("xi = O\nkappa = [t]\ngroup t = Z^1\ngroup w = Z^2\n");
        assert_eq!((e.line, e.col, e.kind), (4, 7, DslErrorKind::UnknownLabel("w".into())));
        let e = err("xi = O\nkappa = [t]\ngroup t = Q^1\n");
        assert_eq!((e.line, e.col), (3, 11));
        let e = err("xi = X\n");
        assert_eq!((e.line, e.col), (1, 6));
        let e = err("xi = O\nkappa = [t, u\n");
        assert_eq!((e.line, e.col), (2, 14));
        assert!(e.to_string().starts_with("line 2, column 14: syntax error"));
    }

    #[test]
    fn missing_pieces_are_reported() {
        assert!(err("kappa = [t]\ngroup t = Z^1\n").to_string().contains("missing `xi"));
        assert!(err("xi = O\nkappa = [t, u]\ngroup t = Z^1\ngroup u = Z^1\n").to_string().contains("no `class`"));
        let e = err("xi = O\nkappa = [t, u]\ngroup t = Z^1\nclass u = J\ngroup u = Z^1\n");
        assert!(e.to_string().contains("missing `hom t->u`"), "{e}");
        let e = err("xi = O\nkappa = [t]\ngroup t = Z^1\nsubgroup t = full\n");
        assert_eq!(e.line, 4);
    }

    #[test]
    fn omitted_homs_compose() {
        let text = "xi = O\nkappa = [t, u, v]\ngroup t = Z^1\nclass u = J\ngroup u = Z^1\nclass v = J\ngroup v = Z^1\n\
                    hom t->u = identity\nhom u->v = matrix [[2]]\n";
        let g = parse_bunch_dsl(text).unwrap().to_bunch().unwrap();
        assert_eq!(g.hom(0, 2).to_matrix(), vec![vec![2]]);
    }

    #[test]
    fn printed_documents_parse_back() {
        let doc = parse_bunch_dsl(SUGIHARA).unwrap();
        assert_eq!(parse_bunch_dsl(&doc.to_dsl()).unwrap(), doc);
        let g = doc.to_bunch().unwrap();
        let from = BunchDocument::from_bunch(&g);
        assert!(parse_bunch_dsl(&from.to_dsl()).unwrap().to_bunch().unwrap().same_as(&g));
    }
}
