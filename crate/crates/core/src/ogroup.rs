//! Totally ordered abelian groups `Z^k` under the lexicographic order, and
//! order-preserving homomorphisms between them.
//!
//! `Z^0` is the one-element group. It is the only rank that is not discrete.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, RngCore};
use thiserror::Error;

use crate::sampling::Sampling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("rank mismatch: expected an element of Z^{expected}, found one of length {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("no neighbor: Z^0 is not discretely ordered")]
    NoNeighbor,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// Direction of a neighbor (cover) operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

/// An element of `Z^k`, stored as its coordinate vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<i64>);

impl GroupElement {
    pub fn new(coords: Vec<i64>) -> Self {
        GroupElement(coords)
    }

    pub fn zero(rank: usize) -> Self {
        GroupElement(vec![0; rank])
    }

    /// The `i`-th standard basis vector of `Z^rank`.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        GroupElement(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl From<i64> for GroupElement {
    fn from(v: i64) -> Self {
        GroupElement(vec![v])
    }
}

impl From<Vec<i64>> for GroupElement {
    fn from(v: Vec<i64>) -> Self {
        GroupElement(v)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [] => write!(f, "0"),
            [x] => write!(f, "{x}"),
            cs => {
                write!(f, "(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// The lexicographically ordered group `Z^rank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderedGroup {
    rank: usize,
}

impl OrderedGroup {
    pub fn new(rank: usize) -> Self {
        OrderedGroup { rank }
    }

    pub fn trivial() -> Self {
        OrderedGroup { rank: 0 }
    }

    pub fn integers() -> Self {
        OrderedGroup { rank: 1 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Discrete iff there is a least element strictly above the unit.
    pub fn is_discrete(&self) -> bool {
        self.rank > 0
    }

    pub fn unit(&self) -> GroupElement {
        GroupElement::zero(self.rank)
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        a.rank() == self.rank
    }

    fn check(&self, a: &GroupElement) -> Result<(), GroupError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(GroupError::RankMismatch { expected: self.rank, found: a.rank() })
        }
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(add(a, b))
    }

    pub fn inv(&self, a: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        Ok(neg(a))
    }

    pub fn cmp(&self, a: &GroupElement, b: &GroupElement) -> Result<Ordering, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.0.cmp(&b.0))
    }

    /// The unique cover (`Up`) or cocover (`Down`) of `a`: the last
    /// coordinate moves by one.
    pub fn cover(&self, a: &GroupElement, dir: Direction) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        if self.rank == 0 {
            return Err(GroupError::NoNeighbor);
        }
        Ok(step(a, dir))
    }

    /// Uniform sample with every coordinate in `[-window, window]`.
    pub fn sample(&self, rng: &mut dyn RngCore, window: i64) -> GroupElement {
        let w = window.max(0);
        GroupElement((0..self.rank).map(|_| rng.gen_range(-w..=w)).collect())
    }

    /// All elements with coordinates in `[-radius, radius]`, ascending.
    pub fn slice(&self, radius: i64) -> Vec<GroupElement> {
        if radius < 0 {
            return Vec::new();
        }
        let mut out = vec![GroupElement::zero(0)];
        for _ in 0..self.rank {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (-radius..=radius).map(move |c| {
                        let mut v = prefix.0.clone();
                        v.push(c);
                        GroupElement(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for OrderedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z^{}", self.rank)
    }
}

pub(crate) fn add(a: &GroupElement, b: &GroupElement) -> GroupElement {
    GroupElement(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
}

pub(crate) fn neg(a: &GroupElement) -> GroupElement {
    GroupElement(a.0.iter().map(|x| -x).collect())
}

/// Neighbor in a discrete `Z^k` (`k >= 1`).
pub(crate) fn step(a: &GroupElement, dir: Direction) -> GroupElement {
    let mut v = a.0.clone();
    let last = v.last_mut().expect("step on Z^0");
    *last += match dir {
        Direction::Up => 1,
        Direction::Down => -1,
    };
    GroupElement(v)
}

/// The shape of a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomKind {
    Trivial,
    Identity,
    /// Keep the first `j` coordinates; the target has rank `j`.
    Truncate(usize),
    /// Integer matrix with `target.rank` rows and `source.rank` columns.
    Matrix(Vec<Vec<i64>>),
}

/// A group homomorphism `Z^m -> Z^n`, expected to be order-preserving.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: OrderedGroup,
    target: OrderedGroup,
    kind: HomKind,
}

impl Homomorphism {
    pub fn new(source: OrderedGroup, target: OrderedGroup, kind: HomKind) -> Result<Self, GroupError> {
        let (m, n) = (source.rank, target.rank);
        match &kind {
            HomKind::Trivial => {}
            HomKind::Identity if m != n => {
                return Err(GroupError::ShapeMismatch(format!("identity from Z^{m} to Z^{n}")));
            }
            HomKind::Identity => {}
            HomKind::Truncate(j) if *j > m || *j != n => {
                return Err(GroupError::ShapeMismatch(format!(
                    "truncate {j} needs source rank >= {j} and target rank {j}, got Z^{m} -> Z^{n}"
                )));
            }
            HomKind::Truncate(_) => {}
            HomKind::Matrix(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != m) {
                    return Err(GroupError::ShapeMismatch(format!(
                        "matrix for Z^{m} -> Z^{n} must be {n}x{m}"
                    )));
                }
            }
        }
        Ok(Homomorphism { source, target, kind })
    }

    pub fn trivial(source: OrderedGroup, target: OrderedGroup) -> Self {
        Homomorphism { source, target, kind: HomKind::Trivial }
    }

    pub fn identity(group: OrderedGroup) -> Self {
        Homomorphism { source: group, target: group, kind: HomKind::Identity }
    }

    pub fn source(&self) -> OrderedGroup {
        self.source
    }

    pub fn target(&self) -> OrderedGroup {
        self.target
    }

    pub fn kind(&self) -> &HomKind {
        &self.kind
    }

    pub fn apply(&self, a: &GroupElement) -> Result<GroupElement, GroupError> {
        self.source.check(a)?;
        Ok(self.apply_unchecked(a))
    }

    pub(crate) fn apply_unchecked(&self, a: &GroupElement) -> GroupElement {
        match &self.kind {
            HomKind::Trivial => self.target.unit(),
            HomKind::Identity => a.clone(),
            HomKind::Truncate(j) => GroupElement(a.0[..*j].to_vec()),
            HomKind::Matrix(rows) => {
                GroupElement(rows.iter().map(|r| r.iter().zip(&a.0).map(|(x, y)| x * y).sum()).collect())
            }
        }
    }

    /// The matrix of this map: column `i` is the image of the `i`-th basis vector.
    pub fn to_matrix(&self) -> Vec<Vec<i64>> {
        let (m, n) = (self.source.rank, self.target.rank);
        let columns: Vec<GroupElement> = (0..m).map(|i| self.apply_unchecked(&GroupElement::basis(m, i))).collect();
        (0..n).map(|r| columns.iter().map(|c| c.0[r]).collect()).collect()
    }

    /// Same map, rewritten with the most specific named kind that matches.
    pub fn normalized(&self) -> Homomorphism {
        let rows = self.to_matrix();
        let (m, n) = (self.source.rank, self.target.rank);
        let is_prefix_identity = n <= m
            && rows.iter().enumerate().all(|(r, row)| row.iter().enumerate().all(|(c, &v)| v == i64::from(r == c)));
        let kind = if rows.iter().flatten().all(|&v| v == 0) {
            HomKind::Trivial
        } else if is_prefix_identity && n == m {
            HomKind::Identity
        } else if is_prefix_identity {
            HomKind::Truncate(n)
        } else {
            HomKind::Matrix(rows)
        };
        Homomorphism { source: self.source, target: self.target, kind }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism, GroupError> {
        if self.target != other.source {
            return Err(GroupError::ShapeMismatch(format!(
                "cannot compose {} -> {} with {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        let a = other.to_matrix();
        let b = self.to_matrix();
        let (m, k) = (self.source.rank, self.target.rank);
        let rows = a
            .iter()
            .map(|arow| (0..m).map(|c| (0..k).map(|i| arow[i] * b[i][c]).sum()).collect())
            .collect();
        Ok(Homomorphism { source: self.source, target: other.target, kind: HomKind::Matrix(rows) }.normalized())
    }

    /// Same underlying map (compared through matrices).
    pub fn same_map(&self, other: &Homomorphism) -> bool {
        self.source == other.source && self.target == other.target && self.to_matrix() == other.to_matrix()
    }

    /// Checks the homomorphism and order-preservation laws.
    ///
    /// Named kinds are valid by construction. Matrix kinds are checked on
    /// `samples` random pairs with coordinates in `[-radius, radius]`.
    pub fn validate(&self, sampling: &Sampling) -> HomReport {
        let mut report = HomReport {
            structural: !matches!(self.kind, HomKind::Matrix(_)),
            radius: sampling.window,
            samples: 0,
            counterexamples: Vec::new(),
        };
        if report.structural {
            return report;
        }
        let mut rng = sampling.rng(0x686f6d);
        for _ in 0..sampling.samples {
            let a = self.source.sample(&mut rng, sampling.window);
            let b = self.source.sample(&mut rng, sampling.window);
            report.samples += 1;
            let (fa, fb) = (self.apply_unchecked(&a), self.apply_unchecked(&b));
            if self.apply_unchecked(&add(&a, &b)) != add(&fa, &fb) {
                report.counterexamples.push(format!("hom law fails at a={a}, b={b}"));
            }
            let (lo, hi, flo, fhi) = if a <= b { (&a, &b, &fa, &fb) } else { (&b, &a, &fb, &fa) };
            if flo > fhi {
                report.counterexamples.push(format!("order reversed: {lo} <= {hi} but {flo} > {fhi}"));
            }
            if report.counterexamples.len() >= 8 {
                break;
            }
        }
        report
    }
}

impl fmt::Display for HomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomKind::Trivial => write!(f, "trivial"),
            HomKind::Identity => write!(f, "identity"),
            HomKind::Truncate(j) => write!(f, "truncate {j}"),
            HomKind::Matrix(rows) => {
                write!(f, "matrix [")?;
                for (i, r) in rows.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "[")?;
                    for (j, v) in r.iter().enumerate() {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{v}")?;
                    }
                    write!(f, "]")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl fmt::Display for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

/// Outcome of [`Homomorphism::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomReport {
    /// True when the kind guarantees the laws and no sampling was done.
    pub structural: bool,
    pub radius: i64,
    pub samples: usize,
    pub counterexamples: Vec<String>,
}

impl HomReport {
    pub fn is_valid(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> GroupElement {
        GroupElement::new(v.to_vec())
    }

    #[test]
    fn mul_examples() {
        assert_eq!(OrderedGroup::new(1).mul(&z(&[2]), &z(&[3])).unwrap(), z(&[5]));
        assert_eq!(OrderedGroup::new(2).mul(&z(&[1, 5]), &z(&[0, -2])).unwrap(), z(&[1, 3]));
        assert_eq!(OrderedGroup::new(0).mul(&z(&[]), &z(&[])).unwrap(), z(&[]));
        assert_eq!(
            OrderedGroup::new(2).mul(&z(&[1]), &z(&[0, 1])),
            Err(GroupError::RankMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn inv_examples() {
        assert_eq!(OrderedGroup::new(1).inv(&z(&[4])).unwrap(), z(&[-4]));
        assert_eq!(OrderedGroup::new(2).inv(&z(&[1, -2])).unwrap(), z(&[-1, 2]));
        assert_eq!(OrderedGroup::new(0).inv(&z(&[])).unwrap(), z(&[]));
    }

    #[test]
    fn cmp_examples() {
        let g2 = OrderedGroup::new(2);
        assert_eq!(g2.cmp(&z(&[0, 7]), &z(&[1, -100])).unwrap(), Ordering::Less);
        assert_eq!(OrderedGroup::new(1).cmp(&z(&[3]), &z(&[3])).unwrap(), Ordering::Equal);
        assert_eq!(g2.cmp(&z(&[2, 0]), &z(&[1, 999])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn cover_examples() {
        assert_eq!(OrderedGroup::new(1).cover(&z(&[3]), Direction::Up).unwrap(), z(&[4]));
        assert_eq!(OrderedGroup::new(2).cover(&z(&[5, 0]), Direction::Down).unwrap(), z(&[5, -1]));
        assert_eq!(OrderedGroup::new(0).cover(&z(&[]), Direction::Up), Err(GroupError::NoNeighbor));
        assert!(!OrderedGroup::trivial().is_discrete());
        assert!(OrderedGroup::new(3).is_discrete());
    }

    #[test]
    fn hom_apply_examples() {
        let z0 = OrderedGroup::new(0);
        let z1 = OrderedGroup::new(1);
        let z2 = OrderedGroup::new(2);
        assert_eq!(Homomorphism::trivial(z1, z0).apply(&z(&[17])).unwrap(), z(&[]));
        let tr = Homomorphism::new(z2, z1, HomKind::Truncate(1)).unwrap();
        assert_eq!(tr.apply(&z(&[3, 9])).unwrap(), z(&[3]));
        let m = Homomorphism::new(z1, z1, HomKind::Matrix(vec![vec![2]])).unwrap();
        assert_eq!(m.apply(&z(&[3])).unwrap(), z(&[6]));
        assert!(Homomorphism::new(z2, z2, HomKind::Truncate(1)).is_err());
        assert!(Homomorphism::new(z2, z1, HomKind::Matrix(vec![vec![1]])).is_err());
        assert!(m.apply(&z(&[1, 2])).is_err());
    }

    #[test]
    fn hom_validate_examples() {
        let s = Sampling { window: 10, ..Sampling::default() };
        let id = Homomorphism::identity(OrderedGroup::new(2)).validate(&s);
        assert!(id.is_valid() && id.structural);
        let z1 = OrderedGroup::new(1);
        let neg = Homomorphism::new(z1, z1, HomKind::Matrix(vec![vec![-1]])).unwrap().validate(&s);
        assert!(!neg.is_valid());
        let z2 = OrderedGroup::new(2);
        let eye = Homomorphism::new(z2, z2, HomKind::Matrix(vec![vec![1, 0], vec![0, 1]])).unwrap().validate(&s);
        assert!(eye.is_valid() && !eye.structural);
        assert_eq!(eye.samples, s.samples);
        assert_eq!(eye.radius, 10);
    }

    #[test]
    fn normalize_and_compose() {
        let z1 = OrderedGroup::new(1);
        let z2 = OrderedGroup::new(2);
        let eye = Homomorphism::new(z2, z2, HomKind::Matrix(vec![vec![1, 0], vec![0, 1]])).unwrap();
        assert_eq!(eye.normalized().kind(), &HomKind::Identity);
        let tr = Homomorphism::new(z2, z1, HomKind::Matrix(vec![vec![1, 0]])).unwrap();
        assert_eq!(tr.normalized().kind(), &HomKind::Truncate(1));
        let two = Homomorphism::new(z1, z1, HomKind::Matrix(vec![vec![2]])).unwrap();
        let c = tr.then(&two).unwrap();
        assert_eq!(c.apply(&z(&[4, -7])).unwrap(), z(&[8]));
        assert!(two.then(&tr).is_err());
    }

    #[test]
    fn slice_is_ascending() {
        let s = OrderedGroup::new(2).slice(1);
        assert_eq!(s.len(), 9);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(OrderedGroup::new(0).slice(3), vec![z(&[])]);
    }
}
