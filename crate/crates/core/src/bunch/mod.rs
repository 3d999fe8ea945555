//! Bunches of layer algebras and layer groups: a finite index chain `kappa`
//! whose elements carry one layer each, plus coherent homomorphisms from
//! lower to higher layers. A bunch derives a whole involutive chain, and
//! every odd or even chain decomposes into one.

mod algebras;
mod decompose;
mod derive;
mod groups;
mod layers;
mod theorem;
mod transfer;

use std::fmt;

use thiserror::Error;

use crate::chain::{ChainError, Parity};
use crate::convert::ConvertError;
use crate::ogroup::GroupError;

pub use algebras::{compare_algebra_bunches, validate_bunch_algebras, BunchOfLayerAlgebras, LayerHom};
pub use decompose::{decompose_chain, layer_position};
pub use derive::{derive_chain, ChainElement, Derived, LayerElem};
pub use groups::{validate_bunch_groups, BunchOfLayerGroups};
pub use layers::{GroupLayer, Layer};
pub use theorem::{check_algebras_groups_algebras, check_decompose_derive, check_derive_decompose, check_groups_algebras_groups, verify_main_theorem};
pub use transfer::{algebras_to_groups, groups_to_algebras};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BunchError {
    #[error("malformed bunch: {0}")]
    Structure(String),
    #[error("invalid bunch: {0}")]
    Invalid(String),
    #[error("layer {layer}: {source}")]
    Layer { layer: String, source: ConvertError },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// Which half of the partition of `kappa \ {t}` an index lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Part {
    I,
    J,
}

/// Layer classes: odd cancellative layers, discrete even layers with a
/// non-idempotent falsum, and split layers with an idempotent falsum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LayerClass {
    Omega,
    Psi,
    Theta,
}

impl fmt::Display for LayerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LayerClass::Omega => "Omega",
            LayerClass::Psi => "Psi",
            LayerClass::Theta => "Theta",
        })
    }
}

/// Short names used by the bunch description format.
pub fn xi_name(xi: Parity) -> &'static str {
    match xi {
        Parity::Odd => "O",
        Parity::EvenIdempotentFalsum => "E_id",
        Parity::EvenNonIdempotentFalsum => "E_nonid",
    }
}

pub fn xi_from_name(s: &str) -> Option<Parity> {
    Parity::ALL.into_iter().find(|p| xi_name(*p) == s)
}

/// The index chain `kappa`: ascending labels (the first one plays `t`),
/// the I/J part of every other label, and the parity `xi` of the whole
/// chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KappaIndex {
    labels: Vec<String>,
    parts: Vec<Part>,
    xi: Parity,
}

impl KappaIndex {
    /// `parts[i]` belongs to `labels[i + 1]`.
    pub fn new(labels: Vec<String>, parts: Vec<Part>, xi: Parity) -> Result<Self, BunchError> {
        if labels.is_empty() {
            return Err(BunchError::Structure("kappa must contain at least t".into()));
        }
        if parts.len() + 1 != labels.len() {
            return Err(BunchError::Structure(format!(
                "{} labels need {} I/J classes, got {}",
                labels.len(),
                labels.len() - 1,
                parts.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(BunchError::Structure(format!("label {l} occurs twice in kappa")));
            }
        }
        Ok(KappaIndex { labels, parts, xi })
    }

    /// Default labels `t, u1, u2, ...`.
    pub fn with_default_labels(parts: Vec<Part>, xi: Parity) -> Self {
        let labels = std::iter::once("t".to_string()).chain((1..=parts.len()).map(|i| format!("u{i}"))).collect();
        KappaIndex { labels, parts, xi }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn xi(&self) -> Parity {
        self.xi
    }

    /// The part of index `i`, `None` for the least index.
    pub fn part(&self, i: usize) -> Option<Part> {
        i.checked_sub(1).map(|j| self.parts[j])
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn class(&self, i: usize) -> LayerClass {
        match self.part(i) {
            None => match self.xi {
                Parity::Odd => LayerClass::Omega,
                Parity::EvenNonIdempotentFalsum => LayerClass::Psi,
                Parity::EvenIdempotentFalsum => LayerClass::Theta,
            },
            Some(Part::I) => LayerClass::Theta,
            Some(Part::J) => LayerClass::Psi,
        }
    }

    pub fn classes(&self) -> Vec<LayerClass> {
        (0..self.len()).map(|i| self.class(i)).collect()
    }

    /// Same shape, ignoring label names.
    pub fn same_shape(&self, other: &KappaIndex) -> bool {
        self.xi == other.xi && self.parts == other.parts
    }
}

impl fmt::Display for KappaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi = {}, kappa = [", xi_name(self.xi))?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}:{}", self.class(i))?;
        }
        f.write_str("]")
    }
}
