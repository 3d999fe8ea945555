//! Involutive FLe-chains built from, and decomposed into, bunches of
//! lexicographically ordered integer groups.
//!
//! The crate is organised bottom-up: [`ogroup`] provides the groups `Z^k`,
//! [`chain`] the chain abstraction and its law suite, [`convert`] the
//! group/chain conversions, [`bunch`] the layered representation, and
//! [`oracle`] an independent enumeration of small finite chains.

pub mod bunch;
pub mod chain;
pub mod cli;
pub mod convert;
pub mod dsl;
pub mod emit;
pub mod ogroup;
pub mod oracle;
pub mod report;
pub mod sampling;

pub use chain::{Chain, ChainKind, Charted, FiniteChainTable, Parity};
pub use ogroup::{Direction, GroupElement, HomKind, Homomorphism, OrderedGroup};
pub use report::Report;
pub use sampling::Sampling;
