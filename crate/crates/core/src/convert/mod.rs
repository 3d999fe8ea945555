//! Building blocks between groups and chains: the induced chain of a
//! group and back, moving the falsum one step down or up, and splitting an
//! odd chain along a subgroup (plus the inverse projection).

mod induced;
mod shift;
mod split;

use thiserror::Error;

pub use induced::{iota_chain_to_group, iota_chain_to_group_with, iota_group_to_chain, InducedChain, InducedGroup};
pub use shift::{downshift, downshift_with, upshift, upshift_with, Downshift, Upshift};
pub use split::{
    canonical_projection, in_split_subgroup, is_dotted_in, split, split_with, unsplit, Pi2, PrefixSubgroup, Split, SplitElem, Subgroup, SubgroupSpec, Unsplit, Unsplitting,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvertError {
    #[error("chain is not odd: {0}")]
    NotOdd(String),
    #[error("chain is not even: {0}")]
    NotEven(String),
    #[error("chain is not cancellative: {0}")]
    NotCancellative(String),
    #[error("chain is not discretely ordered: {0}")]
    NotDiscrete(String),
    #[error("falsum is not idempotent: {0}")]
    FalsumNotIdempotent(String),
    #[error("falsum is idempotent: {0}")]
    FalsumIdempotent(String),
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
}
