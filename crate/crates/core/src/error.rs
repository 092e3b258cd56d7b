//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by constructors, validators, and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An element index is not below the ground-set size.
    #[error("element {element} out of range for ground set of size {ground}")]
    OutOfRange { element: usize, ground: usize },

    /// Ground sets are limited to 64 elements so subsets fit in a machine word.
    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundTooLarge(usize),

    /// Circuit families must not contain the empty set.
    #[error("circuit family contains the empty set")]
    EmptyCircuit,

    /// Circuit families must be antichains under inclusion.
    #[error("family is not an antichain: {inner:?} is contained in {outer:?}")]
    NotAntichain { inner: Vec<usize>, outer: Vec<usize> },

    /// The family fails circuit elimination: two members meeting in `e`
    /// whose union minus `e` contains no member.
    #[error("circuit elimination fails for {c1:?} and {c2:?} at common element {e}")]
    Elimination {
        c1: Vec<usize>,
        c2: Vec<usize>,
        e: usize,
    },

    /// Delete and contract sets passed to a minor operation must be disjoint.
    #[error("delete and contract sets overlap")]
    OverlappingMinor,

    /// The basepoint of a pointed matroid must not be a loop.
    #[error("basepoint {0} is a loop")]
    BasepointLoop(usize),

    /// The basepoint of a pointed matroid must not be a coloop.
    #[error("basepoint {0} is a coloop")]
    BasepointColoop(usize),

    /// Free extension needs at least one nonempty basis.
    #[error("free extension requires positive rank")]
    RankZero,

    /// Catch-all for invalid parameter combinations, with a human message.
    #[error("{0}")]
    InvalidParams(String),

    /// A search would have to examine hosts larger than its configured cap.
    #[error("search requires instances of size {size}, above the cap of {cap} (raise the cap to proceed)")]
    SearchCap { size: usize, cap: usize },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
