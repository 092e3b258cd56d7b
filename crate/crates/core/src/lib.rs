//! Exact matroid toolkit: circuit-based matroids, constructions, structural
//! predicates, and exhaustive verification harnesses over generated catalogs.
//!
//! Everything is exact integer combinatorics over ground sets of at most 64
//! elements (bitmask subsets). The crate is organized as:
//!
//! - [`subset`], [`family`], [`matroid`]: the core representation and oracles
//!   (rank, closure, flats, connectivity, duality, minors, series classes,
//!   canonical forms / isomorphism, binarity).
//! - [`construct`]: uniform matroids, cycle matroids of multigraphs, GF(2)
//!   column matroids, direct sums, series/parallel connections, free
//!   extension, and a registry of named matroids used throughout the test
//!   suites.
//! - [`props`]: predicates — symmetric strong circuit elimination (SSCE),
//!   skew circuit pairs and k-skew families, unbreakability,
//!   circuit-difference, series-minor containment search, and circuit axiom
//!   systems for raw clutters.
//! - [`verify`]: catalog generation (graphic / binary / uniform / named /
//!   clutters) and the verification harness with machine-readable reports.

pub mod canonical;
pub mod construct;
pub mod error;
pub mod family;
pub mod matroid;
pub mod props;
pub mod subset;
pub mod verify;

pub use canonical::CanonicalKey;
pub use construct::gf2::Gf2Matrix;
pub use construct::graph::Multigraph;
pub use error::{Error, Result};
pub use family::CircuitFamily;
pub use matroid::{ElementPartition, Matroid, Minor};
pub use subset::Subset;
