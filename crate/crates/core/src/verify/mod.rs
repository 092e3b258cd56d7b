//! Exhaustive verification: catalog generation (graphic, binary, uniform,
//! named, clutters) and sweep harnesses that falsify — or fail to falsify —
//! the structural equivalences at desk scale, emitting deterministic,
//! replayable reports.

pub mod catalog;
pub mod clutters;
pub mod report;
pub mod theorems;

pub use catalog::{
    catalog, connected_multigraphs, encode_circuit_family, encode_gf2, encode_graph,
    encode_matroid, standard_catalogs, standard_instances, CatalogFamily, CatalogInstance,
    CatalogSpec, InstanceSource, BINARY_MAX_RANK, DEFAULT_SIZE_BOUND, LARGE_SIZE_BOUND,
};
pub use clutters::{clutter_count, enumerate_clutters, ClutterIter, CLUTTER_MAX_N};
pub use report::{VerificationReport, ViolationRecord};
pub use theorems::{
    verify_axiom_equivalence, verify_lemma_suite, verify_theorem1, verify_theorem3,
};
