//! Transmission-based topological indices: computation, symmetry-aware
//! evaluation, and machine verification of their bounds.
//!
//! The crate has four layers:
//!
//! * graph primitives: [`graph::Graph`], graph6 and edge-list codecs,
//!   BFS all-pairs distances with per-vertex transmissions and per-edge
//!   near-side splits;
//! * the index engine: the 32-entry catalog in [`indices`], exact where
//!   the defining formula is integral or rational, plus the distance
//!   spectral radius in [`spectral`];
//! * symmetry: automorphism-group search by individualization-refinement
//!   in [`symmetry`], with orbit-weighted index evaluation that must agree
//!   with the direct sums;
//! * verification: the bound/identity catalog in [`checks`], streamed over
//!   named families ([`families`]), exhaustive enumerations
//!   ([`enumerate`]), or graph6 input by [`verify`].

pub mod checks;
pub mod distance;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod jsonout;
pub mod refine;
pub mod spectral;
pub mod symmetry;
pub mod verify;

pub use checks::{check_graph, CheckId, CheckOutcome, CheckReport, Verdict};
pub use distance::{bfs_apsp, edge_splits, DistanceData, EdgeSplit};
pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use graph::{DegreeData, Graph};
pub use indices::{full_report, selected_report, IndexId, IndexReport, Value};
pub use symmetry::{automorphisms, orbit_index_eval, OrbitPartition, DEFAULT_BUDGET};
pub use verify::{verify_stream, AggregateReport, VerifySource};
