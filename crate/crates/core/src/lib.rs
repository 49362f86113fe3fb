//! Fan computation pipeline: admissible-face enumeration, projected orbit
//! cone tables, membership fingerprints, symmetric chamber traversal, and
//! the moving-cone intersection.
//!
//! The stages compose in order: enumerate admissible faces of the ideal up
//! to symmetry, project them to cones in the grading's target space,
//! reduce the table to the minimal full-dimensional members, then walk the
//! chambers of the common refinement by crossing facets.  Chambers are
//! identified by which table cones contain them — a bitset fingerprint
//! that the symmetry group acts on by relabeling — so orbit lookups during
//! the walk are integer comparisons, not polyhedral computations.

mod afaces;
mod checkpoint;
mod hash;
mod moving;
mod table;
mod traverse;

pub use afaces::{enumerate_afaces, enumerate_afaces_with, AfaceOrbit};
pub use checkpoint::{CheckpointState, FrontierRecord, CHECKPOINT_VERSION};
pub use hash::{act_on_hash, ConeHash};
pub use moving::{moving_cone, moving_cone_summary, MovingConeSummary};
pub use table::{
    gitcone_at, hash_at, hash_of, minimal_full_dim, project_orbit_cones,
    reduce_by_orbit_inclusion, support_cone, OrbitConeTable, ReducedTables,
};
pub use traverse::{
    extract_semiample_and_mori, find_neighbor, orbit_adjacency_graph, starting_point,
    traverse_plain, traverse_plain_with, traverse_symmetric, traverse_symmetric_with,
    AdjacencyEdge, FanStatistics, FrontierEntry, GitFanResult, OrbitGraph, TraversalOptions,
    TraversalOutcome,
};

#[derive(Debug, thiserror::Error)]
pub enum CoreError {
    #[error("the point lies outside the support of the fan")]
    OutsideSupport,
    #[error("no full-dimensional starting chamber was found")]
    NoFullDimStart,
    #[error("no chamber was found across a frontier facet")]
    NoNeighbor,
    #[error("the fan has no unique fixed orbit")]
    NoUniqueFixedOrbit,
    #[error("snapshot does not match this run: {0}")]
    CheckpointMismatch(String),
    #[error("snapshot i/o failed: {0}")]
    Checkpoint(String),
}
