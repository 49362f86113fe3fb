//! Finite symmetry groups acting on a graded polynomial setup: signed
//! variable permutations, closure, the induced linear maps on the grading,
//! and orbits of index sets and cones.

mod action;
mod group;
mod perm;

pub use action::{
    act_on_cone, act_on_ideal, act_on_polynomial, act_on_subset, is_subset_representative,
    orbit_of_cone, orbit_of_subset, subset_orbit_representatives, verify_ideal_invariance,
};
pub use group::{group_closure, induced_matrix, SymmetryGroup, DEFAULT_ELEMENT_BOUND};
pub use perm::SignedPermutation;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("group closure exceeds the element bound {bound}")]
    BoundExceeded { bound: usize },
    #[error("permutation does not induce a linear action on the grading")]
    NotASymmetry,
    #[error("{0}")]
    Parse(String),
}
