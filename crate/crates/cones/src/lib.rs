//! Exact rational polyhedral cones: conversion between generator and
//! constraint descriptions, canonical forms and keys, facet enumeration,
//! duality, and the membership predicates the fan traversal is built on.
//! All arithmetic is over arbitrary-precision rationals; nothing here
//! rounds.

mod cone;
mod dd;
mod facet;

pub use cone::{
    canonical_basis, cone_from_inequalities, cone_from_rays, dd_convert, reduce_mod_rows, Cone,
};
pub use facet::{facets, interior_witness, is_interior_facet, Facet};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ConeError {
    #[error("vector length {got} does not match ambient dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}
