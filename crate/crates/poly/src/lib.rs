//! Multivariate polynomial engine over exact rationals: weighted monomial
//! orderings, Buchberger's algorithm, saturation at variable products, and
//! the torus-orbit face test used by the fan pipeline.

pub mod aface;
pub mod faceset;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod ordering;
pub mod parse;
pub mod polynomial;
pub mod saturate;

pub use aface::{find_positive_weight, is_aface, restrict_to_face, AfaceMethod};
pub use faceset::FaceIndexSet;
pub use groebner::{buchberger, normal_form, reduces_to_zero, spoly};
pub use ideal::{ideal_equal, Ideal};
pub use monomial::Monomial;
pub use ordering::WeightedOrdering;
pub use parse::{
    line_col, parse_polynomial, parse_polynomial_named, print_polynomial,
    print_polynomial_named, PolyParseError,
};
pub use polynomial::Polynomial;
pub use saturate::{
    contains_monomial_rabinowitsch, ideal_quotient_by_monomial, saturate_at,
    saturate_iterated_quotient, saturate_product, saturate_variable,
};

use thiserror::Error;

pub type Int = gitfan_math::Int;
pub type Rat = gitfan_math::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("generator is not homogeneous for the given weight")]
    NotHomogeneous,
    #[error("weight vector must be strictly positive")]
    NonPositiveWeight,
    #[error("tiebreak sequence is not a permutation of the variables")]
    NotAPermutation,
    #[error("variable count mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("basis element violates the divisibility hypothesis for variable {var}")]
    HypothesisViolated { var: usize },
}
