//! Exact rational linear algebra: integer matrices with fraction-free
//! elimination, rational kernels and solves, primitive vectors, and a small
//! exact-arithmetic feasibility solver for homogeneous linear systems.

pub mod lp;
pub mod matrix;
pub mod vector;

pub use matrix::{IntMatrix, MathError, RatMatrix};
pub use vector::{
    dot_int, dot_rat, int_to_rat, is_zero_int, is_zero_rat, lcm_of_denominators,
    normalize_equation, primitive_int, primitive_of_rat, rat_to_primitive_int,
};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

/// Shorthand used throughout the workspace tests.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
