//! Exact polynomial and rational-function arithmetic over the integers and
//! rationals, with fraction-free determinants of polynomial matrices.

mod intpoly;
mod matrix;
mod ratfunc;
mod sqrt3;

pub use intpoly::{IntPoly, Parity, PolyJson};
pub use matrix::PolyMatrix;
pub use ratfunc::{parse_rat, rat_to_string, RatFunc, RatFuncJson};
pub use sqrt3::{
    compose_inv_sqrt3, log_derivative_inv_sqrt3, substitute_inv_sqrt3, QuadInt, Sqrt3Scaled,
};

/// Arbitrary-precision rational; always reduced with a positive denominator.
pub type BigRat = num_rational::BigRational;
