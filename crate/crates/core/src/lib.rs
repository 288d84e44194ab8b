//! Exact pseudo-Wronskians of Hermite polynomials, their equivalence
//! classes, exceptional Hermite families, and rational Painlevé IV
//! solutions.

pub mod combinatorics;
pub mod error;
pub mod exactpoly;
pub mod golden;
pub mod hermite;
pub mod minorder;
pub mod painleve;
pub mod quadrature;
pub mod xhermite;

pub use combinatorics::{BentPoint, FrobeniusSymbol, MayaDiagram, Partition};
pub use error::{Error, Result};
pub use exactpoly::{BigRat, IntPoly, PolyMatrix, RatFunc};
