//! Exact invariants of the zig-zag maps in `PA(m)`, indexed by the Farey tree.
//!
//! For a modality `m >= 2` and a reduced `q = a/b` in `(0, 1)` the crate
//! builds `f = Φ⁻¹(q)` combinatorially and computes its kneading sequence,
//! digit polynomial, Markov matrices, stretch factor, zeta function and the
//! surface and braid invariants of its pseudo-Anosov thickening.

pub mod algebraic;
pub mod burau;
pub mod error;
pub mod farey;
pub mod intpoly;
pub mod invariants;
pub mod kneading;
pub mod scalar;
pub mod zigzag;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use farey::Fraction;

pub type IntPolynomial = intpoly::Polynomial<BigInt>;
pub type RatPolynomial = intpoly::Polynomial<BigRational>;
pub type IntMatrix = intpoly::Matrix<BigInt>;
pub type SmallMatrix = intpoly::Matrix<i64>;
pub type FloatMatrix = intpoly::Matrix<f64>;
pub type RatSeries = intpoly::PowerSeries<BigRational>;
pub type IntSeries = intpoly::PowerSeries<BigInt>;
pub type LaurentPoly = burau::LaurentPolynomial<BigInt>;
