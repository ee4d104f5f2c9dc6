//! Exact polynomial, matrix and power-series arithmetic.

mod digit;
mod matrix;
mod polynomial;
mod series;

pub use digit::{digit_coefficients, digit_polynomial, simple_zeta_poly};
pub use matrix::Matrix;
pub use polynomial::Polynomial;
pub use series::{series_reciprocal, PowerSeries};
