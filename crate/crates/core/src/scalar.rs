//! Scalar abstractions shared by the polynomial, matrix and series types.
//!
//! Everything in this crate that does linear algebra or polynomial arithmetic
//! is generic over a commutative ring. The exact invariants use `BigInt` and
//! `BigRational`; the search code uses `i64`; the floating cross-checks use
//! `f64`.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A commutative ring with identity.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Embeds a small integer.
    fn from_i64(value: i64) -> Self {
        let mut acc = Self::zero();
        let step = if value >= 0 {
            Self::one()
        } else {
            -Self::one()
        };
        for _ in 0..value.unsigned_abs() {
            acc = acc + step.clone();
        }
        acc
    }

    /// True when the element is `1` or `-1`.
    fn is_sign_unit(&self) -> bool {
        self.is_one() || (-self.clone()).is_one()
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = T> {}
