use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

/// Truncated power series `c_0 + c_1 t + ... + c_order t^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> PowerSeries<T> {
    /// Pads or truncates `coeffs` to `order + 1` terms.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        PowerSeries { coeffs }
    }

    pub fn from_polynomial(p: &Polynomial<T>, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(T::zero(), |acc, k| {
                    acc + self.coeffs[k].clone() * rhs.coeffs[n - k].clone()
                })
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        if !c0.is_sign_unit() {
            return Err(Error::NonUnitConstant(format!("{c0:?}")));
        }
        let mut inv: Vec<T> = Vec::with_capacity(self.coeffs.len());
        inv.push(c0.clone());
        for n in 1..self.coeffs.len() {
            let s = (1..=n).fold(T::zero(), |acc, k| {
                acc + self.coeffs[k].clone() * inv[n - k].clone()
            });
            // c0 is its own inverse
            inv.push(-(s * c0.clone()));
        }
        Ok(PowerSeries { coeffs: inv })
    }

    /// Power sums `N_1, ..., N_order` with `z = exp(Σ N_i t^i / i)`,
    /// recovered from `t z'/z` (Newton's identities). Requires `z_0 = 1`.
    pub fn log_derivative_traces(&self) -> Result<Vec<T>> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant(format!("{:?}", self.coeffs[0])));
        }
        let mut n_vals: Vec<T> = Vec::with_capacity(self.order());
        for n in 1..=self.order() {
            let s = (1..n).fold(T::zero(), |acc, k| {
                acc + n_vals[k - 1].clone() * self.coeffs[n - k].clone()
            });
            n_vals.push(T::from_i64(n as i64) * self.coeffs[n].clone() - s);
        }
        Ok(n_vals)
    }
}

impl<T: Field> PowerSeries<T> {
    /// `exp(Σ_{i>=1} N_i t^i / i)` for power sums `N_1, ..., N_order`.
    pub fn exp_of_traces(traces: &[T]) -> Self {
        let order = traces.len();
        let mut z: Vec<T> = Vec::with_capacity(order + 1);
        z.push(T::one());
        for n in 1..=order {
            let s = (1..=n).fold(T::zero(), |acc, k| {
                acc + traces[k - 1].clone() * z[n - k].clone()
            });
            z.push(s / T::from_i64(n as i64));
        }
        PowerSeries { coeffs: z }
    }
}

/// The inverse of an integer polynomial with unit constant term, as a
/// rational series.
pub fn series_reciprocal(p: &Polynomial<BigInt>, order: usize) -> Result<PowerSeries<BigRational>> {
    let lifted = p.map(|c| BigRational::from_integer(c.clone()));
    PowerSeries::from_polynomial(&lifted, order).reciprocal()
}

impl<T: Ring + fmt::Display + Signed> fmt::Display for PowerSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = Polynomial::new(self.coeffs.clone());
        if poly.is_zero() {
            write!(f, "0")?;
        } else {
            // ascending order reads naturally for series
            let mut first = true;
            for (k, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mag = c.abs();
                let sign = if c.is_negative() { "-" } else { "+" };
                if first {
                    if c.is_negative() {
                        write!(f, "-")?;
                    }
                } else {
                    write!(f, " {sign} ")?;
                }
                first = false;
                match k {
                    0 => write!(f, "{mag}")?,
                    1 => write!(f, "{mag}*t")?,
                    _ => write!(f, "{mag}*t^{k}")?,
                }
            }
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl<T: fmt::Debug> fmt::Debug for PowerSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("PowerSeries").field(&self.coeffs).finish()
    }
}

impl<T: fmt::Display> Serialize for PowerSeries<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}
