use std::fmt;

use serde::{Serialize, Serializer};

use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Dense square-or-rectangular matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(columns: Vec<Vec<T>>) -> Result<Self> {
        Ok(Self::from_rows(columns)?.transpose())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| T::from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j).clone() + a.clone() * rhs.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("vector length mismatch".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.rows)
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<T> {
        let n = self.require_square()?;
        Ok((0..n).fold(T::zero(), |acc, i| acc + self.get(i, i).clone()))
    }

    /// `det(tI - M)` by Berkowitz's division-free algorithm.
    pub fn char_poly(&self) -> Result<Polynomial<T>> {
        let n = self.require_square()?;
        if n == 0 {
            return Err(Error::Dimension("empty matrix".into()));
        }
        // v holds coefficients from the leading one downward
        let mut v: Vec<T> = vec![T::one()];
        for r in 0..n {
            // toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C
            let mut col = Vec::with_capacity(r + 2);
            col.push(T::one());
            col.push(-self.get(r, r).clone());
            let mut w: Vec<T> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                let dot = (0..r).fold(T::zero(), |acc, j| {
                    acc + self.get(r, j).clone() * w[j].clone()
                });
                col.push(-dot);
                w = (0..r)
                    .map(|i| {
                        (0..r).fold(T::zero(), |acc, j| {
                            acc + self.get(i, j).clone() * w[j].clone()
                        })
                    })
                    .collect();
            }
            v = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r)).fold(T::zero(), |acc, j| acc + col[i - j].clone() * v[j].clone())
                })
                .collect();
        }
        v.reverse();
        Ok(Polynomial::new(v))
    }

    /// Determinant, read off the characteristic polynomial.
    pub fn det(&self) -> Result<T> {
        let n = self.require_square()?;
        let c0 = self.char_poly()?.coeff(0);
        Ok(if n % 2 == 0 { c0 } else { -c0 })
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.cols.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Serialized as a list of rows of strings.
impl<T: fmt::Display> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .data
            .chunks(self.cols.max(1))
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        rows.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;
    type P = Polynomial<BigInt>;

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            M::identity(2).char_poly().unwrap(),
            P::from_i64s(&[1, -2, 1])
        );
        assert_eq!(
            M::zeros(3, 3).char_poly().unwrap(),
            P::from_i64s(&[0, 0, 0, 1])
        );
        let strong = M::from_i64_rows(&[&[1, 0, 2], &[1, 1, 1], &[1, 1, 0]]).unwrap();
        assert_eq!(strong.char_poly().unwrap(), P::from_i64s(&[1, -2, -2, 1]));
        assert!(M::zeros(2, 3).char_poly().is_err());
        assert!(M::zeros(0, 0).char_poly().is_err());
    }

    #[test]
    fn one_by_one_and_det() {
        let a = M::from_i64_rows(&[&[5]]).unwrap();
        assert_eq!(a.char_poly().unwrap(), P::from_i64s(&[-5, 1]));
        let b = M::from_i64_rows(&[&[2, 1], &[7, 4]]).unwrap();
        assert_eq!(b.det().unwrap(), BigInt::from(1));
    }

    #[test]
    fn powers_and_trace() {
        let w = M::from_i64_rows(&[&[1, 0, 1, 1], &[1, 1, 0, 1], &[1, 1, 0, 0], &[1, 1, 0, 0]])
            .unwrap();
        assert_eq!(w.trace().unwrap(), BigInt::from(2));
        assert_eq!(w.pow(2).unwrap().trace().unwrap(), BigInt::from(8));
        assert_eq!(w.pow(0).unwrap(), M::identity(4));
    }

    #[test]
    fn columns_round_trip() {
        let cols = vec![vec![1i64, 2], vec![3, 4]];
        let m = Matrix::<i64>::from_columns(cols.clone()).unwrap();
        assert_eq!(*m.get(0, 1), 3);
        assert_eq!(m.columns(), cols);
    }
}
