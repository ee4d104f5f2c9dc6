#![allow(dead_code)]

use num_bigint::BigInt;
use zigzag_core::{IntMatrix, IntPolynomial};

/// `det(tI - M)` by cofactor expansion along the first row. Exponential, so
/// only for small matrices.
pub fn laplace_char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.rows();
    let entries: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = IntPolynomial::constant(-m.get(i, j).clone());
                    if i == j {
                        &c + &IntPolynomial::t()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    laplace(&entries)
}

fn laplace(a: &[Vec<IntPolynomial>]) -> IntPolynomial {
    let n = a.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut total = IntPolynomial::zero();
    for col in 0..n {
        if a[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<IntPolynomial>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &a[0][col] * &laplace(&minor);
        total = if col % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}
