//! The reduced Burau representation and its specialization at `z = -1`.
//!
//! Generators follow Birman's convention. For `n >= 3` the image of `σ_i`
//! is the identity of size `n - 1` except near row `i`:
//!
//! * `σ_1`: top-left block `[[-z, 1], [0, 1]]`;
//! * `σ_i`, `1 < i < n - 1`: row `i` reads `z, -z, 1` in columns `i-1, i, i+1`;
//! * `σ_{n-1}`: bottom-right block `[[1, 0], [z, -z]]`.
//!
//! For `n = 2`, `σ_1 ↦ [-z]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::farey::Fraction;
use crate::intpoly::{digit_polynomial, Matrix};
use crate::scalar::Ring;
use crate::{IntPolynomial, SmallMatrix};

/// Longest word [`search_braid`] will enumerate.
pub const MAX_SEARCH_LEN: usize = 12;

/// `Σ c_k z^k` with finitely many nonzero `c_k`, `k ∈ Z`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial<T> {
    /// Lowest exponent; meaningless for the zero polynomial.
    low: i64,
    /// Trimmed on both ends.
    coeffs: Vec<T>,
}

impl<T: Ring> LaurentPolynomial<T> {
    pub fn new(low: i64, coeffs: Vec<T>) -> Self {
        let mut p = LaurentPolynomial { low, coeffs };
        p.trim();
        p
    }

    pub fn monomial(c: T, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    /// `z`.
    pub fn z() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn z_inv() -> Self {
        Self::monomial(T::one(), -1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.low = if self.coeffs.is_empty() {
            0
        } else {
            self.low + lead as i64
        };
    }

    pub fn low_degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, k: i64) -> T {
        let idx = k - self.low;
        if idx < 0 {
            return T::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn eval(&self, z: &T) -> Option<T>
    where
        T: std::ops::Div<Output = T>,
    {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z.clone() + c.clone();
        }
        let mut scale = T::one();
        for _ in 0..self.low.unsigned_abs() {
            scale = scale * z.clone();
        }
        if self.low >= 0 {
            Some(acc * scale)
        } else if scale.is_zero() {
            None
        } else {
            Some(acc / scale)
        }
    }

    /// `±z^k`.
    pub fn is_signed_monomial(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_sign_unit()
    }
}

impl LaurentPolynomial<BigInt> {
    /// Value at `z = -1`.
    pub fn at_minus_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (i, c)| {
                if (self.low + i as i64) % 2 == 0 {
                    acc + c
                } else {
                    acc - c
                }
            })
    }
}

impl<T: Ring> Zero for LaurentPolynomial<T> {
    fn zero() -> Self {
        LaurentPolynomial {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for LaurentPolynomial<T> {
    fn one() -> Self {
        Self::monomial(T::one(), 0)
    }
}

impl<T: Ring> Add for LaurentPolynomial<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().max(rhs.high_degree()).expect("nonzero");
        let coeffs = (low..=high).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Self::new(low, coeffs)
    }
}

impl<T: Ring> Neg for LaurentPolynomial<T> {
    type Output = Self;

    fn neg(self) -> Self {
        LaurentPolynomial {
            low: self.low,
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<T: Ring> Sub for LaurentPolynomial<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Mul for LaurentPolynomial<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(self.low + rhs.low, coeffs)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for LaurentPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let k = self.low + i as i64;
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "z")?,
                1 => write!(f, "{mag}*z")?,
                _ if unit => write!(f, "z^{k}")?,
                _ => write!(f, "{mag}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for LaurentPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl<T: Ring + fmt::Display> Serialize for LaurentPolynomial<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

pub type LaurentMatrix = Matrix<LaurentPolynomial<BigInt>>;

/// A word in the Artin generators of `B_n`; letter `±i` is `σ_i^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Domain(format!(
                "braids need at least 2 strands, got {strands}"
            )));
        }
        if let Some(bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::Domain(format!(
                "generator {bad} is not in B_{strands}"
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses `"1,2,-1,3"`; the empty string is the trivial braid.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let letters = if text.is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(|s| {
                    i32::from_str(s.trim())
                        .map_err(|e| Error::Parse(format!("braid letter {s:?}: {e}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::Dimension(format!(
                "cannot compose braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// The full twist `Δ_n^2 = (σ_1 ⋯ σ_{n-1})^n`.
pub fn full_twist(strands: usize) -> Result<BraidWord> {
    let round: Vec<i32> = (1..strands as i32).collect();
    BraidWord::new(strands, round.repeat(strands))
}

/// Image of `σ_i^{sign}` with entries drawn from `z` and `z^{-1}`.
fn generator_matrix<T: Ring>(strands: usize, letter: i32, z: &T, z_inv: &T) -> Matrix<T> {
    let d = strands - 1;
    let i = letter.unsigned_abs() as usize;
    let mut g = Matrix::identity(d);
    let one = T::one();
    if d == 1 {
        g.set(
            0,
            0,
            if letter > 0 {
                -z.clone()
            } else {
                -z_inv.clone()
            },
        );
        return g;
    }
    let r = i - 1;
    if letter > 0 {
        if i > 1 {
            g.set(r, r - 1, z.clone());
        }
        g.set(r, r, -z.clone());
        if i < d {
            g.set(r, r + 1, one);
        }
    } else {
        if i > 1 {
            g.set(r, r - 1, one);
        }
        g.set(r, r, -z_inv.clone());
        if i < d {
            g.set(r, r + 1, z_inv.clone());
        }
    }
    g
}

fn image<T: Ring>(w: &BraidWord, z: &T, z_inv: &T) -> Matrix<T> {
    let d = w.strands - 1;
    w.letters.iter().fold(Matrix::identity(d), |acc, &l| {
        acc.mul(&generator_matrix(w.strands, l, z, z_inv))
            .expect("square matrices of equal size")
    })
}

/// `B(w, z)`, a product of generator images read left to right.
pub fn reduced_burau(w: &BraidWord) -> LaurentMatrix {
    image(w, &LaurentPolynomial::z(), &LaurentPolynomial::z_inv())
}

/// `B(w, -1)` over the integers.
pub fn burau_at_minus_one(w: &BraidWord) -> SmallMatrix {
    image(w, &-1i64, &-1i64)
}

/// `det(tI - B(w, -1))`.
pub fn symplectic_poly(w: &BraidWord) -> IntPolynomial {
    let b = burau_at_minus_one(w).map(|&x| BigInt::from(x));
    b.char_poly().expect("square matrix")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DigitMatch {
    /// `χ(w) = D_f(t)`.
    Plus,
    /// `χ(w) = ±D_f(-t)`.
    Minus,
    None,
}

impl DigitMatch {
    pub fn flipped(self) -> Self {
        match self {
            DigitMatch::Plus => DigitMatch::Minus,
            DigitMatch::Minus => DigitMatch::Plus,
            DigitMatch::None => DigitMatch::None,
        }
    }
}

fn classify(chi: &IntPolynomial, d: &IntPolynomial, d_minus: &IntPolynomial) -> DigitMatch {
    if chi == d {
        DigitMatch::Plus
    } else if chi == d_minus {
        DigitMatch::Minus
    } else {
        DigitMatch::None
    }
}

/// Compares `χ(w)` with the digit polynomial of `Φ⁻¹(q) ∈ PA(m)`.
pub fn match_digit(w: &BraidWord, m: u32, q: &Fraction) -> Result<DigitMatch> {
    let d = digit_polynomial(m, q)?;
    if d.degree() != Some(w.strands - 1) {
        return Err(Error::Dimension(format!(
            "B_{} has Burau dimension {}, but deg D_f = {}",
            w.strands,
            w.strands - 1,
            d.degree().unwrap_or(0)
        )));
    }
    let d_minus = d.negate_variable().normalize_sign_unit();
    Ok(classify(&symplectic_poly(w), &d, &d_minus))
}

/// Depth-first walk over freely reduced words of exactly `len` letters in
/// shortlex order, returning the first whose symplectic polynomial lies in
/// `targets`. `abort` is polled so a sibling branch can cancel the walk.
struct Walker<'a> {
    alphabet: &'a [i32],
    generators: &'a [SmallMatrix],
    targets: &'a [IntPolynomial],
    abort: &'a dyn Fn() -> bool,
}

impl Walker<'_> {
    fn walk(
        &self,
        prefix: &mut Vec<usize>,
        product: &SmallMatrix,
        len: usize,
    ) -> Option<Vec<usize>> {
        if (self.abort)() {
            return None;
        }
        if prefix.len() == len {
            let chi = product
                .map(|&x| BigInt::from(x))
                .char_poly()
                .expect("square");
            return self.targets.contains(&chi).then(|| prefix.clone());
        }
        for (idx, &letter) in self.alphabet.iter().enumerate() {
            // x x^{-1} never starts a shortlex-minimal match
            if prefix.last().is_some_and(|&p| self.alphabet[p] == -letter) {
                continue;
            }
            let next = product.mul(&self.generators[idx]).expect("square");
            prefix.push(idx);
            if let Some(found) = self.walk(prefix, &next, len) {
                return Some(found);
            }
            prefix.pop();
        }
        None
    }
}

/// The shortlex-first braid on `|PC(f)|` strands of length at most `max_len`
/// whose symplectic polynomial is `D_f(±t)`.
///
/// The alphabet is ordered `σ_1, σ_1^{-1}, σ_2, σ_2^{-1}, ...`. Words with an
/// adjacent cancelling pair are skipped: their reduced forms are shorter and
/// have the same image.
pub fn search_braid(m: u32, q: &Fraction, max_len: usize) -> Result<Option<BraidWord>> {
    if max_len > MAX_SEARCH_LEN {
        return Err(Error::Resource(format!(
            "braid search length {max_len} exceeds {MAX_SEARCH_LEN}"
        )));
    }
    let d = digit_polynomial(m, q)?;
    let strands = q.den_usize()? + 2;
    let targets = [d.clone(), d.negate_variable().normalize_sign_unit()];
    let alphabet: Vec<i32> = (1..strands as i32).flat_map(|i| [i, -i]).collect();
    let generators: Vec<SmallMatrix> = alphabet
        .iter()
        .map(|&l| generator_matrix(strands, l, &-1i64, &-1i64))
        .collect();
    if targets.contains(&symplectic_poly(&BraidWord::new(strands, Vec::new())?)) {
        return Ok(Some(BraidWord::new(strands, Vec::new())?));
    }
    for len in 1..=max_len {
        let best = AtomicUsize::new(usize::MAX);
        let found: BTreeMap<usize, Vec<usize>> = (0..alphabet.len())
            .into_par_iter()
            .filter_map(|first| {
                // a hit under an earlier first letter wins in shortlex order
                let abort = || best.load(AtomicOrdering::Relaxed) < first;
                let walker = Walker {
                    alphabet: &alphabet,
                    generators: &generators,
                    targets: &targets,
                    abort: &abort,
                };
                let hit = walker.walk(&mut vec![first], &generators[first], len)?;
                best.fetch_min(first, AtomicOrdering::Relaxed);
                Some((first, hit))
            })
            .collect();
        if let Some((_, word)) = found.into_iter().next() {
            let letters = word.into_iter().map(|i| alphabet[i]).collect();
            return Ok(Some(BraidWord::new(strands, letters)?));
        }
    }
    Ok(None)
}
