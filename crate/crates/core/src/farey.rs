//! Reduced fractions and the Stern–Brocot (Farey) tree on `(0, 1)`.
//!
//! The root of the tree is `1/2`; level `n` holds `2^(n-1)` fractions and the
//! children of `q` are `q^L ⊕ q` and `q ⊕ q^R`, where `(q^L, q^R)` are the
//! two compatible fractions whose mediant is `q`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deepest level [`enumerate_level`] will materialize.
pub const MAX_LEVEL: usize = 24;

/// A non-negative fraction `num/den` in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        if num.is_negative() || den.is_negative() {
            return Err(Error::Domain(format!("negative fraction {num}/{den}")));
        }
        let g = num.gcd(&den);
        Ok(Fraction {
            num: num / &g,
            den: den / &g,
        })
    }

    pub fn zero() -> Self {
        Fraction {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Fraction {
            num: BigInt::one(),
            den: BigInt::one(),
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// Numerator as a machine integer, for loops over small parameters.
    pub fn num_usize(&self) -> Result<usize> {
        self.num
            .to_usize()
            .ok_or_else(|| Error::Resource(format!("numerator of {self} exceeds usize")))
    }

    pub fn den_usize(&self) -> Result<usize> {
        self.den
            .to_usize()
            .ok_or_else(|| Error::Resource(format!("denominator of {self} exceeds usize")))
    }

    /// `0 < self < 1`.
    pub fn is_interior(&self) -> bool {
        self.num.is_positive() && self.num < self.den
    }

    /// `0 <= self <= 1`.
    pub fn in_closed_unit(&self) -> bool {
        self.num <= self.den
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), self.den.clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// `1 - self`, defined on `[0, 1]`.
    pub fn complement(&self) -> Result<Self> {
        if !self.in_closed_unit() {
            return Err(Error::Domain(format!("{self} is not in [0, 1]")));
        }
        Fraction::new(&self.den - &self.num, self.den.clone())
    }

    /// `self` with the form required by tree operations.
    pub fn require_interior(&self) -> Result<()> {
        if self.is_interior() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{self} is not in the open interval (0, 1)"
            )))
        }
    }

    /// `|ad - bc|`.
    fn cross(&self, other: &Fraction) -> BigInt {
        (&self.num * &other.den - &other.num * &self.den).abs()
    }

    pub fn is_compatible(&self, other: &Fraction) -> bool {
        self.cross(other).is_one()
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Parses `a/b`. Decimal input is rejected: every parameter must be exact.
impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected a fraction `a/b`, got `{s}`")))?;
        let parse = |part: &str| {
            let part = part.trim();
            if part.is_empty() || !part.chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::Parse(format!(
                    "`{part}` is not a non-negative integer"
                )));
            }
            BigInt::from_str(part).map_err(|e| Error::Parse(e.to_string()))
        };
        Fraction::new(parse(a)?, parse(b)?)
    }
}

impl TryFrom<String> for Fraction {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<Fraction> for String {
    fn from(value: Fraction) -> String {
        value.to_string()
    }
}

/// Shorthand used throughout the tests and the CLI.
///
/// # Panics
/// Panics if `den == 0`.
pub fn frac(num: u64, den: u64) -> Fraction {
    Fraction::new(num, den).expect("valid fraction")
}

/// Direction of a tree edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Turn {
    L,
    R,
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Turn::L => write!(f, "L"),
            Turn::R => write!(f, "R"),
        }
    }
}

/// Parents, children and level of a tree vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FareyRelatives {
    pub left_parent: Fraction,
    pub right_parent: Fraction,
    pub left_child: Fraction,
    pub right_child: Fraction,
    pub level: usize,
}

/// The Farey sum `p ⊕ q` of compatible `p < q`.
pub fn mediant(p: &Fraction, q: &Fraction) -> Result<Fraction> {
    if !p.is_compatible(q) {
        return Err(Error::Incompatible {
            left: p.to_string(),
            right: q.to_string(),
        });
    }
    if p >= q {
        return Err(Error::Order {
            left: p.to_string(),
            right: q.to_string(),
        });
    }
    // compatible operands give a reduced sum
    Ok(Fraction {
        num: &p.num + &q.num,
        den: &p.den + &q.den,
    })
}

/// The unique compatible pair `(q^L, q^R)` with `q^L ⊕ q^R = q`.
///
/// Uses the modular inverse of the numerator: the left parent `c/d` solves
/// `a·d - b·c = 1` with `1 <= d <= b`.
pub fn parents(q: &Fraction) -> Result<(Fraction, Fraction)> {
    q.require_interior()?;
    let (a, b) = (&q.num, &q.den);
    let ext = a.extended_gcd(b);
    // ext.x * a + ext.y * b = 1
    let d = ext.x.mod_floor(b);
    let d = if d.is_zero() { b.clone() } else { d };
    let c = (a * &d - BigInt::one()) / b;
    let left = Fraction { num: c, den: d };
    let right = Fraction {
        num: a - &left.num,
        den: b - &left.den,
    };
    Ok((left, right))
}

/// Continued fraction partial quotients of `num/den`.
fn partial_quotients(q: &Fraction) -> Vec<BigInt> {
    let (mut a, mut b) = (q.num.clone(), q.den.clone());
    let mut out = Vec::new();
    while !b.is_zero() {
        let (quot, rem) = a.div_rem(&b);
        out.push(quot);
        a = b;
        b = rem;
    }
    out
}

/// Tree level of an interior fraction (`1/2` is level 1).
pub fn level(q: &Fraction) -> Result<usize> {
    q.require_interior()?;
    let total: BigInt = partial_quotients(q).iter().sum();
    (total - 1u32)
        .to_usize()
        .ok_or_else(|| Error::Resource(format!("level of {q} exceeds usize")))
}

pub fn relatives(q: &Fraction) -> Result<FareyRelatives> {
    let (left_parent, right_parent) = parents(q)?;
    let left_child = mediant(&left_parent, q)?;
    let right_child = mediant(q, &right_parent)?;
    Ok(FareyRelatives {
        left_parent,
        right_parent,
        left_child,
        right_child,
        level: level(q)?,
    })
}

/// One step of a root path: the vertex and the turn taken out of it
/// (`None` on the final vertex).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStep {
    pub vertex: Fraction,
    pub turn: Option<Turn>,
}

/// The directed path from `1/2` down to `q`.
pub fn path_to_root(q: &Fraction) -> Result<Vec<PathStep>> {
    q.require_interior()?;
    let mut lo = Fraction::zero();
    let mut hi = Fraction::one();
    let mut path = Vec::new();
    loop {
        let mid = mediant(&lo, &hi)?;
        match q.cmp(&mid) {
            Ordering::Equal => {
                path.push(PathStep {
                    vertex: mid,
                    turn: None,
                });
                return Ok(path);
            }
            Ordering::Less => {
                path.push(PathStep {
                    vertex: mid.clone(),
                    turn: Some(Turn::L),
                });
                hi = mid;
            }
            Ordering::Greater => {
                path.push(PathStep {
                    vertex: mid.clone(),
                    turn: Some(Turn::R),
                });
                lo = mid;
            }
        }
    }
}

/// Level `n` of the tree in increasing order.
pub fn enumerate_level(n: usize) -> Result<Vec<Fraction>> {
    enumerate_level_capped(n, MAX_LEVEL)
}

pub fn enumerate_level_capped(n: usize, cap: usize) -> Result<Vec<Fraction>> {
    if n == 0 {
        return Err(Error::Domain("tree levels start at 1".into()));
    }
    if n > cap {
        return Err(Error::Resource(format!(
            "level {n} exceeds the depth cap {cap}"
        )));
    }
    // Each level is the set of mediants of adjacent entries in the running
    // sorted list of all vertices (with 0/1 and 1/1 at the ends).
    let mut all = vec![Fraction::zero(), Fraction::one()];
    let mut current = Vec::new();
    for _ in 0..n {
        current = all
            .windows(2)
            .map(|w| mediant(&w[0], &w[1]))
            .collect::<Result<Vec<_>>>()?;
        let mut merged = Vec::with_capacity(all.len() + current.len());
        for (i, left) in all.iter().enumerate() {
            merged.push(left.clone());
            if let Some(mid) = current.get(i) {
                merged.push(mid.clone());
            }
        }
        all = merged;
    }
    Ok(current)
}

/// Every vertex of levels `1..=depth`, level by level.
pub fn enumerate_tree(depth: usize) -> Result<Vec<Vec<Fraction>>> {
    (1..=depth).map(enumerate_level).collect()
}

/// All reduced fractions in `(0, 1)` with denominator at most `max_den`,
/// increasing.
pub fn fractions_up_to(max_den: usize) -> Vec<Fraction> {
    let mut out = Vec::new();
    for b in 2..=max_den {
        for a in 1..b {
            if a.gcd(&b) == 1 {
                out.push(frac(a as u64, b as u64));
            }
        }
    }
    out.sort();
    out
}
