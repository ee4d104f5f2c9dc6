//! Certified real algebraic numbers.
//!
//! An [`AlgebraicReal`] is a root of an integer polynomial together with a
//! dyadic isolating interval. All decisions are exact: signs are read from
//! integer evaluations at dyadic points, roots are counted with Sturm
//! sequences, and zero tests go through a polynomial gcd.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::IntPolynomial;

/// Bits of precision every new enclosure is refined to.
pub const DEFAULT_BITS: u32 = 64;

/// Precision cap when separating two enclosures.
const MAX_SEPARATION_BITS: u32 = 4096;

fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// `2^(e·d) · p(n / 2^e)`, an integer with the sign of `p(n / 2^e)`.
fn scaled_eval(p: &IntPolynomial, n: &BigInt, e: u32) -> BigInt {
    let c = p.coeffs();
    let Some(d) = p.degree() else {
        return BigInt::zero();
    };
    let mut acc = c[d].clone();
    for k in (0..d).rev() {
        acc = acc * n + (&c[k] << (e as usize * (d - k)));
    }
    acc
}

fn sign_dyadic(p: &IntPolynomial, n: &BigInt, e: u32) -> i8 {
    sign_of(&scaled_eval(p, n, e))
}

/// Interval Horner evaluation of `p` over `[lo, hi] / 2^e`; the sign when it
/// is constant on the whole interval.
fn sign_on_range(p: &IntPolynomial, lo: &BigInt, hi: &BigInt, e: u32) -> Option<i8> {
    let c = p.coeffs();
    let d = p.degree()?;
    let mut a = c[d].clone();
    let mut b = c[d].clone();
    for k in (0..d).rev() {
        let products = [&a * lo, &a * hi, &b * lo, &b * hi];
        let shift = &c[k] << (e as usize * (d - k));
        a = products.iter().min().expect("four products").clone() + &shift;
        b = products.iter().max().expect("four products").clone() + &shift;
    }
    if a.is_positive() {
        Some(1)
    } else if b.is_negative() {
        Some(-1)
    } else {
        None
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...` with content removed.
fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![p.clone()];
    let dp = p.derivative();
    if dp.is_zero() {
        return seq;
    }
    seq.push(dp.content_reduced());
    loop {
        let n = seq.len();
        let r = seq[n - 2]
            .pseudo_rem(&seq[n - 1])
            .expect("chain entries are nonzero");
        if r.is_zero() {
            return seq;
        }
        seq.push((-r).content_reduced());
    }
}

fn variations(seq: &[IntPolynomial], n: &BigInt, e: u32) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in seq {
        let s = sign_dyadic(p, n, e);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Distinct real roots of the chain's head in the open interval
/// `(lo, hi) / 2^e`; neither endpoint may be a root.
fn count_roots(seq: &[IntPolynomial], lo: &BigInt, hi: &BigInt, e: u32) -> usize {
    variations(seq, lo, e).saturating_sub(variations(seq, hi, e))
}

/// Sign variations of `(1 + x)^d p((lo + hi·x) / (1 + x))`, an upper bound
/// on the roots of `p` in `(lo, hi)` with the same parity.
fn descartes_variations(p: &IntPolynomial, lo: &BigInt, hi: &BigInt) -> usize {
    let Some(d) = p.degree() else {
        return 0;
    };
    let shifted = p.compose(&IntPolynomial::new(vec![lo.clone(), hi - lo]));
    let mut rev = shifted.coeffs().to_vec();
    rev.resize(d + 1, BigInt::zero());
    rev.reverse();
    let moved = IntPolynomial::new(rev).compose(&IntPolynomial::from_i64s(&[1, 1]));
    let mut count = 0;
    let mut last = 0i8;
    for c in moved.coeffs() {
        let s = sign_of(c);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

fn dyadic_to_rational(n: &BigInt, e: u32) -> BigRational {
    BigRational::new(n.clone(), BigInt::one() << e as usize)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Enclosure {
    /// The number is exactly `num / 2^exp`.
    Point { num: BigInt, exp: u32 },
    /// A single simple root of the isolating polynomial lies strictly inside
    /// `(lo, hi) / 2^exp`; `sign_lo` is its sign at `lo`.
    Interval {
        lo: BigInt,
        hi: BigInt,
        exp: u32,
        sign_lo: i8,
    },
}

impl Enclosure {
    fn bits(&self) -> u32 {
        match self {
            Enclosure::Point { .. } => u32::MAX,
            Enclosure::Interval { lo, hi, exp, .. } => {
                // width = (hi - lo) / 2^exp >= 2^(exp - bits(hi - lo))
                let w = (hi - lo).bits() as i64;
                (i64::from(*exp) - w + 1).max(0) as u32
            }
        }
    }

    fn bounds(&self) -> (BigRational, BigRational) {
        match self {
            Enclosure::Point { num, exp } => {
                let x = dyadic_to_rational(num, *exp);
                (x.clone(), x)
            }
            Enclosure::Interval { lo, hi, exp, .. } => {
                (dyadic_to_rational(lo, *exp), dyadic_to_rational(hi, *exp))
            }
        }
    }

    /// One bisection step against the isolating polynomial.
    fn bisect(&self, iso: &IntPolynomial) -> Enclosure {
        match self {
            Enclosure::Point { .. } => self.clone(),
            Enclosure::Interval {
                lo,
                hi,
                exp,
                sign_lo,
            } => {
                let exp = exp + 1;
                let lo2: BigInt = lo << 1usize;
                let hi2: BigInt = hi << 1usize;
                let mid = lo + hi;
                match sign_dyadic(iso, &mid, exp) {
                    0 => Enclosure::Point { num: mid, exp },
                    s if s == *sign_lo => Enclosure::Interval {
                        lo: mid,
                        hi: hi2,
                        exp,
                        sign_lo: *sign_lo,
                    },
                    _ => Enclosure::Interval {
                        lo: lo2,
                        hi: mid,
                        exp,
                        sign_lo: *sign_lo,
                    },
                }
            }
        }
    }
}

/// A real root of an integer polynomial with a refinable isolating interval.
///
/// Refinement replaces the enclosure under a write lock with a strictly
/// narrower one computed outside the lock, so concurrent readers always see
/// a valid enclosure.
pub struct AlgebraicReal {
    defining: IntPolynomial,
    /// Exactly one root, a simple one, lies in the enclosure.
    isolating: IntPolynomial,
    enclosure: RwLock<Enclosure>,
}

impl Clone for AlgebraicReal {
    fn clone(&self) -> Self {
        AlgebraicReal {
            defining: self.defining.clone(),
            isolating: self.isolating.clone(),
            enclosure: RwLock::new(self.snapshot()),
        }
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraicReal")
            .field("defining", &self.defining.to_string())
            .field("enclosure", &self.snapshot())
            .finish()
    }
}

impl AlgebraicReal {
    /// The root of `defining` in the open interval `(lo, hi)`, which must
    /// contain exactly one distinct real root.
    pub fn in_interval(defining: &IntPolynomial, lo: &BigInt, hi: &BigInt) -> Result<Self> {
        let (s_lo, s_hi) = (sign_dyadic(defining, lo, 0), sign_dyadic(defining, hi, 0));
        if s_lo == 0 || s_hi == 0 {
            return Err(Error::Certification(format!(
                "interval endpoint is a root of {defining}"
            )));
        }
        let (iso, count) = if descartes_variations(defining, lo, hi) == 1 {
            // one sign variation: a single simple root in (lo, hi)
            (defining.clone(), 1)
        } else {
            let iso = defining.squarefree_part()?;
            let count = count_roots(&sturm_sequence(&iso), lo, hi, 0);
            (iso, count)
        };
        let s_lo = sign_dyadic(&iso, lo, 0);
        let s_hi = sign_dyadic(&iso, hi, 0);
        if count != 1 || s_lo == s_hi {
            return Err(Error::Certification(format!(
                "{defining} has {count} roots in ({lo}, {hi})"
            )));
        }
        let x = AlgebraicReal {
            defining: defining.clone(),
            isolating: iso,
            enclosure: RwLock::new(Enclosure::Interval {
                lo: lo.clone(),
                hi: hi.clone(),
                exp: 0,
                sign_lo: s_lo,
            }),
        };
        x.refine_bits(DEFAULT_BITS);
        Ok(x)
    }

    /// The integer `n` as an algebraic number with defining polynomial `t - n`.
    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        let p = IntPolynomial::new(vec![-n.clone(), BigInt::one()]);
        AlgebraicReal {
            defining: p.clone(),
            isolating: p,
            enclosure: RwLock::new(Enclosure::Point { num: n, exp: 0 }),
        }
    }

    /// The largest real root of `p`.
    pub fn largest_root(p: &IntPolynomial) -> Result<Self> {
        let mut iso = p.squarefree_part()?;
        let d = iso.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 {
            return Err(Error::Certification(format!("{p} has no roots")));
        }
        // Cauchy bound rounded up to a power of two
        let c = iso.coeffs();
        let lead = c[d].abs();
        let max_ratio = c[..d]
            .iter()
            .map(|x| (x.abs() + &lead - 1u32) / &lead)
            .max()
            .unwrap_or_default();
        let bound_bits = (max_ratio + 1u32).bits() as usize;
        let mut lo = -(BigInt::one() << bound_bits);
        let mut hi = BigInt::one() << bound_bits;
        let mut e = 0u32;
        let mut seq = sturm_sequence(&iso);
        if count_roots(&seq, &lo, &hi, e) == 0 {
            return Err(Error::Certification(format!("{p} has no real roots")));
        }
        loop {
            if count_roots(&seq, &lo, &hi, e) == 1 {
                break;
            }
            e += 1;
            lo <<= 1usize;
            hi <<= 1usize;
            let mid = (&lo + &hi) >> 1usize;
            if sign_dyadic(&iso, &mid, e) == 0 {
                // deflate the rational root `mid / 2^e`
                let linear = IntPolynomial::new(vec![-mid.clone(), BigInt::one() << e as usize]);
                let deflated = iso.div_exact(&linear.primitive_part())?;
                let dseq = sturm_sequence(&deflated);
                if deflated.degree() == Some(0) || count_roots(&dseq, &mid, &hi, e) == 0 {
                    return Ok(AlgebraicReal {
                        defining: p.clone(),
                        isolating: linear.primitive_part(),
                        enclosure: RwLock::new(Enclosure::Point { num: mid, exp: e }),
                    });
                }
                iso = deflated;
                seq = dseq;
                lo = mid;
            } else if count_roots(&seq, &mid, &hi, e) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let sign_lo = sign_dyadic(&iso, &lo, e);
        let x = AlgebraicReal {
            defining: p.clone(),
            isolating: iso,
            enclosure: RwLock::new(Enclosure::Interval {
                lo,
                hi,
                exp: e,
                sign_lo,
            }),
        };
        x.refine_bits(DEFAULT_BITS);
        Ok(x)
    }

    pub fn defining_poly(&self) -> &IntPolynomial {
        &self.defining
    }

    fn snapshot(&self) -> Enclosure {
        self.enclosure.read().expect("enclosure lock").clone()
    }

    /// Current enclosure `[lo, hi]` (equal endpoints for an exact point).
    pub fn bounds(&self) -> (BigRational, BigRational) {
        self.snapshot().bounds()
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.snapshot(), Enclosure::Point { .. })
    }

    pub fn width(&self) -> BigRational {
        let (lo, hi) = self.bounds();
        hi - lo
    }

    pub fn width_f64(&self) -> f64 {
        self.width().to_f64().unwrap_or(f64::INFINITY).next_up()
    }

    /// Outward-rounded floating enclosure.
    pub fn bounds_f64(&self) -> (f64, f64) {
        let (lo, hi) = self.bounds();
        let lo = lo.to_f64().unwrap_or(f64::NEG_INFINITY).next_down();
        let hi = hi.to_f64().unwrap_or(f64::INFINITY).next_up();
        (lo, hi)
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.bounds();
        ((lo + hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Narrows the enclosure to width at most `2^-bits`.
    pub fn refine_bits(&self, bits: u32) {
        let mut enc = self.snapshot();
        if enc.bits() >= bits {
            return;
        }
        while enc.bits() < bits {
            enc = enc.bisect(&self.isolating);
        }
        let mut guard = self.enclosure.write().expect("enclosure lock");
        if guard.bits() < enc.bits() {
            *guard = enc;
        }
    }

    /// Narrows the enclosure to width at most `width`.
    pub fn refine_to(&self, width: f64) {
        let bits = if width >= 1.0 {
            0
        } else {
            (-width.log2()).ceil().max(0.0) as u32 + 1
        };
        self.refine_bits(bits);
    }

    fn bisect_once(&self) -> Enclosure {
        let enc = self.snapshot().bisect(&self.isolating);
        let mut guard = self.enclosure.write().expect("enclosure lock");
        if guard.bits() < enc.bits() {
            *guard = enc.clone();
        }
        guard.clone()
    }

    /// Sign of `p` at this number: `0` exactly when the number is a root.
    pub fn sign_at(&self, p: &IntPolynomial) -> i8 {
        if p.is_zero() {
            return 0;
        }
        let mut enc = self.snapshot();
        match &enc {
            Enclosure::Point { num, exp } => return sign_dyadic(p, num, *exp),
            Enclosure::Interval { lo, hi, exp, .. } => {
                if let Some(s) = sign_on_range(p, lo, hi, *exp) {
                    return s;
                }
            }
        }
        // zero test: the root is shared iff gcd(p, iso) changes sign inside
        let g = p.gcd(&self.isolating);
        if g.degree().is_some_and(|d| d > 0) {
            if let Enclosure::Interval { lo, hi, exp, .. } = &enc {
                let (a, b) = (sign_dyadic(&g, lo, *exp), sign_dyadic(&g, hi, *exp));
                if a != b {
                    return 0;
                }
            }
        }
        loop {
            match &enc {
                Enclosure::Point { num, exp } => return sign_dyadic(p, num, *exp),
                Enclosure::Interval { lo, hi, exp, .. } => {
                    if let Some(s) = sign_on_range(p, lo, hi, *exp) {
                        return s;
                    }
                }
            }
            enc = self.bisect_once();
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        // sign of (den·t - num) at this number
        let p = IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()]);
        let s = self.sign_at(&p) * sign_of(r.denom());
        s.cmp(&0)
    }

    /// Whether both are the same real number.
    pub fn same_number(&self, other: &AlgebraicReal) -> bool {
        self.compare(other) == Ordering::Equal
    }

    /// Refines both until disjoint; `None` if they never separate within
    /// the precision cap.
    fn separate(&self, other: &AlgebraicReal) -> Option<Ordering> {
        let mut bits = DEFAULT_BITS;
        loop {
            let (a_lo, a_hi) = self.bounds();
            let (b_lo, b_hi) = other.bounds();
            if a_hi < b_lo {
                return Some(Ordering::Less);
            }
            if b_hi < a_lo {
                return Some(Ordering::Greater);
            }
            if self.is_exact() && other.is_exact() {
                return None;
            }
            if bits >= MAX_SEPARATION_BITS {
                return None;
            }
            bits *= 2;
            self.refine_bits(bits);
            other.refine_bits(bits);
        }
    }

    /// Exact order between two algebraic reals.
    pub fn compare(&self, other: &AlgebraicReal) -> Ordering {
        let g = self.isolating.gcd(&other.isolating);
        if g.degree().is_some_and(|d| d > 0) && self.sign_at(&g) == 0 && other.sign_at(&g) == 0 {
            // both are roots of g; they coincide iff a single root of g
            // lies in the hull of the two enclosures
            if let Some(ord) = self.separate_with_roots(other, &g) {
                return ord;
            }
            return Ordering::Equal;
        }
        self.separate(other)
            .expect("distinct algebraic numbers separate")
    }

    fn separate_with_roots(&self, other: &AlgebraicReal, g: &IntPolynomial) -> Option<Ordering> {
        let seq = sturm_sequence(g);
        let mut bits = DEFAULT_BITS;
        loop {
            let (a_lo, a_hi) = self.bounds();
            let (b_lo, b_hi) = other.bounds();
            if a_hi < b_lo {
                return Some(Ordering::Less);
            }
            if b_hi < a_lo {
                return Some(Ordering::Greater);
            }
            let lo = if a_lo < b_lo { a_lo } else { b_lo };
            let hi = if a_hi > b_hi { a_hi } else { b_hi };
            if lo == hi {
                return None;
            }
            // dyadic endpoints share a power-of-two denominator
            let den = lo.denom().max(hi.denom()).clone();
            let e = (den.bits() - 1) as u32;
            let scale = BigRational::from_integer(den);
            let lo_n = (&lo * &scale).to_integer();
            let hi_n = (&hi * &scale).to_integer();
            if sign_dyadic(g, &lo_n, e) != 0
                && sign_dyadic(g, &hi_n, e) != 0
                && count_roots(&seq, &lo_n, &hi_n, e) == 1
            {
                return None;
            }
            bits *= 2;
            self.refine_bits(bits);
            other.refine_bits(bits);
        }
    }

    /// Decimal rendering `mid ± width`.
    pub fn render(&self) -> String {
        format!("{} ± {:.1e}", self.to_f64(), self.width_f64())
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `λ(f)`: the unique root of the digit polynomial in `(m, m + 1)`.
pub fn perron_root(m: u32, d: &IntPolynomial) -> Result<AlgebraicReal> {
    let lo = BigInt::from(m);
    let hi = BigInt::from(m + 1);
    AlgebraicReal::in_interval(d, &lo, &hi)
}

/// `numer(λ) / λ^shift` for a fixed positive base `λ`.
#[derive(Clone)]
pub struct LambdaExpression {
    numer: IntPolynomial,
    shift: u32,
    base: Arc<AlgebraicReal>,
}

impl fmt::Debug for LambdaExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaExpression({self})")
    }
}

impl fmt::Display for LambdaExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numer = self.numer.to_string().replace('t', "λ");
        match self.shift {
            0 => write!(f, "{numer}"),
            1 => write!(f, "({numer})/λ"),
            k => write!(f, "({numer})/λ^{k}"),
        }
    }
}

impl LambdaExpression {
    /// The base must be positive; every constructor here assumes it.
    pub fn new(numer: IntPolynomial, shift: u32, base: Arc<AlgebraicReal>) -> Self {
        LambdaExpression { numer, shift, base }.canonical()
    }

    pub fn constant(c: i64, base: &Arc<AlgebraicReal>) -> Self {
        Self::new(IntPolynomial::from_i64s(&[c]), 0, base.clone())
    }

    pub fn lambda(base: &Arc<AlgebraicReal>) -> Self {
        Self::new(IntPolynomial::from_i64s(&[0, 1]), 0, base.clone())
    }

    /// `c / λ`.
    pub fn over_lambda(c: i64, base: &Arc<AlgebraicReal>) -> Self {
        Self::new(IntPolynomial::from_i64s(&[c]), 1, base.clone())
    }

    pub fn numer(&self) -> &IntPolynomial {
        &self.numer
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn base(&self) -> &Arc<AlgebraicReal> {
        &self.base
    }

    /// Strips common factors of `λ`.
    fn canonical(mut self) -> Self {
        if self.numer.is_zero() {
            self.shift = 0;
            return self;
        }
        let zeros = self
            .numer
            .coeffs()
            .iter()
            .take_while(|c| c.is_zero())
            .count()
            .min(self.shift as usize);
        if zeros > 0 {
            self.numer = IntPolynomial::new(self.numer.coeffs()[zeros..].to_vec());
            self.shift -= zeros as u32;
        }
        self
    }

    fn same_base(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.base, &other.base)
            || (self.base.defining_poly() == other.base.defining_poly()
                && self.base.same_number(&other.base))
        {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }

    /// Numerators over the common denominator `λ^max(shift)`.
    fn aligned(&self, other: &Self) -> Result<(IntPolynomial, IntPolynomial, u32)> {
        self.same_base(other)?;
        let s = self.shift.max(other.shift);
        Ok((
            self.numer.shift((s - self.shift) as usize),
            other.numer.shift((s - other.shift) as usize),
            s,
        ))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (a, b, s) = self.aligned(other)?;
        Ok(Self::new(&a + &b, s, self.base.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let (a, b, s) = self.aligned(other)?;
        Ok(Self::new(&a - &b, s, self.base.clone()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        Ok(Self::new(
            &self.numer * &other.numer,
            self.shift + other.shift,
            self.base.clone(),
        ))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::new(
            self.numer.scale(&BigInt::from(c)),
            self.shift,
            self.base.clone(),
        )
    }

    /// Multiplies by `λ`.
    pub fn times_lambda(&self) -> Self {
        if self.shift > 0 {
            Self::new(self.numer.clone(), self.shift - 1, self.base.clone())
        } else {
            Self::new(self.numer.shift(1), 0, self.base.clone())
        }
    }

    /// `-1`, `0` or `+1`.
    pub fn sign(&self) -> i8 {
        // λ > 0, so the denominator never changes the sign
        self.base.sign_at(&self.numer)
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        Ok(self.try_sub(other)?.sign().cmp(&0))
    }

    /// Reduces the numerator modulo the base's defining polynomial when that
    /// polynomial is monic; the value is unchanged.
    pub fn reduced(&self) -> Self {
        let d = self.base.defining_poly();
        if !d.is_monic() || self.numer.degree() < d.degree() {
            return self.clone();
        }
        let (_, r) = self.numer.div_rem_unit(d).expect("monic divisor");
        Self::new(r, self.shift, self.base.clone())
    }

    /// Value from the midpoint of the base's enclosure.
    pub fn to_f64(&self) -> f64 {
        let x = self.base.to_f64();
        let num = self
            .numer
            .coeffs()
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN));
        num / x.powi(self.shift as i32)
    }

    /// Rational enclosure of the value from the base's current enclosure.
    pub fn bounds(&self) -> (BigRational, BigRational) {
        let (lo, hi) = self.base.bounds();
        let c = self.numer.coeffs();
        let mut a = BigRational::zero();
        let mut b = BigRational::zero();
        for k in (0..c.len()).rev() {
            let products = [&a * &lo, &a * &hi, &b * &lo, &b * &hi];
            let ck = BigRational::from_integer(c[k].clone());
            a = products.iter().min().expect("nonempty").clone() + &ck;
            b = products.iter().max().expect("nonempty").clone() + &ck;
        }
        let powers = [
            num_traits::pow(lo.clone(), self.shift as usize),
            num_traits::pow(hi.clone(), self.shift as usize),
        ];
        // base positive: dividing by the extreme powers bounds the quotient
        let quotients = [
            &a / &powers[0],
            &a / &powers[1],
            &b / &powers[0],
            &b / &powers[1],
        ];
        (
            quotients.iter().min().expect("nonempty").clone(),
            quotients.iter().max().expect("nonempty").clone(),
        )
    }
}

macro_rules! expr_op {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr for &LambdaExpression {
            type Output = LambdaExpression;

            /// # Panics
            /// Panics when the operands have different bases.
            fn $method(self, rhs: Self) -> LambdaExpression {
                self.$try(rhs).expect("operands share a base")
            }
        }
    };
}

expr_op!(Add, add, try_add);
expr_op!(Sub, sub, try_sub);
expr_op!(Mul, mul, try_mul);

impl Neg for &LambdaExpression {
    type Output = LambdaExpression;

    fn neg(self) -> LambdaExpression {
        self.scale(-1)
    }
}
