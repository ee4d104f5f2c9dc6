//! Kneading sequences of maps in `PA(m)`.
//!
//! Words are over the address alphabet `A_m = {0, k1, 1, k2, ..., km, m}`,
//! where `j` addresses the open lap `I_j` and `kj` the critical point between
//! `I_{j-1}` and `I_j`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::{self, Fraction};

/// A letter of `A_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Symbol {
    /// Lap address `j`.
    Interval(u32),
    /// Critical address `k_j`, `j >= 1`.
    Critical(u32),
}

impl Symbol {
    fn key(self) -> u64 {
        match self {
            Symbol::Interval(j) => 2 * u64::from(j),
            Symbol::Critical(j) => 2 * u64::from(j) - 1,
        }
    }

    pub fn is_critical(self) -> bool {
        matches!(self, Symbol::Critical(_))
    }

    /// The lap index of an interval address.
    pub fn lap(self) -> Option<u32> {
        match self {
            Symbol::Interval(j) => Some(j),
            Symbol::Critical(_) => None,
        }
    }
}

/// The alphabet order `0 < k1 < 1 < k2 < ... < km < m`.
impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Interval(j) => write!(f, "{j}"),
            Symbol::Critical(j) => write!(f, "k{j}"),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("`{s}` is not an address symbol"));
        match s.strip_prefix('k') {
            Some(rest) => {
                let j: u32 = rest.parse().map_err(|_| bad())?;
                if j == 0 {
                    return Err(bad());
                }
                Ok(Symbol::Critical(j))
            }
            None => s.parse().map(Symbol::Interval).map_err(|_| bad()),
        }
    }
}

impl TryFrom<String> for Symbol {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<Symbol> for String {
    fn from(value: Symbol) -> String {
        value.to_string()
    }
}

/// Space-separated rendering used by the CLI and golden files.
pub fn render(word: &[Symbol]) -> String {
    word.iter()
        .map(Symbol::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_word(text: &str) -> Result<Vec<Symbol>> {
    text.split_whitespace().map(str::parse).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Principal,
    Overline,
    Hat,
    Underline,
    /// The middle word `w(f)` on its own.
    Body,
    RawItineraryPrefix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decoration {
    Overline,
    Hat,
    Underline,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    /// `ν(f ⊕ g) = overline(ν(f)) · underline(ν(g))`.
    First,
    /// `ν(f ⊕ g) = hat(ν(g)) · ν(f)`.
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KneadingSequence {
    m: u32,
    entries: Vec<Symbol>,
    role: Role,
    q: Option<Fraction>,
}

pub(crate) fn check_modality(m: u32) -> Result<()> {
    if m < 2 {
        Err(Error::Domain(format!(
            "modality must be at least 2, got {m}"
        )))
    } else {
        Ok(())
    }
}

/// `(m-1, k1)` for even `m`, `(m-1, k1, 0)` for odd `m`.
pub fn suffix(m: u32) -> Vec<Symbol> {
    let mut k = vec![Symbol::Interval(m - 1), Symbol::Critical(1)];
    if m % 2 == 1 {
        k.push(Symbol::Interval(0));
    }
    k
}

/// Whether the line `y = (a/b) t` meets an integer height (zero included)
/// for some `t` in `[i, i + 1]`.
pub(crate) fn window_hits(a: u128, b: u128, i: u128) -> bool {
    let lo = a * i;
    let hi = a * (i + 1);
    // smallest multiple of b that is >= lo
    let first = lo.div_ceil(b) * b;
    first <= hi
}

pub(crate) fn small_parts(q: &Fraction) -> Result<(usize, usize)> {
    q.require_interior()?;
    Ok((q.num_usize()?, q.den_usize()?))
}

impl KneadingSequence {
    pub fn new(m: u32, entries: Vec<Symbol>, role: Role, q: Option<Fraction>) -> Result<Self> {
        check_modality(m)?;
        for s in &entries {
            let ok = match *s {
                Symbol::Interval(j) => j <= m,
                Symbol::Critical(j) => (1..=m).contains(&j),
            };
            if !ok {
                return Err(Error::Domain(format!("symbol {s} is outside A_{m}")));
            }
        }
        let seq = KneadingSequence {
            m,
            entries,
            role,
            q,
        };
        if role == Role::Principal {
            seq.body()?;
        }
        Ok(seq)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn entries(&self) -> &[Symbol] {
        &self.entries
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn q(&self) -> Option<&Fraction> {
        self.q.as_ref()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The middle word `w` of a principal sequence `(m) · w · k`.
    pub fn body(&self) -> Result<&[Symbol]> {
        let m = self.m;
        let k = suffix(m);
        let e = &self.entries;
        let shape_err = || Error::Shape(render(e));
        if e.len() < 1 + k.len() || e[0] != Symbol::Interval(m) || !e.ends_with(&k) {
            return Err(shape_err());
        }
        let body = &e[1..e.len() - k.len()];
        let allowed = [Symbol::Interval(m), Symbol::Interval(m - 2)];
        if !body.iter().all(|s| allowed.contains(s)) {
            return Err(shape_err());
        }
        Ok(body)
    }

    fn require_principal(&self) -> Result<&[Symbol]> {
        if self.role != Role::Principal {
            return Err(Error::Shape(format!("{:?} sequence {}", self.role, self)));
        }
        self.body()
    }

    /// `f^{b-1}`-prefix data: the word `(m) · w` shared by all decorations.
    fn head(&self) -> Result<Vec<Symbol>> {
        let body = self.require_principal()?;
        let mut head = Vec::with_capacity(body.len() + 1);
        head.push(Symbol::Interval(self.m));
        head.extend_from_slice(body);
        Ok(head)
    }
}

impl fmt::Display for KneadingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.entries))
    }
}

/// `ν(f)` for `f = Φ⁻¹(q)` by the line-crossing rule.
pub fn principal_kneading(m: u32, q: &Fraction) -> Result<KneadingSequence> {
    check_modality(m)?;
    let (a, b) = small_parts(q)?;
    let (a128, b128) = (a as u128, b as u128);
    let mut entries = Vec::with_capacity(b + 2);
    for i in 0..b - 1 {
        let hit = window_hits(a128, b128, i as u128);
        entries.push(Symbol::Interval(if hit { m } else { m - 2 }));
    }
    entries.extend(suffix(m));
    Ok(KneadingSequence {
        m,
        entries,
        role: Role::Principal,
        q: Some(q.clone()),
    })
}

pub fn decorate(nu: &KneadingSequence, variant: Decoration) -> Result<KneadingSequence> {
    let m = nu.m;
    let mut entries = nu.head()?;
    let role = match variant {
        Decoration::Overline => {
            entries.push(Symbol::Interval(m));
            Role::Overline
        }
        Decoration::Hat => {
            entries.push(Symbol::Interval(m - 2));
            Role::Hat
        }
        Decoration::Underline => {
            entries = nu.entries.clone();
            entries[0] = Symbol::Interval(m - 2);
            Role::Underline
        }
    };
    Ok(KneadingSequence {
        m,
        entries,
        role,
        q: nu.q.clone(),
    })
}

/// Principal sequence of the Farey sum from those of its parents.
pub fn farey_concat(
    f_seq: &KneadingSequence,
    g_seq: &KneadingSequence,
    law: Law,
) -> Result<KneadingSequence> {
    if f_seq.m != g_seq.m {
        return Err(Error::ModalityMismatch {
            left: f_seq.m,
            right: g_seq.m,
        });
    }
    f_seq.require_principal()?;
    g_seq.require_principal()?;
    let q = match (&f_seq.q, &g_seq.q) {
        (Some(qf), Some(qg)) => Some(farey::mediant(qf, qg)?),
        _ => None,
    };
    let mut entries = match law {
        Law::First => decorate(f_seq, Decoration::Overline)?.entries,
        Law::Second => decorate(g_seq, Decoration::Hat)?.entries,
    };
    match law {
        Law::First => entries.extend(decorate(g_seq, Decoration::Underline)?.entries),
        Law::Second => entries.extend_from_slice(&f_seq.entries),
    }
    Ok(KneadingSequence {
        m: f_seq.m,
        entries,
        role: Role::Principal,
        q,
    })
}

/// The body `w(q)` for `q = 1/n` or `q = (n-1)/n`, whose tree parent is an
/// endpoint of `[0, 1]`.
pub fn edge_body(m: u32, q: &Fraction) -> Result<KneadingSequence> {
    check_modality(m)?;
    let (a, b) = small_parts(q)?;
    let symbol = if a == 1 {
        m - 2
    } else if a == b - 1 {
        m
    } else {
        return Err(Error::Domain(format!(
            "{q} is not of the form 1/n or (n-1)/n"
        )));
    };
    Ok(KneadingSequence {
        m,
        entries: vec![Symbol::Interval(symbol); b - 2],
        role: Role::Body,
        q: Some(q.clone()),
    })
}

/// Assembles `(m) · w · k`.
pub fn principal_from_body(
    m: u32,
    body: &[Symbol],
    q: Option<Fraction>,
) -> Result<KneadingSequence> {
    let mut entries = vec![Symbol::Interval(m)];
    entries.extend_from_slice(body);
    entries.extend(suffix(m));
    KneadingSequence::new(m, entries, Role::Principal, q)
}

/// Sign function `E` of the zig-zag maps of modality `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignData {
    m: u32,
}

impl SignData {
    pub fn new(m: u32) -> Result<Self> {
        check_modality(m)?;
        Ok(SignData { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `E(j) = (-1)^j` for even `m`, `(-1)^(j+1)` for odd `m`; `E(k_j) = 0`.
    pub fn sign_at(&self, s: Symbol) -> i8 {
        match s {
            Symbol::Critical(_) => 0,
            Symbol::Interval(j) => {
                if (j + self.m).is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// `s_0, ..., s_len` for the word.
    pub fn cumulative(&self, word: &[Symbol]) -> Vec<i8> {
        let mut out = Vec::with_capacity(word.len() + 1);
        let mut s = 1i8;
        out.push(s);
        for &a in word {
            s *= self.sign_at(a);
            out.push(s);
        }
        out
    }
}

/// Twisted lexicographic comparison of two finite words.
///
/// Errors with `Undecidable` when the first disagreement follows a critical
/// symbol or when one word is a strict prefix of the other.
pub fn twisted_compare(a: &[Symbol], b: &[Symbol], signs: &SignData) -> Result<Ordering> {
    let mut s = 1i8;
    for (l, (x, y)) in a.iter().zip(b).enumerate() {
        if x != y {
            return match s {
                1 => Ok(x.cmp(y)),
                -1 => Ok(y.cmp(x)),
                _ => Err(Error::Undecidable(format!(
                    "words disagree at index {l}, after a critical symbol"
                ))),
            };
        }
        s *= signs.sign_at(*x);
    }
    if a.len() == b.len() {
        Ok(Ordering::Equal)
    } else {
        Err(Error::Undecidable(format!(
            "one word is a strict prefix of the other (lengths {} and {})",
            a.len(),
            b.len()
        )))
    }
}

/// An eventually periodic word `pre · per^∞`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Itinerary {
    pub preperiod: Vec<Symbol>,
    pub period: Vec<Symbol>,
}

impl Itinerary {
    pub fn periodic(period: Vec<Symbol>) -> Self {
        Itinerary {
            preperiod: Vec::new(),
            period,
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<Symbol> {
        self.preperiod
            .iter()
            .chain(self.period.iter().cycle())
            .take(len)
            .copied()
            .collect()
    }
}

impl fmt::Display for Itinerary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.preperiod.is_empty() {
            write!(f, "{} ", render(&self.preperiod))?;
        }
        write!(f, "({})^inf", render(&self.period))
    }
}

/// The itinerary of `x = 1`: `ν(f)` repeated forever.
pub fn itinerary_of_one(nu: &KneadingSequence) -> Result<Itinerary> {
    nu.require_principal()?;
    Ok(Itinerary::periodic(nu.entries.clone()))
}

/// Critical itineraries `K_1, ..., K_m` read off `ν(f)`.
pub fn kneading_data(m: u32, nu: &KneadingSequence) -> Result<Vec<Itinerary>> {
    if nu.m != m {
        return Err(Error::ModalityMismatch {
            left: m,
            right: nu.m,
        });
    }
    let it = itinerary_of_one(nu)?;
    let zero_then = Itinerary {
        preperiod: vec![Symbol::Interval(0)],
        period: it.period.clone(),
    };
    let zeros = Itinerary::periodic(vec![Symbol::Interval(0)]);
    Ok((1..=m)
        .map(|j| match (m.is_multiple_of(2), j % 2 == 1) {
            (true, true) => it.clone(),
            (true, false) => zeros.clone(),
            (false, true) => zero_then.clone(),
            (false, false) => it.clone(),
        })
        .collect())
}
