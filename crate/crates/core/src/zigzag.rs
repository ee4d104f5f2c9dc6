//! The zig-zag map `f = Φ⁻¹(q)` in `PA(m)`: permutation types, the exact
//! orbit of `x = 1`, Markov matrices and a fixed-point counting oracle.
//!
//! `f` has slope `±λ` and critical points `k_l = l/λ` for `l = 1..m`. On the
//! lap `I_j = [k_j, k_{j+1}]` (with `k_0 = 0`, `k_{m+1} = 1`) it is
//! `λx - j` when `E(j) = +1` and `(j + 1) - λx` when `E(j) = -1`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebraic::{self, AlgebraicReal, LambdaExpression};
use crate::error::{Error, Result};
use crate::farey::Fraction;
use crate::intpoly::{digit_polynomial, Matrix};
use crate::kneading::{self, KneadingSequence, SignData, Symbol};
use crate::{IntMatrix, IntPolynomial};

/// Lap-count ceiling for [`count_fixed_numeric`].
pub const MAX_BRANCHES: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    /// `ρ_e`, even `m >= 4`.
    Even,
    /// `ρ_o`, odd `m`, acting on `0..=n`.
    Odd,
    /// `ρ_2 = κ⁻¹ ∘ ρ_e ∘ κ`, `m = 2`.
    Two,
}

impl Flavor {
    pub fn for_modality(m: u32) -> Self {
        match m {
            2 => Flavor::Two,
            m if m % 2 == 0 => Flavor::Even,
            _ => Flavor::Odd,
        }
    }
}

/// One of the permutations `ρ_m(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PermutationType {
    pub n: usize,
    pub k: usize,
    pub flavor: Flavor,
    /// Smallest symbol: `0` for [`Flavor::Odd`], `1` otherwise.
    pub first: usize,
    /// `images[i - first] = ρ(i)`.
    pub images: Vec<usize>,
}

fn rho_e(n: usize, k: usize, i: usize) -> usize {
    if i == 1 {
        n
    } else if i < k {
        i + (n - k)
    } else {
        i - (k - 1)
    }
}

/// `κ(n, k) = (1, 2, ..., k-1)`.
fn kappa(k: usize, i: usize) -> usize {
    if i + 1 < k {
        i + 1
    } else if i + 1 == k {
        1
    } else {
        i
    }
}

fn kappa_inv(k: usize, i: usize) -> usize {
    if i == 1 && k > 1 {
        k - 1
    } else if i < k {
        i - 1
    } else {
        i
    }
}

/// `ρ_m(n, k)`.
pub fn permutation(m: u32, n: usize, k: usize) -> Result<PermutationType> {
    kneading::SignData::new(m)?;
    if n < 3 || k < 2 || k > n - 1 || (n - k).gcd(&(n - 1)) != 1 {
        return Err(Error::Admissibility { n, k });
    }
    let flavor = Flavor::for_modality(m);
    let (first, images) = match flavor {
        Flavor::Even => (1, (1..=n).map(|i| rho_e(n, k, i)).collect()),
        Flavor::Two => (
            1,
            // κ is applied first: ρ_2(i) = κ⁻¹(ρ_e(κ(i)))
            (1..=n)
                .map(|i| kappa_inv(k, rho_e(n, k, kappa(k, i))))
                .collect(),
        ),
        Flavor::Odd => (
            0,
            (0..=n)
                .map(|i| match i {
                    0 => n,
                    1 => 0,
                    _ => rho_e(n, k, i),
                })
                .collect(),
        ),
    };
    Ok(PermutationType {
        n,
        k,
        flavor,
        first,
        images,
    })
}

impl PermutationType {
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - self.first]
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `Φ = (n - k)/(n - 1)`.
    pub fn phi(&self) -> Fraction {
        Fraction::new(self.n - self.k, self.n - 1).expect("n >= 3")
    }

    /// `(k - 1)/(n - 1)`: the clockwise rotation of the `n - 1` prongs at
    /// infinity.
    pub fn prong_rotation(&self) -> Fraction {
        Fraction::new(self.k - 1, self.n - 1).expect("n >= 3")
    }

    pub fn is_transitive(&self) -> bool {
        let mut seen = 1;
        let mut i = self.apply(self.first);
        while i != self.first {
            seen += 1;
            i = self.apply(i);
            if seen > self.len() {
                return false;
            }
        }
        seen == self.len()
    }

    /// The permutation of `ρ_e` with symbol `1` deleted from its cycle and
    /// labels shifted down by one.
    pub fn deleted_rotation(&self) -> Vec<usize> {
        let n = self.n;
        (1..n)
            .map(|i| {
                let mut j = rho_e(n, self.k, i + 1);
                if j == 1 {
                    j = rho_e(n, self.k, 1);
                }
                j - 1
            })
            .collect()
    }

    /// Cycle notation, e.g. `(1 3 2)`; fixed points are omitted.
    pub fn cycles(&self) -> String {
        let mut seen = vec![false; self.len()];
        let mut out = String::new();
        for start in self.first..self.first + self.len() {
            if seen[start - self.first] || self.apply(start) == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            let mut parts = Vec::new();
            while !seen[i - self.first] {
                seen[i - self.first] = true;
                parts.push(i.to_string());
                i = self.apply(i);
            }
            out.push_str(&parts.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for PermutationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycles())
    }
}

fn strictly_increasing(pc: &[(LambdaExpression, PcLabel, f64)]) -> Result<bool> {
    for w in pc.windows(2) {
        if w[0].0.compare(&w[1].0)? != Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Where a postcritical point goes under `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PcLabel {
    /// `f^t(1)`.
    Orbit(usize),
    /// The fixed point `0` (even `m` only).
    FixedZero,
}

/// `Φ⁻¹(q)` with its exact postcritical orbit.
#[derive(Debug, Clone)]
pub struct ZigZagMap {
    m: u32,
    q: Fraction,
    nu: KneadingSequence,
    digit: IntPolynomial,
    lambda: Arc<AlgebraicReal>,
    /// `x_t = f^t(1)` for one period.
    orbit: Vec<LambdaExpression>,
    /// Postcritical points in increasing order.
    pc_sorted: Vec<LambdaExpression>,
    pc_labels: Vec<PcLabel>,
    /// `rank[t]` is the position of `x_t` in `pc_sorted`.
    rank: Vec<usize>,
}

impl ZigZagMap {
    pub fn build(m: u32, q: &Fraction) -> Result<Self> {
        let nu = kneading::principal_kneading(m, q)?;
        let digit = digit_polynomial(m, q)?;
        let lambda = Arc::new(algebraic::perron_root(m, &digit)?);
        let b = q.den_usize()?;
        let signs = SignData::new(m)?;
        let map = Lap::all(m, &lambda);

        let mut orbit = vec![LambdaExpression::constant(1, &lambda)];
        for i in 1..=b {
            let addr = nu.entries()[i - 1];
            let j = addr
                .lap()
                .ok_or_else(|| Error::ClosureFailure(format!("critical address before time {b}")))?
                as usize;
            let prev = &orbit[i - 1];
            // the kneading address must be the lap the point lies in
            if i > 1 {
                let inside_left = prev.compare(&map[j].left)? == Ordering::Greater;
                let inside_right = prev.compare(&map[j].right)? == Ordering::Less;
                if !(inside_left && inside_right) {
                    return Err(Error::ClosureFailure(format!(
                        "f^{}(1) = {prev} is not in lap {j}",
                        i - 1
                    )));
                }
            }
            orbit.push(map[j].apply(prev).reduced());
        }
        let k1 = LambdaExpression::over_lambda(1, &lambda);
        if orbit[b].compare(&k1)? != Ordering::Equal {
            return Err(Error::ClosureFailure(format!(
                "f^{b}(1) = {} differs from 1/λ",
                orbit[b]
            )));
        }
        // f(k_1) is 1 for even m; for odd m it is 0 and f(0) = 1
        let mut tail = map[1].apply(&orbit[b]);
        if m % 2 == 1 {
            orbit.push(tail.clone());
            tail = map[0].apply(&tail);
        }
        if tail.compare(&orbit[0])? != Ordering::Equal {
            return Err(Error::ClosureFailure(format!(
                "orbit returns to {tail}, not 1"
            )));
        }
        debug_assert_eq!(signs.sign_at(Symbol::Interval(0)) == 1, m.is_multiple_of(2));

        // approximate the orbit backwards from x_b = 1/λ, where errors shrink
        let lambda_f = lambda.to_f64();
        let mut approx = vec![0.0; orbit.len()];
        approx[b] = 1.0 / lambda_f;
        for i in (1..=b).rev() {
            let j = nu.entries()[i - 1].lap().expect("checked above") as usize;
            approx[i - 1] = map[j].preimage_f64(approx[i], lambda_f);
        }
        let mut pc: Vec<(LambdaExpression, PcLabel, f64)> = orbit
            .iter()
            .cloned()
            .enumerate()
            .map(|(t, x)| (x, PcLabel::Orbit(t), approx[t]))
            .collect();
        if m.is_multiple_of(2) {
            pc.push((
                LambdaExpression::constant(0, &lambda),
                PcLabel::FixedZero,
                0.0,
            ));
        }
        // sort by the approximations and certify adjacent pairs exactly; only
        // a disagreement pays for a fully exact sort
        pc.sort_by(|a, b| a.2.total_cmp(&b.2));
        if !strictly_increasing(&pc)? {
            let mut failure = None;
            pc.sort_by(|a, b| match a.0.compare(&b.0) {
                Ok(o) => o,
                Err(e) => {
                    failure = Some(e);
                    Ordering::Equal
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
            if !strictly_increasing(&pc)? {
                let w = pc
                    .windows(2)
                    .find(|w| !matches!(w[0].0.compare(&w[1].0), Ok(Ordering::Less)));
                let (a, b) = w
                    .map(|w| (w[0].0.to_string(), w[1].0.to_string()))
                    .unwrap_or_default();
                return Err(Error::ClosureFailure(format!(
                    "postcritical points {a} and {b} coincide"
                )));
            }
        }
        let mut rank = vec![0; orbit.len()];
        for (pos, (_, label, _)) in pc.iter().enumerate() {
            if let PcLabel::Orbit(t) = label {
                rank[*t] = pos;
            }
        }
        let (pc_sorted, pc_labels) = pc.into_iter().map(|(x, label, _)| (x, label)).unzip();
        Ok(ZigZagMap {
            m,
            q: q.clone(),
            nu,
            digit,
            lambda,
            orbit,
            pc_sorted,
            pc_labels,
            rank,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> &Fraction {
        &self.q
    }

    pub fn kneading(&self) -> &KneadingSequence {
        &self.nu
    }

    pub fn digit_polynomial(&self) -> &IntPolynomial {
        &self.digit
    }

    pub fn lambda(&self) -> &Arc<AlgebraicReal> {
        &self.lambda
    }

    /// `f(0)`: `0` for even `m`, `1` for odd `m`.
    pub fn value_at_zero(&self) -> u8 {
        if self.m.is_multiple_of(2) {
            0
        } else {
            1
        }
    }

    /// `1, f(1), f^2(1), ...` over one period.
    pub fn orbit(&self) -> &[LambdaExpression] {
        &self.orbit
    }

    /// `PC(f)` in increasing order.
    pub fn postcritical(&self) -> &[LambdaExpression] {
        &self.pc_sorted
    }

    /// Position of `f^t(1)` among the sorted postcritical points.
    pub fn rank_of_time(&self, t: usize) -> usize {
        self.rank[t]
    }

    /// Index in `pc_sorted` of `f(pc_sorted[i])`.
    fn pc_image(&self, i: usize) -> usize {
        match self.pc_labels[i] {
            PcLabel::FixedZero => i,
            PcLabel::Orbit(t) => self.rank[(t + 1) % self.orbit.len()],
        }
    }

    /// The action of `f` on the orbit of `1`, labelled by spatial order
    /// (`1..=n`, or `0..=n` with `0` the point `0` for odd `m`).
    pub fn spatial_permutation(&self) -> Vec<(usize, usize)> {
        // for even m, position 0 is the fixed point 0 and is skipped
        (0..self.pc_sorted.len())
            .filter(|&i| self.pc_labels[i] != PcLabel::FixedZero)
            .map(|i| (i, self.pc_image(i)))
            .collect()
    }

    /// The `ρ_m(n, k)` whose action matches [`Self::spatial_permutation`].
    pub fn permutation_type(&self) -> Result<PermutationType> {
        let spatial = self.spatial_permutation();
        let n = if self.m.is_multiple_of(2) {
            spatial.len()
        } else {
            spatial.len() - 1
        };
        for k in 2..n {
            let Ok(rho) = permutation(self.m, n, k) else {
                continue;
            };
            if spatial.iter().all(|&(i, j)| rho.apply(i) == j) {
                return Ok(rho);
            }
        }
        Err(Error::ClosureFailure(format!(
            "spatial action {spatial:?} matches no ρ_{}(n, k)",
            self.m
        )))
    }

    /// Critical points `k_1, ..., k_m` with their images (`0` or `1`).
    fn critical_points(&self) -> Vec<(LambdaExpression, usize)> {
        let signs = SignData::new(self.m).expect("valid modality");
        let top = self.pc_sorted.len() - 1;
        (1..=self.m)
            .map(|l| {
                let x = LambdaExpression::over_lambda(i64::from(l), &self.lambda);
                let image = if signs.sign_at(Symbol::Interval(l)) == 1 {
                    0
                } else {
                    top
                };
                (x, image)
            })
            .collect()
    }

    /// Breakpoints of the weak partition with their images as positions in
    /// `pc_sorted`, and the weak position of every postcritical point.
    fn weak_partition(&self) -> Result<(Vec<LambdaExpression>, Vec<usize>, Vec<usize>)> {
        let mut points: Vec<(LambdaExpression, usize, Option<usize>)> = self
            .pc_sorted
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), self.pc_image(i), Some(i)))
            .collect();
        for (x, image) in self.critical_points() {
            let mut merged = false;
            for p in points.iter_mut() {
                if p.0.compare(&x)? == Ordering::Equal {
                    if p.1 != image {
                        return Err(Error::ClosureFailure(format!(
                            "critical point {x} has inconsistent images"
                        )));
                    }
                    merged = true;
                }
            }
            if !merged {
                points.push((x, image, None));
            }
        }
        let mut failure = None;
        points.sort_by(|a, b| match a.0.compare(&b.0) {
            Ok(o) => o,
            Err(e) => {
                failure = Some(e);
                Ordering::Equal
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        let mut pc_to_weak = vec![0; self.pc_sorted.len()];
        for (w, p) in points.iter().enumerate() {
            if let Some(i) = p.2 {
                pc_to_weak[i] = w;
            }
        }
        let images = points.iter().map(|p| p.1).collect();
        Ok((
            points.into_iter().map(|p| p.0).collect(),
            images,
            pc_to_weak,
        ))
    }

    /// Strong Markov matrix: the partition cut at `PC(f)`.
    pub fn strong_markov(&self) -> Result<MarkovStructure> {
        self.strong_like(MarkovKind::Strong)
    }

    /// Orientation-signed strong matrix.
    ///
    /// A traversal counts `direction × sheet`, where the direction is that of
    /// the monotone piece and the sheet of the orientation double cover flips
    /// at every fold.
    pub fn signed_markov(&self) -> Result<MarkovStructure> {
        self.strong_like(MarkovKind::Signed)
    }

    fn strong_like(&self, kind: MarkovKind) -> Result<MarkovStructure> {
        let (weak_points, images, pc_to_weak) = self.weak_partition()?;
        let n = self.pc_sorted.len() - 1;
        let mut columns = vec![vec![0i64; n]; n];
        for (j, column) in columns.iter_mut().enumerate() {
            let (from, to) = (pc_to_weak[j], pc_to_weak[j + 1]);
            for w in from..to {
                let (u, v) = (images[w], images[w + 1]);
                let direction = match u.cmp(&v) {
                    Ordering::Less => 1,
                    Ordering::Greater => -1,
                    Ordering::Equal => {
                        return Err(Error::ClosureFailure(format!(
                            "weak interval {w} collapses under f"
                        )))
                    }
                };
                let weight = match kind {
                    MarkovKind::Signed => direction * self.piece_sheet(&weak_points[w])?,
                    _ => 1,
                };
                for entry in column.iter_mut().take(u.max(v)).skip(u.min(v)) {
                    *entry += weight;
                }
            }
        }
        MarkovStructure::new(kind, self.pc_sorted.clone(), columns)
    }

    /// `(-1)^l` for the lap `I_l` whose interior lies just right of `left`.
    fn piece_sheet(&self, left: &LambdaExpression) -> Result<i64> {
        let mut lap = 0;
        for (x, _) in self.critical_points() {
            if left.compare(&x)? != Ordering::Less {
                lap += 1;
            }
        }
        Ok(if lap % 2 == 0 { 1 } else { -1 })
    }

    /// Weak Markov matrix: the partition cut at `PC(f)` and every critical
    /// point.
    pub fn weak_markov(&self) -> Result<MarkovStructure> {
        let (weak_points, images, pc_to_weak) = self.weak_partition()?;
        let n = weak_points.len() - 1;
        let mut columns = vec![vec![0i64; n]; n];
        for (j, column) in columns.iter_mut().enumerate() {
            let (u, v) = (images[j], images[j + 1]);
            let (lo, hi) = (pc_to_weak[u.min(v)], pc_to_weak[u.max(v)]);
            for entry in column.iter_mut().take(hi).skip(lo) {
                *entry = 1;
            }
        }
        MarkovStructure::new(MarkovKind::Weak, weak_points, columns)
    }
}

/// A lap `[left, right]` of `f` with its affine branch.
struct Lap {
    left: LambdaExpression,
    right: LambdaExpression,
    increasing: bool,
    /// `λx - j` or `(j + 1) - λx`.
    j: i64,
}

impl Lap {
    fn all(m: u32, lambda: &Arc<AlgebraicReal>) -> Vec<Lap> {
        let signs = SignData::new(m).expect("valid modality");
        (0..=m)
            .map(|j| Lap {
                left: LambdaExpression::over_lambda(i64::from(j), lambda),
                right: if j == m {
                    LambdaExpression::constant(1, lambda)
                } else {
                    LambdaExpression::over_lambda(i64::from(j) + 1, lambda)
                },
                increasing: signs.sign_at(Symbol::Interval(j)) == 1,
                j: i64::from(j),
            })
            .collect()
    }

    /// Floating-point preimage of `y` in this lap; stable because it
    /// contracts errors by `1/λ`.
    fn preimage_f64(&self, y: f64, lambda: f64) -> f64 {
        let j = self.j as f64;
        if self.increasing {
            (y + j) / lambda
        } else {
            (j + 1.0 - y) / lambda
        }
    }

    fn apply(&self, x: &LambdaExpression) -> LambdaExpression {
        let lx = x.times_lambda();
        let base = x.base();
        if self.increasing {
            &lx - &LambdaExpression::constant(self.j, base)
        } else {
            &LambdaExpression::constant(self.j + 1, base) - &lx
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MarkovKind {
    Strong,
    Weak,
    Signed,
}

/// A Markov partition and its transition matrix, columns indexed by source
/// intervals: `matrix[i][j]` counts how often `f(J_j)` crosses `J_i`.
#[derive(Debug, Clone)]
pub struct MarkovStructure {
    pub kind: MarkovKind,
    pub partition: Vec<LambdaExpression>,
    pub matrix: IntMatrix,
}

impl MarkovStructure {
    fn new(
        kind: MarkovKind,
        partition: Vec<LambdaExpression>,
        columns: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let columns = columns
            .into_iter()
            .map(|c| c.into_iter().map(BigInt::from).collect())
            .collect();
        Ok(MarkovStructure {
            kind,
            partition,
            matrix: Matrix::from_columns(columns)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn char_poly(&self) -> Result<IntPolynomial> {
        self.matrix.char_poly()
    }
}

impl Serialize for MarkovStructure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let columns: Vec<Vec<i64>> = self
            .matrix
            .columns()
            .iter()
            .map(|c| {
                c.iter()
                    .map(|x| i64::try_from(x).unwrap_or(i64::MAX))
                    .collect()
            })
            .collect();
        let mut s = serializer.serialize_struct("MarkovStructure", 4)?;
        s.serialize_field("kind", &self.kind)?;
        s.serialize_field("dim", &self.dim())?;
        s.serialize_field("columns", &columns)?;
        s.serialize_field("convention", "columns-are-source")?;
        s.end()
    }
}

/// A monotone branch `x ↦ σ λ^i x + c` of `f^i` on `[lo, hi]`.
struct Branch {
    lo: LambdaExpression,
    hi: LambdaExpression,
    sigma: i64,
    c: LambdaExpression,
}

impl Branch {
    fn eval(&self, x: &LambdaExpression, power: u32) -> LambdaExpression {
        let mut y = x.scale(self.sigma);
        for _ in 0..power {
            y = y.times_lambda();
        }
        (&y + &self.c).reduced()
    }

    /// `x` with `σ λ^i x + c = y`.
    fn preimage(&self, y: &LambdaExpression, power: u32) -> LambdaExpression {
        let diff = (y - &self.c).scale(self.sigma);
        let base = diff.base().clone();
        LambdaExpression::new(diff.numer().clone(), diff.shift() + power, base)
    }
}

/// `|Fix(f^i)|` by enumerating the monotone branches of `f^i` and testing
/// each against the diagonal with certified enclosures of `λ`.
///
/// Branch domains are half-open `[lo, hi)` except the rightmost, which is
/// closed, so fixed points on lap boundaries are counted once.
pub fn count_fixed_numeric(f: &ZigZagMap, i: u32) -> Result<u64> {
    if i == 0 {
        return Err(Error::Domain("iterate must be at least 1".into()));
    }
    let lambda = f.lambda();
    let laps = Lap::all(f.m(), lambda);
    let one = LambdaExpression::constant(1, lambda);
    let mut branches = vec![Branch {
        lo: LambdaExpression::constant(0, lambda),
        hi: one.clone(),
        sigma: 1,
        c: LambdaExpression::constant(0, lambda),
    }];
    // identity on [0, 1] is f^0
    for power in 0..i {
        let mut next = Vec::new();
        for br in &branches {
            let (ya, yb) = (br.eval(&br.lo, power), br.eval(&br.hi, power));
            let (img_lo, img_hi) = if br.sigma > 0 { (ya, yb) } else { (yb, ya) };
            for lap in &laps {
                let lo = if img_lo.compare(&lap.left)? == Ordering::Greater {
                    img_lo.clone()
                } else {
                    lap.left.clone()
                };
                let hi = if img_hi.compare(&lap.right)? == Ordering::Less {
                    img_hi.clone()
                } else {
                    lap.right.clone()
                };
                if lo.compare(&hi)? != Ordering::Less {
                    continue;
                }
                let (mut x0, mut x1) = (br.preimage(&lo, power), br.preimage(&hi, power));
                if br.sigma < 0 {
                    std::mem::swap(&mut x0, &mut x1);
                }
                let lc = br.c.times_lambda();
                let (sigma, c) = if lap.increasing {
                    (br.sigma, &lc - &LambdaExpression::constant(lap.j, lambda))
                } else {
                    (
                        -br.sigma,
                        &LambdaExpression::constant(lap.j + 1, lambda) - &lc,
                    )
                };
                next.push(Branch {
                    lo: x0,
                    hi: x1,
                    sigma,
                    c: c.reduced(),
                });
                if next.len() > MAX_BRANCHES {
                    return Err(Error::Resource(format!(
                        "f^{} has more than {MAX_BRANCHES} laps",
                        power + 1
                    )));
                }
            }
        }
        branches = next;
    }
    let mut count = 0;
    for br in &branches {
        let g_lo = &br.eval(&br.lo, i) - &br.lo;
        let g_hi = &br.eval(&br.hi, i) - &br.hi;
        let (s_lo, s_hi) = (g_lo.sign(), g_hi.sign());
        let closed = br.hi.compare(&one)? == Ordering::Equal;
        if s_lo == 0 || s_lo * s_hi < 0 || (closed && s_hi == 0) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::frac;

    fn rows(s: &MarkovStructure) -> Vec<Vec<i64>> {
        s.matrix
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn permutation_examples() {
        let p = permutation(4, 3, 2).unwrap();
        assert_eq!(p.cycles(), "(1 3 2)");
        assert_eq!(permutation(4, 4, 2).unwrap().cycles(), "(1 4 3 2)");
        assert_eq!(permutation(4, 4, 2).unwrap().phi(), frac(2, 3));
        assert!(matches!(
            permutation(4, 5, 3),
            Err(Error::Admissibility { .. })
        ));
        assert!(permutation(3, 4, 2).unwrap().is_transitive());
        assert_eq!(permutation(3, 4, 2).unwrap().apply(0), 4);
    }

    #[test]
    fn deleted_symbol_gives_rotation() {
        for n in 3..12 {
            for k in 2..n {
                let Ok(p) = permutation(4, n, k) else {
                    continue;
                };
                let rot = p.deleted_rotation();
                for (idx, &j) in rot.iter().enumerate() {
                    let i = idx + 1;
                    assert_eq!(j, (i - 1 + (n - k)) % (n - 1) + 1);
                }
            }
        }
    }

    #[test]
    fn golden_map_orbit() {
        let f = ZigZagMap::build(2, &frac(1, 2)).unwrap();
        let lambda = f.lambda();
        let x = |c: &[i64]| LambdaExpression::new(IntPolynomial::from_i64s(c), 0, lambda.clone());
        let same = |a: &[LambdaExpression], b: &[LambdaExpression]| {
            a.len() == b.len()
                && a.iter()
                    .zip(b)
                    .all(|(u, v)| u.compare(v).unwrap() == Ordering::Equal)
        };
        assert!(same(f.orbit(), &[x(&[1]), x(&[-2, 1]), x(&[3, -1])]));
        assert!(same(
            f.postcritical(),
            &[x(&[0]), x(&[3, -1]), x(&[-2, 1]), x(&[1])]
        ));
        assert_eq!(f.permutation_type().unwrap().cycles(), "(1 3 2)");
        assert_eq!(f.value_at_zero(), 0);
    }

    #[test]
    fn golden_map_matrices() {
        let f = ZigZagMap::build(2, &frac(1, 2)).unwrap();
        let strong = f.strong_markov().unwrap();
        assert_eq!(
            rows(&strong),
            vec![vec![1, 0, 2], vec![1, 1, 1], vec![1, 1, 0]]
        );
        assert_eq!(strong.char_poly().unwrap(), *f.digit_polynomial());
        let weak = f.weak_markov().unwrap();
        assert_eq!(
            weak.matrix.columns(),
            [[1, 1, 1, 1], [0, 1, 1, 1], [1, 0, 0, 0], [1, 1, 0, 0]]
                .iter()
                .map(|c| c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        );
        assert_eq!(weak.matrix.trace().unwrap(), BigInt::from(2));
        let signed = f.signed_markov().unwrap();
        assert_eq!(signed.char_poly().unwrap(), *f.digit_polynomial());
        let json = serde_json::to_string(&strong).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"strong","dim":3,"columns":[[1,1,1],[0,1,1],[2,1,0]],"convention":"columns-are-source"}"#
        );
    }

    #[test]
    fn golden_map_fixed_points() {
        let f = ZigZagMap::build(2, &frac(1, 2)).unwrap();
        assert_eq!(count_fixed_numeric(&f, 1).unwrap(), 2);
        assert_eq!(count_fixed_numeric(&f, 2).unwrap(), 8);
        assert_eq!(count_fixed_numeric(&f, 3).unwrap(), 17);
    }

    #[test]
    fn odd_modality_orbit_contains_zero() {
        let f = ZigZagMap::build(3, &frac(2, 5)).unwrap();
        assert_eq!(f.orbit().len(), 7);
        assert_eq!(f.postcritical().len(), 7);
        assert!(f.orbit()[6].is_zero());
        assert_eq!(f.value_at_zero(), 1);
        let rho = f.permutation_type().unwrap();
        assert_eq!(rho.flavor, Flavor::Odd);
        assert_eq!(rho.phi(), frac(2, 5));
    }
}
