//! Invariants of the pseudo-Anosov thickening `ψ_f` and whole-family scans.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebraic::{self, AlgebraicReal};
use crate::error::{Error, Result};
use crate::farey::{self, Fraction};
use crate::intpoly::{digit_coefficients, digit_polynomial, series_reciprocal, PowerSeries};
use crate::kneading::{self, Law};
use crate::zigzag::{count_fixed_numeric, ZigZagMap};
use crate::{IntPolynomial, IntSeries, RatSeries};

/// Largest zeta order accepted by [`zeta_prefix`].
pub const MAX_ZETA_ORDER: usize = 12;

/// Iterates up to which [`zeta_prefix`] consults the branch-counting oracle.
pub const ORACLE_ORDER: usize = 6;

/// Enclosure width demanded of every `λ` in a scan.
pub const SCAN_WIDTH: f64 = 1e-10;

fn violation(
    identity: &str,
    m: u32,
    q: &Fraction,
    lhs: impl ToString,
    rhs: impl ToString,
) -> Error {
    Error::IdentityViolation {
        identity: identity.to_string(),
        m,
        q: q.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    /// `|PC(f)|`: every postcritical point becomes a 1-prong.
    pub one_prong_count: usize,
    pub infinity_prongs: usize,
    /// `1 - q`.
    pub rotation_at_infinity: Fraction,
    /// `(k - 1)/(n - 1)` from the spatial permutation of the orbit of `1`.
    pub permutation_rotation: Fraction,
    /// `Σ (2 - prongs)` over the singularities.
    pub euler_poincare_sum: i64,
}

pub fn singularity_report(m: u32, q: &Fraction) -> Result<SingularityReport> {
    singularity_report_of(&ZigZagMap::build(m, q)?)
}

pub fn singularity_report_of(f: &ZigZagMap) -> Result<SingularityReport> {
    let (m, q) = (f.m(), f.q());
    let p = f.postcritical().len();
    let infinity_prongs = p - 2;
    // each 1-prong contributes 2 - 1
    let euler_poincare_sum = p as i64 + (2 - infinity_prongs as i64);
    if euler_poincare_sum != 4 {
        return Err(violation("euler-poincare", m, q, euler_poincare_sum, 4));
    }
    if infinity_prongs != q.den_usize()? {
        return Err(violation(
            "prongs at infinity = den",
            m,
            q,
            infinity_prongs,
            q.den(),
        ));
    }
    let rotation_at_infinity = q.complement()?;
    let permutation_rotation = f.permutation_type()?.prong_rotation();
    if permutation_rotation != rotation_at_infinity {
        return Err(violation(
            "rotation routes agree",
            m,
            q,
            &permutation_rotation,
            &rotation_at_infinity,
        ));
    }
    Ok(SingularityReport {
        one_prong_count: p,
        infinity_prongs,
        rotation_at_infinity,
        permutation_rotation,
        euler_poincare_sum,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdditivityReport {
    pub left: Fraction,
    pub right: Fraction,
    pub sum: Fraction,
    /// `rot(q1 ⊕ q2)` from the permutation of the sum.
    pub rotation_of_sum: Fraction,
    /// `rot(q1) ⊕ rot(q2)` as a mediant (of the reversed pair).
    pub sum_of_rotations: Fraction,
    pub prongs_of_sum: usize,
    pub sum_of_prongs: usize,
    pub holds: bool,
}

/// Compares the rotation and prong data of `q1 ⊕ q2` with those of `q1`
/// and `q2`; every rotation comes from the permutation route.
pub fn rotation_additivity_check(m: u32, q1: &Fraction, q2: &Fraction) -> Result<AdditivityReport> {
    let (left, right) = if q1 < q2 { (q1, q2) } else { (q2, q1) };
    let sum = farey::mediant(left, right)?;
    let r_left = singularity_report(m, left)?;
    let r_right = singularity_report(m, right)?;
    let r_sum = singularity_report(m, &sum)?;
    // q ↦ 1 - q reverses the order, so the rotations are summed right to left
    let sum_of_rotations =
        farey::mediant(&r_right.permutation_rotation, &r_left.permutation_rotation)?;
    let sum_of_prongs = r_left.infinity_prongs + r_right.infinity_prongs;
    let holds =
        sum_of_rotations == r_sum.permutation_rotation && sum_of_prongs == r_sum.infinity_prongs;
    Ok(AdditivityReport {
        left: left.clone(),
        right: right.clone(),
        sum,
        rotation_of_sum: r_sum.permutation_rotation,
        sum_of_rotations,
        prongs_of_sum: r_sum.infinity_prongs,
        sum_of_prongs,
        holds,
    })
}

fn as_strings<S: Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(ToString::to_string))
}

#[derive(Debug, Clone, Serialize)]
pub struct ZetaPrefix {
    /// Coefficients of `1/R(D_f)` through `t^order`.
    pub series: IntSeries,
    /// `trace(W^i)` for `i = 1..=order`.
    #[serde(serialize_with = "as_strings")]
    pub traces: Vec<BigInt>,
    /// `|Fix(f^i)|` from [`count_fixed_numeric`] for `i = 1..=oracle_order`.
    pub fixed_counts: Vec<u64>,
}

/// The zeta function of `f` to `order`, cross-checked against the weak
/// matrix and, up to [`ORACLE_ORDER`], against direct fixed-point counts.
pub fn zeta_prefix(m: u32, q: &Fraction, order: usize) -> Result<ZetaPrefix> {
    zeta_prefix_with_oracle(m, q, order, order.min(ORACLE_ORDER))
}

pub fn zeta_prefix_with_oracle(
    m: u32,
    q: &Fraction,
    order: usize,
    oracle_order: usize,
) -> Result<ZetaPrefix> {
    if order > MAX_ZETA_ORDER {
        return Err(Error::Resource(format!(
            "zeta order {order} exceeds {MAX_ZETA_ORDER}"
        )));
    }
    let f = ZigZagMap::build(m, q)?;
    let rational = series_reciprocal(&f.digit_polynomial().reverse()?, order)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    for c in rational.coeffs() {
        if !c.is_integer() {
            return Err(violation(
                "zeta has integer coefficients",
                m,
                q,
                c,
                "integer",
            ));
        }
        coeffs.push(c.to_integer());
    }
    let series = PowerSeries::new(coeffs, order);

    let w = f.weak_markov()?.matrix;
    let mut traces = Vec::with_capacity(order);
    let mut power = w.clone();
    for i in 1..=order {
        if i > 1 {
            power = power.mul(&w)?;
        }
        traces.push(power.trace()?);
    }
    let from_traces: RatSeries = PowerSeries::exp_of_traces(
        &traces
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect::<Vec<_>>(),
    );
    if from_traces != rational {
        return Err(violation(
            "1/R(D) = exp(Σ tr W^i t^i / i)",
            m,
            q,
            &from_traces,
            &rational,
        ));
    }
    let logs = series.log_derivative_traces()?;
    if logs != traces {
        return Err(violation(
            "log-derivative = traces",
            m,
            q,
            format!("{logs:?}"),
            format!("{traces:?}"),
        ));
    }
    let mut fixed_counts = Vec::with_capacity(oracle_order);
    for i in 1..=oracle_order.min(order) {
        let count = count_fixed_numeric(&f, i as u32)?;
        if BigInt::from(count) != traces[i - 1] {
            return Err(violation(
                &format!("|Fix(f^{i})| = tr W^{i}"),
                m,
                q,
                count,
                &traces[i - 1],
            ));
        }
        fixed_counts.push(count);
    }
    Ok(ZetaPrefix {
        series,
        traces,
        fixed_counts,
    })
}

/// Which of `D_f(t)` and `D_f(-t)` a characteristic polynomial equals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignBranch {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfacePolynomials {
    pub homology: IntPolynomial,
    pub symplectic: IntPolynomial,
    pub puncture: IntPolynomial,
    pub chi_plus: IntPolynomial,
    pub chi_minus: IntPolynomial,
    /// The branch matched by the signed Markov matrix.
    pub signed_branch: SignBranch,
}

pub fn surface_polynomials(m: u32, q: &Fraction) -> Result<SurfacePolynomials> {
    surface_polynomials_of(&ZigZagMap::build(m, q)?)
}

pub fn surface_polynomials_of(f: &ZigZagMap) -> Result<SurfacePolynomials> {
    let (m, q) = (f.m(), f.q());
    let homology = f.digit_polynomial().clone();
    let n = f.postcritical().len();
    let puncture = if n.is_multiple_of(2) {
        IntPolynomial::from_i64s(&[1, 1])
    } else {
        IntPolynomial::one()
    };
    let symplectic = homology
        .div_exact(&puncture)
        .map_err(|_| violation("(t+1) | D_f for even |PC|", m, q, &homology, &puncture))?;
    let chi_plus = homology.clone();
    let chi_minus = homology.negate_variable().normalize_sign_unit();
    let signed = f.signed_markov()?.char_poly()?;
    let signed_branch = if signed == chi_plus {
        SignBranch::Plus
    } else if signed == chi_minus {
        SignBranch::Minus
    } else {
        return Err(violation(
            "signed char poly = D_f(±t)",
            m,
            q,
            &signed,
            &chi_plus,
        ));
    };
    Ok(SurfacePolynomials {
        homology,
        symplectic,
        puncture,
        chi_plus,
        chi_minus,
        signed_branch,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DoubleCoverData {
    pub genus: usize,
    pub punctures: usize,
    pub homology_rank_split: (usize, usize),
}

/// Genus and punctures of the orientation double cover of the `n`-punctured
/// sphere, `n = |PC(f)|`.
pub fn double_cover_for(n: usize) -> DoubleCoverData {
    let (genus, punctures) = if n % 2 == 1 {
        ((n - 1) / 2, n + 1)
    } else {
        ((n - 2) / 2, n + 2)
    };
    DoubleCoverData {
        genus,
        punctures,
        homology_rank_split: (n, n - 1),
    }
}

pub fn double_cover(m: u32, q: &Fraction) -> Result<DoubleCoverData> {
    kneading::SignData::new(m)?;
    q.require_interior()?;
    Ok(double_cover_for(q.den_usize()? + 2))
}

#[derive(Debug, Clone)]
pub struct LambdaBounds {
    /// Largest root of `t^2 - (m+1) t + 2`.
    pub infimum: AlgebraicReal,
    pub supremum: BigInt,
}

pub fn lambda_bounds(m: u32) -> Result<LambdaBounds> {
    kneading::SignData::new(m)?;
    let p = IntPolynomial::from_i64s(&[2, -(i64::from(m) + 1), 1]);
    Ok(LambdaBounds {
        infimum: AlgebraicReal::largest_root(&p)?,
        supremum: BigInt::from(m + 1),
    })
}

/// One `(q, λ)` sample of a scan.
#[derive(Debug, Clone)]
pub struct ScanPoint {
    pub q: Fraction,
    pub lambda: Arc<AlgebraicReal>,
}

impl ScanPoint {
    fn new(m: u32, q: Fraction) -> Result<Self> {
        let d = digit_polynomial(m, &q)?;
        let lambda = algebraic::perron_root(m, &d)?;
        lambda.refine_to(SCAN_WIDTH);
        Ok(ScanPoint {
            q,
            lambda: Arc::new(lambda),
        })
    }

    /// `q_num,q_den,q_decimal,lambda,width`.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{:.12},{:.12},{:.3e}",
            self.q.num(),
            self.q.den(),
            self.q.to_f64(),
            self.lambda.to_f64(),
            self.lambda.width_f64()
        )
    }
}

pub const SCAN_CSV_HEADER: &str = "q_num,q_den,q_decimal,lambda,width";

#[derive(Debug, Clone, Default, Serialize)]
pub struct EdgeFamilyReport {
    pub max_n: usize,
    /// `λ(1/n)` strictly decreasing in `n`.
    pub left_decreasing: bool,
    /// `λ((n-1)/n)` strictly increasing in `n`.
    pub right_increasing: bool,
    /// Every `λ(1/n)` above the infimum and every `λ((n-1)/n)` below `m + 1`.
    pub bounds_respected: bool,
    pub last_left: f64,
    pub last_right: f64,
    pub infimum: f64,
    pub supremum: f64,
}

impl EdgeFamilyReport {
    pub fn holds(&self) -> bool {
        self.left_decreasing && self.right_increasing && self.bounds_respected
    }
}

/// `λ(1/n)` and `λ((n-1)/n)` for `n = 2..=max_n`.
pub fn edge_family_check(m: u32, max_n: usize) -> Result<EdgeFamilyReport> {
    if max_n < 2 {
        return Err(Error::Domain("edge families need max_n >= 2".into()));
    }
    let bounds = lambda_bounds(m)?;
    let sup = BigRational::from_integer(bounds.supremum.clone());
    let family = |left: bool| -> Result<Vec<ScanPoint>> {
        (2..=max_n)
            .into_par_iter()
            .map(|n| {
                let a = if left { 1 } else { n - 1 };
                ScanPoint::new(m, Fraction::new(a, n)?)
            })
            .collect()
    };
    let left = family(true)?;
    let right = family(false)?;
    let strictly = |pts: &[ScanPoint], want: Ordering| {
        pts.windows(2)
            .all(|w| w[1].lambda.compare(&w[0].lambda) == want)
    };
    let bounds_respected = left
        .iter()
        .all(|p| p.lambda.compare(&bounds.infimum) == Ordering::Greater)
        && right
            .iter()
            .all(|p| p.lambda.cmp_rational(&sup) == Ordering::Less);
    Ok(EdgeFamilyReport {
        max_n,
        left_decreasing: strictly(&left, Ordering::Less),
        right_increasing: strictly(&right, Ordering::Greater),
        bounds_respected,
        last_left: left.last().map(|p| p.lambda.to_f64()).unwrap_or_default(),
        last_right: right.last().map(|p| p.lambda.to_f64()).unwrap_or_default(),
        infimum: bounds.infimum.to_f64(),
        supremum: bounds.supremum.to_f64().unwrap_or(f64::NAN),
    })
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub m: u32,
    pub points: Vec<ScanPoint>,
    /// Adjacent pairs whose width-[`SCAN_WIDTH`] enclosures overlapped and
    /// needed further refinement to separate.
    pub refined_pairs: usize,
    pub edges: EdgeFamilyReport,
    pub violations: Vec<String>,
}

impl ScanReport {
    /// Gaps `λ(q_{i+1}) - λ(q_i)` between consecutive samples.
    pub fn gaps(&self) -> Vec<f64> {
        self.points
            .windows(2)
            .map(|w| w[1].lambda.to_f64() - w[0].lambda.to_f64())
            .collect()
    }

    pub fn csv(&self) -> String {
        let mut out = String::from(SCAN_CSV_HEADER);
        out.push('\n');
        for p in &self.points {
            out.push_str(&p.csv_row());
            out.push('\n');
        }
        out
    }
}

/// `λ(q)` for every reduced `q` with denominator up to `max_den`, with the
/// strict increase in `q` certified pairwise.
pub fn monotonicity_scan(m: u32, max_den: usize) -> Result<ScanReport> {
    kneading::SignData::new(m)?;
    if max_den < 2 {
        return Err(Error::Domain("max_den must be at least 2".into()));
    }
    let qs = farey::fractions_up_to(max_den);
    let points: Vec<ScanPoint> = qs
        .into_par_iter()
        .map(|q| ScanPoint::new(m, q))
        .collect::<Result<_>>()?;
    let mut violations = Vec::new();
    let (lo_m, hi_m) = (
        BigRational::from_integer(BigInt::from(m)),
        BigRational::from_integer(BigInt::from(m + 1)),
    );
    for p in &points {
        let (lo, hi) = p.lambda.bounds();
        if lo < lo_m || hi > hi_m {
            violations.push(format!("λ({}) not inside ({m}, {})", p.q, m + 1));
        }
    }
    let mut refined_pairs = 0;
    for w in points.windows(2) {
        let (_, hi0) = w[0].lambda.bounds();
        let (lo1, _) = w[1].lambda.bounds();
        if hi0 < lo1 {
            continue;
        }
        refined_pairs += 1;
        if w[0].lambda.compare(&w[1].lambda) != Ordering::Less {
            violations.push(format!("λ({}) >= λ({})", w[0].q, w[1].q));
        }
    }
    let edges = edge_family_check(m, max_den)?;
    if !edges.holds() {
        violations.push(format!("edge families fail: {edges:?}"));
    }
    Ok(ScanReport {
        m,
        points,
        refined_pairs,
        edges,
        violations,
    })
}

/// The digit-polynomial shape laws for `(m, q)`; returns the failed ones.
pub fn digit_law_failures(m: u32, q: &Fraction) -> Result<Vec<String>> {
    let d = digit_polynomial(m, q)?;
    let c = digit_coefficients(m, q)?;
    let b = q.den_usize()?;
    let mut failed = Vec::new();
    if !d.is_monic() {
        failed.push("monic".to_string());
    }
    if !d.is_reciprocal() {
        failed.push("reciprocal".to_string());
    }
    if !d.coeff(0).is_one() {
        failed.push("constant term 1".to_string());
    }
    if d.degree() != Some(b + 1) {
        failed.push(format!("degree {}", b + 1));
    }
    if c.iter().any(|&ci| ci != m && ci != m - 2) {
        failed.push("digits in {m-2, m}".to_string());
    }
    if (0..b).any(|i| c[i] != c[b - 1 - i]) {
        failed.push("c_i = c_{b+1-i}".to_string());
    }
    if d.eval(&BigInt::one()).is_zero() {
        failed.push("D_f(1) != 0".to_string());
    }
    // only this direction holds: D_f(-1) also vanishes for some odd |PC|
    if (b + 2) % 2 == 0 && !d.eval(&BigInt::from(-1)).is_zero() {
        failed.push("|PC| even implies (t+1) | D_f".to_string());
    }
    Ok(failed)
}

/// Result of rebuilding `ν(q)` from its tree parents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformCheck {
    pub q: Fraction,
    pub left_parent: Fraction,
    pub right_parent: Fraction,
    /// `None` when a parent is `0/1` or `1/1`; the edge-body rule applies.
    pub first_law: Option<bool>,
    pub second_law: Option<bool>,
    pub edge_rule: Option<bool>,
}

impl TransformCheck {
    pub fn holds(&self) -> bool {
        [self.first_law, self.second_law, self.edge_rule]
            .iter()
            .all(|x| x.unwrap_or(true))
    }
}

pub fn transform_check(m: u32, q: &Fraction) -> Result<TransformCheck> {
    let direct = kneading::principal_kneading(m, q)?;
    let (left_parent, right_parent) = farey::parents(q)?;
    let mut check = TransformCheck {
        q: q.clone(),
        left_parent: left_parent.clone(),
        right_parent: right_parent.clone(),
        first_law: None,
        second_law: None,
        edge_rule: None,
    };
    if left_parent.is_interior() && right_parent.is_interior() {
        let f = kneading::principal_kneading(m, &left_parent)?;
        let g = kneading::principal_kneading(m, &right_parent)?;
        let first = kneading::farey_concat(&f, &g, Law::First)?;
        let second = kneading::farey_concat(&f, &g, Law::Second)?;
        check.first_law = Some(first.entries() == direct.entries());
        check.second_law = Some(second.entries() == direct.entries());
    } else {
        let body = kneading::edge_body(m, q)?;
        let rebuilt = kneading::principal_from_body(m, body.entries(), Some(q.clone()))?;
        check.edge_rule = Some(rebuilt.entries() == direct.entries());
    }
    Ok(check)
}

/// Outcome of one named check in [`verify_fraction`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn from_result<T>(name: &str, r: Result<T>) -> Self {
        match r {
            Ok(_) => CheckOutcome {
                name: name.to_string(),
                passed: true,
                detail: None,
            },
            Err(e) => CheckOutcome {
                name: name.to_string(),
                passed: false,
                detail: Some(e.to_string()),
            },
        }
    }

    fn from_bool(name: &str, ok: bool, detail: impl FnOnce() -> String) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: ok,
            detail: if ok { None } else { Some(detail()) },
        }
    }
}

/// Every exact identity for a single `(m, q)`.
pub fn verify_fraction(m: u32, q: &Fraction, zeta_order: usize) -> Result<Vec<CheckOutcome>> {
    let f = ZigZagMap::build(m, q)?;
    let d = f.digit_polynomial();
    let mut out = Vec::new();
    let laws = digit_law_failures(m, q)?;
    out.push(CheckOutcome::from_bool(
        "digit laws",
        laws.is_empty(),
        || laws.join(", "),
    ));
    out.push(CheckOutcome::from_bool(
        "simple zeta route",
        crate::intpoly::simple_zeta_poly(m, q)? == d.reverse()?,
        || "1 - tρ_f differs from R(D_f)".into(),
    ));
    let strong = f.strong_markov()?.char_poly()?;
    out.push(CheckOutcome::from_bool(
        "strong char poly",
        strong == *d,
        || strong.to_string(),
    ));
    let weak = f.weak_markov()?.char_poly()?;
    let expected = d.shift(m as usize - 1);
    out.push(CheckOutcome::from_bool(
        "weak char poly",
        weak == expected,
        || weak.to_string(),
    ));
    out.push(CheckOutcome::from_result(
        "singularities",
        singularity_report_of(&f),
    ));
    out.push(CheckOutcome::from_result(
        "surface polynomials",
        surface_polynomials_of(&f),
    ));
    out.push(CheckOutcome::from_result(
        "zeta",
        zeta_prefix_with_oracle(m, q, zeta_order, 0),
    ));
    out.push(CheckOutcome::from_result(
        "transform laws",
        transform_check(m, q).and_then(|c| {
            if c.holds() {
                Ok(c)
            } else {
                Err(violation(
                    "concatenation laws",
                    m,
                    q,
                    format!("{c:?}"),
                    kneading::principal_kneading(m, q)?,
                ))
            }
        }),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::frac;

    #[test]
    fn singularity_examples() {
        let r = singularity_report(2, &frac(2, 3)).unwrap();
        assert_eq!(r.rotation_at_infinity, frac(1, 3));
        assert_eq!(r.permutation_rotation, frac(1, 3));
        let r = singularity_report(3, &frac(7, 12)).unwrap();
        assert_eq!(r.rotation_at_infinity, frac(5, 12));
        assert_eq!(r.infinity_prongs, 12);
        assert_eq!(r.euler_poincare_sum, 4);
    }

    #[test]
    fn additivity_examples() {
        let r = rotation_additivity_check(2, &frac(1, 2), &frac(2, 3)).unwrap();
        assert_eq!(r.sum_of_rotations, frac(2, 5));
        assert_eq!(r.rotation_of_sum, frac(2, 5));
        assert!(r.holds);
        let r = rotation_additivity_check(4, &frac(4, 7), &frac(3, 5)).unwrap();
        assert_eq!(r.prongs_of_sum, 12);
        assert!(r.holds);
        assert!(rotation_additivity_check(2, &frac(1, 2), &frac(3, 4)).is_err());
    }

    #[test]
    fn zeta_examples() {
        let z = zeta_prefix(2, &frac(1, 2), 4).unwrap();
        let c: Vec<i64> = z
            .series
            .coeffs()
            .iter()
            .map(|x| x.to_i64().unwrap())
            .collect();
        assert_eq!(c, vec![1, 2, 6, 15, 40]);
        assert_eq!(z.fixed_counts, vec![2, 8, 17, 48]);
        let z = zeta_prefix(2, &frac(1, 3), 1).unwrap();
        assert_eq!(z.series.coeff(1), &BigInt::from(2));
        assert!(matches!(
            zeta_prefix(2, &frac(1, 2), 13),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn surface_examples() {
        let s = surface_polynomials(2, &frac(1, 2)).unwrap();
        assert_eq!(s.puncture, IntPolynomial::from_i64s(&[1, 1]));
        assert_eq!(s.symplectic, IntPolynomial::from_i64s(&[1, -3, 1]));
        let s = surface_polynomials(2, &frac(1, 3)).unwrap();
        assert!(s.puncture.is_one());
        assert_eq!(s.homology.eval(&BigInt::from(-1)), BigInt::from(6));
    }

    #[test]
    fn double_cover_examples() {
        assert_eq!(double_cover_for(4).genus, 1);
        assert_eq!(double_cover_for(4).punctures, 6);
        assert_eq!(double_cover_for(5).genus, 2);
        assert_eq!(double_cover_for(5).punctures, 6);
        assert_eq!(double_cover_for(4).homology_rank_split, (4, 3));
        assert_eq!(double_cover(2, &frac(1, 2)).unwrap().genus, 1);
    }

    #[test]
    fn bounds_examples() {
        let b = lambda_bounds(2).unwrap();
        assert!(b.infimum.is_exact());
        assert_eq!(b.infimum.to_f64(), 2.0);
        assert_eq!(b.supremum, BigInt::from(3));
        let b = lambda_bounds(3).unwrap();
        assert!((b.infimum.to_f64() - (2.0 + 2f64.sqrt())).abs() < 1e-12);
        assert_eq!(lambda_bounds(4).unwrap().supremum, BigInt::from(5));
    }

    #[test]
    fn small_scan() {
        let r = monotonicity_scan(2, 3).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        let l: Vec<f64> = r.points.iter().map(|p| p.lambda.to_f64()).collect();
        assert!((l[0] - 2.2966302629).abs() < 1e-9);
        assert!((l[1] - 2.6180339887).abs() < 1e-9);
        assert!((l[2] - 2.8900536383).abs() < 1e-9);
        assert!(r
            .csv()
            .starts_with("q_num,q_den,q_decimal,lambda,width\n1,3,"));
    }

    #[test]
    fn transform_examples() {
        let c = transform_check(2, &frac(7, 12)).unwrap();
        assert_eq!(c.first_law, Some(true));
        assert_eq!(c.second_law, Some(true));
        let c = transform_check(3, &frac(1, 5)).unwrap();
        assert_eq!(c.edge_rule, Some(true));
        assert!(c.holds());
    }

    #[test]
    fn verify_passes_on_examples() {
        for q in [frac(1, 2), frac(3, 5), frac(7, 12)] {
            for outcome in verify_fraction(3, &q, 6).unwrap() {
                assert!(outcome.passed, "{q}: {outcome:?}");
            }
        }
    }
}
