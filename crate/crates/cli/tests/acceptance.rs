//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use zigzag_core::burau::{
    burau_at_minus_one, full_twist, match_digit, reduced_burau, search_braid, symplectic_poly,
    BraidWord,
};
use zigzag_core::farey::{self, frac, Fraction};
use zigzag_core::intpoly::PowerSeries;
use zigzag_core::invariants::{
    digit_law_failures, edge_family_check, monotonicity_scan, rotation_additivity_check,
    singularity_report, transform_check, zeta_prefix_with_oracle,
};
use zigzag_core::zigzag::ZigZagMap;
use zigzag_core::{IntPolynomial, RatSeries, SmallMatrix};

const INFO_FRACTIONS: [&str; 5] = ["1/2", "2/3", "3/5", "4/7", "7/12"];
const INFO_BUDGET: Duration = Duration::from_secs(1);
const DIGIT_BUDGET: Duration = Duration::from_secs(10);
const MARKOV_BUDGET: Duration = Duration::from_secs(60);
const SCAN_BUDGET: Duration = Duration::from_secs(120);
const BURAU_BUDGET: Duration = Duration::from_secs(120);
const SCAN_WIDTH: f64 = 1e-10;
const EDGE_PROXIMITY: f64 = 0.05;
const ZETA_ORDER: usize = 10;
const ORACLE_ORDER: usize = 6;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn within(start: Instant, budget: Duration) -> (bool, String) {
    let took = start.elapsed();
    (
        took < budget,
        format!("{:.2}s of {:.0}s", took.as_secs_f64(), budget.as_secs_f64()),
    )
}

fn first_few(items: &[String]) -> String {
    let shown: Vec<&str> = items.iter().take(5).map(String::as_str).collect();
    if items.len() > 5 {
        format!("{} ...", shown.join("; "))
    } else {
        shown.join("; ")
    }
}

fn interior_up_to(max_den: usize) -> Vec<Fraction> {
    farey::fractions_up_to(max_den)
}

fn tree_nodes(depth: usize) -> Vec<Fraction> {
    farey::enumerate_tree(depth)
        .unwrap()
        .into_iter()
        .flatten()
        .collect()
}

fn worked_example() -> Outcome {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut problems = Vec::new();
    let mut slowest = Duration::ZERO;
    for m in [2u32, 3] {
        for q in INFO_FRACTIONS {
            let start = Instant::now();
            let out = Command::new(env!("CARGO_BIN_EXE_zigzag"))
                .args(["info", &m.to_string(), q])
                .output()
                .unwrap();
            slowest = slowest.max(start.elapsed());
            let path = golden.join(format!("info_m{m}_{}.json", q.replace('/', "_")));
            let expected = std::fs::read(&path).unwrap_or_default();
            if !out.status.success() || out.stdout != expected {
                problems.push(format!("m={m} q={q} differs from {}", path.display()));
            }
        }
    }
    let fast = slowest < INFO_BUDGET;
    if !fast {
        problems.push(format!("slowest info took {:.2}s", slowest.as_secs_f64()));
    }
    outcome(
        problems.is_empty(),
        format!(
            "10 golden files, slowest {:.3}s {}",
            slowest.as_secs_f64(),
            first_few(&problems)
        ),
    )
}

fn digit_laws() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut count = 0;
    for m in 2u32..=6 {
        for q in interior_up_to(40) {
            count += 1;
            let b = q.den_usize().unwrap();
            let d = ZigZagMap::build(m, &q).unwrap().digit_polynomial().clone();
            let c: Vec<BigInt> = d.coeffs().to_vec();
            let one = BigInt::from(1);
            let mut bad = Vec::new();
            if c.len() != b + 2 {
                bad.push("degree");
            }
            if c.last() != Some(&one) {
                bad.push("monic");
            }
            if c[0] != one {
                bad.push("constant term");
            }
            if c.iter().ne(c.iter().rev()) {
                bad.push("reciprocal");
            }
            // interior coefficients are -c_i with c_i in {m-2, m}
            let allowed = [-BigInt::from(m), -BigInt::from(m - 2)];
            if c[1..c.len() - 1].iter().any(|x| !allowed.contains(x)) {
                bad.push("digits");
            }
            if !bad.is_empty() {
                problems.push(format!("m={m} q={q}: {}", bad.join(",")));
            }
            for f in digit_law_failures(m, &q).unwrap() {
                problems.push(format!("m={m} q={q}: library {f}"));
            }
        }
    }
    let (fast, timing) = within(start, DIGIT_BUDGET);
    outcome(
        problems.is_empty() && fast,
        format!(
            "{count} fractions, {} violations, {timing} {}",
            problems.len(),
            first_few(&problems)
        ),
    )
}

fn markov_identities() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut count = 0;
    for m in 2u32..=4 {
        for q in interior_up_to(20) {
            count += 1;
            let f = ZigZagMap::build(m, &q).unwrap();
            let d = f.digit_polynomial();
            if &f.strong_markov().unwrap().char_poly().unwrap() != d {
                problems.push(format!("strong m={m} q={q}"));
            }
            if f.weak_markov().unwrap().char_poly().unwrap() != d.shift(m as usize - 1) {
                problems.push(format!("weak m={m} q={q}"));
            }
        }
    }
    let (fast, timing) = within(start, MARKOV_BUDGET);
    outcome(
        problems.is_empty() && fast,
        format!(
            "{count} maps, {} violations, {timing} {}",
            problems.len(),
            first_few(&problems)
        ),
    )
}

fn zeta_cross_check() -> Outcome {
    let mut problems = Vec::new();
    let mut count = 0;
    for m in 2u32..=4 {
        for q in interior_up_to(20) {
            count += 1;
            let oracle = if m <= 3 && q.den_usize().unwrap() <= 12 {
                ORACLE_ORDER
            } else {
                0
            };
            match zeta_prefix_with_oracle(m, &q, ZETA_ORDER, oracle) {
                Ok(z) => {
                    // recompute both sides here from the exported pieces
                    let reversed = ZigZagMap::build(m, &q)
                        .unwrap()
                        .digit_polynomial()
                        .reverse()
                        .unwrap();
                    let rational: RatSeries = PowerSeries::from_polynomial(
                        &reversed.map(|c| c.clone().into()),
                        ZETA_ORDER,
                    )
                    .reciprocal()
                    .unwrap();
                    let traces: Vec<_> = z.traces.iter().map(|t| t.clone().into()).collect();
                    if PowerSeries::exp_of_traces(&traces) != rational {
                        problems.push(format!("m={m} q={q}: exp of traces"));
                    }
                    let ints: Vec<_> = z.series.coeffs().iter().map(|c| c.clone().into()).collect();
                    if PowerSeries::new(ints, ZETA_ORDER) != rational {
                        problems.push(format!("m={m} q={q}: integer series"));
                    }
                    if z.fixed_counts.len() != oracle {
                        problems.push(format!(
                            "m={m} q={q}: oracle ran {} terms",
                            z.fixed_counts.len()
                        ));
                    }
                }
                Err(e) => problems.push(format!("m={m} q={q}: {e}")),
            }
        }
    }
    outcome(
        problems.is_empty(),
        format!(
            "{count} maps to order {ZETA_ORDER}, {} violations {}",
            problems.len(),
            first_few(&problems)
        ),
    )
}

fn monotonicity() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut count = 0;
    for m in 2u32..=4 {
        let report = monotonicity_scan(m, 30).unwrap();
        count += report.points.len();
        problems.extend(report.violations.iter().map(|v| format!("m={m}: {v}")));
        for p in &report.points {
            if p.lambda.width_f64() > SCAN_WIDTH {
                problems.push(format!("m={m} q={}: width {}", p.q, p.lambda.width_f64()));
            }
        }
        for w in report.points.windows(2) {
            let (_, hi) = w[0].lambda.bounds();
            let (lo, _) = w[1].lambda.bounds();
            if !(w[0].q < w[1].q && hi < lo) {
                problems.push(format!("m={m}: {} and {} not separated", w[0].q, w[1].q));
            }
        }
    }
    let (fast, timing) = within(start, SCAN_BUDGET);
    outcome(
        problems.is_empty() && fast,
        format!(
            "{count} enclosures, {} violations, {timing} {}",
            problems.len(),
            first_few(&problems)
        ),
    )
}

fn bounds() -> Outcome {
    let mut problems = Vec::new();
    let mut worst = 0f64;
    for m in 2u32..=5 {
        let r = edge_family_check(m, 60).unwrap();
        if !r.holds() {
            problems.push(format!("m={m}: {r:?}"));
        }
        let k = f64::from(m + 1);
        let infimum = (k + (k * k - 8.0).sqrt()) / 2.0;
        let (dl, dr) = ((r.last_left - infimum).abs(), (r.last_right - k).abs());
        worst = worst.max(dl).max(dr);
        if dl > EDGE_PROXIMITY || dr > EDGE_PROXIMITY {
            problems.push(format!(
                "m={m}: λ(1/60) off by {dl:.4}, λ(59/60) off by {dr:.4}"
            ));
        }
    }
    outcome(
        problems.is_empty(),
        format!(
            "m 2..5, n <= 60, worst proximity {worst:.2e} (tol {EDGE_PROXIMITY}) {}",
            first_few(&problems)
        ),
    )
}

fn transformation_laws() -> Outcome {
    let nodes = tree_nodes(10);
    let mut problems = Vec::new();
    let mut laws = 0;
    for m in [2u32, 3] {
        for q in &nodes {
            let c = transform_check(m, q).unwrap();
            laws += [c.first_law, c.second_law, c.edge_rule]
                .iter()
                .flatten()
                .count();
            if !c.holds() {
                problems.push(format!("m={m} q={q}: {c:?}"));
            }
        }
    }
    outcome(
        nodes.len() == 1023 && problems.is_empty(),
        format!(
            "{} nodes, {laws} law checks, {} violations {}",
            nodes.len(),
            problems.len(),
            first_few(&problems)
        ),
    )
}

fn rotation_and_prongs() -> Outcome {
    let nodes = tree_nodes(8);
    let mut problems = Vec::new();
    let mut pairs = 0;
    for m in [2u32, 3] {
        for q in &nodes {
            let r = singularity_report(m, q).unwrap();
            let formula = Fraction::one().to_rational() - q.to_rational();
            if r.rotation_at_infinity.to_rational() != formula
                || r.permutation_rotation.to_rational() != formula
            {
                problems.push(format!("m={m} q={q}: rotation routes disagree"));
            }
            if r.euler_poincare_sum != 4 {
                problems.push(format!(
                    "m={m} q={q}: Euler-Poincare sum {}",
                    r.euler_poincare_sum
                ));
            }
        }
        for (i, p) in nodes.iter().enumerate() {
            for q in &nodes[i + 1..] {
                if !p.is_compatible(q) {
                    continue;
                }
                pairs += 1;
                let a = rotation_additivity_check(m, p, q).unwrap();
                if !a.holds {
                    problems.push(format!("m={m} {p} + {q}: {a:?}"));
                }
            }
        }
    }
    outcome(
        problems.is_empty(),
        format!(
            "{} nodes, {pairs} compatible pairs, {} violations {}",
            nodes.len(),
            problems.len(),
            first_few(&problems)
        ),
    )
}

fn surface_polynomials() -> Outcome {
    let mut problems = Vec::new();
    let mut count = 0;
    let (one, minus_one) = (BigInt::from(1), BigInt::from(-1));
    for m in [2u32, 3] {
        for q in interior_up_to(15) {
            count += 1;
            let f = ZigZagMap::build(m, &q).unwrap();
            let d = f.digit_polynomial();
            let divisible = d.eval(&minus_one) == BigInt::from(0);
            let even = f.postcritical().len().is_multiple_of(2);
            if divisible != even {
                problems.push(format!(
                    "m={m} q={q}: (t+1)|D is {divisible}, |PC| = {}",
                    f.postcritical().len()
                ));
            }
            if d.eval(&one) == BigInt::from(0) {
                problems.push(format!("m={m} q={q}: D(1) = 0"));
            }
            let signed = f.signed_markov().unwrap().char_poly().unwrap();
            // D(-t) made monic, as a characteristic polynomial must be
            let flipped = d.negate_variable().normalize_sign_unit();
            if &signed != d && signed != flipped {
                problems.push(format!("m={m} q={q}: signed char poly {signed}"));
            }
        }
    }
    outcome(
        problems.is_empty(),
        format!(
            "{count} maps, {} violations {}",
            problems.len(),
            first_few(&problems)
        ),
    )
}

fn burau() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    for n in 3..=8usize {
        let twist = burau_at_minus_one(&full_twist(n).unwrap());
        let minus = SmallMatrix::identity(n - 1).map(|x| -x);
        if twist != minus {
            problems.push(format!("full twist on {n} strands is not -I at z = -1"));
        }
    }
    for n in 3..=6usize {
        for i in 1..(n as i32 - 1) {
            let lhs = BraidWord::new(n, vec![i, i + 1, i]).unwrap();
            let rhs = BraidWord::new(n, vec![i + 1, i, i + 1]).unwrap();
            if reduced_burau(&lhs) != reduced_burau(&rhs) {
                problems.push(format!("braid relation {i} on {n} strands"));
            }
            for j in (i + 2)..n as i32 {
                let a = BraidWord::new(n, vec![i, j]).unwrap();
                let b = BraidWord::new(n, vec![j, i]).unwrap();
                if reduced_burau(&a) != reduced_burau(&b) {
                    problems.push(format!("commutation {i},{j} on {n} strands"));
                }
            }
        }
    }
    let q = frac(1, 2);
    let target = IntPolynomial::from_i64s(&[1, -2, -2, 1]);
    match search_braid(2, &q, 8).unwrap() {
        None => problems.push("no braid found for (2, 1/2) up to length 8".into()),
        Some(w) => {
            let p = symplectic_poly(&w);
            let up_to_sign = |x: &IntPolynomial| x == &target || x.map(|c| -c) == target;
            if !(up_to_sign(&p) || up_to_sign(&p.negate_variable())) {
                problems.push(format!("word {w} has symplectic polynomial {p}"));
            }
            let before = match_digit(&w, 2, &q).unwrap();
            let twisted = w.then(&full_twist(w.strands()).unwrap()).unwrap();
            let after = match_digit(&twisted, 2, &q).unwrap();
            if after != before.flipped() {
                problems.push(format!(
                    "word {w} on {} strands: branch {before:?} stays {after:?} after the full twist",
                    w.strands()
                ));
            }
        }
    }
    let (fast, timing) = within(start, BURAU_BUDGET);
    outcome(
        problems.is_empty() && fast,
        format!(
            "{} violations, {timing} {}",
            problems.len(),
            first_few(&problems)
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked-example fidelity", worked_example),
        ("digit-polynomial laws", digit_laws),
        ("markov identities", markov_identities),
        ("zeta cross-check", zeta_cross_check),
        ("monotonicity", monotonicity),
        ("bounds", bounds),
        ("transformation laws", transformation_laws),
        ("rotation and prongs", rotation_and_prongs),
        ("surface polynomials", surface_polynomials),
        ("burau", burau),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        failed += usize::from(!o.passed);
        println!(
            "{verdict} criterion {:>2} {name} [{:.2}s]: {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            o.detail.trim_end()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
