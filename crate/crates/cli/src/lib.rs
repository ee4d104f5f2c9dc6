//! Command-line driver: argument resolution, dispatch and report rendering.
//!
//! Every command returns a [`Report`] holding the rendered output and the
//! number of identity violations it found; the binary maps those to exit
//! codes.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use zigzag_core::burau::{self, BraidWord, DigitMatch};
use zigzag_core::farey::{self, Fraction, MAX_LEVEL};
use zigzag_core::invariants::{self, CheckOutcome};
use zigzag_core::kneading;
use zigzag_core::zigzag::ZigZagMap;
use zigzag_core::Error;

/// Largest tree depth `tree` will print.
pub const MAX_TREE_DEPTH: usize = 16;
/// Largest denominator `scan` and `verify` accept.
pub const MAX_SCAN_DEN: usize = 200;
/// Precision of the `λ` enclosure printed by `info`.
pub const INFO_BITS: u32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "zigzag",
    version,
    about = "Exact invariants of the zig-zag maps in PA(m)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Modality m >= 2.
    #[arg(long = "m", global = true)]
    pub m: Option<u32>,
    /// Rational parameter "a/b" in (0, 1).
    #[arg(long = "q", global = true)]
    pub q: Option<String>,
    /// Tree depth for `tree`
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Largest denominator for `scan` and `verify`
    #[arg(long = "max-den", global = true)]
    pub max_den: Option<usize>,
    /// Zeta-series order.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Braid search length for `burau` without a word.
    #[arg(long = "max-len", global = true)]
    pub max_len: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for one map: `info M Q`.
    Info { args: Vec<String> },
    /// Every tree vertex with its transformation-law check: `tree M DEPTH`.
    Tree { args: Vec<String> },
    /// CSV of (q, λ) over all q with bounded denominator: `scan M MAX_DEN`.
    Scan { args: Vec<String> },
    /// Every identity for every q with bounded denominator: `verify M MAX_DEN`.
    Verify { args: Vec<String> },
    /// Compare a braid word (or the searched one) with D_f: `burau M Q [WORD]`.
    Burau {
        args: Vec<String>,
        /// Braid word such as "1,2,-1,3"; needed when it starts with `-`.
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kind {
    Info,
    Tree,
    Scan,
    Verify,
    Burau,
}

/// A fully resolved and validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub kind: Kind,
    pub m: u32,
    pub q: Option<Fraction>,
    pub depth: usize,
    pub max_den: usize,
    pub order: usize,
    pub max_len: usize,
    pub word: Option<String>,
    pub output_path: Option<std::path::PathBuf>,
    pub format: Format,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments; exit status 2.
    Usage(String),
    /// A library error while computing; exit status 1.
    Failed(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Failed(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Failed(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Takes a value from a flag or, failing that, the next positional.
fn pick<T: FromStr>(
    name: &str,
    flag: Option<T>,
    positional: &mut std::slice::Iter<'_, String>,
) -> CliResult<Option<T>>
where
    T::Err: std::fmt::Display,
{
    match (flag, positional.next()) {
        (Some(_), Some(extra)) => Err(usage(format!("{name} given both as flag and as {extra:?}"))),
        (Some(v), None) => Ok(Some(v)),
        (None, Some(text)) => text
            .parse()
            .map(Some)
            .map_err(|e| usage(format!("invalid {name} {text:?}: {e}"))),
        (None, None) => Ok(None),
    }
}

fn parse_q(text: Option<String>) -> CliResult<Option<Fraction>> {
    text.map(|t| {
        let q: Fraction = t.parse().map_err(|e: Error| usage(e.to_string()))?;
        q.require_interior().map_err(|e| usage(e.to_string()))?;
        Ok(q)
    })
    .transpose()
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> CliResult<Self> {
        let (kind, args, word) = match cli.command {
            Command::Info { args } => (Kind::Info, args, None),
            Command::Tree { args } => (Kind::Tree, args, None),
            Command::Scan { args } => (Kind::Scan, args, None),
            Command::Verify { args } => (Kind::Verify, args, None),
            Command::Burau { args, word } => (Kind::Burau, args, word),
        };
        let mut pos = args.iter();
        let m = pick("m", cli.m, &mut pos)?.ok_or_else(|| usage("missing modality m"))?;
        if m < 2 {
            return Err(usage(format!("modality must be at least 2, got {m}")));
        }
        let mut config = RunConfig {
            kind: kind.clone(),
            m,
            q: None,
            depth: 0,
            max_den: 0,
            order: cli.order.unwrap_or(6),
            max_len: cli.max_len.unwrap_or(8),
            word: None,
            output_path: cli.out,
            format: cli.format.unwrap_or(if kind == Kind::Scan {
                Format::Csv
            } else {
                Format::Json
            }),
        };
        match kind {
            Kind::Info | Kind::Burau => {
                let q = pick("q", cli.q, &mut pos)?;
                config.q = Some(parse_q(q)?.ok_or_else(|| usage("missing q"))?);
                if kind == Kind::Burau {
                    config.word = pick("word", word, &mut pos)?;
                }
            }
            Kind::Tree => {
                config.depth =
                    pick("depth", cli.depth, &mut pos)?.ok_or_else(|| usage("missing depth"))?;
            }
            Kind::Scan | Kind::Verify => {
                config.max_den = pick("max-den", cli.max_den, &mut pos)?
                    .ok_or_else(|| usage("missing max-den"))?;
            }
        }
        if let Some(extra) = pos.next() {
            return Err(usage(format!("unexpected argument {extra:?}")));
        }
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> CliResult<()> {
        if self.order > invariants::MAX_ZETA_ORDER {
            return Err(usage(format!(
                "order exceeds {}",
                invariants::MAX_ZETA_ORDER
            )));
        }
        if self.max_len > burau::MAX_SEARCH_LEN {
            return Err(usage(format!("max-len exceeds {}", burau::MAX_SEARCH_LEN)));
        }
        match self.kind {
            Kind::Tree if self.depth == 0 || self.depth > MAX_TREE_DEPTH.min(MAX_LEVEL) => {
                Err(usage(format!("depth must be in 1..={MAX_TREE_DEPTH}")))
            }
            Kind::Scan | Kind::Verify if self.max_den < 2 || self.max_den > MAX_SCAN_DEN => {
                Err(usage(format!("max-den must be in 2..={MAX_SCAN_DEN}")))
            }
            Kind::Scan if self.format == Format::Text => Err(usage("scan writes csv or json")),
            Kind::Info | Kind::Tree | Kind::Verify | Kind::Burau if self.format == Format::Csv => {
                Err(usage("csv output is only available for scan"))
            }
            _ => Ok(()),
        }
    }
}

/// Rendered output plus the number of identity violations found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub output: String,
    pub violations: usize,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.violations == 0 {
            0
        } else {
            1
        }
    }
}

pub fn run(config: &RunConfig) -> CliResult<Report> {
    match config.kind {
        Kind::Info => info(config),
        Kind::Tree => tree(config),
        Kind::Scan => scan(config),
        Kind::Verify => verify(config),
        Kind::Burau => braid(config),
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn decimal(x: f64) -> String {
    format!("{x:.12}")
}

fn q_of(config: &RunConfig) -> &Fraction {
    config.q.as_ref().expect("validated")
}

/// Builds the `info` report as JSON.
pub fn info_json(m: u32, q: &Fraction, order: usize) -> zigzag_core::Result<Value> {
    let f = ZigZagMap::build(m, q)?;
    let nu = f.kneading();
    let lambda = f.lambda();
    lambda.refine_bits(INFO_BITS);
    let (lo, hi) = lambda.bounds();
    let rho = f.permutation_type()?;
    let singularities = invariants::singularity_report_of(&f)?;
    let surface = invariants::surface_polynomials_of(&f)?;
    let zeta = invariants::zeta_prefix(m, q, order)?;
    let (left, right) = farey::parents(q)?;
    let data: Vec<String> = kneading::kneading_data(m, nu)?
        .iter()
        .map(ToString::to_string)
        .collect();
    Ok(json!({
        "m": m,
        "q": q,
        "level": farey::level(q)?,
        "parents": [left, right],
        "kneading": nu.to_string(),
        "kneading_data": data,
        "digit_poly": f.digit_polynomial(),
        "digit_poly_text": f.digit_polynomial().to_string(),
        "lambda": {
            "decimal": decimal(lambda.to_f64()),
            "enclosure": [lo.to_string(), hi.to_string()],
            "width": format!("{:.3e}", lambda.width_f64()),
        },
        "orbit_of_one": f.orbit().iter().map(|x| decimal(x.to_f64())).collect::<Vec<_>>(),
        "permutation": {
            "n": rho.n,
            "k": rho.k,
            "flavor": rho.flavor,
            "cycles": rho.cycles(),
        },
        "singularities": singularities,
        "strong_markov": f.strong_markov()?,
        "weak_markov": f.weak_markov()?,
        "signed_markov": f.signed_markov()?,
        "surface_polynomials": surface,
        "double_cover": invariants::double_cover(m, q)?,
        "zeta": zeta,
    }))
}

fn info(config: &RunConfig) -> CliResult<Report> {
    let value = info_json(config.m, q_of(config), config.order)?;
    let output = match config.format {
        Format::Json => pretty(&value),
        _ => info_text(&value),
    };
    Ok(Report {
        output,
        violations: 0,
    })
}

fn info_text(value: &Value) -> String {
    let mut out = String::new();
    let field = |key: &str| -> String {
        match &value[key] {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    };
    for key in ["m", "q", "level", "kneading", "digit_poly_text"] {
        let _ = writeln!(out, "{key}: {}", field(key));
    }
    let _ = writeln!(
        out,
        "lambda: {} (width {})",
        value["lambda"]["decimal"].as_str().unwrap_or(""),
        value["lambda"]["width"].as_str().unwrap_or("")
    );
    let _ = writeln!(
        out,
        "permutation: {}",
        value["permutation"]["cycles"].as_str().unwrap_or("")
    );
    let _ = writeln!(
        out,
        "rotation_at_infinity: {}",
        value["singularities"]["rotation_at_infinity"]
            .as_str()
            .unwrap_or("")
    );
    let _ = writeln!(
        out,
        "symplectic: {}",
        value["surface_polynomials"]["symplectic"]
    );
    let _ = writeln!(out, "zeta: {}", value["zeta"]["series"]);
    out
}

#[derive(Debug, Serialize)]
struct TreeNode {
    level: usize,
    #[serde(flatten)]
    check: invariants::TransformCheck,
    holds: bool,
}

fn tree(config: &RunConfig) -> CliResult<Report> {
    let levels = farey::enumerate_tree(config.depth)?;
    let mut nodes = Vec::new();
    for (i, row) in levels.iter().enumerate() {
        let checks: Vec<_> = row
            .par_iter()
            .map(|q| invariants::transform_check(config.m, q))
            .collect::<zigzag_core::Result<_>>()?;
        nodes.extend(checks.into_iter().map(|check| TreeNode {
            level: i + 1,
            holds: check.holds(),
            check,
        }));
    }
    let violations = nodes.iter().filter(|n| !n.holds).count();
    let output = match config.format {
        Format::Json => pretty(&json!({
            "m": config.m,
            "depth": config.depth,
            "nodes": nodes.len(),
            "violations": violations,
            "tree": nodes,
        })),
        _ => {
            let mut out = String::new();
            for n in &nodes {
                let _ = writeln!(
                    out,
                    "{} level={} parents=({}, {}) {}",
                    n.check.q,
                    n.level,
                    n.check.left_parent,
                    n.check.right_parent,
                    if n.holds { "ok" } else { "VIOLATION" }
                );
            }
            let _ = writeln!(out, "nodes={} violations={violations}", nodes.len());
            out
        }
    };
    Ok(Report { output, violations })
}

fn scan(config: &RunConfig) -> CliResult<Report> {
    let report = invariants::monotonicity_scan(config.m, config.max_den)?;
    let violations = report.violations.len();
    let output = match config.format {
        Format::Csv => report.csv(),
        _ => pretty(&json!({
            "m": config.m,
            "max_den": config.max_den,
            "points": report.points.iter().map(|p| json!({
                "q": p.q,
                "lambda": decimal(p.lambda.to_f64()),
                "width": format!("{:.3e}", p.lambda.width_f64()),
            })).collect::<Vec<_>>(),
            "gaps": report.gaps().iter().map(|g| decimal(*g)).collect::<Vec<_>>(),
            "refined_pairs": report.refined_pairs,
            "edge_families": report.edges,
            "violations": report.violations,
        })),
    };
    Ok(Report { output, violations })
}

#[derive(Debug, Serialize)]
struct Violation {
    m: u32,
    q: Fraction,
    check: String,
    detail: String,
}

fn verify(config: &RunConfig) -> CliResult<Report> {
    let m = config.m;
    let qs = farey::fractions_up_to(config.max_den);
    let per_q: Vec<(Fraction, Vec<CheckOutcome>)> = qs
        .into_par_iter()
        .map(|q| {
            let mut checks = invariants::verify_fraction(m, &q, config.order)?;
            let (l, r) = farey::parents(&q)?;
            if l.is_interior() && r.is_interior() {
                let add = invariants::rotation_additivity_check(m, &l, &r);
                checks.push(match add {
                    Ok(a) if a.holds => CheckOutcome {
                        name: "additivity".into(),
                        passed: true,
                        detail: None,
                    },
                    Ok(a) => CheckOutcome {
                        name: "additivity".into(),
                        passed: false,
                        detail: Some(format!("{a:?}")),
                    },
                    Err(e) => CheckOutcome {
                        name: "additivity".into(),
                        passed: false,
                        detail: Some(e.to_string()),
                    },
                });
            }
            Ok((q, checks))
        })
        .collect::<zigzag_core::Result<_>>()?;
    let total: usize = per_q.iter().map(|(_, c)| c.len()).sum();
    let violations: Vec<Violation> = per_q
        .iter()
        .flat_map(|(q, checks)| {
            checks.iter().filter(|c| !c.passed).map(move |c| Violation {
                m,
                q: q.clone(),
                check: c.name.clone(),
                detail: c.detail.clone().unwrap_or_default(),
            })
        })
        .collect();
    let count = violations.len();
    let output = match config.format {
        Format::Json => pretty(&json!({
            "m": m,
            "max_den": config.max_den,
            "fractions": per_q.len(),
            "checks": total,
            "passed": total - count,
            "failed": count,
            "violations": violations,
        })),
        _ => {
            let mut out = String::new();
            for v in &violations {
                let _ = writeln!(out, "FAIL m={} q={} {}: {}", v.m, v.q, v.check, v.detail);
            }
            let _ = writeln!(
                out,
                "fractions={} checks={total} passed={} failed={count}",
                per_q.len(),
                total - count
            );
            out
        }
    };
    Ok(Report {
        output,
        violations: count,
    })
}

fn braid(config: &RunConfig) -> CliResult<Report> {
    let (m, q) = (config.m, q_of(config));
    let strands = q.den_usize()? + 2;
    let (word, searched) = match &config.word {
        Some(text) => (
            Some(BraidWord::parse(strands, text).map_err(|e| usage(e.to_string()))?),
            false,
        ),
        None => (burau::search_braid(m, q, config.max_len)?, true),
    };
    let d = zigzag_core::intpoly::digit_polynomial(m, q)?;
    let mut value = json!({
        "m": m,
        "q": q,
        "strands": strands,
        "digit_poly": d,
        "searched": searched,
        "max_len": if searched { Some(config.max_len) } else { None },
    });
    if let Some(w) = &word {
        let matched = burau::match_digit(w, m, q)?;
        let twisted = burau::full_twist(strands)?.then(w)?;
        value["word"] = json!(w);
        value["symplectic_poly"] = json!(burau::symplectic_poly(w));
        value["match"] = json!(matched);
        value["twisted_match"] = json!(burau::match_digit(&twisted, m, q)?);
    } else {
        value["word"] = Value::Null;
        value["match"] = json!(DigitMatch::None);
    }
    let output = match config.format {
        Format::Json => pretty(&value),
        _ => format!(
            "word: {}\nmatch: {}\n",
            word.map(|w| w.to_string())
                .unwrap_or_else(|| "none found".into()),
            value["match"].as_str().unwrap_or("")
        ),
    };
    Ok(Report {
        output,
        violations: 0,
    })
}
