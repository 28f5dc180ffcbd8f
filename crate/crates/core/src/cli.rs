//! Command-line front end.
//!
//! Exit codes: 0 on success or a match, 1 on a mismatch, 2 on a usage
//! error, 3 when the truncation exceeds the resource cutoff or an internal
//! computation fails.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::characters;
use crate::error::{Error, Result};
use crate::kacmoody;
use crate::model::ModelParams;
use crate::oracle;
use crate::qseries::MultiSeries;
use crate::rational::{self, int, to_fraction};

pub const EXIT_MATCH: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Largest accepted truncation.
pub const MAX_TRUNC: i64 = 24;

#[derive(Parser, Debug)]
#[command(name = "fermionic", version, about = "Fermionic characters of twisted affine A(2l)(2) modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Principal subspace character from the fermionic formula.
    Principal(Common),
    /// Parafermionic character from the fermionic formula.
    Parafermionic(Common),
    /// Standard module character from the fermionic formula.
    Standard(Common),
    /// Compare a formula with its oracles.
    Verify {
        which: Which,
        #[command(flatten)]
        common: Common,
    },
    /// Run one oracle on its own.
    Oracle {
        name: OracleName,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Rank.
    #[arg(long)]
    pub l: usize,
    /// Level.
    #[arg(long)]
    pub k: usize,
    /// Inclusive q-exponent cutoff, as `p/q` or an integer.
    #[arg(long, default_value = "4")]
    pub trunc: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Principal,
    Parafermionic,
    Standard,
    Freudenthal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleName {
    Principal,
    Parafermionic,
    Standard,
    Vacuum,
    Basic,
    Freudenthal,
}

impl OracleName {
    fn label(self) -> &'static str {
        match self {
            Self::Principal => "principal-basis",
            Self::Parafermionic => "parafermionic-basis",
            Self::Standard => "standard-basis",
            Self::Vacuum => "vacuum-space",
            Self::Basic => "basic-module",
            Self::Freudenthal => "freudenthal",
        }
    }
}

#[derive(Serialize)]
struct JsonParams {
    l: usize,
    k: usize,
    trunc: String,
}

#[derive(Serialize)]
struct JsonTerm {
    q: String,
    y: Vec<i64>,
    c: serde_json::Value,
}

#[derive(Serialize)]
struct JsonSeries {
    params: JsonParams,
    series: Vec<JsonTerm>,
}

#[derive(Serialize)]
struct JsonMismatch {
    q: String,
    y: Vec<i64>,
    formula: serde_json::Value,
    oracle: serde_json::Value,
}

#[derive(Serialize)]
struct JsonCheck {
    oracle: String,
    formula_terms: usize,
    oracle_terms: usize,
    result: &'static str,
    first_mismatch: Option<JsonMismatch>,
}

#[derive(Serialize)]
struct JsonVerify {
    params: JsonParams,
    formula: String,
    checks: Vec<JsonCheck>,
    result: &'static str,
}

fn json_integer(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

fn json_params(p: &ModelParams) -> JsonParams {
    JsonParams { l: p.l, k: p.k, trunc: to_fraction(&p.trunc) }
}

/// Renders `c·q^{a/b}·y_1^{r_1}⋯`, one term per line; integral exponents drop `/1`.
pub fn render_text(s: &MultiSeries) -> String {
    let mut out = String::new();
    for t in s.terms() {
        let mut line = format!("{}·q^{{{}}}", t.c, t.q);
        for (i, r) in t.y.iter().enumerate() {
            if *r != 0 {
                let _ = write!(line, "·y_{}^{{{}}}", i + 1, r);
            }
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Deterministic JSON rendering of a series with its parameters.
pub fn render_json(p: &ModelParams, s: &MultiSeries) -> String {
    let series = s
        .terms()
        .map(|t| JsonTerm { q: to_fraction(t.q), y: t.y.to_vec(), c: json_integer(t.c) })
        .collect();
    serde_json::to_string(&JsonSeries { params: json_params(p), series }).expect("serializable") + "\n"
}

fn params(common: &Common) -> std::result::Result<ModelParams, (i32, String)> {
    let trunc = rational::parse(&common.trunc).map_err(|e| (EXIT_USAGE, e.to_string()))?;
    let p = ModelParams::new(common.l, common.k, trunc).map_err(|e| (EXIT_USAGE, e.to_string()))?;
    if p.trunc > int(MAX_TRUNC) {
        return Err((EXIT_RESOURCE, format!("truncation above the cutoff {MAX_TRUNC}")));
    }
    Ok(p)
}

fn freudenthal_series(p: &ModelParams) -> Result<MultiSeries> {
    let reference = characters::char_standard(p);
    let dictionary = kacmoody::calibrate_stable(p, &reference)?;
    let weights = kacmoody::freudenthal(p, kacmoody::depth_for(&dictionary, &p.trunc))?;
    dictionary
        .apply(&weights, &p.trunc)
        .ok_or_else(|| Error::Calibration("weights do not cover the truncation".into()))
}

/// Series produced by a named oracle.
pub fn run_oracle(name: OracleName, p: &ModelParams) -> Result<MultiSeries> {
    Ok(match name {
        OracleName::Principal => oracle::oracle_principal(p),
        OracleName::Parafermionic => oracle::oracle_parafermionic(p),
        OracleName::Standard => oracle::oracle_standard(p),
        OracleName::Vacuum => oracle::vacuum_series(p),
        OracleName::Basic => oracle::oracle_basic_module(p)?,
        OracleName::Freudenthal => freudenthal_series(p)?,
    })
}

/// A formula name, its series, and the named oracle series it is checked against.
pub type VerificationPlan = (String, MultiSeries, Vec<(String, MultiSeries)>);

/// Formula series and the oracles it is checked against.
pub fn verification_plan(which: Which, p: &ModelParams) -> Result<VerificationPlan> {
    let label = |n: OracleName| n.label().to_string();
    Ok(match which {
        Which::Principal => (
            "principal".into(),
            characters::char_principal(p),
            vec![(label(OracleName::Principal), oracle::oracle_principal(p))],
        ),
        Which::Parafermionic => (
            "parafermionic".into(),
            characters::char_parafermionic(p),
            vec![(label(OracleName::Parafermionic), oracle::oracle_parafermionic(p))],
        ),
        Which::Standard => {
            let mut oracles = vec![
                (label(OracleName::Standard), oracle::oracle_standard(p)),
                ("lepowsky-wilson".to_string(), oracle::lepowsky_wilson_product(p)),
            ];
            if p.k == 1 {
                oracles.push((label(OracleName::Basic), oracle::oracle_basic_module(p)?));
            }
            ("standard".into(), characters::char_standard(p), oracles)
        }
        Which::Freudenthal => (
            "standard".into(),
            characters::char_standard(p),
            vec![(label(OracleName::Freudenthal), freudenthal_series(p)?)],
        ),
    })
}

fn verify(which: Which, p: &ModelParams, format: Format) -> Result<(i32, String)> {
    let (formula, series, oracles) = verification_plan(which, p)?;
    let mut checks = Vec::new();
    for (name, o) in &oracles {
        let mismatch = series.first_mismatch(o);
        checks.push(JsonCheck {
            oracle: name.clone(),
            formula_terms: series.len(),
            oracle_terms: o.len(),
            result: if mismatch.is_some() { "mismatch" } else { "match" },
            first_mismatch: mismatch.map(|m| JsonMismatch {
                q: to_fraction(&m.q),
                y: m.y.clone(),
                formula: json_integer(&m.left),
                oracle: json_integer(&m.right),
            }),
        });
    }
    let all_match = checks.iter().all(|c| c.first_mismatch.is_none());
    let code = if all_match { EXIT_MATCH } else { EXIT_MISMATCH };
    let report = match format {
        Format::Json => {
            let v = JsonVerify {
                params: json_params(p),
                formula,
                checks,
                result: if all_match { "match" } else { "mismatch" },
            };
            serde_json::to_string(&v).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut out = format!(
                "formula {formula} l={} k={} trunc={}\n",
                p.l,
                p.k,
                p.trunc
            );
            for c in &checks {
                let _ = write!(
                    out,
                    "oracle {}: {} formula terms, {} oracle terms: ",
                    c.oracle, c.formula_terms, c.oracle_terms
                );
                match &c.first_mismatch {
                    None => {
                        let _ = writeln!(out, "match to trunc {}", p.trunc);
                    }
                    Some(m) => {
                        let _ = writeln!(out, "first mismatch at q^{} y^{:?}: {} vs {}", m.q, m.y, m.formula, m.oracle);
                    }
                }
            }
            out
        }
    };
    Ok((code, report))
}

fn emit(common: &Common, report: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &common.output {
        Some(path) => std::fs::write(path, report),
        None => stdout.write_all(report.as_bytes()),
    }
}

fn execute(cli: Cli) -> std::result::Result<(i32, Common, String), (i32, String)> {
    let internal = |e: Error| (EXIT_RESOURCE, e.to_string());
    let render = |common: &Common, p: &ModelParams, s: &MultiSeries| match common.format {
        Format::Text => render_text(s),
        Format::Json => render_json(p, s),
    };
    match cli.command {
        Command::Principal(common) => {
            let p = params(&common)?;
            let report = render(&common, &p, &characters::char_principal(&p));
            Ok((EXIT_MATCH, common, report))
        }
        Command::Parafermionic(common) => {
            let p = params(&common)?;
            let report = render(&common, &p, &characters::char_parafermionic(&p));
            Ok((EXIT_MATCH, common, report))
        }
        Command::Standard(common) => {
            let p = params(&common)?;
            let report = render(&common, &p, &characters::char_standard(&p));
            Ok((EXIT_MATCH, common, report))
        }
        Command::Oracle { name, common } => {
            let p = params(&common)?;
            let s = run_oracle(name, &p).map_err(|e| match e {
                Error::LevelOneOnly(_) => (EXIT_USAGE, e.to_string()),
                e => internal(e),
            })?;
            let report = render(&common, &p, &s);
            Ok((EXIT_MATCH, common, report))
        }
        Command::Verify { which, common } => {
            let p = params(&common)?;
            let (code, report) = verify(which, &p, common.format).map_err(internal)?;
            Ok((code, common, report))
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_MATCH;
        }
    };
    match execute(cli) {
        Ok((code, common, report)) => match emit(&common, &report, stdout) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_RESOURCE
            }
        },
        Err((code, message)) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}
