//! Command-line front end. Every number on standard output is a JSON string
//! holding an exact rational.
//!
//! Exit codes: 0 PSD (or plain success), 1 NotPSD, 2 usage error,
//! 3 internal assertion failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::arith::{parse_rational, Scalar, Sign};
use crate::decide::{
    decide, decide_closed_form, decide_oracle, decide_structural, eval_polys, find_witness, ClosedFormVariant,
    Method, DEFAULT_WITNESS_BUDGET,
};
use crate::error::{Error, Result};
use crate::form::{eval_form_at, from_bcde, radicand, reduce_to_g, BcdeParams, CyclicParams};
use crate::harness::{fuzz_report, FuzzConfig, Stratum};
use crate::poly::parse_rational_poly;
use crate::quartic::SpecialQuartic;
use crate::roots::{classify_roots_detailed, is_nonneg_everywhere};

pub const EXIT_PSD: i32 = 0;
pub const EXIT_NOT_PSD: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Decide positive semidefiniteness of cyclic ternary quartic forms
/// F = Σx⁴ + kΣx²y² + lΣx²yz + mΣx³y + nΣxy³ with exact arithmetic.
///
/// Rationals are written as integers or fractions such as -3/7.
#[derive(Debug, Parser)]
#[command(name = "cyclic-psd", version)]
pub struct Cli {
    /// Indent JSON output for reading.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether F is PSD. Exit 0 for PSD, 1 for NotPSD.
    Decide {
        #[command(flatten)]
        params: ParamArgs,
        /// structural, oracle, closed-theorem, closed-proof or closed-corrected.
        #[arg(long, default_value = "structural")]
        method: Method,
        /// On NotPSD, search for a rational point with F < 0.
        #[arg(long)]
        witness: bool,
    },
    /// Every intermediate quantity: the eleven polynomials, R, the
    /// coefficients and discriminants of g, and the clause each method used.
    /// Exit code follows the structural verdict.
    Explain {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// The univariate quartic g(t) whose nonnegativity is equivalent to F PSD.
    Reduce {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Discriminant sequence, sign lists and real-root count of a polynomial.
    Roots {
        /// Comma-separated coefficients, leading first, e.g. 1,1,0,0,1.
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Discriminant rule for a0 x⁴ + a1 x³ + a2 x² + a4 (a0, a1 nonzero).
    /// Exit 0 if nonnegative, 1 otherwise.
    Quartic {
        #[arg(allow_hyphen_values = true)]
        a0: String,
        #[arg(allow_hyphen_values = true)]
        a1: String,
        #[arg(allow_hyphen_values = true)]
        a2: String,
        #[arg(allow_hyphen_values = true)]
        a4: String,
    },
    /// Cross-check every decision method on sampled parameters.
    ///
    /// Records go to --out as JSON Lines (or to standard output ahead of the
    /// summary when --out is absent); the summary is printed as JSON.
    /// Exit 0 unless a hard assertion failed, then 3.
    Fuzz(FuzzArgs),
    /// Search for a rational point with F < 0. Exit 1 when one is found,
    /// 0 when the budget runs out.
    Witness {
        #[command(flatten)]
        params: ParamArgs,
        /// Maximum number of form evaluations.
        #[arg(long, default_value_t = DEFAULT_WITNESS_BUDGET)]
        budget: usize,
    },
    /// Map the coefficients B, C, D, E of the symmetric-function basis to k, l, m, n.
    Convert {
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        e: String,
    },
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(allow_hyphen_values = true)]
    pub k: String,
    #[arg(allow_hyphen_values = true)]
    pub l: String,
    #[arg(allow_hyphen_values = true)]
    pub m: String,
    #[arg(allow_hyphen_values = true)]
    pub n: String,
}

impl ParamArgs {
    fn parse(&self) -> Result<CyclicParams> {
        CyclicParams::parse(&self.k, &self.l, &self.m, &self.n)
    }
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    /// Number of sampled parameter points.
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Comma-separated strata: generic, R_zero, f3_zero, f1_zero,
    /// f5_zero_near, case1_boundary, f5_zero, f6_zero, f7_zero.
    #[arg(long)]
    pub strata: Option<String>,
    /// Write one JSON record per sample to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON file with FuzzConfig fields; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Surface points tried against each PSD verdict.
    #[arg(long)]
    pub falsifier_budget: Option<usize>,
    /// Form evaluations spent per witness search.
    #[arg(long)]
    pub witness_budget: Option<usize>,
}

impl FuzzArgs {
    fn config(&self) -> Result<FuzzConfig> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?;
                serde_json::from_str(&text).map_err(|e| Error::usage(format!("bad config {}: {e}", path.display())))?
            }
            None => FuzzConfig::default(),
        };
        if let Some(n) = self.count {
            cfg.sample_count = n;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(s) = &self.strata {
            cfg.strata = Stratum::parse_list(s)?;
        }
        if let Some(b) = self.falsifier_budget {
            cfg.falsifier_budget = b;
        }
        if let Some(b) = self.witness_budget {
            cfg.witness_budget = b;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Parse `argv` (program name first), run the command, return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_PSD
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let emit = |out: &mut dyn Write, v: &Value| -> Result<()> {
        let text = if cli.pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
        let text = text.map_err(|e| Error::Internal(e.to_string()))?;
        writeln!(out, "{text}").map_err(io_err)
    };
    match &cli.command {
        Command::Decide { params, method, witness } => {
            let c = params.parse()?;
            let v = decide(&c, *method, *witness)?;
            emit(out, &to_value(&v)?)?;
            Ok(verdict_code(v.is_psd))
        }
        Command::Explain { params } => {
            let c = params.parse()?;
            let (value, psd) = explain(&c)?;
            emit(out, &value)?;
            Ok(verdict_code(psd))
        }
        Command::Reduce { params } => {
            let c = params.parse()?;
            emit(out, &reduce(&c))?;
            Ok(EXIT_PSD)
        }
        Command::Roots { poly } => {
            let p = parse_rational_poly(poly)?;
            let d = classify_roots_detailed(&p)?;
            emit(
                out,
                &json!({
                    "poly": p.to_string(),
                    "sequence": d.sequence.entries.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "sign_list": signs(&d.signs.0),
                    "revised_sign_list": signs(&d.revised.0),
                    "sign_changes": d.sign_changes,
                    "nonvanishing": d.nonvanishing,
                    "root_count": d.count,
                }),
            )?;
            Ok(EXIT_PSD)
        }
        Command::Quartic { a0, a1, a2, a4 } => {
            let q = SpecialQuartic::from_coeffs(
                parse_rational(a0)?,
                parse_rational(a1)?,
                parse_rational(a2)?,
                parse_rational(a4)?,
            );
            let d = q.discriminants()?;
            let clause = q.rule_clause()?;
            let psd = q.is_psd()?;
            let oracle = is_nonneg_everywhere(&q.to_rational_poly().expect("rational a1"));
            let mut value = to_value(&d)?;
            let obj = value.as_object_mut().expect("struct");
            let upper: Map<String, Value> =
                std::mem::take(obj).into_iter().map(|(k, v)| (k.to_uppercase(), v)).collect();
            *obj = upper;
            obj.insert("clause".into(), to_value(&clause)?);
            obj.insert("psd".into(), json!(psd));
            obj.insert("oracle_psd".into(), json!(oracle));
            emit(out, &value)?;
            Ok(verdict_code(psd))
        }
        Command::Fuzz(args) => {
            let cfg = args.config()?;
            let report = fuzz_report(&cfg)?;
            match &args.out {
                Some(path) => {
                    let file = File::create(path)
                        .map_err(|e| Error::usage(format!("cannot create {}: {e}", path.display())))?;
                    let mut w = BufWriter::new(file);
                    report.write_jsonl(&mut w).map_err(io_err)?;
                    w.flush().map_err(io_err)?;
                }
                None => report.write_jsonl(&mut *out).map_err(io_err)?,
            }
            emit(out, &to_value(&report.summary)?)?;
            Ok(if report.hard_failures().next().is_some() { EXIT_INTERNAL } else { EXIT_PSD })
        }
        Command::Witness { params, budget } => {
            let c = params.parse()?;
            let value = match find_witness(&c, *budget) {
                Some(p) => {
                    let v = eval_form_at(&c, &p);
                    json!({ "found": true, "witness": p, "value": v.to_string() })
                }
                None => json!({ "found": false, "budget": budget }),
            };
            let found = value["found"] == json!(true);
            emit(out, &value)?;
            Ok(if found { EXIT_NOT_PSD } else { EXIT_PSD })
        }
        Command::Convert { b, c, d, e } => {
            let p = BcdeParams::new(parse_rational(b)?, parse_rational(c)?, parse_rational(d)?, parse_rational(e)?);
            emit(out, &to_value(&from_bcde(&p))?)?;
            Ok(EXIT_PSD)
        }
    }
}

fn explain(c: &CyclicParams) -> Result<(Value, bool)> {
    let polys = eval_polys(c);
    let g = reduce_to_g(c);
    let discriminants = if Scalar::is_zero(&g.a0) {
        Value::Null
    } else {
        to_value(&g.special_quartic().discriminants()?)?
    };
    let structural = decide_structural(c);
    let mut verdicts = vec![structural.clone(), decide_oracle(c)];
    verdicts.extend(ClosedFormVariant::ALL.map(|v| decide_closed_form(c, v)));
    let methods: Map<String, Value> = verdicts
        .iter()
        .map(|v| (v.method.name().to_string(), json!({ "is_psd": v.is_psd, "fired_clause": v.fired_clause })))
        .collect();
    let value = json!({
        "params": c,
        "polys": polys,
        "zero_polys": polys.zero_names(),
        "radicand": g.radicand.to_string(),
        "g": g_coefficients(c),
        "g_discriminants": discriminants,
        "methods": methods,
    });
    Ok((value, structural.is_psd))
}

fn reduce(c: &CyclicParams) -> Value {
    json!({
        "radicand": radicand(c).to_string(),
        "coefficients": g_coefficients(c),
    })
}

/// `[a0, a1, a2, a3, a4]` of g, leading first, with `a1` as `v*sqrt(R)`.
fn g_coefficients(c: &CyclicParams) -> Vec<String> {
    reduce_to_g(c).coefficients().iter().map(ToString::to_string).collect()
}

fn signs(list: &[Sign]) -> Vec<&'static str> {
    list.iter()
        .map(|s| match s {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
        .collect()
}

fn verdict_code(psd: bool) -> i32 {
    if psd {
        EXIT_PSD
    } else {
        EXIT_NOT_PSD
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Internal(e.to_string()))
}

fn io_err(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

/// Entry point for the binary: real argv and standard streams.
pub fn main_exit_code() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
