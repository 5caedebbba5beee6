//! Command-line front end: `verify`, `schur`, `partitions`, `audit` and
//! `series`.
//!
//! Exit codes: 0 on success (including audit mismatches unless `--strict`),
//! 1 on a failed verification or a runtime error, 2 on usage or parse errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::genfun::{parse_genfun, Extended, GenFun};
use crate::identity::{
    audit_example, verify, AuditExample, AuditRecord, EvalConfig, IdentityError, IdentityReport, Mode, VerifyOptions,
};
use crate::numerics::Rational;
use crate::partitions::{c_lambda, enumerate, enumerate_by_weight, parity_class, staircase, Partition};
use crate::schur::{bialternant, ssyt_schur_oracle, PointVector};

#[derive(Debug, Parser)]
#[command(name = "cauchy", version, about = "Generalized Cauchy identities, verified exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare both sides of the identity for one g and one point configuration.
    Verify(VerifyArgs),
    /// Evaluate a Schur polynomial at rational points.
    Schur(SchurArgs),
    /// List partitions whose staircase exponents are at most --kcap.
    Partitions(PartitionsArgs),
    /// Compare printed closed forms of G_λ with derivative-computed values.
    Audit(AuditArgs),
    /// Print the first Maclaurin coefficients of g.
    Series(SeriesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Analytic,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Generating function, e.g. "1/(1-x)" or "exp(x)".
    #[arg(long)]
    pub g: String,
    /// Comma-separated rationals.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "seed")]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "seed")]
    pub x: Option<String>,
    /// Draw a and x at random from this seed instead.
    #[arg(long, conflicts_with_all = ["a", "x"], requires = "n")]
    pub seed: Option<u64>,
    /// Number of points when drawing at random.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: ModeArg,
    /// Truncation order m in exact mode.
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Largest staircase cap tried in analytic mode.
    #[arg(long, default_value_t = 40)]
    pub kmax: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Include every summand in the report (exact mode).
    #[arg(long)]
    pub log_terms: bool,
    /// Threads for exact-mode term evaluation; the output does not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SchurArgs {
    /// Partition such as [2,1].
    #[arg(long)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Sum over semistandard tableaux instead of the bialternant.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct PartitionsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub kcap: usize,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// One of geomsq, geomsqneg, exp, sinh, sin, log.
    #[arg(long)]
    pub example: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub maxweight: usize,
    /// Exit 1 if any record mismatches.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long)]
    pub g: String,
    /// Number of coefficients.
    #[arg(long, default_value_t = 10)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

/// A fully resolved `verify` invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub g: GenFun,
    pub cfg: EvalConfig,
    pub options: VerifyOptions,
    pub format: Format,
}

/// Raised before any computation; maps to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

impl RunConfig {
    pub fn from_args(args: &VerifyArgs) -> Result<RunConfig, String> {
        Self::resolve(args).map_err(|e| e.0)
    }

    fn resolve(args: &VerifyArgs) -> Result<RunConfig, UsageError> {
        let g = parse_genfun(&args.g)?;
        let mode = match args.mode {
            ModeArg::Exact => Mode::ExactTruncated { order: args.order },
            ModeArg::Analytic => Mode::Analytic { tolerance: args.tol, k_max: args.kmax },
        };
        let (a, x) = match (args.seed, &args.a, &args.x) {
            (Some(seed), _, _) => {
                let n = args.n.ok_or_else(|| UsageError("--seed needs --n".into()))?;
                if n == 0 {
                    return Err(UsageError("--n must be at least 1".into()));
                }
                random_points(&g, n, seed)
            }
            (None, Some(a), Some(x)) => (parse_points("a", a)?, parse_points("x", x)?),
            _ => return Err(UsageError("need --a and --x, or --seed with --n".into())),
        };
        let cfg = EvalConfig::new(a, x, mode)?;
        if args.threads == Some(0) {
            return Err(UsageError("--threads must be at least 1".into()));
        }
        Ok(RunConfig {
            g,
            cfg,
            options: VerifyOptions { threads: args.threads, log_terms: args.log_terms },
            format: args.format,
        })
    }
}

fn parse_points(which: &str, text: &str) -> Result<PointVector, UsageError> {
    text.parse::<PointVector>().map_err(|e| UsageError(format!("--{which}: {e}")))
}

fn random_rational(rng: &mut ChaCha8Rng, bound: &Rational) -> Rational {
    // p/q with |p/q| < 1, scaled by the bound.
    let q: i64 = rng.gen_range(2..=12);
    let p: i64 = rng.gen_range(-(q - 1)..=q - 1);
    Rational::from(p) / Rational::from(q) * bound
}

/// Distinct points with `|a_i| < 1` and `|x_i| < R/2` (or `< 2` when `R` is
/// infinite), so the radius condition holds whatever the mode.
pub fn random_points(g: &GenFun, n: usize, seed: u64) -> (PointVector, PointVector) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x_bound = match g.radius().value() {
        Extended::Finite(r) if !r.is_zero() => r / Rational::from(2),
        Extended::Finite(_) => Rational::one(),
        Extended::Infinite => Rational::from(2),
    };
    let mut draw = |bound: &Rational| loop {
        let v: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng, bound)).collect();
        let p = PointVector::new(v);
        if p.repeated_pair().is_none() {
            return p;
        }
    };
    let a = draw(&Rational::one());
    let x = draw(&x_bound);
    (a, x)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Schur(a) => cmd_schur(&a, out),
        Command::Partitions(a) => cmd_partitions(&a, out),
        Command::Audit(a) => cmd_audit(&a, out),
        Command::Series(a) => cmd_series(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn runtime(e: impl std::fmt::Display) -> Failure {
    Failure::Runtime(e.to_string())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let run = RunConfig::resolve(args)?;
    if args.seed.is_some() {
        writeln!(err, "a = {}", run.cfg.a())?;
        writeln!(err, "x = {}", run.cfg.x())?;
    }
    let report = verify(&run.g, &run.cfg, &run.options).map_err(|e| match e {
        IdentityError::OutsideRadius { .. } | IdentityError::UnsupportedAnalyticEval(_) => usage(e),
        other => runtime(other),
    })?;
    write_report(&report, run.format, out)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn write_report(r: &IdentityReport, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(r)?)?,
        Format::Csv => {
            writeln!(out, "mode,order,partition_count,lhs,rhs,residual,verdict")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.mode, r.order, r.partition_count, r.lhs, r.rhs, r.residual, r.verdict
            )?;
            if let Some(terms) = &r.terms {
                writeln!(out)?;
                writeln!(out, "lambda,staircase,G,C,s_a,s_x,term")?;
                for t in terms {
                    writeln!(
                        out,
                        "\"{}\",\"{}\",{},{},{},{},{}",
                        t.lambda,
                        join(&t.staircase),
                        t.g,
                        t.c,
                        t.s_a,
                        t.s_x,
                        t.term
                    )?;
                }
            }
        }
        Format::Table => {
            writeln!(out, "mode             {}", r.mode)?;
            writeln!(out, "order            {}", r.order)?;
            writeln!(out, "partition_count  {}", r.partition_count)?;
            writeln!(out, "lhs              {}", r.lhs)?;
            writeln!(out, "rhs              {}", r.rhs)?;
            writeln!(out, "residual         {}", r.residual)?;
            writeln!(out, "verdict          {}", r.verdict)?;
            if let Some(terms) = &r.terms {
                writeln!(out)?;
                writeln!(out, "{:<12} {:<12} {:>12} {:>12} term", "lambda", "staircase", "G", "C")?;
                for t in terms {
                    writeln!(
                        out,
                        "{:<12} {:<12} {:>12} {:>12} {}",
                        t.lambda.to_string(),
                        join(&t.staircase),
                        t.g.to_string(),
                        t.c.to_string(),
                        t.term
                    )?;
                }
            }
            if let Some(trace) = &r.trace {
                writeln!(out)?;
                writeln!(out, "{:<6} {:>24} {:>12}", "k_cap", "lhs", "residual")?;
                for p in trace {
                    writeln!(out, "{:<6} {:>24.17e} {:>12.3e}", p.k_cap, p.lhs, p.residual)?;
                }
            }
        }
    }
    Ok(())
}

fn join(v: &[usize]) -> String {
    v.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_schur(args: &SchurArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let lambda: Partition = args.lambda.parse().map_err(usage)?;
    let xs = parse_points("x", &args.x)?;
    if xs.is_empty() {
        return Err(usage("--x needs at least one point"));
    }
    let value =
        if args.oracle { ssyt_schur_oracle(&lambda, &xs) } else { bialternant(&lambda, &xs).map_err(runtime)? };
    writeln!(out, "{value}")?;
    Ok(0)
}

#[derive(Serialize)]
struct PartitionRow {
    lambda: Partition,
    staircase: Vec<usize>,
    #[serde(rename = "C")]
    c: Rational,
    parity: String,
}

fn cmd_partitions(args: &PartitionsArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if args.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let rows = enumerate(args.n, args.kcap)
        .map(|lambda| {
            Ok(PartitionRow {
                staircase: staircase(&lambda, args.n)?,
                c: c_lambda(&lambda, args.n)?,
                parity: parity_class(&lambda, args.n)?.to_string(),
                lambda,
            })
        })
        .collect::<Result<Vec<_>, crate::partitions::PartitionError>>()
        .map_err(runtime)?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
        Format::Csv => {
            writeln!(out, "lambda,staircase,C,parity")?;
            for r in &rows {
                writeln!(out, "\"{}\",\"{}\",{},{}", r.lambda, join(&r.staircase), r.c, r.parity)?;
            }
        }
        Format::Table => {
            writeln!(out, "{:<16} {:<16} {:>16} parity", "lambda", "staircase", "C")?;
            for r in &rows {
                writeln!(
                    out,
                    "{:<16} {:<16} {:>16} {}",
                    r.lambda.to_string(),
                    join(&r.staircase),
                    r.c.to_string(),
                    r.parity
                )?;
            }
        }
    }
    Ok(0)
}

/// Records for every partition with at most `n` parts and weight at most
/// `max_weight`, in canonical order.
pub fn audit_records(example: AuditExample, n: usize, max_weight: usize) -> Result<Vec<AuditRecord>, IdentityError> {
    let lambdas: Vec<Partition> = enumerate_by_weight(n, max_weight).collect();
    audit_example(example, n, &lambdas)
}

fn cmd_audit(args: &AuditArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let example: AuditExample = args.example.parse().map_err(usage)?;
    if args.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let records = audit_records(example, args.n, args.maxweight).map_err(runtime)?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&records)?)?,
        Format::Csv => {
            writeln!(out, "example,lambda,claimed,computed,match")?;
            for r in &records {
                writeln!(out, "{},\"{}\",{},{},{}", r.example, r.lambda, r.claimed, r.computed, r.matches)?;
            }
        }
        Format::Table => {
            writeln!(out, "{:<10} {:<14} {:>14} {:>14} match", "example", "lambda", "claimed", "computed")?;
            for r in &records {
                writeln!(
                    out,
                    "{:<10} {:<14} {:>14} {:>14} {}",
                    r.example.to_string(),
                    r.lambda.to_string(),
                    r.claimed.to_string(),
                    r.computed.to_string(),
                    r.matches
                )?;
            }
            let mismatches = records.iter().filter(|r| !r.matches).count();
            writeln!(out, "{} records, {} mismatches", records.len(), mismatches)?;
        }
    }
    let all_match = records.iter().all(|r| r.matches);
    Ok(if args.strict && !all_match { 1 } else { 0 })
}

fn cmd_series(args: &SeriesArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = parse_genfun(&args.g).map_err(usage)?;
    let coeffs: Vec<Rational> = (0..args.k).map(|k| g.coeff(k)).collect();
    match args.format {
        Format::Json => {
            let v = json!({ "g": g.text(), "coefficients": coeffs });
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?
        }
        Format::Csv => {
            writeln!(out, "k,c_k")?;
            for (k, c) in coeffs.iter().enumerate() {
                writeln!(out, "{k},{c}")?;
            }
        }
        Format::Table => {
            for (k, c) in coeffs.iter().enumerate() {
                writeln!(out, "{k:>3}  {c}")?;
            }
        }
    }
    Ok(0)
}
