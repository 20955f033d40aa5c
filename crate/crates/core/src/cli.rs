//! `fta` command-line front end.
//!
//! Exit codes: 0 on success, 1 when solving or verification fails, 2 on
//! usage and input errors. Diagnostics go to stderr only.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::estermann::{verify_lemma, LemmaReport};
use crate::poly::parse_polynomial;
use crate::solver::{find_all_roots, nth_root, DescentConfig, RootResult, StepRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "fta",
    version,
    about = "Radical-free polynomial root finding by modulus descent"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// Polynomial file (JSON or plain text); stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Offset into the restart point sequence.
    #[arg(long)]
    seed: Option<u64>,
    /// Emit the per-step descent trace.
    #[arg(long)]
    trace: bool,
    /// Config overrides, e.g. `tol_residual=1e-12`.
    #[arg(value_name = "KEY=VALUE")]
    overrides: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find all roots of a polynomial.
    Solve(SolveArgs),
    /// Same as `solve --trace`.
    Trace(SolveArgs),
    /// Check the lemma exactly for every even k in [kmin, kmax].
    VerifyLemma {
        #[arg(long)]
        kmin: u64,
        #[arg(long)]
        kmax: u64,
    },
    /// Nonnegative n-th root of a >= 0.
    Nthroot {
        a: f64,
        n: u32,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
}

/// Runs the CLI against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(
        argv,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Runs the CLI against the given streams; returns the exit code.
pub fn run_with<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Solve(args) => solve(args, false, cli.format, stdin, out),
        Command::Trace(args) => solve(args, true, cli.format, stdin, out),
        Command::VerifyLemma { kmin, kmax } => lemma_sweep(kmin, kmax, cli.format, out),
        Command::Nthroot {
            a,
            n,
            seed,
            overrides,
        } => nthroot(a, n, seed, &overrides, cli.format, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_FAILURE,
        message: message.into(),
    }
}

fn io_failure(e: io::Error) -> Failure {
    failure(format!("writing output: {e}"))
}

fn build_config(seed: Option<u64>, overrides: &[String]) -> Result<DescentConfig, Failure> {
    let mut cfg = DescentConfig::default();
    for item in overrides {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("expected KEY=VALUE, got {item:?}")))?;
        cfg.set(key, value).map_err(|e| usage(e.to_string()))?;
    }
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    cfg.validate().map_err(|e| usage(e.to_string()))?;
    Ok(cfg)
}

#[derive(Serialize)]
struct RootJson {
    re: f64,
    im: f64,
    residual: f64,
    multiplicity: usize,
    iterations: usize,
}

#[derive(Serialize)]
struct TraceJson<'a> {
    root: usize,
    #[serde(flatten)]
    step: &'a StepRecord,
}

fn solve(
    args: SolveArgs,
    force_trace: bool,
    format: OutputFormat,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let cfg = build_config(args.seed, &args.overrides)?;
    let with_trace = force_trace || args.trace;
    let text = match &args.input {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("reading stdin: {e}")))?;
            s
        }
    };
    let source = args
        .input
        .as_ref()
        .map_or("<stdin>".to_string(), |p| p.display().to_string());
    let p = parse_polynomial(&text).map_err(|e| usage(format!("{source}: {e}")))?;
    match p.degree() {
        None | Some(0) => return Err(usage(format!("{source}: polynomial has degree 0"))),
        Some(_) => {}
    }
    let roots = find_all_roots(&p, &cfg, with_trace).map_err(|e| failure(e.to_string()))?;
    match format {
        OutputFormat::Json => write_solve_json(&roots, &cfg, with_trace, out),
        OutputFormat::Text => write_solve_text(&roots, with_trace, out),
    }
    .map_err(io_failure)
}

fn write_solve_json(
    roots: &[RootResult],
    cfg: &DescentConfig,
    with_trace: bool,
    out: &mut dyn Write,
) -> io::Result<()> {
    let root_json: Vec<RootJson> = roots
        .iter()
        .map(|r| RootJson {
            re: r.root.re,
            im: r.root.im,
            residual: r.residual,
            multiplicity: r.multiplicity_estimate,
            iterations: r.iterations,
        })
        .collect();
    let mut doc = json!({ "roots": root_json, "config": cfg });
    if with_trace {
        let steps: Vec<TraceJson> = roots
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                r.trace
                    .iter()
                    .flat_map(|t| t.steps.iter())
                    .map(move |step| TraceJson { root: i, step })
            })
            .collect();
        doc["trace"] = serde_json::to_value(steps).map_err(io::Error::other)?;
    }
    serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::other)?;
    writeln!(out)
}

fn write_solve_text(roots: &[RootResult], with_trace: bool, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "# re im residual multiplicity iterations")?;
    for r in roots {
        writeln!(
            out,
            "{:e} {:e} {:e} {} {}",
            r.root.re, r.root.im, r.residual, r.multiplicity_estimate, r.iterations
        )?;
    }
    if with_trace {
        writeln!(
            out,
            "# trace: root attempt z_re z_im |P|^2 zeta_re zeta_im k r backtracks"
        )?;
        for (i, r) in roots.iter().enumerate() {
            for s in r.trace.iter().flat_map(|t| t.steps.iter()) {
                writeln!(
                    out,
                    "{i} {} {:e} {:e} {:e} {} {} {} {:e} {}",
                    s.attempt,
                    s.z[0],
                    s.z[1],
                    s.modulus_sq,
                    s.zeta[0],
                    s.zeta[1],
                    s.k,
                    s.r,
                    s.backtracks
                )?;
            }
        }
    }
    Ok(())
}

fn lemma_sweep(
    kmin: u64,
    kmax: u64,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    if kmin < 2 || !kmin.is_multiple_of(2) || !kmax.is_multiple_of(2) {
        return Err(usage(format!(
            "--kmin and --kmax must be even and at least 2 (got {kmin}, {kmax})"
        )));
    }
    if kmin > kmax {
        return Err(usage(format!("--kmin {kmin} exceeds --kmax {kmax}")));
    }
    let reports: Vec<LemmaReport> = (kmin..=kmax)
        .step_by(2)
        .map(|k| verify_lemma(k).expect("k validated as even"))
        .collect();
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &reports)
                .map_err(|e| failure(e.to_string()))?;
            writeln!(out).map_err(io_failure)?;
        }
        OutputFormat::Text => {
            for r in &reports {
                writeln!(
                    out,
                    "k={} {} zeta^k={}",
                    r.k,
                    if r.pass { "pass" } else { "FAIL" },
                    r.zeta_pow
                )
                .map_err(io_failure)?;
            }
        }
    }
    let failed: Vec<u64> = reports.iter().filter(|r| !r.pass).map(|r| r.k).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(failure(format!("lemma check failed for k = {failed:?}")))
    }
}

fn nthroot(
    a: f64,
    n: u32,
    seed: Option<u64>,
    overrides: &[String],
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let cfg = build_config(seed, overrides)?;
    if !(a.is_finite() && a >= 0.0) || n == 0 {
        return Err(usage(format!(
            "need a >= 0 and n >= 1 (got a = {a}, n = {n})"
        )));
    }
    let root = nth_root(a, n, &cfg).map_err(|e| failure(e.to_string()))?;
    match format {
        OutputFormat::Json => {
            let doc = json!({ "a": a, "n": n, "root": root });
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| failure(e.to_string()))?;
            writeln!(out).map_err(io_failure)
        }
        OutputFormat::Text => writeln!(out, "{root:e}").map_err(io_failure),
    }
}
