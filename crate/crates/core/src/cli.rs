//! Command-line front end.
//!
//! ```text
//! qmin quantile --dist PATH --tau LIST [--format json|csv] [--verify]
//! qmin trace    --dist PATH --tau T --range LO:HI:N
//! qmin check    --dist PATH [--seed INT]
//! ```
//!
//! Exit codes: 0 ok, 1 failing identity, 2 input error, 3 disagreement
//! between the solver and the graph under `--verify`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::format::fmt_num;
use crate::graph::{self, GraphPoint, QuantileInterval};
use crate::identity;
use crate::measure::{Distribution, DistributionSpec};
use crate::objective::{self, ObjectiveSample};
use crate::solver;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qmin", version, about = "Quantiles as minimizers of a convex objective")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the tau-quantile interval for each level.
    Quantile {
        #[arg(long)]
        dist: PathBuf,
        /// Comma-separated levels; an item `a:b:n` expands to n evenly spaced levels.
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Print both the graph and the solver intervals with an agreement flag.
        #[arg(long)]
        verify: bool,
    },
    /// Sample the objective and its one-sided derivatives on a uniform grid, as CSV.
    Trace {
        #[arg(long)]
        dist: PathBuf,
        #[arg(long)]
        tau: f64,
        /// `LO:HI:N`
        #[arg(long, allow_hyphen_values = true)]
        range: String,
    },
    /// Run the identity suite and print its report.
    Check {
        #[arg(long)]
        dist: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Failure carrying its exit code and a message for stderr.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e)
    }
}

/// Reads and validates a distribution spec file.
pub fn load_distribution(path: &Path) -> crate::Result<Distribution> {
    let text = std::fs::read_to_string(path).map_err(|e| crate::Error::Io(format!("{}: {e}", path.display())))?;
    let spec =
        DistributionSpec::from_json(&text).map_err(|e| crate::Error::Parse(format!("{}: {e}", path.display())))?;
    spec.validate()
}

/// Parses `a,b,c`; an item `lo:hi:n` expands to `n` evenly spaced values.
pub fn parse_levels(list: &str) -> Result<Vec<f64>, String> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim) {
        if item.contains(':') {
            let (lo, hi, n) = parse_range(item)?;
            out.extend(objective::grid(lo, hi, n));
        } else {
            out.push(item.parse::<f64>().map_err(|_| format!("bad level {item:?}"))?);
        }
    }
    Ok(out)
}

/// Parses `LO:HI:N`.
pub fn parse_range(text: &str) -> Result<(f64, f64, usize), String> {
    let parts: Vec<&str> = text.split(':').collect();
    let [lo, hi, n] = parts[..] else {
        return Err(format!("expected LO:HI:N, got {text:?}"));
    };
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| format!("bad number {s:?} in {text:?}"))
    };
    let n = n
        .trim()
        .parse::<usize>()
        .map_err(|_| format!("bad count {n:?} in {text:?}"))?;
    Ok((num(lo)?, num(hi)?, n))
}

fn json_num(x: f64) -> String {
    if x.is_finite() {
        fmt_num(x)
    } else {
        format!("\"{}\"", fmt_num(x))
    }
}

fn interval_json(q: &QuantileInterval) -> String {
    serde_json::to_string(q).expect("interval serializes")
}

/// The interval reported for `tau`: the graph section at the endpoints of
/// `[0, 1]`, the solver in between.
fn reported(d: &Distribution, tau: f64) -> crate::Result<QuantileInterval> {
    if tau > 0.0 && tau < 1.0 {
        solver::minimize_phi(d, tau)
    } else {
        graph::quantile_set(d, tau)
    }
}

struct Verified {
    set: QuantileInterval,
    solver: Option<QuantileInterval>,
    agree: bool,
}

/// At interior levels the solver must reproduce the graph section exactly.
/// At 0 and 1 the objective has no minimizer, so the finite endpoint is
/// checked against the graph instead.
fn verify(d: &Distribution, tau: f64) -> crate::Result<Verified> {
    let set = graph::quantile_set(d, tau)?;
    if tau > 0.0 && tau < 1.0 {
        let m = solver::minimize_phi(d, tau)?;
        Ok(Verified {
            set,
            solver: Some(m),
            agree: m == set,
        })
    } else {
        let end = if tau == 0.0 { set.hi } else { set.lo };
        let agree = !set.empty && graph::graph_contains(d, GraphPoint::new(end, tau));
        Ok(Verified {
            set,
            solver: None,
            agree,
        })
    }
}

fn cmd_quantile(out: &mut dyn Write, dist: &Path, tau: &str, format: Format, check: bool) -> Result<i32, Failure> {
    let d = load_distribution(dist)?;
    let levels = parse_levels(tau).map_err(Failure::input)?;
    for &t in &levels {
        if !(0.0..=1.0).contains(&t) {
            return Err(crate::Error::BadTau(t).into());
        }
    }
    let mut code = EXIT_OK;
    if format == Format::Csv {
        let header = if check {
            "tau,lo,hi,empty,solver_lo,solver_hi,agree"
        } else {
            "tau,lo,hi,empty"
        };
        writeln!(out, "{header}")?;
    }
    for &t in &levels {
        if !check {
            let q = reported(&d, t)?;
            match format {
                Format::Json => writeln!(
                    out,
                    "{{\"tau\":{},\"lo\":{},\"hi\":{},\"empty\":{}}}",
                    fmt_num(t),
                    json_num(q.lo),
                    json_num(q.hi),
                    q.empty
                )?,
                Format::Csv => writeln!(out, "{},{},{},{}", fmt_num(t), fmt_num(q.lo), fmt_num(q.hi), q.empty)?,
            }
            continue;
        }
        let v = verify(&d, t)?;
        if !v.agree {
            log::error!("solver and graph disagree at tau = {t}");
            code = EXIT_DISAGREE;
        }
        match format {
            Format::Json => writeln!(
                out,
                "{{\"tau\":{},\"quantile_set\":{},\"minimize_phi\":{},\"agree\":{}}}",
                fmt_num(t),
                interval_json(&v.set),
                v.solver.as_ref().map_or("null".to_string(), interval_json),
                v.agree
            )?,
            Format::Csv => {
                let (slo, shi) = v
                    .solver
                    .map_or((String::new(), String::new()), |m| (fmt_num(m.lo), fmt_num(m.hi)));
                writeln!(
                    out,
                    "{},{},{},{},{slo},{shi},{}",
                    fmt_num(t),
                    fmt_num(v.set.lo),
                    fmt_num(v.set.hi),
                    v.set.empty,
                    v.agree
                )?
            }
        }
    }
    Ok(code)
}

fn cmd_trace(out: &mut dyn Write, dist: &Path, tau: f64, range: &str) -> Result<i32, Failure> {
    let d = load_distribution(dist)?;
    let (lo, hi, n) = parse_range(range).map_err(Failure::input)?;
    let rows = objective::trace(&d, tau, lo, hi, n)?;
    writeln!(out, "{}", ObjectiveSample::CSV_HEADER)?;
    for row in rows {
        writeln!(out, "{}", row.csv_row())?;
    }
    Ok(EXIT_OK)
}

fn cmd_check(out: &mut dyn Write, dist: &Path, seed: u64) -> Result<i32, Failure> {
    let d = load_distribution(dist)?;
    let report = identity::run_suite(&d, seed);
    writeln!(out, "{}", report.to_json())?;
    for c in report.failures() {
        log::error!("{} failed with residual {}", c.name, c.max_residual);
    }
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Quantile {
            dist,
            tau,
            format,
            verify,
        } => cmd_quantile(out, dist, tau, *format, *verify),
        Command::Trace { dist, tau, range } => cmd_trace(out, dist, *tau, range),
        Command::Check { dist, seed } => cmd_check(out, dist, *seed),
    };
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "qmin: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary: process arguments and standard streams.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels() {
        assert_eq!(parse_levels("0,1").unwrap(), vec![0.0, 1.0]);
        assert_eq!(parse_levels("0.5, 0:1:3").unwrap(), vec![0.5, 0.0, 0.5, 1.0]);
        assert!(parse_levels("0.5,x").is_err());
        assert!(parse_levels("").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-2:2:5").unwrap(), (-2.0, 2.0, 5));
        assert!(parse_range("-2:2").is_err());
        assert!(parse_range("-2:2:1.5").is_err());
    }

    #[test]
    fn json_numbers() {
        assert_eq!(json_num(2.0), "2");
        assert_eq!(json_num(f64::NEG_INFINITY), "\"-inf\"");
        assert_eq!(json_num(0.1), "0.1");
    }
}
