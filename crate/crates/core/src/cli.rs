//! Command-line surface: radius tables, functional sweeps, extremal dumps
//! and verification runs. CSV and JSON go to stdout, logs to stderr.

use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{BohrError, Result};
use crate::functionals::{
    bohr_sum, fixed_center_lhs, harmonic_fixed_center_lhs, harmonic_pointwise_lhs, pointwise_lhs,
    ONE_THIRD,
};
use crate::radii::{
    classical_radius, harmonic_radius, odd_bohr_radius, p_symmetric_radius, pointwise_radius,
};
use crate::series::{mobius_series, Complex, TruncatedSeries, DEFAULT_ORDER};
use crate::verifier::{
    beyond_radius_scan, check_classical, check_harmonic_majorant, check_harmonic_pointwise,
    check_odd_subordination, check_pointwise, check_quasi_subordination, default_pointwise_a_grid,
    sharpness_certificate, SharpStatement, TrialConfig, VerificationReport,
    DEFAULT_HARMONIC_K_GRID, DEFAULT_HARMONIC_POINTWISE_A_GRID, DEFAULT_HARMONIC_POINTWISE_K_GRID,
};
use crate::witnesses::{extremal_automorphism, extremal_harmonic, extremal_pointwise};

pub const ORDER_ENV: &str = "BOHRLAB_ORDER";
pub const DEFAULT_TRIALS: usize = 1000;
pub const DEFAULT_SEED: u64 = 42;
/// Distance within which an r endpoint is replaced by `1/3` or `1/sqrt(3)`.
pub const SNAP_TOL: f64 = 1e-9;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "bohrlab",
    version,
    about = "Bohr radii, functional sweeps and seeded verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sharp radius as JSON.
    Radius {
        #[arg(long, value_enum)]
        theorem: RadiusKind,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        k: Option<f64>,
        #[arg(long)]
        p: Option<u32>,
    },
    /// Functional values on an r-grid as CSV.
    Sweep {
        #[arg(long, value_enum)]
        functional: Functional,
        /// `key=value` pairs separated by `,` or `;`, e.g. `a=0.5;k=0.3`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        r_min: f64,
        #[arg(long)]
        r_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Coefficients of an extremal function as JSON.
    Extremal {
        #[arg(long, value_enum)]
        theorem: ExtremalKind,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        k: Option<f64>,
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Seeded property suite as JSON; exit 2 when it fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        order: Option<usize>,
        /// Comma-separated `a` values for t5 and t6.
        #[arg(long, value_delimiter = ',')]
        a_grid: Option<Vec<f64>>,
        /// Comma-separated `k` values for t3 and t6.
        #[arg(long, value_delimiter = ',')]
        k_grid: Option<Vec<f64>>,
    },
    /// Sharpness certificate for an extremal as JSON; exit 2 when refused by
    /// the numbers.
    Certify {
        #[arg(long, value_enum)]
        theorem: CertifyKind,
        #[arg(long, default_value_t = 0.0)]
        a: f64,
        #[arg(long, default_value_t = 0.0)]
        k: f64,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Extremal values above 1/3 for `a` below the threshold; informational.
    Scan {
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.0, 0.1, 0.2, 0.3, 0.4])]
        a_grid: Vec<f64>,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RadiusKind {
    /// 1/3.
    Classical,
    /// Largest root of 8r^4 + r^2 - 6r + 1, for odd bounded functions.
    Odd,
    /// 3^(-1/p) for p-symmetric subordination; needs --p.
    Psym,
    /// Radius of |f(z)| + sum_{k>=1} |a_k| r^k <= 1; needs --a.
    T5,
    /// Harmonic counterpart of t5; needs --a and --k.
    T6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Functional {
    /// Majorant sum of the disk automorphism with center a.
    Bohr,
    /// Fixed-center majorant functional on the automorphism; identically 1.
    Cor2,
    /// Harmonic fixed-center functional; takes a, k and optional lambda.
    T3,
    /// |f(-r)| + sum_{k>=1} |a_k| r^k on the pointwise extremal.
    T5,
    /// Harmonic pointwise functional; takes a, k and optional lambda.
    T6,
}

impl Functional {
    fn name(self) -> &'static str {
        match self {
            Functional::Bohr => "bohr",
            Functional::Cor2 => "cor2",
            Functional::T3 => "t3",
            Functional::T5 => "t5",
            Functional::T6 => "t6",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExtremalKind {
    Cor2,
    T3,
    T5,
    T6,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CertifyKind {
    Cor2,
    T3,
    T5,
    T6,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Bounded witnesses at r = 1/3.
    Classical,
    /// Quasi-subordination majorant on (0, 1/3].
    T1,
    /// Odd subordination and its partial sums on (0, 1/sqrt(3)].
    T2,
    /// Harmonic fixed-center functional on (0, 1/3].
    T3,
    /// Pointwise functional up to its radius.
    T5,
    /// Harmonic pointwise functional up to its radius.
    T6,
    All,
}

/// Runs the CLI on `argv` (program name first) with the process streams.
pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let env_order = std::env::var(ORDER_ENV).ok();
    run_with(
        argv,
        env_order.as_deref(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// [`run`] with explicit streams and `BOHRLAB_ORDER` value.
pub fn run_with(
    argv: &[String],
    env_order: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, env_order, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn resolve_order(flag: Option<usize>, env_order: Option<&str>) -> Result<usize> {
    let order = match (flag, env_order) {
        (Some(n), _) => n,
        (None, Some(s)) => s.trim().parse().map_err(|_| {
            BohrError::InvalidArgument(format!("{ORDER_ENV}={s:?} is not a non-negative integer"))
        })?,
        (None, None) => DEFAULT_ORDER,
    };
    if order == 0 {
        return Err(BohrError::InvalidArgument("order must be positive".into()));
    }
    Ok(order)
}

fn write_json(out: &mut dyn Write, value: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("value serializes");
    writeln!(out, "{text}").map_err(io_error)
}

fn io_error(e: std::io::Error) -> BohrError {
    BohrError::InvalidArgument(format!("write failed: {e}"))
}

fn required(name: &str, v: Option<f64>) -> Result<f64> {
    v.ok_or_else(|| BohrError::InvalidArgument(format!("--{name} is required here")))
}

fn dispatch(command: Command, env_order: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Radius { theorem, a, k, p } => {
            let result =
                match theorem {
                    RadiusKind::Classical => classical_radius(),
                    RadiusKind::Odd => odd_bohr_radius(),
                    RadiusKind::Psym => p_symmetric_radius(p.ok_or_else(|| {
                        BohrError::InvalidArgument("--p is required here".into())
                    })?)?,
                    RadiusKind::T5 => pointwise_radius(required("a", a)?)?,
                    RadiusKind::T6 => harmonic_radius(required("a", a)?, required("k", k)?)?,
                };
            write_json(out, &serde_json::to_value(result).expect("serializes"))?;
            Ok(EXIT_OK)
        }
        Command::Sweep {
            functional,
            params,
            r_min,
            r_max,
            steps,
            order,
        } => {
            let order = resolve_order(order, env_order)?;
            let params = parse_params(&params)?;
            let rows = sweep(functional, &params, r_min, r_max, steps, order)?;
            write_csv(out, functional, &params, &rows)?;
            Ok(EXIT_OK)
        }
        Command::Extremal {
            theorem,
            a,
            k,
            lambda,
            order,
        } => {
            let order = resolve_order(order, env_order)?;
            write_json(out, &extremal_dump(theorem, a, k, lambda, order)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            trials,
            seed,
            order,
            a_grid,
            k_grid,
        } => {
            let order = resolve_order(order, env_order)?;
            let cfg = TrialConfig::new(trials.unwrap_or(DEFAULT_TRIALS), seed).with_order(order);
            let suites: Vec<Suite> = if suite == Suite::All {
                vec![
                    Suite::Classical,
                    Suite::T1,
                    Suite::T2,
                    Suite::T3,
                    Suite::T5,
                    Suite::T6,
                ]
            } else {
                vec![suite]
            };
            let mut reports = Vec::with_capacity(suites.len());
            for s in suites {
                let started = Instant::now();
                let report = run_suite(s, &cfg, a_grid.as_deref(), k_grid.as_deref())?;
                log::info!(
                    "{}: {} checks, max residual {:e}, {:?} in {:.2?}",
                    report.suite,
                    report.checks,
                    report.max_residual,
                    report.verdict,
                    started.elapsed()
                );
                reports.push(report);
            }
            let passed = reports.iter().all(VerificationReport::passed);
            let value = if suite == Suite::All {
                serde_json::to_value(&reports)
            } else {
                serde_json::to_value(&reports[0])
            }
            .expect("reports serialize");
            write_json(out, &value)?;
            Ok(if passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Certify {
            theorem,
            a,
            k,
            order,
        } => {
            let order = resolve_order(order, env_order)?;
            let statement = match theorem {
                CertifyKind::Cor2 => SharpStatement::FixedCenter,
                CertifyKind::T3 => SharpStatement::HarmonicFixedCenter,
                CertifyKind::T5 => SharpStatement::Pointwise,
                CertifyKind::T6 => SharpStatement::HarmonicPointwise,
                CertifyKind::Odd => SharpStatement::Odd,
            };
            let report = sharpness_certificate(statement, a, k, order)?;
            write_json(out, &serde_json::to_value(&report).expect("serializes"))?;
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Command::Scan {
            a_grid,
            steps,
            order,
        } => {
            let order = resolve_order(order, env_order)?;
            let report = beyond_radius_scan(&a_grid, steps, order)?;
            write_json(out, &serde_json::to_value(&report).expect("serializes"))?;
            Ok(EXIT_OK)
        }
    }
}

fn run_suite(
    suite: Suite,
    cfg: &TrialConfig,
    a_grid: Option<&[f64]>,
    k_grid: Option<&[f64]>,
) -> Result<VerificationReport> {
    match suite {
        Suite::Classical => check_classical(cfg),
        Suite::T1 => check_quasi_subordination(cfg),
        Suite::T2 => check_odd_subordination(cfg),
        Suite::T3 => check_harmonic_majorant(cfg, k_grid.unwrap_or(&DEFAULT_HARMONIC_K_GRID)),
        Suite::T5 => match a_grid {
            Some(g) => check_pointwise(cfg, g),
            None => check_pointwise(cfg, &default_pointwise_a_grid()),
        },
        Suite::T6 => check_harmonic_pointwise(
            cfg,
            a_grid.unwrap_or(&DEFAULT_HARMONIC_POINTWISE_A_GRID),
            k_grid.unwrap_or(&DEFAULT_HARMONIC_POINTWISE_K_GRID),
        ),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

/// Parses `a=0.5;k=0.3` (or `,`-separated) into ordered pairs.
pub fn parse_params(text: &str) -> Result<Vec<(String, f64)>> {
    let mut params: Vec<(String, f64)> = Vec::new();
    for item in text
        .split([',', ';'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        let (key, value) = item.split_once('=').ok_or_else(|| {
            BohrError::InvalidArgument(format!("parameter {item:?} is not key=value"))
        })?;
        let key = key.trim().to_string();
        let value: f64 = value.trim().parse().map_err(|_| {
            BohrError::InvalidArgument(format!("parameter {key}: {value:?} is not a number"))
        })?;
        if params.iter().any(|(k, _)| *k == key) {
            return Err(BohrError::InvalidArgument(format!(
                "parameter {key} given twice"
            )));
        }
        params.push((key, value));
    }
    Ok(params)
}

fn param(params: &[(String, f64)], key: &str) -> Option<f64> {
    params.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
}

fn require_param(params: &[(String, f64)], key: &str, functional: Functional) -> Result<f64> {
    param(params, key).ok_or_else(|| {
        BohrError::InvalidArgument(format!(
            "functional {} needs parameter {key}",
            functional.name()
        ))
    })
}

/// Replaces values within [`SNAP_TOL`] of `1/3` or `1/sqrt(3)` by those radii.
pub fn snap_endpoint(r: f64) -> f64 {
    let odd = 1.0 / 3f64.sqrt();
    if (r - ONE_THIRD).abs() <= SNAP_TOL {
        ONE_THIRD
    } else if (r - odd).abs() <= SNAP_TOL {
        odd
    } else {
        r
    }
}

/// `steps + 1` evenly spaced radii from `r_min` to `r_max`, endpoints snapped.
pub fn sweep_grid(r_min: f64, r_max: f64, steps: usize) -> Result<Vec<f64>> {
    let (lo, hi) = (snap_endpoint(r_min), snap_endpoint(r_max));
    if !(lo >= 0.0 && hi < 1.0 && lo < hi) {
        return Err(BohrError::InvalidArgument(format!(
            "need 0 <= r-min < r-max < 1, got {r_min} and {r_max}"
        )));
    }
    if steps == 0 {
        return Err(BohrError::InvalidArgument(
            "steps must be at least 1".into(),
        ));
    }
    let mut grid: Vec<f64> = (0..=steps)
        .map(|i| lo + (hi - lo) * i as f64 / steps as f64)
        .collect();
    grid[steps] = hi;
    Ok(grid)
}

/// Evaluates `functional` on the sweep grid. Every functional is evaluated on
/// its extremal with `|a0| = a`; `t3` and `t6` take `lambda` (default `k`).
fn sweep(
    functional: Functional,
    params: &[(String, f64)],
    r_min: f64,
    r_max: f64,
    steps: usize,
    order: usize,
) -> Result<Vec<(f64, f64)>> {
    let grid = sweep_grid(r_min, r_max, steps)?;
    let a = require_param(params, "a", functional)?;
    let a0 = Complex::new(a, 0.0);
    let allowed: &[&str] = match functional {
        Functional::T3 | Functional::T6 => &["a", "k", "lambda"],
        _ => &["a"],
    };
    if let Some((k, _)) = params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
        return Err(BohrError::InvalidArgument(format!(
            "functional {} does not take parameter {k}",
            functional.name()
        )));
    }
    let harmonic = || -> Result<_> {
        let k = require_param(params, "k", functional)?;
        let lambda = param(params, "lambda").unwrap_or(k);
        if lambda > k {
            return Err(BohrError::InvalidArgument(format!(
                "lambda {lambda} exceeds k {k}"
            )));
        }
        extremal_harmonic(a0, lambda, order)
    };
    let value: Box<dyn Fn(f64) -> Result<f64>> = match functional {
        Functional::Bohr => {
            let f = mobius_series(a0, order)?;
            Box::new(move |r| bohr_sum(&f, r))
        }
        Functional::Cor2 => {
            let f = extremal_automorphism(a0, order)?;
            Box::new(move |r| Ok(fixed_center_lhs(&f, a, r)?.value))
        }
        Functional::T5 => {
            let f = extremal_pointwise(a0, order)?;
            Box::new(move |r| pointwise_lhs(&f, Complex::new(-r, 0.0)))
        }
        Functional::T3 => {
            let p = harmonic()?;
            Box::new(move |r| Ok(harmonic_fixed_center_lhs(&p, a, r)?.value))
        }
        Functional::T6 => {
            let p = harmonic()?;
            Box::new(move |r| harmonic_pointwise_lhs(&p, Complex::new(r, 0.0)))
        }
    };
    grid.into_iter().map(|r| Ok((r, value(r)?))).collect()
}

/// Number with 17 significant digits.
pub fn format_sig17(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_csv(
    out: &mut dyn Write,
    functional: Functional,
    params: &[(String, f64)],
    rows: &[(f64, f64)],
) -> Result<()> {
    let params_text = params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";");
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let csv_error = |e: csv::Error| BohrError::InvalidArgument(format!("write failed: {e}"));
    writer
        .write_record(["r", "value", "functional", "params"])
        .map_err(csv_error)?;
    for &(r, v) in rows {
        writer
            .write_record([
                format_sig17(r),
                format_sig17(v),
                functional.name().to_string(),
                params_text.clone(),
            ])
            .map_err(csv_error)?;
    }
    writer.flush().map_err(io_error)
}

fn coefficients(f: &TruncatedSeries) -> Value {
    Value::Array(f.coeffs().iter().map(|c| json!([c.re, c.im])).collect())
}

fn extremal_dump(
    kind: ExtremalKind,
    a: f64,
    k: Option<f64>,
    lambda: Option<f64>,
    order: usize,
) -> Result<Value> {
    let a0 = Complex::new(a, 0.0);
    let mut dump = json!({ "a": a, "order": order });
    let map = dump.as_object_mut().expect("object");
    match kind {
        ExtremalKind::Cor2 | ExtremalKind::T5 => {
            let (name, f) = match kind {
                ExtremalKind::Cor2 => ("cor2", extremal_automorphism(a0, order)?),
                _ => ("t5", extremal_pointwise(a0, order)?),
            };
            map.insert("theorem".into(), json!(name));
            map.insert("h".into(), coefficients(&f));
        }
        ExtremalKind::T3 | ExtremalKind::T6 => {
            let k = required("k", k)?;
            let lambda = lambda.unwrap_or(k);
            if lambda > k {
                return Err(BohrError::InvalidArgument(format!(
                    "lambda {lambda} exceeds k {k}"
                )));
            }
            let p = extremal_harmonic(a0, lambda, order)?;
            let name = if matches!(kind, ExtremalKind::T3) {
                "t3"
            } else {
                "t6"
            };
            map.insert("theorem".into(), json!(name));
            map.insert("k".into(), json!(k));
            map.insert("lambda".into(), json!(lambda));
            map.insert("h".into(), coefficients(p.analytic()));
            map.insert("g".into(), coefficients(p.co_analytic()));
        }
    }
    Ok(dump)
}
