//! Seeded property suites, one per inequality, plus sharpness certificates.
//!
//! Every suite reports the most positive `LHS - RHS` it observed. Trial `i`
//! draws from stream `i` of the suite seed, so a run with more trials repeats
//! the earlier ones exactly, and trials can run in parallel while the report
//! is reduced in trial order.
//!
//! A trial whose residual exceeds the tolerance is rebuilt once at order
//! [`RECHECK_ORDER`]. If the rebuilt witness passes, the violation is counted
//! as a truncation artifact instead of a failure.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, TAU};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::blaschke::{blaschke_series, p_symmetric_lift};
use crate::error::{check_unit_modulus, BohrError, Result};
use crate::functionals::{
    bohr_sum, fixed_center_lhs, harmonic_fixed_center_lhs, harmonic_pointwise_lhs, pointwise_lhs,
    tail_majorant, HarmonicPair, ONE_THIRD,
};
use crate::radii::{harmonic_radius, harmonic_threshold, pointwise_radius, pointwise_threshold};
use crate::series::{mobius_series, Complex, TruncatedSeries, DEFAULT_ORDER};
use crate::witnesses::{
    build_quasi_triple, draw_blaschke_spec, draw_polynomial, extremal_automorphism,
    extremal_harmonic, extremal_pointwise, harmonic_witness, schwarz_from_spec, seeded_rng,
};

/// Largest admitted `LHS - RHS`.
pub const VIOLATION_TOL: f64 = 1e-9;
/// Largest admitted `|LHS - 1|` for a sharpness certificate.
pub const SHARPNESS_TOL: f64 = 1e-8;
/// Step past the radius at which the extremal must exceed 1.
pub const BEYOND_DELTA: f64 = 1e-3;
pub const GRID_POINTS: usize = 12;
pub const RECHECK_ORDER: usize = 128;
/// Sample count on `|z| = r` when maximizing `|f(z)|`.
pub const CIRCLE_SAMPLES: usize = 64;
/// Fractions `1 - 10^-j` by which `lambda` approaches the dilatation bound.
pub const LAMBDA_APPROACH: [f64; 3] = [0.9, 0.99, 0.999];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Informational,
}

pub type Witness = BTreeMap<String, Value>;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub trials: usize,
    pub seed: u64,
    pub order: usize,
    /// Radii checked; fractions of each witness's own radius when
    /// `grid_relative` is set.
    pub r_grid: Vec<f64>,
    pub grid_relative: bool,
    pub checks: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub worst_witness: Option<Witness>,
    pub failures: usize,
    pub truncation_artifacts: usize,
    pub notes: Vec<String>,
    pub verdict: Verdict,
    pub informational: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Pretty JSON with keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}

/// Trial count, seed and truncation order shared by the randomized suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialConfig {
    pub trials: usize,
    pub seed: u64,
    pub order: usize,
}

impl TrialConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        TrialConfig {
            trials,
            seed,
            order: DEFAULT_ORDER,
        }
    }

    pub fn with_order(self, order: usize) -> Self {
        TrialConfig { order, ..self }
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(BohrError::InvalidArgument(
                "trials must be at least 1".into(),
            ));
        }
        if self.order < 8 {
            return Err(BohrError::InvalidArgument(
                "order must be at least 8".into(),
            ));
        }
        Ok(())
    }
}

/// `n` radii in `(0, radius]` clustered toward `radius`; the last one is
/// `radius` itself.
pub fn chebyshev_grid(radius: f64, n: usize) -> Vec<f64> {
    let mut grid: Vec<f64> = (1..=n)
        .map(|i| radius * (FRAC_PI_2 * i as f64 / n as f64).sin())
        .collect();
    if let Some(last) = grid.last_mut() {
        *last = radius;
    }
    grid
}

/// `max |f(z)|` over [`CIRCLE_SAMPLES`] points of `|z| = r`, plus `z = ±r`.
pub fn max_on_circle(f: &TruncatedSeries, r: f64) -> f64 {
    let sampled = (0..CIRCLE_SAMPLES)
        .map(|i| {
            f.eval(Complex::from_polar(
                r,
                TAU * i as f64 / CIRCLE_SAMPLES as f64,
            ))
            .norm()
        })
        .fold(0.0, f64::max);
    sampled
        .max(f.eval(Complex::new(r, 0.0)).norm())
        .max(f.eval(Complex::new(-r, 0.0)).norm())
}

fn witness(pairs: &[(&str, Value)]) -> Witness {
    pairs
        .iter()
        .map(|(k, v)| ((*k).to_string(), v.clone()))
        .collect()
}

/// Largest residual seen by one trial or one deterministic block.
#[derive(Clone, Debug)]
struct Outcome {
    checks: usize,
    worst: f64,
    witness: Option<Witness>,
    failures: usize,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checks: 0,
            worst: f64::NEG_INFINITY,
            witness: None,
            failures: 0,
            notes: Vec::new(),
        }
    }

    fn observe(&mut self, residual: f64, w: impl FnOnce() -> Witness) {
        self.checks += 1;
        if residual > self.worst || self.witness.is_none() {
            self.worst = residual;
            self.witness = Some(w());
        }
    }

    /// A structural condition that is not a residual.
    fn require(&mut self, ok: bool, note: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            self.notes.push(note());
        }
    }

    fn error(&mut self, context: &str, e: &BohrError) {
        self.failures += 1;
        self.notes.push(format!("{context}: {e}"));
    }

    fn violated(&self, tol: f64) -> bool {
        !(self.worst <= tol)
    }
}

struct Tally {
    outcome: Outcome,
    artifacts: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            outcome: Outcome::new(),
            artifacts: 0,
        }
    }

    fn merge(&mut self, o: Outcome) {
        let t = &mut self.outcome;
        t.checks += o.checks;
        t.failures += o.failures;
        t.notes.extend(o.notes);
        if o.witness.is_some() && (o.worst > t.worst || t.witness.is_none()) {
            t.worst = o.worst;
            t.witness = o.witness;
        }
    }

    /// Runs `trial(i, order)` for every trial index, rechecking violators at
    /// [`RECHECK_ORDER`].
    fn run_trials<F>(&mut self, cfg: &TrialConfig, tol: f64, trial: F)
    where
        F: Fn(usize, usize) -> Outcome + Sync,
    {
        let results: Vec<(Outcome, bool)> = (0..cfg.trials)
            .into_par_iter()
            .map(|i| {
                let first = trial(i, cfg.order);
                if first.failures == 0 && first.violated(tol) && cfg.order < RECHECK_ORDER {
                    let second = trial(i, RECHECK_ORDER);
                    if !second.violated(tol) && second.failures == 0 {
                        return (second, true);
                    }
                    let mut second = second;
                    second.failures += 1;
                    return (second, false);
                }
                let mut first = first;
                if first.violated(tol) {
                    first.failures += 1;
                }
                (first, false)
            })
            .collect();
        for (o, artifact) in results {
            self.artifacts += usize::from(artifact);
            self.merge(o);
        }
    }

    /// Adds a deterministic block; a violation there is a failure.
    fn add_block(&mut self, mut o: Outcome, tol: f64) {
        if o.violated(tol) && o.witness.is_some() {
            o.failures += 1;
        }
        self.merge(o);
    }

    fn finish(
        self,
        suite: &str,
        cfg: &TrialConfig,
        r_grid: Vec<f64>,
        grid_relative: bool,
        tol: f64,
    ) -> VerificationReport {
        let o = self.outcome;
        let max_residual = if o.worst.is_finite() { o.worst } else { 0.0 };
        let pass = max_residual <= tol && o.failures == 0;
        VerificationReport {
            suite: suite.to_string(),
            trials: cfg.trials,
            seed: cfg.seed,
            order: cfg.order,
            r_grid,
            grid_relative,
            checks: o.checks,
            max_residual,
            tolerance: tol,
            worst_witness: o.witness,
            failures: o.failures,
            truncation_artifacts: self.artifacts,
            notes: o.notes,
            verdict: if pass { Verdict::Pass } else { Verdict::Fail },
            informational: false,
        }
    }
}

fn relative_grid() -> Vec<f64> {
    chebyshev_grid(1.0, GRID_POINTS)
}

/// `h = M_c ∘ omega` with `|c| = a`: bounded by 1 with `|h(0)| = a`.
fn bounded_with_center<R: Rng>(rng: &mut R, a: f64, order: usize) -> Result<TruncatedSeries> {
    let spec = draw_blaschke_spec(rng, 0);
    let theta = rng.random_range(0.0..TAU);
    let omega = schwarz_from_spec(&spec, false, order);
    mobius_series(Complex::from_polar(a, theta), order)?.compose(&omega)
}

/// Scaled Blaschke product `s B(z)` with `s` drawn from `[0, 1]`.
fn scaled_blaschke<R: Rng>(rng: &mut R, order: usize) -> TruncatedSeries {
    let spec = draw_blaschke_spec(rng, 0);
    let s: f64 = rng.random_range(0.0..=1.0);
    blaschke_series(&spec, order, false).scale(Complex::new(s, 0.0))
}

/// Bohr sum at `1/3` of bounded witnesses `s B(z)`, and the closed form
/// `a + (1 - a^2) / (3 - a)` for the disk automorphisms.
pub fn check_classical(cfg: &TrialConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let mut tally = Tally::new();
    tally.run_trials(cfg, VIOLATION_TOL, |i, order| {
        let mut rng = seeded_rng(cfg.seed, i as u64);
        let spec = draw_blaschke_spec(&mut rng, 0);
        let s: f64 = rng.random_range(0.0..=1.0);
        let f = blaschke_series(&spec, order, false).scale(Complex::new(s, 0.0));
        let mut o = Outcome::new();
        match bohr_sum(&f, ONE_THIRD) {
            Ok(v) => o.observe(v - 1.0, || {
                witness(&[
                    ("trial", json!(i)),
                    ("zeros", json!(spec.zeros().len())),
                    ("scale", json!(s)),
                    ("r", json!(ONE_THIRD)),
                ])
            }),
            Err(e) => o.error("bohr_sum", &e),
        }
        o
    });

    let mut block = Outcome::new();
    for i in 1..100 {
        let a = i as f64 / 100.0;
        let m = mobius_series(Complex::new(a, 0.0), cfg.order)?;
        let v = bohr_sum(&m, ONE_THIRD)?;
        let closed = a + (1.0 - a * a) / (3.0 - a);
        block.require((v - closed).abs() <= 1e-12 && v < 1.0, || {
            format!("automorphism a={a}: bohr sum {v} vs closed form {closed}")
        });
        block.observe(v - 1.0, || {
            witness(&[("family", json!("mobius")), ("a", json!(a))])
        });
    }
    tally.add_block(block, VIOLATION_TOL);
    Ok(tally.finish(
        "classical",
        cfg,
        chebyshev_grid(ONE_THIRD, 1),
        false,
        VIOLATION_TOL,
    ))
}

/// Majorant of a quasi-subordinate `f = phi (g ∘ omega)` against that of
/// `g` on `(0, 1/3]`. Trial modes cycle through the general case,
/// subordination (`phi = 1`), majorization (`omega = z`) and a scaled
/// multiplier.
pub fn check_quasi_subordination(cfg: &TrialConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let grid = chebyshev_grid(ONE_THIRD, GRID_POINTS);
    let mut tally = Tally::new();
    tally.run_trials(cfg, VIOLATION_TOL, |i, order| {
        let mut o = Outcome::new();
        let mut rng = seeded_rng(cfg.seed, i as u64);
        let mode = ["general", "subordination", "majorization", "scaled"][i % 4];
        let g_coeffs = draw_polynomial(&mut rng, 8, 2.0);
        let phi_spec = draw_blaschke_spec(&mut rng, 0);
        let scale: f64 = rng.random_range(0.0..=1.0);
        let omega_spec = draw_blaschke_spec(&mut rng, 0);

        let g = TruncatedSeries::new(&g_coeffs, order).expect("finite draw");
        let phi = match mode {
            "subordination" => TruncatedSeries::one(order),
            "scaled" => blaschke_series(&phi_spec, order, false).scale(Complex::new(scale, 0.0)),
            _ => blaschke_series(&phi_spec, order, false),
        };
        let omega = match mode {
            "majorization" => TruncatedSeries::identity(order),
            _ => schwarz_from_spec(&omega_spec, false, order),
        };
        let triple = match build_quasi_triple(g, phi, omega) {
            Ok(t) => t,
            Err(e) => {
                o.error(&format!("trial {i}"), &e);
                return o;
            }
        };
        for &r in &grid {
            let lhs = triple.f.majorant(r, false).expect("r < 1");
            let rhs = triple.g.majorant(r, false).expect("r < 1");
            o.observe(lhs - rhs, || {
                witness(&[
                    ("trial", json!(i)),
                    ("mode", json!(mode)),
                    ("r", json!(r)),
                    ("g_degree", json!(g_coeffs.len() - 1)),
                ])
            });
        }
        o
    });
    Ok(tally.finish("t1", cfg, grid, false, VIOLATION_TOL))
}

/// Odd subordination on `(0, 1/sqrt(3)]`, including every partial sum up to
/// half the truncation order.
pub fn check_odd_subordination(cfg: &TrialConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let radius = 1.0 / 3f64.sqrt();
    let grid = chebyshev_grid(radius, GRID_POINTS);
    let mut tally = Tally::new();
    tally.run_trials(cfg, VIOLATION_TOL, |i, order| {
        let mut o = Outcome::new();
        let mut rng = seeded_rng(cfg.seed, i as u64);
        let p_coeffs = draw_polynomial(&mut rng, 4, 2.0);
        let omega_spec = draw_blaschke_spec(&mut rng, 0);

        let base = TruncatedSeries::new(&p_coeffs, order / 2).expect("finite draw");
        let g = p_symmetric_lift(&base, 2, order)
            .expect("half-order base fits")
            .shift_up(1);
        let omega = schwarz_from_spec(&omega_spec, true, order);
        let triple = match build_quasi_triple(g, TruncatedSeries::one(order), omega) {
            Ok(t) => t,
            Err(e) => {
                o.error(&format!("trial {i}"), &e);
                return o;
            }
        };
        let (f, g) = (&triple.f, &triple.g);
        o.require(f.is_odd_within(1e-14), || {
            format!("trial {i}: even coefficient leak in the composition")
        });
        let half = order / 2;
        for &r in &grid {
            let lhs = f.majorant(r, false).expect("r < 1");
            let rhs = g.majorant(r, false).expect("r < 1");
            o.observe(lhs - rhs, || {
                witness(&[
                    ("trial", json!(i)),
                    ("r", json!(r)),
                    ("partial_sum", Value::Null),
                    ("zeros", json!(omega_spec.zeros().len())),
                ])
            });
            let (mut sa, mut sb) = (0.0, 0.0);
            for m in 1..=half {
                let idx = 2 * m - 1;
                let rk = r.powi(idx as i32);
                sa += f.coeff(idx).norm() * rk;
                sb += g.coeff(idx).norm() * rk;
                o.observe(sa - sb, || {
                    witness(&[
                        ("trial", json!(i)),
                        ("r", json!(r)),
                        ("partial_sum", json!(m)),
                        ("zeros", json!(omega_spec.zeros().len())),
                    ])
                });
            }
        }
        o
    });
    Ok(tally.finish("t2", cfg, grid, false, VIOLATION_TOL))
}

fn check_k_grid(k_grid: &[f64]) -> Result<()> {
    if k_grid.is_empty() {
        return Err(BohrError::InvalidArgument("k grid is empty".into()));
    }
    for &k in k_grid {
        crate::error::check_dilatation(k)?;
    }
    Ok(())
}

/// Extremal `(r + a)/(1 + a r) + (lambda + 1) r (1 - a^2)/(1 - r a)` at `z = r`.
fn harmonic_extremal_closed(a: f64, lambda: f64, r: f64) -> f64 {
    (r + a) / (1.0 + a * r) + (lambda + 1.0) * r * (1.0 - a * a) / (1.0 - r * a)
}

/// Values at `lambda = k (1 - 10^-j)`, evaluated against the bound `k`, must
/// rise toward the `lambda = k` value without passing it.
fn require_monotone_approach(o: &mut Outcome, values: &[f64], limit: f64, label: &str) {
    let ok = values.windows(2).all(|w| w[1] >= w[0] - 1e-14)
        && values.iter().all(|&v| v <= limit + VIOLATION_TOL);
    o.require(ok, || {
        format!("{label}: lambda approach {values:?} not monotone toward {limit}")
    });
}

/// Harmonic witnesses with `|g'| <= k |h'|` against the sharp bound on
/// `(0, 1/3]`, and the `lambda = k` extremal as an equality case.
pub fn check_harmonic_majorant(cfg: &TrialConfig, k_grid: &[f64]) -> Result<VerificationReport> {
    cfg.validate()?;
    check_k_grid(k_grid)?;
    let grid = chebyshev_grid(ONE_THIRD, GRID_POINTS);
    let mut tally = Tally::new();
    tally.run_trials(cfg, VIOLATION_TOL, |i, order| {
        let mut o = Outcome::new();
        let mut rng = seeded_rng(cfg.seed, i as u64);
        let inner = i % 2 == 0;
        let h_spec = draw_blaschke_spec(&mut rng, usize::from(inner));
        let s: f64 = if inner {
            1.0
        } else {
            rng.random_range(0.0..1.0)
        };
        let h = blaschke_series(&h_spec, order, false).scale(Complex::new(s, 0.0));
        let omega_tilde = scaled_blaschke(&mut rng, order);
        let a = h.coeff(0).norm();
        for &k in k_grid {
            let pair = match harmonic_witness(&h, k, &omega_tilde) {
                Ok(p) => p,
                Err(e) => {
                    o.error(&format!("trial {i}"), &e);
                    continue;
                }
            };
            for &r in &grid {
                match harmonic_fixed_center_lhs(&pair, a, r) {
                    Ok(v) => o.observe(v.value - 1.0, || {
                        witness(&[
                            ("trial", json!(i)),
                            ("k", json!(k)),
                            ("a", json!(a)),
                            ("r", json!(r)),
                        ])
                    }),
                    Err(e) => o.error(&format!("trial {i}"), &e),
                }
            }
        }
        o
    });

    let mut block = Outcome::new();
    for &k in k_grid {
        for a in [0.0, 0.25, 0.5, 0.75, 0.9] {
            let pair = extremal_harmonic(Complex::new(a, 0.0), k, cfg.order)?;
            for &r in &grid {
                let v = harmonic_fixed_center_lhs(&pair, a, r)?.value;
                block.observe((v - 1.0).abs(), || {
                    witness(&[
                        ("extremal", json!("lambda=k")),
                        ("k", json!(k)),
                        ("a", json!(a)),
                        ("r", json!(r)),
                    ])
                });
            }
            let approach: Vec<f64> = LAMBDA_APPROACH
                .iter()
                .map(|f| {
                    let p = extremal_harmonic(Complex::new(a, 0.0), k * f, cfg.order)?;
                    let p = HarmonicPair::new(p.analytic().clone(), p.co_analytic().clone(), k)?;
                    Ok(harmonic_fixed_center_lhs(&p, a, ONE_THIRD)?.value)
                })
                .collect::<Result<_>>()?;
            require_monotone_approach(&mut block, &approach, 1.0, &format!("t3 a={a} k={k}"));
        }
    }
    tally.add_block(block, VIOLATION_TOL);
    Ok(tally.finish("t3", cfg, grid, false, VIOLATION_TOL))
}

/// Ten points from `2 sqrt(3) - 3` to `0.95`.
pub fn default_pointwise_a_grid() -> Vec<f64> {
    let t = pointwise_threshold();
    (0..10).map(|i| t + (0.95 - t) * i as f64 / 9.0).collect()
}

pub const DEFAULT_HARMONIC_K_GRID: [f64; 3] = [0.0, 0.5, 1.0];
pub const DEFAULT_HARMONIC_POINTWISE_A_GRID: [f64; 5] = [0.5, 0.6, 0.7, 0.8, 0.9];
pub const DEFAULT_HARMONIC_POINTWISE_K_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// Admissibility slack on `a` against its threshold.
const THRESHOLD_SLACK: f64 = 1e-12;

/// `|f(z)| + sum |a_k| r^k <= 1` for `r <= r_a` and `a >= 2 sqrt(3) - 3`,
/// the universal radius `sqrt(5) - 2` for every `a`, and sharpness of the
/// extremal at `r_a`.
pub fn check_pointwise(cfg: &TrialConfig, a_grid: &[f64]) -> Result<VerificationReport> {
    cfg.validate()?;
    if a_grid.is_empty() {
        return Err(BohrError::InvalidArgument("a grid is empty".into()));
    }
    let threshold = pointwise_threshold();
    for &a in a_grid {
        check_unit_modulus("a", a)?;
        if a < threshold - THRESHOLD_SLACK {
            return Err(BohrError::Inadmissible {
                a,
                k: 0.0,
                threshold,
            });
        }
    }
    let universal = 5f64.sqrt() - 2.0;
    let fractions = relative_grid();
    let mut tally = Tally::new();
    tally.run_trials(cfg, VIOLATION_TOL, |i, order| {
        let mut o = Outcome::new();
        let mut rng = seeded_rng(cfg.seed, i as u64);
        let a = a_grid[i % a_grid.len()];
        let low_a: f64 = rng.random_range(0.0..1.0);
        let built = bounded_with_center(&mut rng, a, order)
            .and_then(|f| Ok((f, bounded_with_center(&mut rng, low_a, order)?)));
        let (f, f_low) = match built {
            Ok(x) => x,
            Err(e) => {
                o.error(&format!("trial {i}"), &e);
                return o;
            }
        };
        let ra = pointwise_radius(a).expect("validated").value;
        let mut eval = |f: &TruncatedSeries, a: f64, r: f64, regime: &str| {
            let v = max_on_circle(f, r) + tail_majorant(f, r).expect("r < 1");
            o.observe(v - 1.0, || {
                witness(&[
                    ("trial", json!(i)),
                    ("a", json!(a)),
                    ("r", json!(r)),
                    ("regime", json!(regime)),
                ])
            });
        };
        for &t in &fractions {
            eval(&f, a, ra * t, "r<=r_a");
        }
        eval(&f_low, low_a, universal, "universal");
        o
    });

    let mut block = Outcome::new();
    for &a in a_grid {
        let e = extremal_pointwise(Complex::new(a, 0.0), cfg.order)?;
        let ra = pointwise_radius(a)?.value;
        for &t in &fractions {
            let r = ra * t;
            let v = pointwise_lhs(&e, Complex::new(-r, 0.0))?;
            let closed = 2.0 * (1.0 - a * a) * r / (1.0 - a * a * r * r) + a;
            block.require((v - closed).abs() <= 1e-12, || {
                format!("t5 extremal a={a} r={r}: {v} vs closed form {closed}")
            });
            let residual = if t == 1.0 { (v - 1.0).abs() } else { v - 1.0 };
            block.observe(residual, || {
                witness(&[("extremal", json!("t5")), ("a", json!(a)), ("r", json!(r))])
            });
        }
        let beyond = pointwise_lhs(&e, Complex::new(-(ra + BEYOND_DELTA), 0.0))?;
        block.require(beyond > 1.0, || {
            format!("t5 extremal a={a}: value {beyond} at r_a + delta does not exceed 1")
        });
    }
    for i in 0..100 {
        let a = i as f64 / 100.0;
        let e = extremal_pointwise(Complex::new(a, 0.0), cfg.order)?;
        let v = pointwise_lhs(&e, Complex::new(-universal, 0.0))?;
        block.observe(v - 1.0, || {
            witness(&[
                ("extremal", json!("t5")),
                ("a", json!(a)),
                ("r", json!(universal)),
                ("regime", json!("universal")),
            ])
        });
    }
    tally.add_block(block, VIOLATION_TOL);
    Ok(tally.finish("t5", cfg, fractions, true, VIOLATION_TOL))
}

fn admissible_pairs(a_grid: &[f64], k_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    if a_grid.is_empty() {
        return Err(BohrError::InvalidArgument("a grid is empty".into()));
    }
    check_k_grid(k_grid)?;
    let mut pairs = Vec::with_capacity(a_grid.len() * k_grid.len());
    for &a in a_grid {
        check_unit_modulus("a", a)?;
        for &k in k_grid {
            let threshold = harmonic_threshold(k)?;
            if a < threshold - THRESHOLD_SLACK {
                return Err(BohrError::Inadmissible { a, k, threshold });
            }
            pairs.push((a, k));
        }
    }
    Ok(pairs)
}

/// `|h(z)| + sum |a_n| r^n + sum |b_n| r^n <= 1` for `r <= r_{a,k}`, with
/// the `lambda = k` extremal attaining 1 at `r_{a,k}`.
pub fn check_harmonic_pointwise(
    cfg: &TrialConfig,
    a_grid: &[f64],
    k_grid: &[f64],
) -> Result<VerificationReport> {
    cfg.validate()?;
    let pairs = admissible_pairs(a_grid, k_grid)?;
    let fractions = relative_grid();
    let mut tally = Tally::new();
    tally.run_trials(cfg, VIOLATION_TOL, |i, order| {
        let mut o = Outcome::new();
        let mut rng = seeded_rng(cfg.seed, i as u64);
        let (a, k) = pairs[i % pairs.len()];
        let pair = bounded_with_center(&mut rng, a, order).and_then(|h| {
            let omega_tilde = scaled_blaschke(&mut rng, order);
            harmonic_witness(&h, k, &omega_tilde)
        });
        let pair = match pair {
            Ok(p) => p,
            Err(e) => {
                o.error(&format!("trial {i}"), &e);
                return o;
            }
        };
        let rak = harmonic_radius(a, k).expect("validated").value;
        for &t in &fractions {
            let r = rak * t;
            let v = max_on_circle(pair.analytic(), r)
                + tail_majorant(pair.analytic(), r).expect("r < 1")
                + tail_majorant(pair.co_analytic(), r).expect("r < 1");
            o.observe(v - 1.0, || {
                witness(&[
                    ("trial", json!(i)),
                    ("a", json!(a)),
                    ("k", json!(k)),
                    ("r", json!(r)),
                ])
            });
        }
        o
    });

    let mut block = Outcome::new();
    for &(a, k) in &pairs {
        let rak = harmonic_radius(a, k)?.value;
        let e = extremal_harmonic(Complex::new(a, 0.0), k, cfg.order)?;
        for &t in &fractions {
            let r = rak * t;
            let v = harmonic_pointwise_lhs(&e, Complex::new(r, 0.0))?;
            let closed = harmonic_extremal_closed(a, k, r);
            block.require((v - closed).abs() <= 1e-12, || {
                format!("t6 extremal a={a} k={k} r={r}: {v} vs closed form {closed}")
            });
            let residual = if t == 1.0 { (v - 1.0).abs() } else { v - 1.0 };
            block.observe(residual, || {
                witness(&[
                    ("extremal", json!("lambda=k")),
                    ("a", json!(a)),
                    ("k", json!(k)),
                    ("r", json!(r)),
                ])
            });
        }
        let beyond = harmonic_extremal_closed(a, k, rak + BEYOND_DELTA);
        block.require(beyond > 1.0, || {
            format!("t6 extremal a={a} k={k}: value {beyond} at r + delta does not exceed 1")
        });
        let approach: Vec<f64> = LAMBDA_APPROACH
            .iter()
            .map(|f| {
                let p = extremal_harmonic(Complex::new(a, 0.0), k * f, cfg.order)?;
                harmonic_pointwise_lhs(&p, Complex::new(rak, 0.0))
            })
            .collect::<Result<_>>()?;
        require_monotone_approach(&mut block, &approach, 1.0, &format!("t6 a={a} k={k}"));
    }
    tally.add_block(block, VIOLATION_TOL);
    Ok(tally.finish("t6", cfg, fractions, true, VIOLATION_TOL))
}

/// Statements with a sharpness claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SharpStatement {
    /// Equality for the disk automorphisms on the whole interval `[0, 1/3]`.
    FixedCenter,
    /// Equality for the `lambda = k` harmonic extremal on `[0, 1/3]`.
    HarmonicFixedCenter,
    Pointwise,
    HarmonicPointwise,
    /// The bounded odd-function radius; no extremal is available.
    Odd,
}

impl SharpStatement {
    pub fn name(self) -> &'static str {
        match self {
            SharpStatement::FixedCenter => "cor2",
            SharpStatement::HarmonicFixedCenter => "t3",
            SharpStatement::Pointwise => "t5",
            SharpStatement::HarmonicPointwise => "t6",
            SharpStatement::Odd => "odd",
        }
    }
}

/// Evaluates the named extremal at the claimed radius (expecting `|LHS - 1|
/// <= 1e-8`) and, for the radius statements, at `radius + 1e-3` (expecting
/// `LHS > 1`). The equality statements are checked on a grid of `[0, 1/3]`.
pub fn sharpness_certificate(
    statement: SharpStatement,
    a: f64,
    k: f64,
    order: usize,
) -> Result<VerificationReport> {
    let cfg = TrialConfig {
        trials: 0,
        seed: 0,
        order,
    };
    let mut o = Outcome::new();
    let mut grid = Vec::new();
    let tag = |r: f64| witness(&[("a", json!(a)), ("k", json!(k)), ("r", json!(r))]);
    match statement {
        SharpStatement::Odd => {
            return Err(BohrError::NoExtremal {
                statement: "odd-function radius",
                reason: "no extremal odd function is available to certify sharpness",
            })
        }
        SharpStatement::FixedCenter | SharpStatement::HarmonicFixedCenter => {
            check_unit_modulus("a", a)?;
            grid.push(0.0);
            grid.extend(chebyshev_grid(ONE_THIRD, GRID_POINTS));
            let pair = extremal_harmonic(Complex::new(a, 0.0), k, order)?;
            let m = extremal_automorphism(Complex::new(a, 0.0), order)?;
            for &r in &grid {
                let v = if statement == SharpStatement::FixedCenter {
                    fixed_center_lhs(&m, a, r)?.value
                } else {
                    harmonic_fixed_center_lhs(&pair, a, r)?.value
                };
                o.observe((v - 1.0).abs(), || tag(r));
            }
        }
        SharpStatement::Pointwise => {
            check_unit_modulus("a", a)?;
            let threshold = pointwise_threshold();
            if a < threshold - THRESHOLD_SLACK {
                return Err(BohrError::Inadmissible {
                    a,
                    k: 0.0,
                    threshold,
                });
            }
            let ra = pointwise_radius(a)?.value;
            grid.push(ra);
            let e = extremal_pointwise(Complex::new(a, 0.0), order)?;
            let v = pointwise_lhs(&e, Complex::new(-ra, 0.0))?;
            o.observe((v - 1.0).abs(), || tag(ra));
            let beyond = pointwise_lhs(&e, Complex::new(-(ra + BEYOND_DELTA), 0.0))?;
            o.require(beyond > 1.0, || {
                format!("value {beyond} at radius + delta does not exceed 1")
            });
        }
        SharpStatement::HarmonicPointwise => {
            let rak = {
                let pairs = admissible_pairs(&[a], &[k])?;
                harmonic_radius(pairs[0].0, pairs[0].1)?.value
            };
            grid.push(rak);
            let e = extremal_harmonic(Complex::new(a, 0.0), k, order)?;
            let v = harmonic_pointwise_lhs(&e, Complex::new(rak, 0.0))?;
            o.observe((v - 1.0).abs(), || tag(rak));
            let beyond = harmonic_pointwise_lhs(&e, Complex::new(rak + BEYOND_DELTA, 0.0))?;
            o.require(beyond > 1.0, || {
                format!("value {beyond} at radius + delta does not exceed 1")
            });
        }
    }
    let mut tally = Tally::new();
    tally.add_block(o, SHARPNESS_TOL);
    Ok(tally.finish(
        &format!("sharpness/{}", statement.name()),
        &cfg,
        grid,
        false,
        SHARPNESS_TOL,
    ))
}

/// Values of the analytic extremal for `a` below `2 sqrt(3) - 3` at radii in
/// `(1/3, r_a]`, where no inequality is asserted. The report is marked
/// informational and never passes or fails.
pub fn beyond_radius_scan(
    a_grid: &[f64],
    steps: usize,
    order: usize,
) -> Result<VerificationReport> {
    if steps == 0 {
        return Err(BohrError::InvalidArgument(
            "steps must be at least 1".into(),
        ));
    }
    let threshold = pointwise_threshold();
    let mut o = Outcome::new();
    let fractions: Vec<f64> = (1..=steps).map(|i| i as f64 / steps as f64).collect();
    for &a in a_grid {
        check_unit_modulus("a", a)?;
        if a >= threshold {
            continue;
        }
        let ra = pointwise_radius(a)?.value;
        let e = extremal_pointwise(Complex::new(a, 0.0), order)?;
        for &t in &fractions {
            let r = ONE_THIRD + (ra - ONE_THIRD) * t;
            let v = pointwise_lhs(&e, Complex::new(-r, 0.0))?;
            o.observe(v - 1.0, || witness(&[("a", json!(a)), ("r", json!(r))]));
        }
    }
    let cfg = TrialConfig {
        trials: 0,
        seed: 0,
        order,
    };
    let mut tally = Tally::new();
    tally.merge(o);
    let mut report = tally.finish("beyond/t5", &cfg, fractions, true, VIOLATION_TOL);
    report.verdict = Verdict::Informational;
    report.informational = true;
    report
        .notes
        .push("radii above 1/3 for a below 2*sqrt(3)-3 carry no inequality claim".into());
    Ok(report)
}
