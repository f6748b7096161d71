//! C ABI over the series engine, the radius calculators and the verifier.
//!
//! Series and reports cross the boundary as opaque handles that the caller
//! frees with the matching `*_free` function. Every fallible call returns a
//! [`BohrStatus`]; on failure a description is available from
//! [`bohr_last_error`] on the same thread until the next failing call.
//! Panics are caught and reported as [`BohrStatus::Panic`].

#![allow(clippy::missing_safety_doc, clippy::neg_cmp_op_on_partial_ord)]

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bohrlab::verifier::{
    check_classical, check_harmonic_majorant, check_harmonic_pointwise, check_odd_subordination,
    check_pointwise, check_quasi_subordination, default_pointwise_a_grid, DEFAULT_HARMONIC_K_GRID,
    DEFAULT_HARMONIC_POINTWISE_A_GRID, DEFAULT_HARMONIC_POINTWISE_K_GRID,
};
use bohrlab::{
    classical_radius, harmonic_radius, mobius_series, odd_bohr_radius, p_symmetric_radius,
    pointwise_radius, sharpness_certificate, BohrError, Complex, SharpStatement, TrialConfig,
    TruncatedSeries, VerificationReport,
};

/// Opaque truncated power series.
pub struct BohrSeries(TruncatedSeries);

/// Opaque verification report.
pub struct BohrReport(VerificationReport);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BohrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// A value outside its admitted range, e.g. `r >= 1`.
    Domain = 3,
    /// Truncation orders that do not fit together.
    Order = 4,
    /// `a` below the admissibility threshold of a radius statement.
    Inadmissible = 5,
    NoExtremal = 6,
    /// An internal consistency check failed.
    Numeric = 7,
    Panic = 99,
}

pub const BOHR_RADIUS_CLASSICAL: u32 = 0;
pub const BOHR_RADIUS_ODD: u32 = 1;
pub const BOHR_RADIUS_P_SYMMETRIC: u32 = 2;
pub const BOHR_RADIUS_ANALYTIC: u32 = 3;
pub const BOHR_RADIUS_HARMONIC: u32 = 4;

pub const BOHR_SUITE_CLASSICAL: u32 = 0;
pub const BOHR_SUITE_QUASI_SUBORDINATION: u32 = 1;
pub const BOHR_SUITE_ODD_SUBORDINATION: u32 = 2;
pub const BOHR_SUITE_HARMONIC_MAJORANT: u32 = 3;
pub const BOHR_SUITE_ANALYTIC_POINTWISE: u32 = 4;
pub const BOHR_SUITE_HARMONIC_POINTWISE: u32 = 5;

pub const BOHR_SHARP_AUTOMORPHISM: u32 = 0;
pub const BOHR_SHARP_HARMONIC_MAJORANT: u32 = 1;
pub const BOHR_SHARP_ANALYTIC_POINTWISE: u32 = 2;
pub const BOHR_SHARP_HARMONIC_POINTWISE: u32 = 3;
pub const BOHR_SHARP_ODD: u32 = 4;

/// Radius with its optional fields flattened: `threshold_a` is NaN and
/// `admissible` is -1 when not applicable.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct BohrRadius {
    pub value: f64,
    pub residual: f64,
    pub threshold_a: f64,
    pub binding_cap: f64,
    pub admissible: c_int,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

struct Failure(BohrStatus, String);

impl From<BohrError> for Failure {
    fn from(e: BohrError) -> Self {
        let status = match &e {
            BohrError::Domain { .. }
            | BohrError::RadiusOutOfRange { .. }
            | BohrError::PointOutsideDisk { .. }
            | BohrError::NonzeroConstant { .. } => BohrStatus::Domain,
            BohrError::OrderMismatch { .. }
            | BohrError::OrderOverflow { .. }
            | BohrError::InsufficientOrder { .. } => BohrStatus::Order,
            BohrError::Inadmissible { .. } => BohrStatus::Inadmissible,
            BohrError::NoExtremal { .. } => BohrStatus::NoExtremal,
            BohrError::ConvolutionMismatch { .. } => BohrStatus::Numeric,
            _ => BohrStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure(BohrStatus::InvalidArgument, message.into())
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> BohrStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BohrStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {message}"));
            BohrStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(BohrStatus::NullPointer, format!("{name} is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T, name: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(BohrStatus::NullPointer, format!("{name} is null")));
    }
    out.write(value);
    Ok(())
}

unsafe fn emit_series(out: *mut *mut BohrSeries, s: TruncatedSeries) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(BohrStatus::NullPointer, "out is null".into()));
    }
    out.write(Box::into_raw(Box::new(BohrSeries(s))));
    Ok(())
}

/// Message of the last failing call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bohr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Series from `len` coefficients (`im` may be null for real input),
/// truncated at `order`; `len` may not exceed `order + 1`.
#[no_mangle]
pub unsafe extern "C" fn bohr_series_new(
    re: *const f64,
    im: *const f64,
    len: usize,
    order: usize,
    out: *mut *mut BohrSeries,
) -> BohrStatus {
    guard(|| {
        if len > 0 && re.is_null() {
            return Err(Failure(BohrStatus::NullPointer, "re is null".into()));
        }
        let coeffs: Vec<Complex> = (0..len)
            .map(|i| {
                let imag = if im.is_null() { 0.0 } else { *im.add(i) };
                Complex::new(*re.add(i), imag)
            })
            .collect();
        emit_series(out, TruncatedSeries::new(&coeffs, order)?)
    })
}

/// Disk automorphism `(z + a0) / (1 + conj(a0) z)` with `|a0| < 1`.
#[no_mangle]
pub unsafe extern "C" fn bohr_series_mobius(
    re: f64,
    im: f64,
    order: usize,
    out: *mut *mut BohrSeries,
) -> BohrStatus {
    guard(|| emit_series(out, mobius_series(Complex::new(re, im), order)?))
}

#[no_mangle]
pub unsafe extern "C" fn bohr_series_free(series: *mut BohrSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// Truncation order, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn bohr_series_order(series: *const BohrSeries) -> usize {
    series.as_ref().map_or(0, |s| s.0.order())
}

/// Coefficient `n`; indices above the order read as zero.
#[no_mangle]
pub unsafe extern "C" fn bohr_series_coeff(
    series: *const BohrSeries,
    n: usize,
    re: *mut f64,
    im: *mut f64,
) -> BohrStatus {
    guard(|| {
        let c = borrow(series, "series")?.0.coeff(n);
        write_out(re, c.re, "re")?;
        write_out(im, c.im, "im")
    })
}

#[no_mangle]
pub unsafe extern "C" fn bohr_series_add(
    a: *const BohrSeries,
    b: *const BohrSeries,
    out: *mut *mut BohrSeries,
) -> BohrStatus {
    guard(|| emit_series(out, borrow(a, "a")?.0.add(&borrow(b, "b")?.0)?))
}

#[no_mangle]
pub unsafe extern "C" fn bohr_series_mul(
    a: *const BohrSeries,
    b: *const BohrSeries,
    out: *mut *mut BohrSeries,
) -> BohrStatus {
    guard(|| emit_series(out, borrow(a, "a")?.0.mul(&borrow(b, "b")?.0)?))
}

/// `outer ∘ inner`; `inner` must vanish at the origin.
#[no_mangle]
pub unsafe extern "C" fn bohr_series_compose(
    outer: *const BohrSeries,
    inner: *const BohrSeries,
    out: *mut *mut BohrSeries,
) -> BohrStatus {
    guard(|| {
        emit_series(
            out,
            borrow(outer, "outer")?
                .0
                .compose(&borrow(inner, "inner")?.0)?,
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn bohr_series_power(
    series: *const BohrSeries,
    k: u32,
    out: *mut *mut BohrSeries,
) -> BohrStatus {
    guard(|| emit_series(out, borrow(series, "series")?.0.power(k as usize)))
}

#[no_mangle]
pub unsafe extern "C" fn bohr_series_derivative(
    series: *const BohrSeries,
    out: *mut *mut BohrSeries,
) -> BohrStatus {
    guard(|| emit_series(out, borrow(series, "series")?.0.derivative()))
}

#[no_mangle]
pub unsafe extern "C" fn bohr_series_integrate(
    series: *const BohrSeries,
    out: *mut *mut BohrSeries,
) -> BohrStatus {
    guard(|| emit_series(out, borrow(series, "series")?.0.integrate()))
}

/// `sum |c_k| r^k`, from `k = 1` when `skip_constant` is nonzero.
#[no_mangle]
pub unsafe extern "C" fn bohr_series_majorant(
    series: *const BohrSeries,
    r: f64,
    skip_constant: c_int,
    out: *mut f64,
) -> BohrStatus {
    guard(|| {
        let v = borrow(series, "series")?
            .0
            .majorant(r, skip_constant != 0)?;
        write_out(out, v, "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn bohr_series_eval(
    series: *const BohrSeries,
    re: f64,
    im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> BohrStatus {
    guard(|| {
        let z = Complex::new(re, im);
        if !(z.norm() < 1.0) {
            return Err(Failure(
                BohrStatus::Domain,
                format!("|z| = {} is not below 1", z.norm()),
            ));
        }
        let v = borrow(series, "series")?.0.eval(z);
        write_out(out_re, v.re, "out_re")?;
        write_out(out_im, v.im, "out_im")
    })
}

/// Radius of kind `BOHR_RADIUS_*`; `a`, `k` and `p` are read only by the
/// kinds that take them.
#[no_mangle]
pub unsafe extern "C" fn bohr_radius(
    kind: u32,
    a: f64,
    k: f64,
    p: u32,
    out: *mut BohrRadius,
) -> BohrStatus {
    guard(|| {
        let r = match kind {
            BOHR_RADIUS_CLASSICAL => classical_radius(),
            BOHR_RADIUS_ODD => odd_bohr_radius(),
            BOHR_RADIUS_P_SYMMETRIC => p_symmetric_radius(p)?,
            BOHR_RADIUS_ANALYTIC => pointwise_radius(a)?,
            BOHR_RADIUS_HARMONIC => harmonic_radius(a, k)?,
            other => return Err(invalid(format!("unknown radius kind {other}"))),
        };
        let flat = BohrRadius {
            value: r.value,
            residual: r.residual,
            threshold_a: r.threshold_a.unwrap_or(f64::NAN),
            binding_cap: r.binding_cap.unwrap_or(f64::NAN),
            admissible: r.admissible.map_or(-1, c_int::from),
        };
        write_out(out, flat, "out")
    })
}

unsafe fn emit_report(out: *mut *mut BohrReport, r: VerificationReport) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(BohrStatus::NullPointer, "out is null".into()));
    }
    out.write(Box::into_raw(Box::new(BohrReport(r))));
    Ok(())
}

/// Runs suite `BOHR_SUITE_*` on its default parameter grids. An order of 0
/// selects the default truncation order.
#[no_mangle]
pub unsafe extern "C" fn bohr_verify(
    suite: u32,
    trials: usize,
    seed: u64,
    order: usize,
    out: *mut *mut BohrReport,
) -> BohrStatus {
    guard(|| {
        let mut cfg = TrialConfig::new(trials, seed);
        if order != 0 {
            cfg = cfg.with_order(order);
        }
        let report = match suite {
            BOHR_SUITE_CLASSICAL => check_classical(&cfg)?,
            BOHR_SUITE_QUASI_SUBORDINATION => check_quasi_subordination(&cfg)?,
            BOHR_SUITE_ODD_SUBORDINATION => check_odd_subordination(&cfg)?,
            BOHR_SUITE_HARMONIC_MAJORANT => {
                check_harmonic_majorant(&cfg, &DEFAULT_HARMONIC_K_GRID)?
            }
            BOHR_SUITE_ANALYTIC_POINTWISE => check_pointwise(&cfg, &default_pointwise_a_grid())?,
            BOHR_SUITE_HARMONIC_POINTWISE => check_harmonic_pointwise(
                &cfg,
                &DEFAULT_HARMONIC_POINTWISE_A_GRID,
                &DEFAULT_HARMONIC_POINTWISE_K_GRID,
            )?,
            other => return Err(invalid(format!("unknown suite {other}"))),
        };
        emit_report(out, report)
    })
}

/// Sharpness certificate `BOHR_SHARP_*` for `(a, k)`.
#[no_mangle]
pub unsafe extern "C" fn bohr_sharpness(
    statement: u32,
    a: f64,
    k: f64,
    order: usize,
    out: *mut *mut BohrReport,
) -> BohrStatus {
    guard(|| {
        let statement = match statement {
            BOHR_SHARP_AUTOMORPHISM => SharpStatement::FixedCenter,
            BOHR_SHARP_HARMONIC_MAJORANT => SharpStatement::HarmonicFixedCenter,
            BOHR_SHARP_ANALYTIC_POINTWISE => SharpStatement::Pointwise,
            BOHR_SHARP_HARMONIC_POINTWISE => SharpStatement::HarmonicPointwise,
            BOHR_SHARP_ODD => SharpStatement::Odd,
            other => return Err(invalid(format!("unknown statement {other}"))),
        };
        let order = if order == 0 {
            bohrlab::DEFAULT_ORDER
        } else {
            order
        };
        emit_report(out, sharpness_certificate(statement, a, k, order)?)
    })
}

/// 1 when the report passed, 0 otherwise (including a null handle).
#[no_mangle]
pub unsafe extern "C" fn bohr_report_passed(report: *const BohrReport) -> c_int {
    report.as_ref().map_or(0, |r| c_int::from(r.0.passed()))
}

/// Largest `LHS - RHS` observed, NaN for a null handle.
#[no_mangle]
pub unsafe extern "C" fn bohr_report_max_residual(report: *const BohrReport) -> f64 {
    report.as_ref().map_or(f64::NAN, |r| r.0.max_residual)
}

/// The report as JSON with sorted keys; free with [`bohr_string_free`].
/// Null for a null handle.
#[no_mangle]
pub unsafe extern "C" fn bohr_report_json(report: *const BohrReport) -> *mut c_char {
    match report.as_ref() {
        Some(r) => CString::new(r.0.to_json()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn bohr_report_free(report: *mut BohrReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

#[no_mangle]
pub unsafe extern "C" fn bohr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
