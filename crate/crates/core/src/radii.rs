//! Sharp radii and admissibility thresholds.

use serde::Serialize;

use crate::error::{check_dilatation, check_unit_modulus, BohrError, Result};
use crate::functionals::ONE_THIRD;

/// Bracket width at which bisection stops.
pub const ROOT_TOL: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RadiusResult {
    pub value: f64,
    /// Smallest `|a0|` for which the radius statement applies.
    pub threshold_a: Option<f64>,
    /// Cap imposed by the underlying `r <= 1/3` estimate.
    pub binding_cap: Option<f64>,
    /// Whether the supplied `a` clears `threshold_a`.
    pub admissible: Option<bool>,
    /// Defining polynomial evaluated at `value`.
    pub residual: f64,
}

impl RadiusResult {
    fn exact(value: f64) -> Self {
        RadiusResult {
            value,
            threshold_a: None,
            binding_cap: None,
            admissible: None,
            residual: 0.0,
        }
    }
}

/// The inequalities whose boundary defines a radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quadratic {
    /// `r^2 a^2 + 2 r a + 2 r - 1`
    Pointwise,
    /// `a (a + k + k a) r^2 + (k + 2)(a + 1) r - 1`
    Harmonic,
    /// `r^2 (k + 1) a^2 + r (k r + k + 2) a + r (k + 2) - 1`
    HarmonicExpanded,
}

/// Signed residual; `<= 0` inside the admissible region.
pub fn quadratic_residual(which: Quadratic, a: f64, k: f64, r: f64) -> f64 {
    match which {
        Quadratic::Pointwise => r * r * a * a + 2.0 * r * a + 2.0 * r - 1.0,
        Quadratic::Harmonic => a * (a + k + k * a) * r * r + (k + 2.0) * (a + 1.0) * r - 1.0,
        Quadratic::HarmonicExpanded => {
            r * r * (k + 1.0) * a * a + r * (k * r + k + 2.0) * a + r * (k + 2.0) - 1.0
        }
    }
}

/// `8 r^4 + r^2 - 6 r + 1`.
pub fn odd_quartic(r: f64) -> f64 {
    ((8.0 * r * r + 1.0) * r - 6.0) * r + 1.0
}

pub fn classical_radius() -> RadiusResult {
    RadiusResult::exact(ONE_THIRD)
}

/// `3^(-1/p)`, the radius for `p`-symmetric subordination.
pub fn p_symmetric_radius(p: u32) -> Result<RadiusResult> {
    if p == 0 {
        return Err(BohrError::Domain {
            name: "p",
            value: 0.0,
            allowed: "p >= 1",
        });
    }
    if p == 1 {
        return Ok(classical_radius());
    }
    let value = match p {
        2 => 1.0 / 3f64.sqrt(),
        _ => 3f64.powf(-1.0 / f64::from(p)),
    };
    Ok(RadiusResult::exact(value))
}

/// Bisection on a sign-changing bracket down to `tol`.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    // Return whichever end has the smaller residual.
    if f(lo).abs() <= f(hi).abs() {
        lo
    } else {
        hi
    }
}

/// Largest root of `f` below `start`, scanning downward with step `step`.
pub fn largest_root_below(f: impl Fn(f64) -> f64, start: f64, step: f64, tol: f64) -> Option<f64> {
    let mut hi = start;
    let mut fhi = f(hi);
    let mut i = 1u32;
    loop {
        let lo = start - f64::from(i) * step;
        if lo <= 0.0 {
            return None;
        }
        let flo = f(lo);
        if flo == 0.0 {
            return Some(lo);
        }
        if (flo < 0.0) != (fhi < 0.0) {
            return Some(bisect(&f, lo, hi, tol));
        }
        hi = lo;
        fhi = flo;
        i += 1;
    }
}

/// Maximal positive root of `8 r^4 + r^2 - 6 r + 1`, the radius for bounded
/// odd functions.
pub fn odd_bohr_radius() -> RadiusResult {
    let value = largest_root_below(odd_quartic, 1.0, 1e-3, ROOT_TOL)
        .expect("quartic changes sign between 0.5 and 1");
    RadiusResult {
        residual: odd_quartic(value),
        ..RadiusResult::exact(value)
    }
}

/// `2 sqrt(3) - 3`, the smallest `a` for which the analytic radius is at
/// most `1/3`.
pub fn pointwise_threshold() -> f64 {
    2.0 * 3f64.sqrt() - 3.0
}

/// `r_a = 1 / (sqrt((1 + a)^2 + a^2) + 1 + a)`.
pub fn pointwise_radius(a: f64) -> Result<RadiusResult> {
    check_unit_modulus("a", a)?;
    let value = 1.0 / (((1.0 + a).powi(2) + a * a).sqrt() + 1.0 + a);
    let threshold = pointwise_threshold();
    Ok(RadiusResult {
        value,
        threshold_a: Some(threshold),
        binding_cap: Some(ONE_THIRD),
        admissible: Some(a >= threshold),
        residual: quadratic_residual(Quadratic::Pointwise, a, 0.0, value),
    })
}

/// `alpha_k = (sqrt(k^2 + 12 k + 12) - (2 k + 3)) / (k + 1)`.
pub fn harmonic_threshold(k: f64) -> Result<f64> {
    check_dilatation(k)?;
    Ok(((k * k + 12.0 * k + 12.0).sqrt() - (2.0 * k + 3.0)) / (k + 1.0))
}

/// `B_{a,k} = sqrt(a^2 (k^2 + 8k + 8) + 2a (k^2 + 6k + 4) + (k + 2)^2)`.
pub fn harmonic_discriminant_root(a: f64, k: f64) -> f64 {
    (a * a * (k * k + 8.0 * k + 8.0) + 2.0 * a * (k * k + 6.0 * k + 4.0) + (k + 2.0).powi(2)).sqrt()
}

/// Positive root of `a (a + k + k a) r^2 + (k + 2)(a + 1) r - 1`.
///
/// Evaluated as `2 / ((k + 2)(1 + a) + B_{a,k})`, which equals the printed
/// `(B_{a,k} - (k + 2)(1 + a)) / (2a^2(k + 1) + 2ak)` and stays finite at `a = 0`,
/// where it gives `1 / (k + 2)`.
pub fn harmonic_radius(a: f64, k: f64) -> Result<RadiusResult> {
    check_unit_modulus("a", a)?;
    let threshold = harmonic_threshold(k)?;
    let b = harmonic_discriminant_root(a, k);
    let value = 2.0 / ((k + 2.0) * (1.0 + a) + b);
    Ok(RadiusResult {
        value,
        threshold_a: Some(threshold),
        binding_cap: Some(ONE_THIRD),
        admissible: Some(a >= threshold),
        residual: quadratic_residual(Quadratic::Harmonic, a, k, value),
    })
}
