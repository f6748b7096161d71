//! Truncated complex power series on the unit disk.
//!
//! A [`TruncatedSeries`] stores `c_0 ..= c_N` for a fixed truncation order
//! `N`. Every operation returns coefficients that are exact up to index `N`
//! given exact inputs: products and compositions never need coefficients
//! beyond the truncation because all inner series used in composition vanish
//! at the origin.
//!
//! Two pieces of metadata travel with a series:
//!
//! * `exact_degree`: when set to `d`, every coefficient past `d` of the
//!   underlying function is zero, so majorant sums are exact rather than
//!   lower bounds.
//! * a [`GeometricTail`] tag for the disk automorphism families, whose
//!   coefficient moduli form a geometric sequence. The tag gives closed-form
//!   majorant sums and a bound on the discarded tail.

use num_complex::Complex64;

use crate::error::{BohrError, Result};

pub type Complex = Complex64;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 64;

/// Absolute tolerance on the constant term of an inner series in
/// [`TruncatedSeries::compose`].
pub const COMPOSE_CONSTANT_TOL: f64 = 1e-15;

/// Coefficient moduli `|c_k| = lead * ratio^(k-1)` for all `k >= 1`, with
/// `|c_0| = head`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeometricTail {
    pub head: f64,
    pub lead: f64,
    pub ratio: f64,
}

impl GeometricTail {
    /// `head + lead * r / (1 - ratio * r)`, or the same without `head`.
    pub fn majorant(&self, r: f64, skip_constant: bool) -> f64 {
        let tail = self.lead * r / (1.0 - self.ratio * r);
        if skip_constant {
            tail
        } else {
            self.head + tail
        }
    }

    /// `sum_{k > order} |c_k| r^k`.
    pub fn remainder(&self, r: f64, order: usize) -> f64 {
        let q = self.ratio * r;
        self.lead * r * q.powi(order as i32) / (1.0 - q)
    }

    fn scaled(self, s: f64) -> Self {
        GeometricTail {
            head: self.head * s,
            lead: self.lead * s,
            ratio: self.ratio,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex>,
    exact_degree: Option<usize>,
    tail: Option<GeometricTail>,
}

impl TruncatedSeries {
    /// Zero-pads `coeffs` to `order + 1` entries and marks the series as a
    /// polynomial of degree `coeffs.len() - 1`.
    pub fn new(coeffs: &[Complex], order: usize) -> Result<Self> {
        if coeffs.len() > order + 1 {
            return Err(BohrError::TooManyCoefficients {
                len: coeffs.len(),
                order,
            });
        }
        if let Some(index) = coeffs
            .iter()
            .position(|c| !(c.re.is_finite() && c.im.is_finite()))
        {
            return Err(BohrError::NonFinite { index });
        }
        let mut padded = coeffs.to_vec();
        padded.resize(order + 1, Complex::new(0.0, 0.0));
        Ok(TruncatedSeries {
            coeffs: padded,
            exact_degree: Some(coeffs.len().saturating_sub(1)),
            tail: None,
        })
    }

    /// Real-coefficient convenience wrapper around [`TruncatedSeries::new`].
    pub fn from_real(coeffs: &[f64], order: usize) -> Result<Self> {
        let c: Vec<Complex> = coeffs.iter().map(|&x| Complex::new(x, 0.0)).collect();
        Self::new(&c, order)
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(Complex::new(0.0, 0.0), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex::new(1.0, 0.0), order)
    }

    pub fn constant(c: Complex, order: usize) -> Self {
        let mut coeffs = vec![Complex::new(0.0, 0.0); order + 1];
        coeffs[0] = c;
        TruncatedSeries {
            coeffs,
            exact_degree: Some(0),
            tail: None,
        }
    }

    /// The identity function `z`. Order must be at least 1.
    pub fn identity(order: usize) -> Self {
        Self::monomial(Complex::new(1.0, 0.0), 1, order)
    }

    /// `c * z^n`, or the zero series when `n > order`.
    pub fn monomial(c: Complex, n: usize, order: usize) -> Self {
        let mut coeffs = vec![Complex::new(0.0, 0.0); order + 1];
        if n <= order {
            coeffs[n] = c;
            TruncatedSeries {
                coeffs,
                exact_degree: Some(n),
                tail: None,
            }
        } else {
            Self::zero(order)
        }
    }

    /// Builds a series from raw coefficients without an exact-degree claim.
    pub(crate) fn from_raw(coeffs: Vec<Complex>) -> Self {
        debug_assert!(!coeffs.is_empty());
        TruncatedSeries {
            coeffs,
            exact_degree: None,
            tail: None,
        }
    }

    pub(crate) fn with_tail(mut self, tail: GeometricTail) -> Self {
        self.tail = Some(tail);
        self
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// Coefficient `n`, zero past the truncation order.
    pub fn coeff(&self, n: usize) -> Complex {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn exact_degree(&self) -> Option<usize> {
        self.exact_degree
    }

    pub fn geometric_tail(&self) -> Option<GeometricTail> {
        self.tail
    }

    /// Index of the last nonzero coefficient, 0 for the zero series.
    fn support_end(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| c.re != 0.0 || c.im != 0.0)
            .unwrap_or(0)
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(BohrError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        let exact_degree = match (self.exact_degree, other.exact_degree) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        Ok(TruncatedSeries {
            coeffs,
            exact_degree,
            tail: None,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(Complex::new(-1.0, 0.0)))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: Complex) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x * c).collect();
        let exact_degree = if c == Complex::new(0.0, 0.0) {
            Some(0)
        } else {
            self.exact_degree
        };
        TruncatedSeries {
            coeffs,
            exact_degree,
            tail: self.tail.map(|t| t.scaled(c.norm())),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        let (ea, eb) = (self.support_end(), other.support_end());
        let mut coeffs = vec![Complex::new(0.0, 0.0); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(ea + 1) {
            if a.re == 0.0 && a.im == 0.0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take((n - i).min(eb) + 1) {
                coeffs[i + j] += a * b;
            }
        }
        let exact_degree = match (self.exact_degree, other.exact_degree) {
            (Some(a), Some(b)) if a + b <= n => Some(a + b),
            _ => None,
        };
        Ok(TruncatedSeries {
            coeffs,
            exact_degree,
            tail: None,
        })
    }

    /// `self ∘ inner`, evaluated by Horner's scheme in powers of `inner`.
    ///
    /// `inner` must vanish at the origin, which makes coefficient `k` of the
    /// result depend only on the first `k` coefficients of both inputs.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.same_order(inner)?;
        let c0 = inner.coeffs[0].norm();
        if c0 > COMPOSE_CONSTANT_TOL {
            return Err(BohrError::NonzeroConstant { modulus: c0 });
        }
        let n = self.order();
        let top = self.exact_degree.unwrap_or(n).min(n);
        let mut acc = Self::constant(self.coeffs[top], n);
        for k in (0..top).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += self.coeffs[k];
        }
        acc.exact_degree = match (self.exact_degree, inner.exact_degree) {
            (Some(dg), Some(dw)) if dg * dw <= n => Some(dg * dw),
            (Some(0), _) => Some(0),
            _ => None,
        };
        acc.tail = None;
        Ok(acc)
    }

    /// `self^k` by repeated multiplication; `self^0` is the constant 1.
    pub fn power(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self).expect("orders agree");
        }
        acc
    }

    /// Coefficient `n` becomes `(n + 1) c_{n+1}`; the last slot is zero.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![Complex::new(0.0, 0.0); n + 1];
        for k in 0..n {
            coeffs[k] = self.coeffs[k + 1] * (k as f64 + 1.0);
        }
        TruncatedSeries {
            coeffs,
            exact_degree: self.exact_degree.map(|d| d.saturating_sub(1)),
            tail: None,
        }
    }

    /// Antiderivative with zero constant term; coefficient `N` of the input
    /// falls off the end.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![Complex::new(0.0, 0.0); n + 1];
        for k in 1..=n {
            coeffs[k] = self.coeffs[k - 1] / k as f64;
        }
        let exact_degree = match self.exact_degree {
            Some(0) if self.coeffs[0] == Complex::new(0.0, 0.0) => Some(0),
            Some(d) if d < n => Some(d + 1),
            _ => None,
        };
        TruncatedSeries {
            coeffs,
            exact_degree,
            tail: None,
        }
    }

    /// Multiplies by `z^shift`, discarding coefficients past the order.
    pub fn shift_up(&self, shift: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![Complex::new(0.0, 0.0); n + 1];
        for k in shift..=n {
            coeffs[k] = self.coeffs[k - shift];
        }
        let exact_degree = match self.exact_degree {
            Some(d) if d + shift <= n => Some(d + shift),
            _ => None,
        };
        TruncatedSeries {
            coeffs,
            exact_degree,
            tail: None,
        }
    }

    /// Re-truncates (or zero-pads, when the series is a polynomial) to a new
    /// order. Padding a series without an exact degree would invent
    /// coefficients, so it is refused.
    pub fn with_order(&self, order: usize) -> Result<Self> {
        if order > self.order() && self.exact_degree.is_none() {
            return Err(BohrError::InsufficientOrder {
                base: self.order(),
                p: 1,
                order,
            });
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex::new(0.0, 0.0));
        let exact_degree = match self.exact_degree {
            Some(d) if d <= order => Some(d),
            _ => None,
        };
        Ok(TruncatedSeries {
            coeffs,
            exact_degree,
            tail: self.tail,
        })
    }

    /// `sum |c_k| r^k` over the stored coefficients, from `k = 1` when
    /// `skip_constant` is set.
    ///
    /// Exact when `exact_degree` is set, otherwise a lower bound on the
    /// majorant of the full series.
    pub fn majorant(&self, r: f64, skip_constant: bool) -> Result<f64> {
        check_radius(r)?;
        let start = usize::from(skip_constant);
        let mut rk = if skip_constant { r } else { 1.0 };
        let mut sum = 0.0;
        for c in &self.coeffs[start..] {
            sum += c.norm() * rk;
            rk *= r;
        }
        Ok(sum)
    }

    /// Closed-form majorant when a geometric tail tag is present.
    pub fn majorant_closed_form(&self, r: f64, skip_constant: bool) -> Option<f64> {
        self.tail.map(|t| t.majorant(r, skip_constant))
    }

    /// Horner evaluation of the truncated polynomial at `z`.
    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Bound on `|f(z) - eval(z)|` for `|z| = r`: zero for polynomials, the
    /// geometric remainder for tagged families, unknown otherwise.
    pub fn eval_allowance(&self, r: f64) -> Option<f64> {
        if self.exact_degree.is_some() {
            Some(0.0)
        } else {
            self.tail.map(|t| t.remainder(r, self.order()))
        }
    }

    /// True when every even-indexed coefficient is below `tol` in modulus.
    pub fn is_odd_within(&self, tol: f64) -> bool {
        self.coeffs.iter().step_by(2).all(|c| c.norm() < tol)
    }
}

pub(crate) fn check_radius(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(BohrError::RadiusOutOfRange {
            r,
            allowed: "[0, 1)",
        })
    }
}

/// Taylor series of the disk automorphism `(z + a0) / (1 + conj(a0) z)`.
///
/// Coefficient `k >= 1` is `(-1)^(k-1) (1 - |a0|^2) conj(a0)^(k-1)`.
pub fn mobius_series(a0: Complex, order: usize) -> Result<TruncatedSeries> {
    let a = a0.norm();
    crate::error::check_unit_modulus("|a0|", a)?;
    let mut coeffs = vec![Complex::new(0.0, 0.0); order + 1];
    coeffs[0] = a0;
    let q = -a0.conj();
    let mut term = Complex::new(1.0 - a * a, 0.0);
    for c in coeffs.iter_mut().skip(1) {
        *c = term;
        term *= q;
    }
    let mut s = TruncatedSeries::from_raw(coeffs);
    if a == 0.0 {
        s.exact_degree = Some(1.min(order));
    }
    Ok(s.with_tail(GeometricTail {
        head: a,
        lead: 1.0 - a * a,
        ratio: a,
    }))
}
