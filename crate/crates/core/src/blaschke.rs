//! Finite Blaschke products, the generator for bounded analytic witnesses.

use serde::Serialize;

use crate::error::{BohrError, Result};
use crate::series::{Complex, TruncatedSeries};

/// Largest admitted zero modulus.
pub const MAX_ZERO_MODULUS: f64 = 0.9;
/// Largest admitted number of zeros.
pub const MAX_ZEROS: usize = 4;
const ROTATION_TOL: f64 = 1e-15;

/// `rotation * prod_i (z - z_i) / (1 - conj(z_i) z)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlaschkeSpec {
    zeros: Vec<Complex>,
    rotation: Complex,
}

impl BlaschkeSpec {
    pub fn new(zeros: Vec<Complex>, rotation: Complex) -> Result<Self> {
        if zeros.len() > MAX_ZEROS {
            return Err(BohrError::TooManyZeros {
                count: zeros.len(),
                max: MAX_ZEROS,
            });
        }
        for (index, z) in zeros.iter().enumerate() {
            let modulus = z.norm();
            if !(modulus <= MAX_ZERO_MODULUS) {
                return Err(BohrError::ZeroTooLarge {
                    index,
                    modulus,
                    cap: MAX_ZERO_MODULUS,
                });
            }
        }
        let modulus = rotation.norm();
        if !((modulus - 1.0).abs() <= ROTATION_TOL) {
            return Err(BohrError::NotUnimodular { modulus });
        }
        Ok(BlaschkeSpec { zeros, rotation })
    }

    /// Rotation `e^{i theta}` with the given zeros.
    pub fn with_phase(zeros: Vec<Complex>, theta: f64) -> Result<Self> {
        Self::new(zeros, Complex::from_polar(1.0, theta))
    }

    pub fn zeros(&self) -> &[Complex] {
        &self.zeros
    }

    pub fn rotation(&self) -> Complex {
        self.rotation
    }

    /// Closed-form value at `z`, used as an independent check of the series.
    pub fn eval(&self, z: Complex) -> Complex {
        self.zeros.iter().fold(self.rotation, |acc, &c| {
            acc * (z - c) / (1.0 - c.conj() * z)
        })
    }
}

/// Series of a single factor `(z - c) / (1 - conj(c) z)`.
fn factor_series(c: Complex, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Complex::new(0.0, 0.0); order + 1];
    coeffs[0] = -c;
    let q = c.conj();
    let mut term = Complex::new(1.0 - c.norm_sqr(), 0.0);
    for x in coeffs.iter_mut().skip(1) {
        *x = term;
        term *= q;
    }
    TruncatedSeries::from_raw(coeffs)
}

/// Expands the product to `order`. With `vanish_at_origin` an extra factor
/// `z` is applied so the result is a Schwarz function.
pub fn blaschke_series(
    spec: &BlaschkeSpec,
    order: usize,
    vanish_at_origin: bool,
) -> TruncatedSeries {
    let mut acc = TruncatedSeries::constant(spec.rotation, order);
    for &c in &spec.zeros {
        if c == Complex::new(0.0, 0.0) {
            acc = acc.shift_up(1);
        } else {
            acc = acc.mul(&factor_series(c, order)).expect("orders agree");
        }
    }
    if vanish_at_origin {
        acc = acc.shift_up(1);
    }
    acc
}

/// Places coefficient `k` of `base` at index `p * k`, i.e. `base(z^p)`.
pub fn p_symmetric_lift(base: &TruncatedSeries, p: usize, order: usize) -> Result<TruncatedSeries> {
    if p == 0 {
        return Err(BohrError::Domain {
            name: "p",
            value: 0.0,
            allowed: "p >= 1",
        });
    }
    let nb = base.order();
    if nb * p > order {
        return Err(BohrError::OrderOverflow { base: nb, p, order });
    }
    if base.exact_degree().is_none() && (nb + 1) * p <= order {
        return Err(BohrError::InsufficientOrder { base: nb, p, order });
    }
    let mut coeffs = vec![Complex::new(0.0, 0.0); order + 1];
    for (k, c) in base.coeffs().iter().enumerate() {
        coeffs[k * p] = *c;
    }
    match base.exact_degree() {
        Some(d) => {
            let lifted: Vec<Complex> = coeffs[..=d * p].to_vec();
            TruncatedSeries::new(&lifted, order)
        }
        None => Ok(TruncatedSeries::from_raw(coeffs)),
    }
}
