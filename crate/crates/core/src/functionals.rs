//! Left-hand sides of the Bohr-type inequalities and their auxiliary bounds.
//!
//! Majorant tails use the closed form of a [`GeometricTail`] whenever the
//! series carries one, so equality cases evaluate without truncation error.
//!
//! [`GeometricTail`]: crate::series::GeometricTail

use serde::Serialize;

use crate::error::{check_dilatation, check_domain, check_unit_modulus, BohrError, Result};
use crate::series::{check_radius, Complex, TruncatedSeries};

/// The classical radius, above which the `r <= 1/3` statements make no claim.
pub const ONE_THIRD: f64 = 1.0 / 3.0;

/// A functional value together with a flag marking evaluations above the
/// radius where the corresponding inequality is asserted.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Evaluation {
    pub value: f64,
    pub informational: bool,
}

/// Harmonic mapping `f = h + conj(g)` with `|g'| <= k |h'|`.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicPair {
    h: TruncatedSeries,
    g: TruncatedSeries,
    k: f64,
}

impl HarmonicPair {
    pub fn new(h: TruncatedSeries, g: TruncatedSeries, k: f64) -> Result<Self> {
        check_dilatation(k)?;
        if h.order() != g.order() {
            return Err(BohrError::OrderMismatch {
                left: h.order(),
                right: g.order(),
            });
        }
        if g.coeff(0) != Complex::new(0.0, 0.0) {
            return Err(BohrError::CoAnalyticConstant);
        }
        Ok(HarmonicPair { h, g, k })
    }

    pub fn analytic(&self) -> &TruncatedSeries {
        &self.h
    }

    pub fn co_analytic(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn dilatation_bound(&self) -> f64 {
        self.k
    }

    /// `K = (1 + k) / (1 - k)`, infinite at `k = 1`.
    pub fn quasiconformal_constant(&self) -> f64 {
        quasiconformal_constant(self.k)
    }
}

/// `k = (K - 1) / (K + 1)` for `K >= 1`.
pub fn dilatation_from_constant(big_k: f64) -> Result<f64> {
    check_domain("K", big_k, big_k >= 1.0, "[1, inf)")?;
    Ok((big_k - 1.0) / (big_k + 1.0))
}

pub fn quasiconformal_constant(k: f64) -> f64 {
    (1.0 + k) / (1.0 - k)
}

/// `sum_{n >= 1} |c_n| r^n`, closed form when available.
pub fn tail_majorant(f: &TruncatedSeries, r: f64) -> Result<f64> {
    check_radius(r)?;
    match f.majorant_closed_form(r, true) {
        Some(v) => Ok(v),
        None => f.majorant(r, true),
    }
}

/// `|c_0| + sum_{n >= 1} |c_n| r^n`.
pub fn bohr_sum(f: &TruncatedSeries, r: f64) -> Result<f64> {
    Ok(f.coeff(0).norm() + tail_majorant(f, r)?)
}

/// `(1 - (1 + a - a^2) r) / (1 - a r) + sum_{n >= 1} |a_n| r^n`.
pub fn fixed_center_lhs(f: &TruncatedSeries, a0_mod: f64, r: f64) -> Result<Evaluation> {
    check_unit_modulus("|a0|", a0_mod)?;
    let tail = tail_majorant(f, r)?;
    let a = a0_mod;
    let head = (1.0 - (1.0 + a - a * a) * r) / (1.0 - a * r);
    Ok(Evaluation {
        value: head + tail,
        informational: r > ONE_THIRD,
    })
}

/// `(1 - r (a + (k + 1)(1 - a^2))) / (1 - r a) + sum |a_n| r^n + sum |b_n| r^n`.
pub fn harmonic_fixed_center_lhs(p: &HarmonicPair, a0_mod: f64, r: f64) -> Result<Evaluation> {
    check_unit_modulus("|a0|", a0_mod)?;
    let a = a0_mod;
    let k = p.k;
    let head = (1.0 - r * (a + (k + 1.0) * (1.0 - a * a))) / (1.0 - r * a);
    let value = head + tail_majorant(&p.h, r)? + tail_majorant(&p.g, r)?;
    Ok(Evaluation {
        value,
        informational: r > ONE_THIRD,
    })
}

fn check_point(z: Complex) -> Result<f64> {
    let r = z.norm();
    if r < 1.0 {
        Ok(r)
    } else {
        Err(BohrError::PointOutsideDisk { modulus: r })
    }
}

/// `|f(z)| + sum_{k >= 1} |a_k| r^k` with `r = |z|`.
pub fn pointwise_lhs(f: &TruncatedSeries, z: Complex) -> Result<f64> {
    let r = check_point(z)?;
    Ok(f.eval(z).norm() + tail_majorant(f, r)?)
}

/// `|h(z)| + sum |a_n| r^n + sum |b_n| r^n` with `r = |z|`.
pub fn harmonic_pointwise_lhs(p: &HarmonicPair, z: Complex) -> Result<f64> {
    let r = check_point(z)?;
    Ok(p.h.eval(z).norm() + tail_majorant(&p.h, r)? + tail_majorant(&p.g, r)?)
}

/// `(1 + k) r (1 - a^2) / (1 - r a)`, the bound on both tails for `r <= 1/3`.
pub fn tail_bound(a: f64, k: f64, r: f64) -> Result<f64> {
    check_unit_modulus("a", a)?;
    check_dilatation(k)?;
    if !(0.0..=ONE_THIRD).contains(&r) {
        return Err(BohrError::RadiusOutOfRange {
            r,
            allowed: "[0, 1/3]",
        });
    }
    Ok((1.0 + k) * r * (1.0 - a * a) / (1.0 - r * a))
}

/// Schwarz-Pick bound `(r + a) / (1 + a r)` on `|f(z)|` for `|z| = r`.
pub fn schwarz_pick_bound(a: f64, r: f64) -> Result<f64> {
    check_unit_modulus("a", a)?;
    check_radius(r)?;
    Ok((r + a) / (1.0 + a * r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blaschke::{blaschke_series, BlaschkeSpec};
    use crate::series::mobius_series;
    use crate::witnesses::{extremal_harmonic, extremal_pointwise};

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn bohr_sum_examples() {
        let z = TruncatedSeries::identity(64);
        assert!((bohr_sum(&z, ONE_THIRD).unwrap() - ONE_THIRD).abs() < 1e-16);
        let m = mobius_series(c(0.5), 64).unwrap();
        assert!((bohr_sum(&m, ONE_THIRD).unwrap() - 0.8).abs() < 1e-15);
        for i in 0..100 {
            let a = i as f64 / 100.0;
            let m = mobius_series(c(a), 64).unwrap();
            assert!(bohr_sum(&m, ONE_THIRD).unwrap() <= 1.0);
        }
        assert!(bohr_sum(&z, 1.0).is_err());
    }

    #[test]
    fn fixed_center_examples() {
        let m = mobius_series(c(0.5), 64).unwrap();
        let e = fixed_center_lhs(&m, 0.5, ONE_THIRD).unwrap();
        assert!((e.value - 1.0).abs() < 1e-12);
        assert!(!e.informational);

        for a in [0.0, 0.1, 0.45, 0.8, 0.95] {
            for r in [0.0, 0.05, 0.2, ONE_THIRD] {
                let m = mobius_series(c(a), 64).unwrap();
                let v = fixed_center_lhs(&m, a, r).unwrap().value;
                assert!((v - 1.0).abs() < 1e-12, "a={a} r={r} v={v}");
            }
        }

        let zero = TruncatedSeries::zero(64);
        let v = fixed_center_lhs(&zero, 0.0, ONE_THIRD).unwrap().value;
        assert!((v - 2.0 / 3.0).abs() < 1e-15);

        assert!(fixed_center_lhs(&m, 0.5, 0.4).unwrap().informational);
        assert!(fixed_center_lhs(&m, 1.0, 0.2).is_err());
    }

    #[test]
    fn harmonic_fixed_center_examples() {
        for a in [0.0, 0.3, 0.7] {
            for k in [0.0, 0.5, 1.0] {
                let p = extremal_harmonic(c(a), k, 64).unwrap();
                let v = harmonic_fixed_center_lhs(&p, a, 0.25).unwrap().value;
                assert!((v - 1.0).abs() < 1e-12);
            }
        }
        // k = 0 with g = 0 reduces to the fixed-center functional.
        let h = mobius_series(Complex::new(0.2, 0.3), 64).unwrap();
        let a = h.coeff(0).norm();
        let p = HarmonicPair::new(h.clone(), TruncatedSeries::zero(64), 0.0).unwrap();
        for r in [0.1, 0.2, ONE_THIRD] {
            assert_eq!(
                harmonic_fixed_center_lhs(&p, a, r).unwrap().value,
                fixed_center_lhs(&h, a, r).unwrap().value
            );
        }
        let p =
            HarmonicPair::new(TruncatedSeries::zero(64), TruncatedSeries::zero(64), 1.0).unwrap();
        let v = harmonic_fixed_center_lhs(&p, 0.0, ONE_THIRD).unwrap().value;
        assert!((v - ONE_THIRD).abs() < 1e-15);
    }

    #[test]
    fn pointwise_examples() {
        let a: f64 = 0.6;
        let f = extremal_pointwise(c(a), 64).unwrap();
        for r in [0.1, 0.2, 0.3] {
            let v = pointwise_lhs(&f, c(-r)).unwrap();
            let closed = (r + a) / (1.0 + a * r) + r * (1.0 - a * a) / (1.0 - a * r);
            assert!((v - closed).abs() < 1e-13);
            let eq13 = 2.0 * (1.0 - a * a) * r / (1.0 - a * a * r * r) + a;
            assert!((v - eq13).abs() < 1e-13);
        }
        let z = TruncatedSeries::identity(64);
        assert!((pointwise_lhs(&z, c(0.2)).unwrap() - 0.4).abs() < 1e-16);
        assert!(pointwise_lhs(&z, c(1.0)).is_err());
    }

    #[test]
    fn harmonic_pointwise_examples() {
        let a = 0.4;
        let p = extremal_harmonic(c(a), 1.0, 64).unwrap();
        for r in [0.1, 0.3] {
            let v = harmonic_pointwise_lhs(&p, c(r)).unwrap();
            let closed = (r + a) / (1.0 + a * r) + 2.0 * r * (1.0 - a * a) / (1.0 - r * a);
            assert!((v - closed).abs() < 1e-13);
        }
        let h = extremal_pointwise(Complex::new(0.3, 0.2), 64).unwrap();
        let p = HarmonicPair::new(h.clone(), TruncatedSeries::zero(64), 0.0).unwrap();
        let z = Complex::new(-0.1, 0.2);
        assert_eq!(
            harmonic_pointwise_lhs(&p, z).unwrap(),
            pointwise_lhs(&h, z).unwrap()
        );
        let p =
            HarmonicPair::new(TruncatedSeries::identity(8), TruncatedSeries::zero(8), 0.0).unwrap();
        assert!((harmonic_pointwise_lhs(&p, c(0.1)).unwrap() - 0.2).abs() < 1e-16);
    }

    #[test]
    fn tail_bound_examples() {
        assert!((tail_bound(0.0, 1.0, 0.3).unwrap() - 0.6).abs() < 1e-15);
        assert!((tail_bound(0.5, 0.0, ONE_THIRD).unwrap() - 0.3).abs() < 1e-15);
        for a in [0.0, 0.2, 0.5, 0.9] {
            for r in [0.1, 0.2, ONE_THIRD] {
                let m = mobius_series(c(a), 64).unwrap();
                let tail = m.majorant_closed_form(r, true).unwrap();
                assert_eq!(tail_bound(a, 0.0, r).unwrap(), tail);
            }
        }
        assert!(tail_bound(0.5, 0.5, 0.34).is_err());
        assert!(tail_bound(0.5, 1.5, 0.3).is_err());
    }

    #[test]
    fn schwarz_pick_examples() {
        assert!((schwarz_pick_bound(0.0, 0.4).unwrap() - 0.4).abs() < 1e-16);
        assert!((schwarz_pick_bound(0.5, ONE_THIRD).unwrap() - 5.0 / 7.0).abs() < 1e-15);

        // Witness f = M_c(B(z)) with B a Schwarz function, |f(0)| = |c|.
        let spec = BlaschkeSpec::with_phase(vec![Complex::from_polar(0.6, 1.0)], 0.3).unwrap();
        let w = blaschke_series(&spec, 64, true);
        let cc = Complex::from_polar(0.55, -0.7);
        let f = mobius_series(cc, 64).unwrap().compose(&w).unwrap();
        let r = 0.4;
        let bound = schwarz_pick_bound(0.55, r).unwrap();
        for i in 0..72 {
            let z = Complex::from_polar(r, i as f64 * std::f64::consts::TAU / 72.0);
            assert!(f.eval(z).norm() <= bound + 1e-12);
        }
    }

    #[test]
    fn dilatation_constant_round_trip() {
        assert_eq!(dilatation_from_constant(1.0).unwrap(), 0.0);
        assert!((dilatation_from_constant(3.0).unwrap() - 0.5).abs() < 1e-16);
        assert!((quasiconformal_constant(0.5) - 3.0).abs() < 1e-15);
        assert!(dilatation_from_constant(0.5).is_err());
    }

    #[test]
    fn harmonic_pair_validation() {
        let h = TruncatedSeries::identity(8);
        let g = TruncatedSeries::one(8);
        assert_eq!(
            HarmonicPair::new(h.clone(), g, 0.5).unwrap_err(),
            BohrError::CoAnalyticConstant
        );
        assert!(HarmonicPair::new(h.clone(), TruncatedSeries::zero(8), 1.2).is_err());
        assert!(HarmonicPair::new(h, TruncatedSeries::zero(9), 0.2).is_err());
    }
}
