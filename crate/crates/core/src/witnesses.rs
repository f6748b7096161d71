//! Random and extremal test functions for every hypothesis class:
//! Schwarz functions, bounded analytic functions, quasi-subordination
//! triples, odd and `p`-symmetric pairs, and harmonic pairs with bounded
//! dilatation.
//!
//! Random draws come from a ChaCha8 stream keyed by `(seed, stream)`. All
//! parameters are drawn before any expansion, so the same stream yields the
//! same function at any truncation order.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blaschke::{blaschke_series, BlaschkeSpec, MAX_ZEROS, MAX_ZERO_MODULUS};
use crate::error::{check_dilatation, check_unit_modulus, BohrError, Result};
use crate::functionals::HarmonicPair;
use crate::series::{mobius_series, Complex, GeometricTail, TruncatedSeries};

pub use crate::blaschke::p_symmetric_lift;

/// Coefficient-wise tolerance for the quasi-subordination identity.
pub const CONVOLUTION_TOL: f64 = 1e-12;

pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_phase<R: Rng>(rng: &mut R) -> f64 {
    rng.random_range(0.0..TAU)
}

/// Zero count uniform on `min_zeros..=4`, moduli uniform on `[0, 0.9]`,
/// phases and rotation uniform.
pub fn draw_blaschke_spec<R: Rng>(rng: &mut R, min_zeros: usize) -> BlaschkeSpec {
    let count = rng.random_range(min_zeros..=MAX_ZEROS);
    let zeros = (0..count)
        .map(|_| {
            let m = rng.random_range(0.0..=MAX_ZERO_MODULUS);
            Complex::from_polar(m, random_phase(rng))
        })
        .collect();
    BlaschkeSpec::with_phase(zeros, random_phase(rng)).expect("drawn within bounds")
}

/// `z B(z)` or, when `odd`, `z B(z^2)`.
pub fn schwarz_from_spec(spec: &BlaschkeSpec, odd: bool, order: usize) -> TruncatedSeries {
    if odd {
        let base = blaschke_series(spec, order / 2, false);
        p_symmetric_lift(&base, 2, order)
            .expect("half-order base fits")
            .shift_up(1)
    } else {
        blaschke_series(spec, order, true)
    }
}

pub fn random_schwarz_with<R: Rng>(rng: &mut R, odd: bool, order: usize) -> TruncatedSeries {
    let spec = draw_blaschke_spec(rng, 0);
    schwarz_from_spec(&spec, odd, order)
}

/// Random Schwarz function `rotation * z * B(z)` (or `z * B(z^2)` when odd).
pub fn random_schwarz(seed: u64, odd: bool, order: usize) -> TruncatedSeries {
    random_schwarz_with(&mut seeded_rng(seed, 0), odd, order)
}

/// Random coefficients `c_0 ..= c_d` with `d` uniform on `0..=max_degree`
/// and moduli uniform on `[0, max_modulus]`.
pub fn draw_polynomial<R: Rng>(rng: &mut R, max_degree: usize, max_modulus: f64) -> Vec<Complex> {
    let degree = rng.random_range(0..=max_degree);
    (0..=degree)
        .map(|_| {
            let m = rng.random_range(0.0..=max_modulus);
            Complex::from_polar(m, random_phase(rng))
        })
        .collect()
}

/// `f = phi * (g ∘ omega)`.
#[derive(Clone, Debug)]
pub struct QuasiTriple {
    pub g: TruncatedSeries,
    pub phi: TruncatedSeries,
    pub omega: TruncatedSeries,
    pub f: TruncatedSeries,
}

/// `a_k = sum_{m + j = k} phi_m B_j` with `B_j = sum_{n <= j} b_n alpha_j^(n)`,
/// where `alpha_j^(n)` is coefficient `j` of `omega^n`. This is the
/// power-expansion route, independent of the Horner composition.
pub fn quasi_convolution(
    g: &TruncatedSeries,
    phi: &TruncatedSeries,
    omega: &TruncatedSeries,
) -> Result<Vec<Complex>> {
    let n = g.order();
    for s in [phi, omega] {
        if s.order() != n {
            return Err(BohrError::OrderMismatch {
                left: n,
                right: s.order(),
            });
        }
    }
    let top = g.exact_degree().unwrap_or(n).min(n);
    let mut b = vec![Complex::new(0.0, 0.0); n + 1];
    let mut omega_pow = TruncatedSeries::one(n);
    for deg in 0..=top {
        let bn = g.coeff(deg);
        for (j, alpha) in omega_pow.coeffs().iter().enumerate() {
            b[j] += bn * alpha;
        }
        if deg < top {
            omega_pow = omega_pow.mul(omega)?;
        }
    }
    let mut a = vec![Complex::new(0.0, 0.0); n + 1];
    for (k, ak) in a.iter_mut().enumerate() {
        for m in 0..=k {
            *ak += phi.coeff(m) * b[k - m];
        }
    }
    Ok(a)
}

/// Composes and multiplies, then checks the result against
/// [`quasi_convolution`].
pub fn build_quasi_triple(
    g: TruncatedSeries,
    phi: TruncatedSeries,
    omega: TruncatedSeries,
) -> Result<QuasiTriple> {
    if g.exact_degree().is_none() {
        return Err(BohrError::NotPolynomial);
    }
    let f = phi.mul(&g.compose(&omega)?)?;
    let direct = quasi_convolution(&g, &phi, &omega)?;
    for (index, (x, y)) in f.coeffs().iter().zip(&direct).enumerate() {
        let deviation = (x - y).norm();
        if !(deviation <= CONVOLUTION_TOL) {
            return Err(BohrError::ConvolutionMismatch { index, deviation });
        }
    }
    Ok(QuasiTriple { g, phi, omega, f })
}

/// `(z + a0) / (1 + conj(a0) z)`, with closed-form tails.
pub fn extremal_automorphism(a0: Complex, order: usize) -> Result<TruncatedSeries> {
    mobius_series(a0, order)
}

/// `(a0 - z) / (1 - conj(a0) z) = a0 - (1 - |a0|^2) sum conj(a0)^(k-1) z^k`.
pub fn extremal_pointwise(a0: Complex, order: usize) -> Result<TruncatedSeries> {
    let a = a0.norm();
    check_unit_modulus("|a0|", a)?;
    let mut coeffs = vec![Complex::new(0.0, 0.0); order + 1];
    coeffs[0] = a0;
    let q = a0.conj();
    let mut term = Complex::new(-(1.0 - a * a), 0.0);
    for c in coeffs.iter_mut().skip(1) {
        *c = term;
        term *= q;
    }
    let series = if a == 0.0 {
        TruncatedSeries::new(&coeffs[..=1.min(order)], order)?
    } else {
        TruncatedSeries::from_raw(coeffs)
    };
    Ok(series.with_tail(GeometricTail {
        head: a,
        lead: 1.0 - a * a,
        ratio: a,
    }))
}

/// Co-analytic part `g = k * integral(omega_tilde * h')`, so that
/// `g' = k omega_tilde h'` and `|g'| <= k |h'|` whenever `|omega_tilde| <= 1`.
pub fn harmonic_witness(
    h: &TruncatedSeries,
    k: f64,
    omega_tilde: &TruncatedSeries,
) -> Result<HarmonicPair> {
    check_dilatation(k)?;
    let g = omega_tilde
        .mul(&h.derivative())?
        .integrate()
        .scale(Complex::new(k, 0.0));
    HarmonicPair::new(h.clone(), g, k)
}

/// `h = (z + a0) / (1 + conj(a0) z)` with co-analytic part
/// `g = lambda (h - a0)`; the dilatation is the constant `lambda`.
pub fn extremal_harmonic(a0: Complex, lambda: f64, order: usize) -> Result<HarmonicPair> {
    check_dilatation(lambda)?;
    let h = mobius_series(a0, order)?;
    let a = a0.norm();
    let mut tail = h.coeffs().to_vec();
    tail[0] = Complex::new(0.0, 0.0);
    let tail = TruncatedSeries::from_raw(tail)
        .scale(Complex::new(lambda, 0.0))
        .with_tail(GeometricTail {
            head: 0.0,
            lead: lambda * (1.0 - a * a),
            ratio: a,
        });
    HarmonicPair::new(h, tail, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functionals::harmonic_pointwise_lhs;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn schwarz_without_zeros_is_rotated_identity() {
        let spec = BlaschkeSpec::with_phase(vec![], 0.4).unwrap();
        let w = schwarz_from_spec(&spec, false, 8);
        assert_eq!(w.coeff(0), c(0.0));
        assert!((w.coeff(1) - Complex::from_polar(1.0, 0.4)).norm() < 1e-16);
        for k in 2..=8 {
            assert_eq!(w.coeff(k), c(0.0));
        }
    }

    #[test]
    fn random_schwarz_is_bounded_and_vanishes() {
        for seed in 0..40 {
            for odd in [false, true] {
                let w = random_schwarz(seed, odd, 64);
                assert_eq!(w.coeff(0), c(0.0));
                for i in 0..360 {
                    let z = Complex::from_polar(0.95, TAU * i as f64 / 360.0);
                    assert!(w.eval(z).norm() <= 1.0 + 1e-9, "seed {seed}");
                }
                if odd {
                    assert!(w.is_odd_within(1e-14));
                }
            }
        }
    }

    #[test]
    fn odd_schwarz_matches_closed_form() {
        let mut rng = seeded_rng(3, 9);
        let spec = draw_blaschke_spec(&mut rng, 2);
        let w = schwarz_from_spec(&spec, true, 64);
        let z = Complex::from_polar(0.4, 1.3);
        assert!((w.eval(z) - z * spec.eval(z * z)).norm() < 1e-12);
        assert!((w.eval(-z) + w.eval(z)).norm() < 1e-15);
    }

    #[test]
    fn draws_do_not_depend_on_order() {
        let a = random_schwarz(11, false, 32);
        let b = random_schwarz(11, false, 64);
        for k in 0..=32 {
            assert!((a.coeff(k) - b.coeff(k)).norm() < 1e-15);
        }
    }

    #[test]
    fn quasi_triple_degenerate_cases() {
        let n = 16;
        let g = TruncatedSeries::new(&[c(0.5), Complex::new(1.0, -1.0), c(2.0)], n).unwrap();
        let t = build_quasi_triple(
            g.clone(),
            TruncatedSeries::one(n),
            TruncatedSeries::identity(n),
        )
        .unwrap();
        assert_eq!(t.f.coeffs(), g.coeffs());

        let phi = mobius_series(c(0.3), n).unwrap();
        let t = build_quasi_triple(g.clone(), phi.clone(), TruncatedSeries::identity(n)).unwrap();
        let expected = phi.mul(&g).unwrap();
        for k in 0..=n {
            assert!((t.f.coeff(k) - expected.coeff(k)).norm() < 1e-15);
        }
    }

    #[test]
    fn quasi_triple_matches_double_loop() {
        let n = 24;
        let g = TruncatedSeries::identity(n);
        let phi = blaschke_series(&BlaschkeSpec::new(vec![c(0.3)], c(1.0)).unwrap(), n, false);
        let omega = blaschke_series(&BlaschkeSpec::new(vec![c(0.5)], c(1.0)).unwrap(), n, true);
        let t = build_quasi_triple(g, phi.clone(), omega.clone()).unwrap();
        // g = z, so f = phi * omega.
        for k in 0..=n {
            let mut s = c(0.0);
            for m in 0..=k {
                s += phi.coeff(m) * omega.coeff(k - m);
            }
            assert!((t.f.coeff(k) - s).norm() < 1e-12);
        }
    }

    #[test]
    fn quasi_triple_errors() {
        let n = 8;
        let g = mobius_series(c(0.2), n).unwrap();
        assert_eq!(
            build_quasi_triple(g, TruncatedSeries::one(n), TruncatedSeries::identity(n))
                .unwrap_err(),
            BohrError::NotPolynomial
        );
        let g = TruncatedSeries::identity(n);
        let shifted = TruncatedSeries::from_real(&[0.1, 1.0], n).unwrap();
        assert!(matches!(
            build_quasi_triple(g, TruncatedSeries::one(n), shifted).unwrap_err(),
            BohrError::NonzeroConstant { .. }
        ));
    }

    #[test]
    fn extremal_automorphism_examples() {
        assert_eq!(
            extremal_automorphism(c(0.0), 8).unwrap().coeffs(),
            TruncatedSeries::identity(8).coeffs()
        );
        let e = extremal_automorphism(c(0.5), 8).unwrap();
        assert_eq!(e.coeffs(), mobius_series(c(0.5), 8).unwrap().coeffs());
        assert!(e.geometric_tail().is_some());
        assert!(extremal_automorphism(c(1.0), 8).is_err());
    }

    #[test]
    fn extremal_pointwise_examples() {
        let e = extremal_pointwise(c(0.0), 8).unwrap();
        assert_eq!(e.coeff(1), c(-1.0));
        assert_eq!(e.exact_degree(), Some(1));
        let e = extremal_pointwise(c(0.5), 8).unwrap();
        // Long division of (0.5 - z) by (1 - 0.5 z).
        let mut rem = [c(0.0); 10];
        rem[0] = c(0.5);
        rem[1] = c(-1.0);
        for k in 0..=8 {
            let q = rem[k];
            rem[k + 1] += q * 0.5;
            assert!((e.coeff(k) - q).norm() < 1e-15);
        }
        for (k, v) in [0.5, -0.75, -0.375, -0.1875].iter().enumerate() {
            assert!((e.coeff(k) - c(*v)).norm() < 1e-16);
        }
        assert!(extremal_pointwise(c(-1.0), 8).is_err());
    }

    #[test]
    fn harmonic_witness_examples() {
        let n = 32;
        let h = mobius_series(c(0.4), n).unwrap();
        let p = harmonic_witness(&h, 0.0, &TruncatedSeries::one(n)).unwrap();
        assert!(p.co_analytic().coeffs().iter().all(|x| x.norm() == 0.0));

        let k = 0.7;
        let p = harmonic_witness(&h, k, &TruncatedSeries::one(n)).unwrap();
        for j in 1..n {
            assert!((p.co_analytic().coeff(j) - h.coeff(j) * k).norm() < 1e-15);
        }

        let mut rng = seeded_rng(5, 1);
        let spec = draw_blaschke_spec(&mut rng, 1);
        let wt = blaschke_series(&spec, 64, false);
        let h = blaschke_series(&draw_blaschke_spec(&mut rng, 1), 64, false);
        let p = harmonic_witness(&h, k, &wt).unwrap();
        let r = 1.0 / 3.0;
        let lhs = p.co_analytic().derivative().majorant(r, false).unwrap();
        let rhs = k * h.derivative().majorant(r, false).unwrap();
        assert!(lhs <= rhs + 1e-12);
        let lhs = p.co_analytic().majorant(r, true).unwrap();
        let rhs = k * h.majorant(r, true).unwrap();
        assert!(lhs <= rhs + 1e-12);
        assert!(harmonic_witness(&h, 1.5, &wt).is_err());
    }

    #[test]
    fn extremal_harmonic_examples() {
        let p = extremal_harmonic(c(0.3), 0.0, 16).unwrap();
        assert_eq!(
            p.analytic().coeffs(),
            extremal_automorphism(c(0.3), 16).unwrap().coeffs()
        );
        assert!(p.co_analytic().coeffs().iter().all(|x| x.norm() == 0.0));

        let a: f64 = 0.35;
        let p = extremal_harmonic(c(a), 1.0, 64).unwrap();
        let r = 0.3;
        let v = harmonic_pointwise_lhs(&p, c(r)).unwrap();
        let closed = (r + a) / (1.0 + a * r) + 2.0 * r * (1.0 - a * a) / (1.0 - r * a);
        assert!((v - closed).abs() < 1e-13);
        assert!(extremal_harmonic(c(0.3), 1.2, 16).is_err());
    }
}
