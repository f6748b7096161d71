use std::f64::consts::TAU;

use bohrlab::blaschke::{blaschke_series, p_symmetric_lift, BlaschkeSpec};
use bohrlab::functionals::{bohr_sum, pointwise_lhs, tail_bound, tail_majorant, ONE_THIRD};
use bohrlab::radii::{
    harmonic_radius, harmonic_threshold, pointwise_radius, pointwise_threshold, quadratic_residual,
    Quadratic,
};
use bohrlab::witnesses::{
    build_quasi_triple, extremal_pointwise, harmonic_witness, quasi_convolution,
};
use bohrlab::{mobius_series, Complex, TruncatedSeries};
use proptest::prelude::*;

const N: usize = 32;

fn complex_vec(max_len: usize, modulus: f64) -> impl Strategy<Value = Vec<Complex>> {
    prop::collection::vec((0.0..=modulus, 0.0..TAU), 1..=max_len).prop_map(|v| {
        v.into_iter()
            .map(|(m, t)| Complex::from_polar(m, t))
            .collect()
    })
}

fn blaschke_spec() -> impl Strategy<Value = BlaschkeSpec> {
    (
        prop::collection::vec((0.0..=0.9f64, 0.0..TAU), 0..=4),
        0.0..TAU,
    )
        .prop_map(|(zeros, phase)| {
            let zeros = zeros
                .into_iter()
                .map(|(m, t)| Complex::from_polar(m, t))
                .collect();
            BlaschkeSpec::with_phase(zeros, phase).unwrap()
        })
}

fn naive_mul(a: &[Complex], b: &[Complex]) -> Vec<Complex> {
    let n = a.len();
    let mut out = vec![Complex::new(0.0, 0.0); n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

/// `phi * sum_n g_n omega^n` with powers built by repeated naive products.
fn naive_quasi(g: &[Complex], phi: &[Complex], omega: &[Complex]) -> Vec<Complex> {
    let n = phi.len();
    let mut power = vec![Complex::new(0.0, 0.0); n];
    power[0] = Complex::new(1.0, 0.0);
    let mut sum = vec![Complex::new(0.0, 0.0); n];
    for &gn in g {
        for (s, p) in sum.iter_mut().zip(&power) {
            *s += gn * p;
        }
        power = naive_mul(&power, omega);
    }
    naive_mul(phi, &sum)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn convolution_identity(g in complex_vec(9, 2.0), phi in blaschke_spec(), omega in blaschke_spec()) {
        let g = TruncatedSeries::new(&g, N).unwrap();
        let phi = blaschke_series(&phi, N, false);
        let omega = blaschke_series(&omega, N, true);
        let t = build_quasi_triple(g.clone(), phi.clone(), omega.clone()).unwrap();
        let oracle = naive_quasi(&g.coeffs()[..=g.exact_degree().unwrap()], phi.coeffs(), omega.coeffs());
        let route = quasi_convolution(&g, &phi, &omega).unwrap();
        for k in 0..=N {
            prop_assert!((t.f.coeff(k) - oracle[k]).norm() <= 1e-12);
            prop_assert!((route[k] - oracle[k]).norm() <= 1e-12);
        }
    }

    #[test]
    fn power_vanishes_below_exponent(w in complex_vec(12, 1.0), k in 0usize..8) {
        let mut w = w;
        w[0] = Complex::new(0.0, 0.0);
        let s = TruncatedSeries::new(&w, N).unwrap().power(k);
        for i in 0..k.min(N + 1) {
            prop_assert_eq!(s.coeff(i), Complex::new(0.0, 0.0));
        }
    }

    #[test]
    fn odd_composition_stays_odd(p in complex_vec(5, 2.0), spec in blaschke_spec()) {
        let base = TruncatedSeries::new(&p, N / 2).unwrap();
        let g = p_symmetric_lift(&base, 2, N).unwrap().shift_up(1);
        let omega = p_symmetric_lift(&blaschke_series(&spec, N / 2, false), 2, N).unwrap().shift_up(1);
        let f = g.compose(&omega).unwrap();
        for k in (0..=N).step_by(2) {
            prop_assert!(f.coeff(k).norm() < 1e-12);
        }
    }

    #[test]
    fn majorant_monotone_in_r(c in complex_vec(20, 3.0), r1 in 0.0..0.99f64, r2 in 0.0..0.99f64) {
        let s = TruncatedSeries::new(&c, N).unwrap();
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        prop_assert!(s.majorant(lo, false).unwrap() <= s.majorant(hi, false).unwrap());
        prop_assert!(s.majorant(lo, true).unwrap() <= s.majorant(hi, true).unwrap());
        prop_assert_eq!(s.majorant(0.0, false).unwrap(), c[0].norm());
        prop_assert_eq!(s.majorant(0.0, true).unwrap(), 0.0);
    }

    // Multiplying and dividing by k rounds twice, so equality holds to within
    // an ulp per part rather than bit for bit.
    #[test]
    fn integrate_inverts_derivative(c in complex_vec(N + 1, 3.0)) {
        let mut c = c;
        c[0] = Complex::new(0.0, 0.0);
        let s = TruncatedSeries::new(&c, N).unwrap();
        let there_and_back = s.derivative().integrate();
        let back_and_there = s.integrate().derivative();
        for k in 0..=N {
            let x = s.coeff(k);
            let ulps = 2.0 * f64::EPSILON * x.norm();
            prop_assert!((there_and_back.coeff(k) - x).norm() <= ulps);
            if k < N {
                prop_assert!((back_and_there.coeff(k) - x).norm() <= ulps);
            }
        }
    }

    #[test]
    fn lift_commutes_with_substitution(c in complex_vec(9, 2.0), p in 1usize..4, r in 0.0..0.95f64) {
        let base = TruncatedSeries::new(&c, 8).unwrap();
        let lifted = p_symmetric_lift(&base, p, 8 * p).unwrap();
        let lhs = lifted.majorant(r, false).unwrap();
        let rhs = base.majorant(r.powi(p as i32), false).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-13 * (1.0 + rhs));
    }

    #[test]
    fn quasi_subordinate_majorant_dominated(
        g in complex_vec(9, 2.0),
        phi in blaschke_spec(),
        omega in blaschke_spec(),
        frac in 0.0..=1.0f64,
    ) {
        let g = TruncatedSeries::new(&g, N).unwrap();
        let t = build_quasi_triple(g, blaschke_series(&phi, N, false), blaschke_series(&omega, N, true)).unwrap();
        let r = ONE_THIRD * frac;
        prop_assert!(t.f.majorant(r, false).unwrap() <= t.g.majorant(r, false).unwrap() + 1e-12);
    }

    #[test]
    fn bounded_witness_within_classical_radius(spec in blaschke_spec(), s in 0.0..=1.0f64) {
        let f = blaschke_series(&spec, 64, false).scale(Complex::new(s, 0.0));
        prop_assert!(bohr_sum(&f, ONE_THIRD).unwrap() <= 1.0 + 1e-9);
    }

    #[test]
    fn harmonic_witness_tail_dominated(h in blaschke_spec(), w in blaschke_spec(), k in 0.0..=1.0f64, s in 0.0..=1.0f64) {
        let h = blaschke_series(&h, 64, false);
        let w = blaschke_series(&w, 64, false).scale(Complex::new(s, 0.0));
        let pair = harmonic_witness(&h, k, &w).unwrap();
        let g_tail = pair.co_analytic().majorant(ONE_THIRD, true).unwrap();
        let h_tail = h.majorant(ONE_THIRD, true).unwrap();
        prop_assert!(g_tail <= k * h_tail + 1e-12);
    }

    #[test]
    fn pointwise_extremal_closed_form(a in 0.0..0.99f64, r in 0.0..0.9f64) {
        let e = extremal_pointwise(Complex::new(a, 0.0), 64).unwrap();
        let v = pointwise_lhs(&e, Complex::new(-r, 0.0)).unwrap();
        let closed = 2.0 * (1.0 - a * a) * r / (1.0 - a * a * r * r) + a;
        // The value part is a truncated evaluation; its remainder is a^64 r^65.
        let slack = 1e-12 + 2.0 * (a * r).powi(64);
        prop_assert!((v - closed).abs() <= slack);
    }

    #[test]
    fn automorphism_tail_matches_bound_without_dilatation(a in 0.0..0.99f64, r in 0.0..=ONE_THIRD) {
        let m = mobius_series(Complex::new(a, 0.0), 64).unwrap();
        let tail = tail_majorant(&m, r).unwrap();
        prop_assert!((tail - tail_bound(a, 0.0, r).unwrap()).abs() <= 1e-15);
    }

    #[test]
    fn harmonic_radius_residual_and_threshold(a in 0.0..0.999f64, k in 0.0..=1.0f64) {
        let r = harmonic_radius(a, k).unwrap();
        prop_assert!(quadratic_residual(Quadratic::Harmonic, a, k, r.value).abs() <= 1e-12);
        prop_assert!(quadratic_residual(Quadratic::HarmonicExpanded, a, k, r.value).abs() <= 1e-12);
        let alpha = harmonic_threshold(k).unwrap();
        if (a - alpha).abs() > 1e-9 {
            prop_assert_eq!(r.value <= ONE_THIRD, a >= alpha);
        }
        prop_assert_eq!(r.admissible, Some(a >= alpha));
    }

    #[test]
    fn analytic_radius_residual_and_threshold(a in 0.0..0.999f64) {
        let r = pointwise_radius(a).unwrap();
        prop_assert!(quadratic_residual(Quadratic::Pointwise, a, 0.0, r.value).abs() <= 1e-12);
        if (a - pointwise_threshold()).abs() > 1e-9 {
            prop_assert_eq!(r.value <= ONE_THIRD, a >= pointwise_threshold());
        }
        let h = harmonic_radius(a, 0.0).unwrap();
        prop_assert!((h.value - r.value).abs() <= 1e-12);
    }
}
