use std::ffi::CStr;
use std::ptr;

use bohrlab_ffi::*;

fn last_error() -> String {
    let p = bohr_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn series_round_trip() {
    unsafe {
        let re = [0.5, 1.0, 2.0];
        let mut s = ptr::null_mut();
        assert_eq!(
            bohr_series_new(re.as_ptr(), ptr::null(), 3, 8, &mut s),
            BohrStatus::Ok
        );
        assert_eq!(bohr_series_order(s), 8);

        let mut sq = ptr::null_mut();
        assert_eq!(bohr_series_mul(s, s, &mut sq), BohrStatus::Ok);
        let (mut x, mut y) = (0.0, 0.0);
        // (0.5 + z + 2z^2)^2 has z^2 coefficient 1 + 2 * 0.5 * 2 = 3.
        assert_eq!(bohr_series_coeff(sq, 2, &mut x, &mut y), BohrStatus::Ok);
        assert_eq!((x, y), (3.0, 0.0));

        let mut m = 0.0;
        assert_eq!(bohr_series_majorant(s, 0.5, 0, &mut m), BohrStatus::Ok);
        assert!((m - (0.5 + 0.5 + 0.5)).abs() < 1e-15);
        assert_eq!(bohr_series_majorant(s, 1.0, 0, &mut m), BohrStatus::Domain);
        assert!(last_error().contains('1'));

        bohr_series_free(sq);
        bohr_series_free(s);
    }
}

#[test]
fn compose_requires_vanishing_inner() {
    unsafe {
        let mut outer = ptr::null_mut();
        let mut inner = ptr::null_mut();
        assert_eq!(bohr_series_mobius(0.3, 0.0, 16, &mut outer), BohrStatus::Ok);
        assert_eq!(bohr_series_mobius(0.2, 0.0, 16, &mut inner), BohrStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(
            bohr_series_compose(outer, inner, &mut out),
            BohrStatus::Domain
        );
        assert!(out.is_null());
        bohr_series_free(outer);
        bohr_series_free(inner);
    }
}

#[test]
fn null_and_invalid_inputs() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            bohr_series_new(ptr::null(), ptr::null(), 2, 4, &mut out),
            BohrStatus::NullPointer
        );
        let re = [1.0; 6];
        assert_eq!(
            bohr_series_new(re.as_ptr(), ptr::null(), 6, 4, &mut out),
            BohrStatus::InvalidArgument
        );
        let nan = [f64::NAN];
        assert_eq!(
            bohr_series_new(nan.as_ptr(), ptr::null(), 1, 4, &mut out),
            BohrStatus::InvalidArgument
        );
        assert_eq!(
            bohr_series_derivative(ptr::null(), &mut out),
            BohrStatus::NullPointer
        );
        assert_eq!(bohr_series_order(ptr::null()), 0);
        bohr_series_free(ptr::null_mut());
        bohr_report_free(ptr::null_mut());
        bohr_string_free(ptr::null_mut());
    }
}

#[test]
fn radii() {
    unsafe {
        let mut r = std::mem::zeroed::<BohrRadius>();
        assert_eq!(
            bohr_radius(BOHR_RADIUS_ODD, 0.0, 0.0, 0, &mut r),
            BohrStatus::Ok
        );
        assert!((r.value - 0.789991).abs() < 1e-6);
        assert!(r.threshold_a.is_nan());
        assert_eq!(r.admissible, -1);

        assert_eq!(
            bohr_radius(BOHR_RADIUS_ANALYTIC, 0.0, 0.0, 0, &mut r),
            BohrStatus::Ok
        );
        assert!((r.value - 0.5).abs() < 1e-15);
        assert_eq!(r.admissible, 0);

        assert_eq!(
            bohr_radius(BOHR_RADIUS_HARMONIC, 0.6, 0.5, 0, &mut r),
            BohrStatus::Ok
        );
        assert_eq!(r.admissible, 1);
        assert!(r.value < 1.0 / 3.0);

        assert_eq!(
            bohr_radius(BOHR_RADIUS_HARMONIC, 0.6, 1.5, 0, &mut r),
            BohrStatus::Domain
        );
        assert_eq!(
            bohr_radius(77, 0.0, 0.0, 0, &mut r),
            BohrStatus::InvalidArgument
        );
    }
}

#[test]
fn verify_and_report_json() {
    unsafe {
        let mut rep = ptr::null_mut();
        assert_eq!(
            bohr_verify(BOHR_SUITE_QUASI_SUBORDINATION, 20, 42, 32, &mut rep),
            BohrStatus::Ok
        );
        assert_eq!(bohr_report_passed(rep), 1);
        assert!(bohr_report_max_residual(rep) <= 1e-9);
        let json = bohr_report_json(rep);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        bohr_string_free(json);
        bohr_report_free(rep);
        assert!(text.contains("\"suite\": \"t1\""));
        assert!(text.contains("\"verdict\": \"pass\""));

        assert_eq!(
            bohr_verify(BOHR_SUITE_CLASSICAL, 0, 1, 0, &mut rep),
            BohrStatus::InvalidArgument
        );
        assert_eq!(
            bohr_verify(42, 10, 1, 0, &mut rep),
            BohrStatus::InvalidArgument
        );
    }
}

#[test]
fn sharpness() {
    unsafe {
        let mut rep = ptr::null_mut();
        assert_eq!(
            bohr_sharpness(BOHR_SHARP_ANALYTIC_POINTWISE, 0.6, 0.0, 0, &mut rep),
            BohrStatus::Ok
        );
        assert_eq!(bohr_report_passed(rep), 1);
        bohr_report_free(rep);
        assert_eq!(
            bohr_sharpness(BOHR_SHARP_ANALYTIC_POINTWISE, 0.2, 0.0, 0, &mut rep),
            BohrStatus::Inadmissible
        );
        assert_eq!(
            bohr_sharpness(BOHR_SHARP_ODD, 0.0, 0.0, 0, &mut rep),
            BohrStatus::NoExtremal
        );
        assert!(last_error().contains("extremal"));
    }
}
