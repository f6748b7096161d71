//! Truncated power series, sharp Bohr radii and seeded verification of
//! Bohr-type inequalities for quasi-subordinate and harmonic mappings.
//!
//! Coefficients are stored up to a fixed truncation order. Majorant sums are
//! truncated lower bounds unless a series carries a [`GeometricTail`], in
//! which case the closed form is used.

// `!(x <= tol)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod blaschke;
pub mod cli;
pub mod error;
pub mod functionals;
pub mod radii;
pub mod series;
pub mod verifier;
pub mod witnesses;

pub use blaschke::{blaschke_series, p_symmetric_lift, BlaschkeSpec};
pub use error::{BohrError, Result};
pub use functionals::{
    bohr_sum, fixed_center_lhs, harmonic_fixed_center_lhs, harmonic_pointwise_lhs, pointwise_lhs,
    schwarz_pick_bound, tail_bound, tail_majorant, Evaluation, HarmonicPair, ONE_THIRD,
};
pub use radii::{
    classical_radius, harmonic_radius, harmonic_threshold, odd_bohr_radius, p_symmetric_radius,
    pointwise_radius, pointwise_threshold, RadiusResult,
};
pub use series::{mobius_series, Complex, GeometricTail, TruncatedSeries, DEFAULT_ORDER};
pub use verifier::{
    sharpness_certificate, SharpStatement, TrialConfig, Verdict, VerificationReport,
};
