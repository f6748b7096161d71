use thiserror::Error;

/// Errors raised by series construction, functional evaluation, radius
/// calculators and the verifier.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BohrError {
    #[error("coefficient {index} is not finite")]
    NonFinite { index: usize },

    #[error("{len} coefficients do not fit a series of order {order}")]
    TooManyCoefficients { len: usize, order: usize },

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("inner series has nonzero constant term (modulus {modulus:e})")]
    NonzeroConstant { modulus: f64 },

    #[error("radius {r} outside {allowed}")]
    RadiusOutOfRange { r: f64, allowed: &'static str },

    #[error("point z with modulus {modulus} is not inside the unit disk")]
    PointOutsideDisk { modulus: f64 },

    #[error("{name} = {value} outside {allowed}")]
    Domain {
        name: &'static str,
        value: f64,
        allowed: &'static str,
    },

    #[error("Blaschke zero {index} has modulus {modulus} > {cap}")]
    ZeroTooLarge {
        index: usize,
        modulus: f64,
        cap: f64,
    },

    #[error("{count} Blaschke zeros exceed the limit of {max}")]
    TooManyZeros { count: usize, max: usize },

    #[error("rotation modulus {modulus} is not 1")]
    NotUnimodular { modulus: f64 },

    #[error("outer series must be a polynomial (exact degree unset)")]
    NotPolynomial,

    #[error("lifting an order-{base} series by p={p} overflows order {order}")]
    OrderOverflow { base: usize, p: usize, order: usize },

    #[error("order-{base} series is too short to fill order {order} after lifting by p={p}")]
    InsufficientOrder { base: usize, p: usize, order: usize },

    #[error("co-analytic part has nonzero constant term")]
    CoAnalyticConstant,

    #[error(
        "quasi-subordination identity violated at coefficient {index} (deviation {deviation:e})"
    )]
    ConvolutionMismatch { index: usize, deviation: f64 },

    #[error("pair (a={a}, k={k}) is inadmissible: a is below the threshold {threshold}")]
    Inadmissible { a: f64, k: f64, threshold: f64 },

    #[error("no extremal function is available for {statement}: {reason}")]
    NoExtremal {
        statement: &'static str,
        reason: &'static str,
    },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = BohrError> = std::result::Result<T, E>;

pub(crate) fn check_domain(
    name: &'static str,
    value: f64,
    ok: bool,
    allowed: &'static str,
) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(BohrError::Domain {
            name,
            value,
            allowed,
        })
    }
}

/// `a` in `[0, 1)`.
pub(crate) fn check_unit_modulus(name: &'static str, a: f64) -> Result<()> {
    check_domain(name, a, (0.0..1.0).contains(&a), "[0, 1)")
}

/// `k` in `[0, 1]`.
pub(crate) fn check_dilatation(k: f64) -> Result<()> {
    check_domain("k", k, (0.0..=1.0).contains(&k), "[0, 1]")
}
