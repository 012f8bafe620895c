//! Exact scalars, the high-precision approximate engine, multivariate
//! polynomials, quasihomogeneous weights, Milnor numbers and complex root
//! enumeration.

mod approx;
mod exact;
mod parse;
mod poly;
mod roots;
mod weights;

pub use approx::{ApproxComplex, BigReal};
pub use exact::ExactComplex;
pub use parse::{parse_polynomial, ParseError};
pub use poly::{EvalError, Evaluated, MultiPoly, PolyError};
pub use roots::{nth_roots, RadicalDesc, Root, RootError, RootInput};
pub use weights::{milnor_orlik, quasihomogeneous_weights, weighted_euler, MilnorError, WeightSystem};

use alloc::fmt;
use num_rational::BigRational;

/// Coefficient field of the engine: complex scalars with enough structure
/// for series arithmetic, cancellation detection and limit extraction.
///
/// Two engines implement it: [`ExactComplex`] (Gaussian rationals, all
/// cancellation exact) and [`ApproxComplex`] (binary floating point at the
/// configured precision, with a relative zero threshold).
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    /// Magnitude proxy: the squared modulus, kept in the engine's own
    /// arithmetic so comparisons never round.
    type Mag: Clone + PartialOrd + fmt::Debug;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Division; `None` when `other` is zero.
    fn div(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// Squared modulus.
    fn mag_sq(&self) -> Self::Mag;

    /// Whether this value is cancellation noise relative to data of squared
    /// magnitude `scale_sq`. Exact engine: never (exact zeros are detected by
    /// `is_zero`). Approximate engine: `|self|^2 < threshold^2 * scale_sq`.
    fn is_noise(&self, scale_sq: &Self::Mag) -> bool;

    fn mag_zero() -> Self::Mag;
    fn mag_add(a: &Self::Mag, b: &Self::Mag) -> Self::Mag;
    fn mag_mul(a: &Self::Mag, b: &Self::Mag) -> Self::Mag;
    /// `None` when `b` is zero.
    fn mag_div(a: &Self::Mag, b: &Self::Mag) -> Option<Self::Mag>;
    fn mag_max(a: &Self::Mag, b: &Self::Mag) -> Self::Mag;
    fn mag_to_f64(m: &Self::Mag) -> f64;
    /// Exact rational rendering of a magnitude, when the engine has one.
    fn mag_to_rational(m: &Self::Mag) -> Option<BigRational>;

    /// Inject a Gaussian rational into this engine.
    fn from_exact(value: &ExactComplex) -> Self;
    /// Render into the approximate engine (for numeric cross-checks).
    fn to_approx(&self) -> ApproxComplex;
    /// Rough double-precision rendering for display.
    fn to_f64_pair(&self) -> (f64, f64);

    /// `"exact"` or `"approx"`, for report headers.
    fn engine_name() -> &'static str;
}
