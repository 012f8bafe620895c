//! Enumeration of the exponent patterns and leading-coefficient
//! constraints that a Whitney-(b) violating arc of a Briancon-Speder
//! shaped family `x^p + t x y^q + y^r z + z^k` must satisfy, and
//! end-to-end verification of the resulting failure curves.

mod curves;
mod pattern;
mod shape;
mod verify;

pub use curves::{
    enumerate_failure_curves, solve_coefficients, CoefficientRules, CurveError, FailureCurve,
};
pub use pattern::{solve_exponent_pattern, ExponentPattern};
pub use shape::{BsFamilyShape, ShapeError};
pub use verify::{verify_curve, VerifyError};
