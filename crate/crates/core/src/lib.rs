//! Core machinery for probing Whitney-type regularity of stratified
//! hypersurface families along analytic arcs.
//!
//! The crate is organised in four layers:
//!
//! * [`algebra`] — exact Gaussian-rational scalars, a configurable
//!   high-precision complex engine, sparse multivariate polynomials,
//!   quasihomogeneous weight systems and complex root enumeration.
//! * [`series`] — truncated one-parameter power series with reliable-order
//!   tracking, analytic arcs, polynomial/arc composition and Newton lifting
//!   of arcs onto a hypersurface.
//! * [`regularity`] — exact limits of the ratio characterisations of
//!   conditions (a), (b^pi) and (delta^pi), projective secant/normal limits,
//!   the valuation equivalence test, real sine-of-angle calculus and
//!   numeric shell probes.
//! * [`curvehunt`] — enumeration of the exponent patterns and coefficient
//!   constraints that every Whitney-(b) violating arc of a
//!   Briancon-Speder-shaped family must satisfy, and end-to-end curve
//!   verification.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `stratlab` crate.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod curvehunt;
pub mod regularity;
pub mod series;
pub mod settings;

pub use algebra::{
    milnor_orlik, nth_roots, quasihomogeneous_weights, ApproxComplex, BigReal, Coeff,
    ExactComplex, MultiPoly, WeightSystem,
};
pub use series::{compose, refine_onto_hypersurface, vector_valuation, Arc, TruncSeries, Valuation};
