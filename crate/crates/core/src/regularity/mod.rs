//! Regularity analysis along arcs: exact limits of the ratio
//! characterisations of conditions (a), (b^pi) and (delta^pi), projective
//! secant/normal limits, the valuation-equivalence check, the real
//! sine-of-angle calculus and numeric shell probes.

mod direction;
mod equivalence;
mod limits;
mod probe;
mod report;
mod sine;
mod spiral;

pub use direction::{limit_direction, DirectionClass};
pub use equivalence::{valuation_equivalence_check, EquivalenceError, ValuationEquivalence};
pub use limits::{
    limit_ratio_a, limit_ratio_delta, LimitError, LimitOutcome, PairingConvention,
};
pub use probe::{probe_ring_max, ProbeError, ProbeResult};
pub use report::{analyze_arc, numeric_trace_rows, AnalyzeError, RegularityReport, TraceRow};
pub use sine::{sine_subspace_subspace, sine_vector_subspace, SineError};
pub use spiral::{spiral_angle, CircleArc, ExpSqrtSpiral, LogSpiral, PlanarCurve, SpiralError};
