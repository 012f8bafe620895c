//! End-to-end verification of a failure curve: build the arc, lift it onto
//! the hypersurface, and run the full regularity analysis.

use alloc::fmt;
use alloc::vec::Vec;

use crate::algebra::{ApproxComplex, ExactComplex, MultiPoly};
use crate::regularity::{analyze_arc, AnalyzeError, RegularityReport};
use crate::series::{refine_onto_hypersurface, RefineError};
use crate::settings;

use super::curves::FailureCurve;
use super::shape::{BsFamilyShape, PARAM_VAR, SPATIAL_VARS};

#[derive(Clone, Debug)]
pub enum VerifyError {
    /// `F` is not the curve's family polynomial.
    ShapeMismatch,
    /// The target order must be at least 100 for the verdicts to be
    /// trustworthy on the corpus shapes.
    TargetTooLow(u32),
    /// Truncation ladder exhausted (doubling up to the cap).
    TruncationCap { cap: u32 },
    Refine(RefineError),
    Analyze(AnalyzeError),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::ShapeMismatch => {
                write!(f, "polynomial does not match the curve's family shape")
            }
            VerifyError::TargetTooLow(t) => {
                write!(f, "target order {t} is below the minimum of 100")
            }
            VerifyError::TruncationCap { cap } => {
                write!(f, "still indeterminate at the truncation cap {cap}")
            }
            VerifyError::Refine(e) => write!(f, "{e}"),
            VerifyError::Analyze(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for VerifyError {}

impl From<AnalyzeError> for VerifyError {
    fn from(e: AnalyzeError) -> Self {
        VerifyError::Analyze(e)
    }
}

/// Verify one failure curve against its family polynomial: refine the arc
/// onto `F = 0` solving for `z`, then compute the verdicts, directions,
/// valuation test and numeric cross-check rows. Indeterminate outcomes
/// double the truncation order up to the configured cap.
pub fn verify_curve(
    f: &MultiPoly<ExactComplex>,
    curve: &FailureCurve,
    target_order: u32,
    samples: &[f64],
) -> Result<RegularityReport<ApproxComplex>, VerifyError> {
    if BsFamilyShape::detect(f) != Some(curve.shape) {
        return Err(VerifyError::ShapeMismatch);
    }
    if target_order < 100 {
        return Err(VerifyError::TargetTooLow(target_order));
    }

    let fa: MultiPoly<ApproxComplex> = f.to_approx();
    let x_vars: Vec<&str> = SPATIAL_VARS.to_vec();

    let mut trunc = settings::default_trunc().max(target_order + 20);
    loop {
        let arc = curve.arc(trunc);
        match refine_onto_hypersurface(&fa, &arc, "z", target_order) {
            Ok(refined) => {
                match analyze_arc(&fa, &refined, &x_vars, PARAM_VAR, target_order, samples) {
                    Ok(report) if !report.any_indeterminate() => return Ok(report),
                    Ok(_) => {} // retry with a larger truncation
                    Err(AnalyzeError::Equivalence(
                        crate::regularity::EquivalenceError::Indeterminate { .. },
                    ))
                    | Err(AnalyzeError::Direction(_)) => {}
                    Err(e) => return Err(e.into()),
                }
            }
            Err(RefineError::TruncationExceeded { .. }) => {}
            Err(e) => return Err(VerifyError::Refine(e)),
        }
        let next = trunc.saturating_mul(2);
        if next > settings::TRUNC_CAP {
            return Err(VerifyError::TruncationCap {
                cap: settings::TRUNC_CAP,
            });
        }
        trunc = next;
    }
}
