//! Per-arc regularity reports: the exact limit verdicts, projective
//! directions, the valuation test, and numeric cross-check rows evaluating
//! the literal quotients at sample parameters.

use alloc::fmt;
use alloc::string::String;
use alloc::vec::Vec;

use super::direction::{limit_direction, DirectionClass};
use super::equivalence::{valuation_equivalence_check, EquivalenceError, ValuationEquivalence};
use super::limits::{
    gradient_series, limit_ratio_a, limit_ratio_delta, spatial_series, LimitError, LimitOutcome,
    PairingConvention,
};
use crate::algebra::{ApproxComplex, BigReal, Coeff, EvalError, MultiPoly};
use crate::series::{Arc, Indeterminate};

/// One numeric sample of the literal quotients at a parameter value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceRow {
    pub s: f64,
    pub ratio_a: f64,
    pub ratio_bilinear: f64,
    pub ratio_hermitian: f64,
}

#[derive(Clone, Debug)]
pub enum AnalyzeError {
    Limit(LimitError),
    Equivalence(EquivalenceError),
    Direction(Indeterminate),
    Eval(EvalError),
}

impl fmt::Display for AnalyzeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalyzeError::Limit(e) => write!(f, "{e}"),
            AnalyzeError::Equivalence(e) => write!(f, "{e}"),
            AnalyzeError::Direction(e) => write!(f, "{e}"),
            AnalyzeError::Eval(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for AnalyzeError {}

impl From<LimitError> for AnalyzeError {
    fn from(e: LimitError) -> Self {
        AnalyzeError::Limit(e)
    }
}

impl From<EquivalenceError> for AnalyzeError {
    fn from(e: EquivalenceError) -> Self {
        AnalyzeError::Equivalence(e)
    }
}

impl From<Indeterminate> for AnalyzeError {
    fn from(e: Indeterminate) -> Self {
        AnalyzeError::Direction(e)
    }
}

impl From<EvalError> for AnalyzeError {
    fn from(e: EvalError) -> Self {
        AnalyzeError::Eval(e)
    }
}

/// Full per-arc verdict record.
#[derive(Clone, Debug)]
pub struct RegularityReport<C: Coeff> {
    pub verdict_a: LimitOutcome,
    pub verdict_bilinear: LimitOutcome,
    pub verdict_hermitian: LimitOutcome,
    /// Sup of the Finite delta-type values seen (0 when both pairings give
    /// Zero); NaN when a pairing was indeterminate.
    pub delta_bound: f64,
    pub secant: DirectionClass<C>,
    pub normal: DirectionClass<C>,
    pub equivalence: ValuationEquivalence,
    pub rows: Vec<TraceRow>,
    /// Set when both the (a)-verdict and the literal (b^pi)-verdict are
    /// Zero along the arc.
    pub whitney_b_consistent: bool,
}

impl<C: Coeff> RegularityReport<C> {
    pub fn any_indeterminate(&self) -> bool {
        self.verdict_a.is_indeterminate()
            || self.verdict_bilinear.is_indeterminate()
            || self.verdict_hermitian.is_indeterminate()
    }

    /// Internal consistency: sine-type limits obey the Cauchy-Schwarz
    /// bound and the labels match the verdicts.
    pub fn check_consistency(&self) -> Result<(), String> {
        for (name, v) in [
            ("bilinear", &self.verdict_bilinear),
            ("hermitian", &self.verdict_hermitian),
        ] {
            match v {
                LimitOutcome::Divergent => {
                    return Err(alloc::format!("{name} sine-type ratio diverged"));
                }
                LimitOutcome::Finite { value, .. } if *value > 1.0 + 1e-12 => {
                    return Err(alloc::format!("{name} ratio {value} exceeds 1"));
                }
                _ => {}
            }
        }
        let both_zero = self.verdict_a.is_zero() && self.verdict_bilinear.is_zero();
        if both_zero != self.whitney_b_consistent {
            return Err(String::from("whitney_b_consistent label is inconsistent"));
        }
        Ok(())
    }
}

/// Evaluate the literal quotients at the sample parameters, in the
/// approximate engine regardless of the arc's own engine.
pub fn numeric_trace_rows<C: Coeff>(
    f: &MultiPoly<C>,
    arc: &Arc<C>,
    x_vars: &[&str],
    t_var: &str,
    samples: &[f64],
) -> Result<Vec<TraceRow>, AnalyzeError> {
    let fa: MultiPoly<ApproxComplex> = f.map(|c| c.to_approx());
    let mut partials = Vec::with_capacity(x_vars.len());
    for v in x_vars {
        partials.push(
            fa.differentiate(v)
                .map_err(|_| AnalyzeError::Limit(LimitError::UnknownVariable((*v).into())))?,
        );
    }
    let ft = fa
        .differentiate(t_var)
        .map_err(|_| AnalyzeError::Limit(LimitError::UnknownVariable(t_var.into())))?;

    let mut rows = Vec::with_capacity(samples.len());
    for &s in samples {
        let sr = BigReal::from_f64(s);
        let point = arc.eval_at(&sr);
        let mut grad_vals = Vec::with_capacity(partials.len());
        for p in &partials {
            grad_vals.push(p.evaluate(&point)?.value);
        }
        let ft_val = ft.evaluate(&point)?.value;

        let mut grad_norm_sq = BigReal::zero();
        for g in &grad_vals {
            grad_norm_sq = grad_norm_sq.add(&g.modulus_sq());
        }
        let mut x_norm_sq = BigReal::zero();
        let mut bilinear = ApproxComplex::zero();
        let mut hermitian = ApproxComplex::zero();
        for (v, g) in x_vars.iter().zip(&grad_vals) {
            let xv = point
                .get(*v)
                .cloned()
                .ok_or_else(|| AnalyzeError::Limit(LimitError::UnknownVariable((*v).into())))?;
            x_norm_sq = x_norm_sq.add(&xv.modulus_sq());
            bilinear = bilinear.add(&xv.mul(g));
            hermitian = hermitian.add(&xv.mul(&g.conj()));
        }

        let ratio = |num_sq: &BigReal, den_sq: &BigReal| -> f64 {
            if den_sq.is_zero() {
                f64::NAN
            } else {
                libm::sqrt(num_sq.div(den_sq).to_f64().max(0.0))
            }
        };
        let den_delta = x_norm_sq.mul(&grad_norm_sq);
        rows.push(TraceRow {
            s,
            ratio_a: ratio(&ft_val.modulus_sq(), &grad_norm_sq),
            ratio_bilinear: ratio(&bilinear.modulus_sq(), &den_delta),
            ratio_hermitian: ratio(&hermitian.modulus_sq(), &den_delta),
        });
    }
    Ok(rows)
}

/// Compute the full regularity report for an arc already lying on the
/// hypersurface (to the guard order).
pub fn analyze_arc<C: Coeff>(
    f: &MultiPoly<C>,
    arc: &Arc<C>,
    x_vars: &[&str],
    t_var: &str,
    guard_order: u32,
    samples: &[f64],
) -> Result<RegularityReport<C>, AnalyzeError> {
    let verdict_a = limit_ratio_a(f, arc, x_vars, t_var)?;
    let verdict_bilinear = limit_ratio_delta(f, arc, x_vars, PairingConvention::Bilinear)?;
    let verdict_hermitian = limit_ratio_delta(f, arc, x_vars, PairingConvention::Hermitian)?;
    let secant = limit_direction(&spatial_series(arc, x_vars)?)?;
    let normal = limit_direction(&gradient_series(f, arc, x_vars)?)?;
    let equivalence = valuation_equivalence_check(f, arc, x_vars, t_var, guard_order)?;
    let rows = numeric_trace_rows(f, arc, x_vars, t_var, samples)?;

    let delta_bound = match (
        verdict_bilinear.delta_contribution(),
        verdict_hermitian.delta_contribution(),
    ) {
        (Some(a), Some(b)) => a.max(b),
        _ => f64::NAN,
    };
    let whitney_b_consistent = verdict_a.is_zero() && verdict_bilinear.is_zero();

    let report = RegularityReport {
        verdict_a,
        verdict_bilinear,
        verdict_hermitian,
        delta_bound,
        secant,
        normal,
        equivalence,
        rows,
        whitney_b_consistent,
    };
    if let Err(msg) = report.check_consistency() {
        debug_assert!(false, "inconsistent report: {msg}");
    }
    Ok(report)
}
