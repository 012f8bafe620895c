//! The valuation test for condition (b^pi) along an arc lying on the
//! hypersurface: the two inequalities
//!
//! ```text
//! ineq1:  val(sum_i x_i dF/dx_i)   > val(X) + val(J_X F)
//! ineq2:  val(t) + val(dF/dt)      > val(X) + val(J_X F)
//! ```
//!
//! are equivalent for arcs on `F = 0`, and each characterises (b^pi) along
//! the arc. The check computes both sides exactly and reports agreement.

use alloc::fmt;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::limits::{gradient_series, spatial_series, LimitError};
use crate::algebra::{Coeff, MultiPoly};
use crate::series::{compose, Arc, ComposeError, TruncSeries, Valuation};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValuationEquivalence {
    pub ineq1: bool,
    pub ineq2: bool,
    pub agree: bool,
    /// Labelled valuations backing the verdicts.
    pub table: Vec<(String, Valuation)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EquivalenceError {
    /// `val(F . arc)` is below the guard order: the arc does not lie on the
    /// hypersurface to working precision.
    ArcNotOnSurface { valuation: Valuation, guard: u32 },
    /// A needed valuation is above the truncation order.
    Indeterminate { reliable_order: u32 },
    UnknownVariable(String),
    Unbound(ComposeError),
}

impl fmt::Display for EquivalenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceError::ArcNotOnSurface { valuation, guard } => write!(
                f,
                "arc is not on the hypersurface: val(F.arc) = {valuation} < guard {guard}"
            ),
            EquivalenceError::Indeterminate { reliable_order } => write!(
                f,
                "valuation indeterminate at reliable order {reliable_order}; raise the truncation order"
            ),
            EquivalenceError::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            EquivalenceError::Unbound(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EquivalenceError {}

impl From<LimitError> for EquivalenceError {
    fn from(e: LimitError) -> Self {
        match e {
            LimitError::UnknownVariable(v) => EquivalenceError::UnknownVariable(v),
            LimitError::Unbound(c) => EquivalenceError::Unbound(c),
        }
    }
}

impl From<ComposeError> for EquivalenceError {
    fn from(e: ComposeError) -> Self {
        EquivalenceError::Unbound(e)
    }
}

/// Minimum valuation of a series vector that is reliable: every component
/// that vanishes through its truncation must stay unknown only above the
/// finite minimum.
fn reliable_min<C: Coeff>(series: &[TruncSeries<C>]) -> Result<Valuation, EquivalenceError> {
    let mut min_finite: Option<u32> = None;
    let mut min_trunc: Option<u32> = None;
    for s in series {
        match s.valuation() {
            Valuation::Finite(n) => min_finite = Some(min_finite.map_or(n, |m| m.min(n))),
            Valuation::AboveTrunc(t) => min_trunc = Some(min_trunc.map_or(t, |m| m.min(t))),
        }
    }
    match (min_finite, min_trunc) {
        (Some(v), Some(t)) if t <= v => {
            Err(EquivalenceError::Indeterminate { reliable_order: t })
        }
        (Some(v), _) => Ok(Valuation::Finite(v)),
        (None, Some(t)) => Ok(Valuation::AboveTrunc(t)),
        (None, None) => Ok(Valuation::AboveTrunc(0)),
    }
}

/// Is `lhs > rhs` decidable? `AboveTrunc` means "at least this much", so a
/// lower bound beyond `rhs` already decides the inequality.
fn decide_gt(lhs: Valuation, rhs: u32) -> Result<bool, EquivalenceError> {
    match lhs {
        Valuation::Finite(n) => Ok(n > rhs),
        Valuation::AboveTrunc(n) if n > rhs => Ok(true),
        Valuation::AboveTrunc(n) => Err(EquivalenceError::Indeterminate { reliable_order: n }),
    }
}

fn sum_val(a: Valuation, b: Valuation) -> Valuation {
    match (a, b) {
        (Valuation::Finite(x), Valuation::Finite(y)) => Valuation::Finite(x + y),
        (x, y) => Valuation::AboveTrunc(x.lower_bound().saturating_add(y.lower_bound())),
    }
}

/// Run the valuation test. Pre: `val(F . arc) >= guard_order`.
pub fn valuation_equivalence_check<C: Coeff>(
    f: &MultiPoly<C>,
    arc: &Arc<C>,
    x_vars: &[&str],
    t_var: &str,
    guard_order: u32,
) -> Result<ValuationEquivalence, EquivalenceError> {
    let on_surface = compose(f, arc)?;
    let fv = on_surface.valuation();
    if fv.lower_bound() < guard_order {
        return Err(EquivalenceError::ArcNotOnSurface {
            valuation: fv,
            guard: guard_order,
        });
    }

    let mut table: Vec<(String, Valuation)> = Vec::new();

    let spatial = spatial_series(arc, x_vars)?;
    for (v, s) in x_vars.iter().zip(&spatial) {
        table.push((alloc::format!("val({v})"), s.valuation()));
    }
    let x_val = reliable_min(&spatial)?;
    table.push(("val(X)".to_string(), x_val));

    let grad = gradient_series(f, arc, x_vars)?;
    for (v, s) in x_vars.iter().zip(&grad) {
        table.push((alloc::format!("val(dF/d{v})"), s.valuation()));
    }
    let j_val = reliable_min(&grad)?;
    table.push(("val(J_X F)".to_string(), j_val));

    // rhs = val(X) + val(J_X F); both must be finite to give a number
    let rhs = match (x_val, j_val) {
        (Valuation::Finite(a), Valuation::Finite(b)) => a + b,
        (a, b) => {
            return Err(EquivalenceError::Indeterminate {
                reliable_order: a.lower_bound().min(b.lower_bound()),
            })
        }
    };

    // lhs of ineq1: sum_i x_i dF/dx_i composed
    let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
    let mut num_poly = MultiPoly::<C>::zero(&vars);
    for v in x_vars {
        let d = f
            .differentiate(v)
            .map_err(|_| EquivalenceError::UnknownVariable(v.to_string()))?;
        let xi_d = d
            .mul_var(v)
            .map_err(|_| EquivalenceError::UnknownVariable(v.to_string()))?;
        num_poly = num_poly.add(&xi_d).expect("same variable list");
    }
    let moment = compose(&num_poly, arc)?;
    table.push(("val(sum x_i dF/dx_i)".to_string(), moment.valuation()));
    let ineq1 = decide_gt(moment.valuation(), rhs)?;

    // lhs of ineq2: val(t) + val(dF/dt)
    let t_series = arc
        .component(t_var)
        .cloned()
        .ok_or_else(|| EquivalenceError::Unbound(ComposeError::UnboundVariable(t_var.to_string())))?;
    table.push((alloc::format!("val({t_var})"), t_series.valuation()));
    let ft = f
        .differentiate(t_var)
        .map_err(|_| EquivalenceError::UnknownVariable(t_var.to_string()))?;
    let ft_series = compose(&ft, arc)?;
    table.push((alloc::format!("val(dF/d{t_var})"), ft_series.valuation()));
    let lhs2 = sum_val(t_series.valuation(), ft_series.valuation());
    let ineq2 = decide_gt(lhs2, rhs)?;

    Ok(ValuationEquivalence {
        ineq1,
        ineq2,
        agree: ineq1 == ineq2,
        table,
    })
}
