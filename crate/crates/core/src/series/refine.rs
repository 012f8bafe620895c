//! Newton lifting of an arc onto a hypersurface `F = 0`: repeatedly append
//! the correction `-lead(F.arc) / leadcoeff(dF/dv . arc) * s^(V-w)` to the
//! solve variable until the composed valuation reaches the target order.

use alloc::fmt;
use alloc::string::{String, ToString};

use super::{compose, Arc, ComposeError, TruncSeries, Valuation};
use crate::algebra::{Coeff, MultiPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RefineError {
    /// The derivative along the arc vanishes through its reliable order, or
    /// the composed valuation does not dominate it.
    NotTransverse { derivative_order: Valuation, value_order: Valuation },
    /// An iteration failed to strictly increase the composed valuation, or
    /// wanted to rewrite exponents the arc already fixes.
    NoProgress { at: u32 },
    /// The target order exceeds what the truncation can certify.
    TruncationExceeded { reliable: u32, target: u32 },
    UnknownVariable(String),
    Unbound(ComposeError),
}

impl fmt::Display for RefineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RefineError::NotTransverse {
                derivative_order,
                value_order,
            } => write!(
                f,
                "arc is not transverse: derivative order {derivative_order}, value order {value_order}"
            ),
            RefineError::NoProgress { at } => {
                write!(f, "no progress at composed valuation {at}")
            }
            RefineError::TruncationExceeded { reliable, target } => write!(
                f,
                "reliable order {reliable} cannot certify target {target}; raise the truncation order"
            ),
            RefineError::UnknownVariable(v) => write!(f, "unknown solve variable `{v}`"),
            RefineError::Unbound(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RefineError {}

impl From<ComposeError> for RefineError {
    fn from(e: ComposeError) -> Self {
        RefineError::Unbound(e)
    }
}

/// Lift `arc` onto `{f = 0}` by Newton corrections in `solve_var`, until
/// `val(f . arc) >= target_order`. Arcs already satisfying the target are
/// returned unchanged; every iteration strictly increases the composed
/// valuation and only appends exponents above the solve component's top.
pub fn refine_onto_hypersurface<C: Coeff>(
    f: &MultiPoly<C>,
    arc: &Arc<C>,
    solve_var: &str,
    target_order: u32,
) -> Result<Arc<C>, RefineError> {
    let df = f
        .differentiate(solve_var)
        .map_err(|_| RefineError::UnknownVariable(solve_var.to_string()))?;

    let mut current = arc.clone();
    let mut last_v: Option<u32> = None;

    loop {
        let composed = compose(f, &current)?;
        match composed.valuation() {
            Valuation::Finite(v) if v >= target_order => return Ok(current),
            Valuation::AboveTrunc(n) if n >= target_order => return Ok(current),
            Valuation::AboveTrunc(n) => {
                // zero through the reliable order but short of the target:
                // no leading term to correct against
                return Err(RefineError::TruncationExceeded {
                    reliable: n,
                    target: target_order,
                });
            }
            Valuation::Finite(_) => {}
        }
        if composed.trunc() < target_order {
            return Err(RefineError::TruncationExceeded {
                reliable: composed.trunc(),
                target: target_order,
            });
        }

        let (v, lead) = composed.leading().expect("finite valuation has a lead");
        if let Some(pv) = last_v {
            if v <= pv {
                return Err(RefineError::NoProgress { at: v });
            }
        }
        last_v = Some(v);

        let dcomposed = compose(&df, &current)?;
        let (w, dlead) = match dcomposed.leading() {
            Ok(x) => x,
            Err(_) => {
                return Err(RefineError::NotTransverse {
                    derivative_order: dcomposed.valuation(),
                    value_order: composed.valuation(),
                })
            }
        };
        if v <= w {
            return Err(RefineError::NotTransverse {
                derivative_order: dcomposed.valuation(),
                value_order: composed.valuation(),
            });
        }

        let correction_exp = v - w;
        let solve_series = current
            .component(solve_var)
            .cloned()
            .unwrap_or_else(|| TruncSeries::zero(composed.trunc()));
        if let Some(top) = solve_series.top_exponent() {
            if correction_exp <= top {
                return Err(RefineError::NoProgress { at: v });
            }
        }
        let delta = lead
            .neg()
            .div(dlead)
            .expect("leading coefficient is nonzero");
        let updated =
            solve_series.add(&TruncSeries::monomial(correction_exp, delta, solve_series.trunc()));
        current = current.with_component(solve_var, updated);
    }
}
