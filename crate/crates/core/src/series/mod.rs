//! Truncated one-parameter power series, analytic arcs, polynomial/arc
//! composition with reliable-order tracking, valuations and Newton lifting
//! of arcs onto a hypersurface.

mod arc;
mod refine;
mod trunc;

pub use arc::{parse_arc, Arc, ArcError, ArcParseError};
pub use refine::{refine_onto_hypersurface, RefineError};
pub use trunc::{Indeterminate, TruncSeries, Valuation};

use alloc::fmt;
use alloc::string::{String, ToString};

use crate::algebra::{Coeff, MultiPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ComposeError {
    UnboundVariable(String),
}

impl fmt::Display for ComposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComposeError::UnboundVariable(v) => {
                write!(f, "arc does not bind variable `{v}`")
            }
        }
    }
}

impl core::error::Error for ComposeError {}

/// Substitute the arc's component series into `p`. The reliable order of
/// the result follows the series add/mul rules, so exact cancellations at
/// low order are distinguished from terms beyond the truncation.
pub fn compose<C: Coeff>(p: &MultiPoly<C>, arc: &Arc<C>) -> Result<TruncSeries<C>, ComposeError> {
    // map each polynomial variable to its component, and cache powers
    let mut comp_refs = alloc::vec::Vec::with_capacity(p.vars().len());
    for v in p.vars() {
        match arc.component(v) {
            Some(s) => comp_refs.push(s),
            None => return Err(ComposeError::UnboundVariable(v.to_string())),
        }
    }
    let mut pow_cache: alloc::vec::Vec<alloc::vec::Vec<TruncSeries<C>>> = p
        .vars()
        .iter()
        .enumerate()
        .map(|(i, _)| alloc::vec![comp_refs[i].clone()])
        .collect();
    let power = |var: usize, e: u32, cache: &mut alloc::vec::Vec<alloc::vec::Vec<TruncSeries<C>>>| {
        debug_assert!(e >= 1);
        while cache[var].len() < e as usize {
            let last = cache[var].last().unwrap();
            let next = last.mul(&cache[var][0]);
            cache[var].push(next);
        }
        cache[var][e as usize - 1].clone()
    };

    let mut acc = TruncSeries::zero(u32::MAX);
    for (exps, coeff) in p.terms() {
        let mut prod = TruncSeries::monomial(0, coeff.clone(), u32::MAX);
        for (var, &e) in exps.iter().enumerate() {
            if e > 0 {
                prod = prod.mul(&power(var, e, &mut pow_cache));
            }
        }
        acc = acc.add(&prod);
    }
    Ok(acc)
}

/// Valuation of a vector of series: the minimum of the component
/// valuations. `AboveTrunc` dominates only when every component is
/// `AboveTrunc`.
pub fn vector_valuation<'a, C: Coeff + 'a>(
    components: impl IntoIterator<Item = &'a TruncSeries<C>>,
) -> Valuation {
    let mut best_finite: Option<u32> = None;
    let mut min_trunc: Option<u32> = None;
    for s in components {
        match s.valuation() {
            Valuation::Finite(n) => {
                best_finite = Some(best_finite.map_or(n, |b| b.min(n)));
            }
            Valuation::AboveTrunc(t) => {
                min_trunc = Some(min_trunc.map_or(t, |b| b.min(t)));
            }
        }
    }
    match (best_finite, min_trunc) {
        (Some(n), _) => Valuation::Finite(n),
        (None, Some(t)) => Valuation::AboveTrunc(t),
        (None, None) => Valuation::AboveTrunc(0),
    }
}
