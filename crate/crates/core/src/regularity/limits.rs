//! Exact limits of the ratio characterisations along arcs.
//!
//! Condition (a) compares `|dF/dt . arc|` against the gradient norm;
//! conditions (b^pi)/(delta^pi) compare the secant/gradient pairing against
//! the product of norms. Two pairing conventions are first class: the
//! Bilinear numerator composes `sum_i x_i dF/dx_i` literally, the Hermitian
//! numerator pairs the leading coefficient vectors with conjugation.

use alloc::fmt;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::algebra::{Coeff, MultiPoly};
use crate::series::{compose, Arc, ComposeError, TruncSeries, Valuation};

/// Which pairing the delta-type numerator uses. Both agree whenever all
/// leading data are real.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairingConvention {
    /// `|sum_i x_i dF/dx_i|` composed literally along the arc.
    Bilinear,
    /// `|sum_i x_i conj(dF/dx_i)|` at leading order.
    Hermitian,
}

impl fmt::Display for PairingConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairingConvention::Bilinear => write!(f, "bilinear"),
            PairingConvention::Hermitian => write!(f, "hermitian"),
        }
    }
}

/// Limit of a ratio of series moduli as `s -> 0+`.
#[derive(Clone, Debug)]
pub enum LimitOutcome {
    Zero,
    Finite {
        value: f64,
        /// `value^2` as an exact rational, when the leading data were
        /// Gaussian rational.
        value_sq: Option<BigRational>,
    },
    Divergent,
    /// Could not be decided at the current truncation order.
    Indeterminate { reliable_order: u32 },
}

impl LimitOutcome {
    pub fn is_zero(&self) -> bool {
        matches!(self, LimitOutcome::Zero)
    }

    pub fn finite_value(&self) -> Option<f64> {
        match self {
            LimitOutcome::Finite { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self, LimitOutcome::Indeterminate { .. })
    }

    /// Contribution to the delta bound: 0 for a Zero verdict, the value for
    /// a Finite one.
    pub fn delta_contribution(&self) -> Option<f64> {
        match self {
            LimitOutcome::Zero => Some(0.0),
            LimitOutcome::Finite { value, .. } => Some(*value),
            _ => None,
        }
    }
}

impl fmt::Display for LimitOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitOutcome::Zero => write!(f, "zero"),
            LimitOutcome::Finite { value, .. } => write!(f, "finite {value:.12}"),
            LimitOutcome::Divergent => write!(f, "divergent"),
            LimitOutcome::Indeterminate { reliable_order } => {
                write!(f, "indeterminate (reliable order {reliable_order})")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LimitError {
    UnknownVariable(String),
    Unbound(ComposeError),
}

impl fmt::Display for LimitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitError::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            LimitError::Unbound(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LimitError {}

impl From<ComposeError> for LimitError {
    fn from(e: ComposeError) -> Self {
        LimitError::Unbound(e)
    }
}

/// Leading data of a vector of series: the common minimal valuation, the
/// vector of leading coefficients (zero where a component's valuation is
/// higher) and the squared Euclidean norm of that vector.
pub(crate) enum VectorLead<C: Coeff> {
    Ok {
        valuation: u32,
        coeffs: Vec<C>,
        norm_sq: C::Mag,
    },
    /// All components vanish through this reliable order.
    AllUnknown { reliable_order: u32 },
    /// Some component's reliable order does not reach the minimal finite
    /// valuation, so the leading vector cannot be trusted.
    Unreliable { reliable_order: u32 },
}

pub(crate) fn vector_lead<C: Coeff>(series: &[TruncSeries<C>]) -> VectorLead<C> {
    let mut min_finite: Option<u32> = None;
    let mut min_trunc: Option<u32> = None;
    for s in series {
        match s.valuation() {
            Valuation::Finite(n) => min_finite = Some(min_finite.map_or(n, |m| m.min(n))),
            Valuation::AboveTrunc(t) => min_trunc = Some(min_trunc.map_or(t, |m| m.min(t))),
        }
    }
    let Some(v) = min_finite else {
        return VectorLead::AllUnknown {
            reliable_order: min_trunc.unwrap_or(0),
        };
    };
    if let Some(t) = min_trunc {
        if t <= v {
            return VectorLead::Unreliable { reliable_order: t };
        }
    }
    let mut coeffs = Vec::with_capacity(series.len());
    let mut norm_sq = C::mag_zero();
    for s in series {
        match s.valuation() {
            Valuation::Finite(n) if n == v => {
                let (_, c) = s.leading().expect("finite valuation");
                norm_sq = C::mag_add(&norm_sq, &c.mag_sq());
                coeffs.push(c.clone());
            }
            _ => coeffs.push(C::zero()),
        }
    }
    VectorLead::Ok {
        valuation: v,
        coeffs,
        norm_sq,
    }
}

pub(crate) fn gradient_series<C: Coeff>(
    f: &MultiPoly<C>,
    arc: &Arc<C>,
    x_vars: &[&str],
) -> Result<Vec<TruncSeries<C>>, LimitError> {
    let mut out = Vec::with_capacity(x_vars.len());
    for v in x_vars {
        let d = f
            .differentiate(v)
            .map_err(|_| LimitError::UnknownVariable(v.to_string()))?;
        out.push(compose(&d, arc)?);
    }
    Ok(out)
}

pub(crate) fn spatial_series<C: Coeff>(
    arc: &Arc<C>,
    x_vars: &[&str],
) -> Result<Vec<TruncSeries<C>>, LimitError> {
    let mut out = Vec::with_capacity(x_vars.len());
    for v in x_vars {
        match arc.component(v) {
            Some(s) => out.push(s.clone()),
            None => {
                return Err(LimitError::Unbound(ComposeError::UnboundVariable(
                    v.to_string(),
                )))
            }
        }
    }
    Ok(out)
}

/// Compare a scalar numerator series against a denominator of known
/// valuation and squared leading norm.
fn ratio_outcome<C: Coeff>(
    num: &TruncSeries<C>,
    den_val: u32,
    den_norm_sq: &C::Mag,
) -> LimitOutcome {
    match num.valuation() {
        Valuation::AboveTrunc(n) => {
            if n > den_val {
                LimitOutcome::Zero
            } else {
                LimitOutcome::Indeterminate { reliable_order: n }
            }
        }
        Valuation::Finite(n) if n > den_val => LimitOutcome::Zero,
        Valuation::Finite(n) if n < den_val => LimitOutcome::Divergent,
        Valuation::Finite(_) => {
            let (_, lead) = num.leading().expect("finite valuation");
            finite_from_mags::<C>(&lead.mag_sq(), den_norm_sq)
        }
    }
}

fn finite_from_mags<C: Coeff>(num_sq: &C::Mag, den_sq: &C::Mag) -> LimitOutcome {
    match C::mag_div(num_sq, den_sq) {
        Some(ratio_sq) => LimitOutcome::Finite {
            value: libm::sqrt(C::mag_to_f64(&ratio_sq).max(0.0)),
            value_sq: C::mag_to_rational(&ratio_sq),
        },
        None => LimitOutcome::Divergent,
    }
}

/// Limit of `|dF/dt| / |grad_x F|` along the arc. Zero is exactly the
/// condition-(a) verdict for the arc.
pub fn limit_ratio_a<C: Coeff>(
    f: &MultiPoly<C>,
    arc: &Arc<C>,
    x_vars: &[&str],
    t_var: &str,
) -> Result<LimitOutcome, LimitError> {
    let ft = f
        .differentiate(t_var)
        .map_err(|_| LimitError::UnknownVariable(t_var.to_string()))?;
    let num = compose(&ft, arc)?;
    let grad = gradient_series(f, arc, x_vars)?;
    match vector_lead(&grad) {
        VectorLead::Ok {
            valuation, norm_sq, ..
        } => Ok(ratio_outcome(&num, valuation, &norm_sq)),
        VectorLead::AllUnknown { reliable_order }
        | VectorLead::Unreliable { reliable_order } => {
            Ok(LimitOutcome::Indeterminate { reliable_order })
        }
    }
}

/// Limit of the delta-type quotient along the arc, under the chosen
/// pairing. Zero means (b^pi) holds along the arc; `Finite(v)` with `v < 1`
/// bounds the (delta^pi) defect; `Finite(1)` flags weak-Whitney failure.
pub fn limit_ratio_delta<C: Coeff>(
    f: &MultiPoly<C>,
    arc: &Arc<C>,
    x_vars: &[&str],
    pairing: PairingConvention,
) -> Result<LimitOutcome, LimitError> {
    let spatial = spatial_series(arc, x_vars)?;
    let grad = gradient_series(f, arc, x_vars)?;

    let (x_val, x_coeffs, x_norm_sq) = match vector_lead(&spatial) {
        VectorLead::Ok {
            valuation,
            coeffs,
            norm_sq,
        } => (valuation, coeffs, norm_sq),
        VectorLead::AllUnknown { reliable_order }
        | VectorLead::Unreliable { reliable_order } => {
            return Ok(LimitOutcome::Indeterminate { reliable_order })
        }
    };
    let (g_val, g_coeffs, g_norm_sq) = match vector_lead(&grad) {
        VectorLead::Ok {
            valuation,
            coeffs,
            norm_sq,
        } => (valuation, coeffs, norm_sq),
        VectorLead::AllUnknown { reliable_order }
        | VectorLead::Unreliable { reliable_order } => {
            return Ok(LimitOutcome::Indeterminate { reliable_order })
        }
    };

    let den_val = x_val + g_val;
    let den_norm_sq = C::mag_mul(&x_norm_sq, &g_norm_sq);

    match pairing {
        PairingConvention::Bilinear => {
            // compose sum_i x_i dF/dx_i literally
            let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
            let mut num_poly = MultiPoly::<C>::zero(&vars);
            for v in x_vars {
                let d = f
                    .differentiate(v)
                    .map_err(|_| LimitError::UnknownVariable(v.to_string()))?;
                let xi_d = d
                    .mul_var(v)
                    .map_err(|_| LimitError::UnknownVariable(v.to_string()))?;
                num_poly = num_poly.add(&xi_d).expect("same variable list");
            }
            let num = compose(&num_poly, arc)?;
            Ok(ratio_outcome(&num, den_val, &den_norm_sq))
        }
        PairingConvention::Hermitian => {
            // pair the leading vectors with conjugation
            let mut pair = C::zero();
            for (a, b) in x_coeffs.iter().zip(&g_coeffs) {
                pair = pair.add(&a.mul(&b.conj()));
            }
            if pair.is_zero() || pair.is_noise(&den_norm_sq) {
                return Ok(LimitOutcome::Zero);
            }
            Ok(finite_from_mags::<C>(&pair.mag_sq(), &den_norm_sq))
        }
    }
}
