//! Projective limits of secant and normal directions along an arc.

use alloc::fmt;
use alloc::vec::Vec;

use super::limits::{vector_lead, VectorLead};
use crate::algebra::Coeff;
use crate::series::{Indeterminate, TruncSeries};

/// Projective class of a leading-coefficient vector: the coefficients of
/// the components achieving the minimal valuation, zero elsewhere,
/// normalised so the max-modulus coordinate is 1.
#[derive(Clone, PartialEq, Debug)]
pub struct DirectionClass<C: Coeff> {
    coords: Vec<C>,
}

impl<C: Coeff> DirectionClass<C> {
    /// Normalise a nonzero coefficient vector. Returns `None` when all
    /// coordinates are zero.
    pub fn new(coeffs: Vec<C>) -> Option<Self> {
        let mut best: Option<(usize, C::Mag)> = None;
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = c.mag_sq();
            let replace = match &best {
                None => true,
                Some((_, bm)) => m > *bm,
            };
            if replace {
                best = Some((i, m));
            }
        }
        let (pivot, _) = best?;
        let pivot_coeff = coeffs[pivot].clone();
        let coords = coeffs
            .iter()
            .map(|c| c.div(&pivot_coeff).expect("pivot is nonzero"))
            .collect();
        Some(Self { coords })
    }

    pub fn coords(&self) -> &[C] {
        &self.coords
    }

    pub fn to_f64_pairs(&self) -> Vec<(f64, f64)> {
        self.coords.iter().map(|c| c.to_f64_pair()).collect()
    }

    /// Scaling-invariant comparison: the sine of the angle between the two
    /// complex lines is below `tol`.
    pub fn approx_eq<D: Coeff>(&self, other: &DirectionClass<D>, tol: f64) -> bool {
        self.projective_distance(other) < tol
    }

    /// `sin` of the principal angle between the complex lines, in f64.
    pub fn projective_distance<D: Coeff>(&self, other: &DirectionClass<D>) -> f64 {
        let a = self.to_f64_pairs();
        let b = other.to_f64_pairs();
        if a.len() != b.len() {
            return f64::INFINITY;
        }
        let norm = |v: &[(f64, f64)]| -> f64 {
            v.iter().map(|(re, im)| re * re + im * im).sum::<f64>()
        };
        // |<a, conj b>|^2
        let (mut pre, mut pim) = (0.0f64, 0.0f64);
        for ((ar, ai), (br, bi)) in a.iter().zip(&b) {
            pre += ar * br + ai * bi;
            pim += ai * br - ar * bi;
        }
        let na = norm(&a);
        let nb = norm(&b);
        if na == 0.0 || nb == 0.0 {
            return f64::INFINITY;
        }
        let cos_sq = ((pre * pre + pim * pim) / (na * nb)).min(1.0);
        libm::sqrt((1.0 - cos_sq).max(0.0))
    }
}

impl<C: Coeff> fmt::Display for DirectionClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Projective class of the leading coefficients at the minimal valuation
/// of the component list; zero coordinates elsewhere.
pub fn limit_direction<C: Coeff>(
    components: &[TruncSeries<C>],
) -> Result<DirectionClass<C>, Indeterminate> {
    match vector_lead(components) {
        VectorLead::Ok { coeffs, .. } => {
            Ok(DirectionClass::new(coeffs).expect("leading vector is nonzero"))
        }
        VectorLead::AllUnknown { reliable_order }
        | VectorLead::Unreliable { reliable_order } => Err(Indeterminate { reliable_order }),
    }
}
