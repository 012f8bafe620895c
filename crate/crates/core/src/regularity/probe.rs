//! Deterministic shell probes for real hypersurface families.
//!
//! Samples the surface `h = 0` on the sphere `|(x, y, t)| = radius`
//! (so `|t| <= radius` throughout) and records the maxima of the
//! condition-(a) and (b^pi) ratios. The sampler is a fixed lattice derived
//! from the radius and resolution: a uniform parameter grid plus geometric
//! ladders towards `t = 0` and `t = +-radius`, where the extremal scalings
//! of the corpus examples concentrate. No randomness anywhere.

use alloc::fmt;
use alloc::vec::Vec;

use crate::algebra::{Coeff, ExactComplex, MultiPoly};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProbeError {
    BadRadius,
    /// Resolution below the 32-per-dimension floor.
    LowResolution,
    /// The polynomial has nonreal coefficients or is not in exactly
    /// two spatial variables plus the parameter.
    NotRealPlanarFamily,
    NoSurfacePoints,
}

impl fmt::Display for ProbeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbeError::BadRadius => write!(f, "radius must be positive"),
            ProbeError::LowResolution => write!(f, "sampler resolution must be at least 32"),
            ProbeError::NotRealPlanarFamily => write!(
                f,
                "probe needs a real polynomial in two spatial variables and the parameter"
            ),
            ProbeError::NoSurfacePoints => write!(f, "no surface points found on the shell"),
        }
    }
}

impl core::error::Error for ProbeError {}

/// Grid maxima of the two ratios over the surface shell.
#[derive(Clone, Debug)]
pub struct ProbeResult {
    pub max_a: f64,
    pub argmax_a: [f64; 3],
    pub max_bpi: f64,
    pub argmax_bpi: [f64; 3],
    pub surface_points: usize,
}

/// Dense f64 view of a real polynomial in (x, y, t).
struct RealPoly {
    terms: Vec<([u32; 3], f64)>,
}

impl RealPoly {
    fn compile(
        p: &MultiPoly<ExactComplex>,
        x_var: &str,
        y_var: &str,
        t_var: &str,
    ) -> Option<Self> {
        let xi = p.var_index(x_var)?;
        let yi = p.var_index(y_var)?;
        let ti = p.var_index(t_var)?;
        let mut terms = Vec::new();
        for (exps, c) in p.terms() {
            if !c.is_real() {
                return None;
            }
            // reject terms involving variables outside (x, y, t)
            for (i, e) in exps.iter().enumerate() {
                if *e > 0 && i != xi && i != yi && i != ti {
                    return None;
                }
            }
            let (re, _) = c.to_f64_pair();
            terms.push(([exps[xi], exps[yi], exps[ti]], re));
        }
        Some(Self { terms })
    }

    fn eval(&self, x: f64, y: f64, t: f64) -> f64 {
        let mut acc = 0.0;
        for ([ex, ey, et], c) in &self.terms {
            acc += c * powi(x, *ex) * powi(y, *ey) * powi(t, *et);
        }
        acc
    }
}

fn powi(x: f64, e: u32) -> f64 {
    let mut acc = 1.0;
    let mut base = x;
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc *= base;
        }
        base *= base;
        k >>= 1;
    }
    acc
}

/// The deterministic parameter lattice: uniform plus geometric refinement
/// towards the centre and both poles.
fn t_samples(radius: f64, resolution: u32) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    let r = resolution as usize;
    for j in 0..r {
        out.push(-radius + 2.0 * radius * (j as f64) / (r as f64 - 1.0));
    }
    for k in 1..=48 {
        let g = libm::scalbn(1.0, -k); // 2^-k
        for sign in [-1.0, 1.0] {
            out.push(sign * radius * g);
            out.push(sign * radius * 1.5 * g);
            out.push(sign * radius * (1.0 - g));
            out.push(sign * radius * (1.0 - 1.5 * g).max(0.0));
        }
    }
    out.retain(|t| t.abs() < radius && t.is_finite());
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out.dedup();
    out
}

/// Probe the shell of the given radius: deterministic-grid maxima of the
/// (a)- and (b^pi)-ratios over `{h = 0}` intersected with the sphere.
pub fn probe_ring_max(
    h: &MultiPoly<ExactComplex>,
    x_var: &str,
    y_var: &str,
    t_var: &str,
    radius: f64,
    resolution: u32,
) -> Result<ProbeResult, ProbeError> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(ProbeError::BadRadius);
    }
    if resolution < 32 {
        return Err(ProbeError::LowResolution);
    }
    let hp = RealPoly::compile(h, x_var, y_var, t_var).ok_or(ProbeError::NotRealPlanarFamily)?;
    let hx = RealPoly::compile(
        &h.differentiate(x_var).map_err(|_| ProbeError::NotRealPlanarFamily)?,
        x_var,
        y_var,
        t_var,
    )
    .ok_or(ProbeError::NotRealPlanarFamily)?;
    let hy = RealPoly::compile(
        &h.differentiate(y_var).map_err(|_| ProbeError::NotRealPlanarFamily)?,
        x_var,
        y_var,
        t_var,
    )
    .ok_or(ProbeError::NotRealPlanarFamily)?;
    let ht = RealPoly::compile(
        &h.differentiate(t_var).map_err(|_| ProbeError::NotRealPlanarFamily)?,
        x_var,
        y_var,
        t_var,
    )
    .ok_or(ProbeError::NotRealPlanarFamily)?;

    let mut best_a: Option<(f64, [f64; 3])> = None;
    let mut best_bpi: Option<(f64, [f64; 3])> = None;
    let mut surface_points = 0usize;

    let phi_steps = (resolution as usize) * 2;
    for t in t_samples(radius, resolution) {
        let rs = libm::sqrt(radius * radius - t * t);
        if !(rs > 0.0) {
            continue;
        }
        // scan the circle for sign changes of h
        let g = |phi: f64| hp.eval(rs * libm::cos(phi), rs * libm::sin(phi), t);
        let mut prev_phi = 0.0;
        let mut prev_val = g(0.0);
        for i in 1..=phi_steps {
            let phi = 2.0 * core::f64::consts::PI * (i as f64) / (phi_steps as f64);
            let val = g(phi);
            let root = if prev_val == 0.0 {
                Some(prev_phi)
            } else if prev_val * val < 0.0 {
                // bisect
                let (mut lo, mut hi, mut flo) = (prev_phi, phi, prev_val);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    let fm = g(mid);
                    if fm == 0.0 {
                        lo = mid;
                        break;
                    }
                    if flo * fm < 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fm;
                    }
                }
                Some(0.5 * (lo + hi))
            } else {
                None
            };
            if let Some(phi0) = root {
                let x = rs * libm::cos(phi0);
                let y = rs * libm::sin(phi0);
                surface_points += 1;
                let gx = hx.eval(x, y, t);
                let gy = hy.eval(x, y, t);
                let gt = ht.eval(x, y, t);
                let den = libm::sqrt(gx * gx + gy * gy);
                if den > 1e-280 {
                    let ratio_a = gt.abs() / den;
                    let ratio_bpi = (x * gx + y * gy).abs() / (rs * den);
                    update_max(&mut best_a, ratio_a, [x, y, t]);
                    update_max(&mut best_bpi, ratio_bpi, [x, y, t]);
                }
            }
            prev_phi = phi;
            prev_val = val;
        }
    }

    match (best_a, best_bpi) {
        (Some((max_a, argmax_a)), Some((max_bpi, argmax_bpi))) => Ok(ProbeResult {
            max_a,
            argmax_a,
            max_bpi,
            argmax_bpi,
            surface_points,
        }),
        _ => Err(ProbeError::NoSurfacePoints),
    }
}

/// Keep the larger ratio; ties break on the lexicographically smaller
/// point so concurrent evaluation orders cannot change the result.
fn update_max(best: &mut Option<(f64, [f64; 3])>, value: f64, point: [f64; 3]) {
    if !value.is_finite() {
        return;
    }
    let replace = match best {
        None => true,
        Some((bv, bp)) => {
            value > *bv || (value == *bv && point.as_slice() < bp.as_slice())
        }
    };
    if replace {
        *best = Some((value, point));
    }
}
