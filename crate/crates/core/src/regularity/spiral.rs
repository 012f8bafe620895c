//! Secant/tangent angles along parametric planar curves. The spiral
//! examples separate condition (b) from condition (delta) in the plane.

use alloc::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpiralError {
    ZeroTangent,
    ZeroPoint,
}

impl fmt::Display for SpiralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpiralError::ZeroTangent => write!(f, "curve has zero tangent at this parameter"),
            SpiralError::ZeroPoint => write!(f, "curve passes through the origin here"),
        }
    }
}

impl core::error::Error for SpiralError {}

/// A differentiable planar curve given parametrically.
pub trait PlanarCurve {
    fn point(&self, t: f64) -> [f64; 2];
    fn velocity(&self, t: f64) -> [f64; 2];
}

/// Logarithmic spiral `r = exp(t / tan(beta))`, polar angle `t`. The angle
/// between the secant to the origin and the tangent is constantly `beta`.
#[derive(Clone, Copy, Debug)]
pub struct LogSpiral {
    pub beta: f64,
}

impl PlanarCurve for LogSpiral {
    fn point(&self, t: f64) -> [f64; 2] {
        let r = libm::exp(t / libm::tan(self.beta));
        [r * libm::cos(t), r * libm::sin(t)]
    }

    fn velocity(&self, t: f64) -> [f64; 2] {
        let r = libm::exp(t / libm::tan(self.beta));
        let dr = r / libm::tan(self.beta);
        [
            dr * libm::cos(t) - r * libm::sin(t),
            dr * libm::sin(t) + r * libm::cos(t),
        ]
    }
}

/// Flat spiral `r = exp(-sqrt(t))`, polar angle `t >= 0`. The secant and
/// tangent become orthogonal as `t -> inf`.
#[derive(Clone, Copy, Debug)]
pub struct ExpSqrtSpiral;

impl PlanarCurve for ExpSqrtSpiral {
    fn point(&self, t: f64) -> [f64; 2] {
        let r = libm::exp(-libm::sqrt(t));
        [r * libm::cos(t), r * libm::sin(t)]
    }

    fn velocity(&self, t: f64) -> [f64; 2] {
        let s = libm::sqrt(t);
        let r = libm::exp(-s);
        let dr = if s == 0.0 { f64::NEG_INFINITY } else { -r / (2.0 * s) };
        [
            dr * libm::cos(t) - r * libm::sin(t),
            dr * libm::sin(t) + r * libm::cos(t),
        ]
    }
}

/// Circle of fixed radius: the control case, with radial secants orthogonal
/// to the tangent.
#[derive(Clone, Copy, Debug)]
pub struct CircleArc {
    pub radius: f64,
}

impl PlanarCurve for CircleArc {
    fn point(&self, t: f64) -> [f64; 2] {
        [self.radius * libm::cos(t), self.radius * libm::sin(t)]
    }

    fn velocity(&self, t: f64) -> [f64; 2] {
        [-self.radius * libm::sin(t), self.radius * libm::cos(t)]
    }
}

/// Sine of the angle between the secant from the curve point to the origin
/// and the tangent line at that point.
pub fn spiral_angle(curve: &dyn PlanarCurve, t: f64) -> Result<f64, SpiralError> {
    let [x, y] = curve.point(t);
    let [vx, vy] = curve.velocity(t);
    let pn = libm::sqrt(x * x + y * y);
    let vn = libm::sqrt(vx * vx + vy * vy);
    if pn == 0.0 {
        return Err(SpiralError::ZeroPoint);
    }
    if vn == 0.0 || !vn.is_finite() {
        return Err(SpiralError::ZeroTangent);
    }
    let cross = x * vy - y * vx;
    Ok((cross.abs() / (pn * vn)).min(1.0))
}
