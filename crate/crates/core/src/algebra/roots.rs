//! Enumeration of all complex n-th roots of an exact value, in polar form.
//!
//! Each root comes with an exact polar description (modulus as a radical of
//! a rational, argument as a rational multiple of pi when the input's
//! argument is known exactly) plus a high-precision rendering, and a
//! residual check `|root^n - value| < 1e-12 |value|`.

use alloc::fmt;
use alloc::vec::Vec;

use astro_float::{BigFloat, Consts, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{ApproxComplex, BigReal, Coeff, ExactComplex};
use crate::settings;

const RM: RoundingMode = RoundingMode::ToEven;

/// Value whose roots are requested.
#[derive(Clone, Debug)]
pub enum RootInput {
    Exact(ExactComplex),
    /// `modulus * exp(i * pi * angle_pi)` with rational modulus > 0.
    Polar {
        modulus: BigRational,
        angle_pi: BigRational,
    },
}

/// Exact modulus description: `radicand^(1/degree)`.
#[derive(Clone, PartialEq, Debug)]
pub struct RadicalDesc {
    pub radicand: BigRational,
    pub degree: u32,
}

impl fmt::Display for RadicalDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_integer() {
            write!(f, "{}^(1/{})", self.radicand.numer(), self.degree)
        } else {
            write!(
                f,
                "({}/{})^(1/{})",
                self.radicand.numer(),
                self.radicand.denom(),
                self.degree
            )
        }
    }
}

/// One enumerated root.
#[derive(Clone, Debug)]
pub struct Root {
    pub value: ApproxComplex,
    /// Exact modulus as a radical expression.
    pub modulus: RadicalDesc,
    /// Argument as a rational multiple of pi, when exactly known.
    pub angle_pi: Option<BigRational>,
    /// Argument in radians (high precision).
    pub angle: BigReal,
    /// `|root^n - value| / |value|`, high precision.
    pub residual: BigReal,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RootError {
    ZeroValue,
    ZeroDegree,
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::ZeroValue => write!(f, "roots of zero are degenerate"),
            RootError::ZeroDegree => write!(f, "root degree must be positive"),
        }
    }
}

impl core::error::Error for RootError {}

fn prec() -> usize {
    settings::precision_bits() + 32
}

fn pi(cc: &mut Consts) -> BigReal {
    BigReal::from_raw(cc.pi(prec(), RM))
}

fn cos(x: &BigReal, cc: &mut Consts) -> BigReal {
    BigReal::from_raw(x.raw().cos(prec(), RM, cc))
}

fn sin(x: &BigReal, cc: &mut Consts) -> BigReal {
    BigReal::from_raw(x.raw().sin(prec(), RM, cc))
}

fn atan(x: &BigReal, cc: &mut Consts) -> BigReal {
    BigReal::from_raw(x.raw().atan(prec(), RM, cc))
}

/// Principal argument of `re + im*i` (both nonzero paths handled; callers
/// deal with the purely real/imaginary cases exactly).
fn atan2(im: &BigReal, re: &BigReal, cc: &mut Consts) -> BigReal {
    if re.is_zero() {
        let half_pi = pi(cc).div(&BigReal::from_i64(2));
        return if im.is_negative() { half_pi.neg() } else { half_pi };
    }
    let base = atan(&im.div(re), cc);
    if !re.is_negative() {
        base
    } else if im.is_negative() {
        base.sub(&pi(cc))
    } else {
        base.add(&pi(cc))
    }
}

/// `radicand^(1/degree)` for positive rational radicand.
fn radical_value(radicand: &BigRational, degree: u32, cc: &mut Consts) -> BigReal {
    let r = BigReal::from_rational(radicand);
    let e = BigReal::from_rational(&BigRational::new(BigInt::from(1), BigInt::from(degree)));
    BigReal::from_raw(BigFloat::pow(r.raw(), e.raw(), prec(), RM, cc))
}

/// All `n` complex n-th roots of `value`, ordered by increasing argument
/// offset `k` in `(arg + 2*pi*k)/n`.
pub fn nth_roots(value: &RootInput, n: u32) -> Result<Vec<Root>, RootError> {
    if n == 0 {
        return Err(RootError::ZeroDegree);
    }
    let mut cc = Consts::new().expect("constants cache");

    // exact polar data of the input
    let (radicand, degree, angle_pi, target): (BigRational, u32, Option<BigRational>, ApproxComplex) =
        match value {
            RootInput::Exact(v) => {
                if v.is_zero() {
                    return Err(RootError::ZeroValue);
                }
                if v.is_real() {
                    let a = v.re();
                    (
                        a.abs(),
                        n,
                        Some(if a.is_negative() {
                            BigRational::from_integer(BigInt::from(1))
                        } else {
                            BigRational::zero()
                        }),
                        v.to_approx(),
                    )
                } else if v.is_imaginary() {
                    let b = v.im();
                    (
                        b.abs(),
                        n,
                        Some(BigRational::new(
                            BigInt::from(if b.is_negative() { -1 } else { 1 }),
                            BigInt::from(2),
                        )),
                        v.to_approx(),
                    )
                } else {
                    (v.modulus_sq(), 2 * n, None, v.to_approx())
                }
            }
            RootInput::Polar { modulus, angle_pi } => {
                if modulus.is_zero() {
                    return Err(RootError::ZeroValue);
                }
                let theta = BigReal::from_rational(angle_pi).mul(&pi(&mut cc));
                let m = BigReal::from_rational(modulus);
                let target = ApproxComplex::new(
                    m.mul(&cos(&theta, &mut cc)),
                    m.mul(&sin(&theta, &mut cc)),
                );
                (modulus.clone(), n, Some(angle_pi.clone()), target)
            }
        };

    // base argument of the input
    let theta = match &angle_pi {
        Some(q) => BigReal::from_rational(q).mul(&pi(&mut cc)),
        None => match value {
            RootInput::Exact(v) => {
                let a = v.to_approx();
                atan2(a.im(), a.re(), &mut cc)
            }
            RootInput::Polar { .. } => unreachable!(),
        },
    };

    let modulus_desc = RadicalDesc {
        radicand: radicand.clone(),
        degree,
    };
    let root_modulus = radical_value(&radicand, degree, &mut cc);
    let two_pi = pi(&mut cc).mul(&BigReal::from_i64(2));
    let n_real = BigReal::from_i64(n as i64);
    let target_mod = target.modulus();

    let mut out = Vec::with_capacity(n as usize);
    for k in 0..n {
        let angle = theta
            .add(&two_pi.mul(&BigReal::from_i64(k as i64)))
            .div(&n_real);
        let angle_pi_k = angle_pi.as_ref().map(|q| {
            (q + BigRational::from_integer(BigInt::from(2 * k as i64)))
                / BigRational::from_integer(BigInt::from(n))
        });
        let value_k = ApproxComplex::new(
            root_modulus.mul(&cos(&angle, &mut cc)),
            root_modulus.mul(&sin(&angle, &mut cc)),
        );
        let residual = value_k
            .powi(n)
            .sub(&target)
            .modulus()
            .div(&target_mod);
        out.push(Root {
            value: value_k,
            modulus: modulus_desc.clone(),
            angle_pi: angle_pi_k,
            angle,
            residual,
        });
    }
    Ok(out)
}
