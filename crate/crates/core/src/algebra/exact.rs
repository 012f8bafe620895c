//! Gaussian rational scalars: complex numbers with exact reduced-fraction
//! real and imaginary parts.

use alloc::fmt;
use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ApproxComplex, Coeff};

/// An exact complex number `re + im*i` with rational parts.
///
/// `BigRational` keeps fractions reduced with positive denominators, so the
/// representation is canonical and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactComplex {
    re: BigRational,
    im: BigRational,
}

impl ExactComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den` as a real rational. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero() && !self.im.is_zero()
    }

    /// `re^2 + im^2`, exactly.
    pub fn modulus_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        let m = self.modulus_sq();
        if m.is_zero() {
            return None;
        }
        Some(Self::new(&self.re / &m, -&self.im / &m))
    }
}

impl Coeff for ExactComplex {
    type Mag = BigRational;

    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    fn add(&self, other: &Self) -> Self {
        Self::new(&self.re + &other.re, &self.im + &other.im)
    }

    fn sub(&self, other: &Self) -> Self {
        Self::new(&self.re - &other.re, &self.im - &other.im)
    }

    fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.mul(&inv))
    }

    fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }

    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mag_sq(&self) -> BigRational {
        self.modulus_sq()
    }

    fn is_noise(&self, _scale_sq: &BigRational) -> bool {
        false
    }

    fn mag_zero() -> BigRational {
        BigRational::zero()
    }

    fn mag_add(a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn mag_mul(a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn mag_div(a: &BigRational, b: &BigRational) -> Option<BigRational> {
        if b.is_zero() {
            None
        } else {
            Some(a / b)
        }
    }

    fn mag_max(a: &BigRational, b: &BigRational) -> BigRational {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn mag_to_f64(m: &BigRational) -> f64 {
        rational_to_f64(m)
    }

    fn mag_to_rational(m: &BigRational) -> Option<BigRational> {
        Some(m.clone())
    }

    fn from_exact(value: &ExactComplex) -> Self {
        value.clone()
    }

    fn to_approx(&self) -> ApproxComplex {
        ApproxComplex::from_rationals(&self.re, &self.im)
    }

    fn to_f64_pair(&self) -> (f64, f64) {
        (rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    fn engine_name() -> &'static str {
        "exact"
    }
}

/// Double rendering of a rational, via the approximate engine so huge
/// numerators/denominators cannot overflow on the way through.
pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    crate::algebra::BigReal::from_rational(r).to_f64()
}

fn fmt_rational(r: &BigRational) -> String {
    use alloc::string::ToString;
    if r.is_integer() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExactComplex {
    /// Renders in the polynomial-grammar coefficient syntax: `3`, `-5/2`,
    /// `i`, `2i`, `(1+2i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im_part = |f: &mut fmt::Formatter<'_>, im: &BigRational, lead_sign: bool| {
            if im.is_one() {
                if lead_sign {
                    write!(f, "+i")
                } else {
                    write!(f, "i")
                }
            } else if (-im).is_one() {
                write!(f, "-i")
            } else if im.is_positive() && lead_sign {
                write!(f, "+{}i", fmt_rational(im))
            } else {
                write!(f, "{}i", fmt_rational(im))
            }
        };
        if self.re.is_zero() {
            im_part(f, &self.im, false)
        } else {
            write!(f, "({}", fmt_rational(&self.re))?;
            im_part(f, &self.im, true)?;
            write!(f, ")")
        }
    }
}

impl fmt::Debug for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
