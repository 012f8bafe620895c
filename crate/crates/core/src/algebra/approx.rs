//! The approximate engine: binary floating point at configurable precision
//! (default 34 significant decimal digits) with a wide exponent range.
//!
//! Every arithmetic operation is correctly rounded at the working precision,
//! so an individual operation carries a relative error budget of one ulp
//! (`2^(1-p)` at `p` bits). Comparisons against zero go through the module
//! zero threshold, see [`ApproxComplex::is_noise`].

use alloc::fmt;

use astro_float::{BigFloat, RoundingMode, Sign};
use num_bigint::{BigInt, Sign as IntSign};
use num_rational::BigRational;
use num_traits::Zero;

use super::{Coeff, ExactComplex};
use crate::settings;

const RM: RoundingMode = RoundingMode::ToEven;

/// High-precision real number.
#[derive(Clone)]
pub struct BigReal(BigFloat);

impl BigReal {
    fn working_prec(&self, other: &Self) -> usize {
        let a = self.0.precision().unwrap_or(0);
        let b = other.0.precision().unwrap_or(0);
        a.max(b).max(settings::precision_bits())
    }

    pub fn zero() -> Self {
        Self(BigFloat::from_i64(0, settings::precision_bits()))
    }

    pub fn one() -> Self {
        Self(BigFloat::from_i64(1, settings::precision_bits()))
    }

    pub fn from_i64(v: i64) -> Self {
        Self(BigFloat::from_i64(v, settings::precision_bits()))
    }

    pub fn from_f64(v: f64) -> Self {
        Self(BigFloat::from_f64(v, settings::precision_bits()))
    }

    /// Exact conversion of a big integer (no rounding: the mantissa keeps
    /// every word).
    pub fn from_bigint(v: &BigInt) -> Self {
        let (sign, digits) = v.to_u64_digits();
        if digits.is_empty() {
            return Self::zero();
        }
        let s = match sign {
            IntSign::Minus => Sign::Neg,
            _ => Sign::Pos,
        };
        let e = 64 * digits.len();
        debug_assert!(e <= i32::MAX as usize);
        Self(BigFloat::from_words(&digits, s, e as i32))
    }

    /// `num/den` rounded once at the working precision.
    pub fn from_rational(r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let num = Self::from_bigint(r.numer());
        let den = Self::from_bigint(r.denom());
        num.div(&den)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.working_prec(other);
        Self(self.0.add(&other.0, p, RM))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.working_prec(other);
        Self(self.0.sub(&other.0, p, RM))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.working_prec(other);
        Self(self.0.mul(&other.0, p, RM))
    }

    pub fn div(&self, other: &Self) -> Self {
        debug_assert!(!other.is_zero(), "division by zero");
        let p = self.working_prec(other);
        Self(self.0.div(&other.0, p, RM))
    }

    pub fn neg(&self) -> Self {
        Self(self.0.neg())
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// Square root; panics in debug builds on negative input.
    pub fn sqrt(&self) -> Self {
        debug_assert!(!self.is_negative(), "sqrt of negative value");
        let p = self.0.precision().unwrap_or(0).max(settings::precision_bits());
        Self(self.0.sqrt(p, RM))
    }

    pub fn powi(&self, n: usize) -> Self {
        let p = self.0.precision().unwrap_or(0).max(settings::precision_bits());
        Self(self.0.powi(n, p, RM))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        match self.0.cmp(&other.0) {
            Some(c) if c < 0 => core::cmp::Ordering::Less,
            Some(c) if c > 0 => core::cmp::Ordering::Greater,
            Some(_) => core::cmp::Ordering::Equal,
            None => {
                debug_assert!(false, "NaN in BigReal comparison");
                core::cmp::Ordering::Equal
            }
        }
    }

    pub fn max(&self, other: &Self) -> Self {
        if self.cmp(other) == core::cmp::Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        let Some(e) = self.0.exponent() else { return f64::NAN };
        let Some(words) = self.0.mantissa_digits() else {
            return f64::NAN;
        };
        if words.is_empty() {
            return 0.0;
        }
        let hi = words[words.len() - 1] as f64;
        let lo = if words.len() >= 2 {
            words[words.len() - 2] as f64
        } else {
            0.0
        };
        // mantissa is a fraction in [1/2, 1) scaled by 2^64 per word
        let frac = hi + libm::scalbn(lo, -64);
        let v = libm::scalbn(frac, e - 64);
        if self.0.is_negative() {
            -v
        } else {
            v
        }
    }

    pub(crate) fn raw(&self) -> &BigFloat {
        &self.0
    }

    pub(crate) fn from_raw(raw: BigFloat) -> Self {
        Self(raw)
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == core::cmp::Ordering::Equal
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decimal_string())
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decimal_string())
    }
}

impl BigReal {
    /// Full-precision decimal rendering.
    pub fn decimal_string(&self) -> alloc::string::String {
        use alloc::string::ToString;
        let mut cc = match astro_float::Consts::new() {
            Ok(cc) => cc,
            Err(_) => return self.to_f64().to_string(),
        };
        match self.0.format(astro_float::Radix::Dec, RM, &mut cc) {
            Ok(s) => s,
            Err(_) => self.to_f64().to_string(),
        }
    }
}

/// Complex number over [`BigReal`].
#[derive(Clone, PartialEq, Debug)]
pub struct ApproxComplex {
    re: BigReal,
    im: BigReal,
}

impl ApproxComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: BigReal) -> Self {
        Self::new(re, BigReal::zero())
    }

    pub fn from_f64_pair(re: f64, im: f64) -> Self {
        Self::new(BigReal::from_f64(re), BigReal::from_f64(im))
    }

    pub fn from_rationals(re: &BigRational, im: &BigRational) -> Self {
        Self::new(BigReal::from_rational(re), BigReal::from_rational(im))
    }

    pub fn re(&self) -> &BigReal {
        &self.re
    }

    pub fn im(&self) -> &BigReal {
        &self.im
    }

    pub fn modulus_sq(&self) -> BigReal {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn modulus(&self) -> BigReal {
        self.modulus_sq().sqrt()
    }

    pub fn scale(&self, s: &BigReal) -> Self {
        Self::new(self.re.mul(s), self.im.mul(s))
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::new(BigReal::one(), BigReal::zero());
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Coeff for ApproxComplex {
    type Mag = BigReal;

    fn zero() -> Self {
        Self::new(BigReal::zero(), BigReal::zero())
    }

    fn one() -> Self {
        Self::new(BigReal::one(), BigReal::zero())
    }

    fn add(&self, other: &Self) -> Self {
        Self::new(self.re.add(&other.re), self.im.add(&other.im))
    }

    fn sub(&self, other: &Self) -> Self {
        Self::new(self.re.sub(&other.re), self.im.sub(&other.im))
    }

    fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        )
    }

    fn div(&self, other: &Self) -> Option<Self> {
        let m = other.modulus_sq();
        if m.is_zero() {
            return None;
        }
        let num = self.mul(&other.conj());
        Some(Self::new(num.re.div(&m), num.im.div(&m)))
    }

    fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg())
    }

    fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mag_sq(&self) -> BigReal {
        self.modulus_sq()
    }

    fn is_noise(&self, scale_sq: &BigReal) -> bool {
        if self.is_zero() {
            return true;
        }
        if scale_sq.is_zero() {
            return false;
        }
        let eps = BigReal::from_f64(settings::zero_threshold());
        let bound = eps.mul(&eps).mul(scale_sq);
        self.modulus_sq().cmp(&bound) == core::cmp::Ordering::Less
    }

    fn mag_zero() -> BigReal {
        BigReal::zero()
    }

    fn mag_add(a: &BigReal, b: &BigReal) -> BigReal {
        a.add(b)
    }

    fn mag_mul(a: &BigReal, b: &BigReal) -> BigReal {
        a.mul(b)
    }

    fn mag_div(a: &BigReal, b: &BigReal) -> Option<BigReal> {
        if b.is_zero() {
            None
        } else {
            Some(a.div(b))
        }
    }

    fn mag_max(a: &BigReal, b: &BigReal) -> BigReal {
        a.max(b)
    }

    fn mag_to_f64(m: &BigReal) -> f64 {
        m.to_f64()
    }

    fn mag_to_rational(_m: &BigReal) -> Option<BigRational> {
        None
    }

    fn from_exact(value: &ExactComplex) -> Self {
        value.to_approx()
    }

    fn to_approx(&self) -> ApproxComplex {
        self.clone()
    }

    fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    fn engine_name() -> &'static str {
        "approx"
    }
}

impl fmt::Display for ApproxComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
