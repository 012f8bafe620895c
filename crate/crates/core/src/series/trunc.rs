//! Truncated power series in one parameter with reliable-order tracking.

use alloc::collections::BTreeMap;
use alloc::fmt;
use alloc::vec::Vec;

use crate::algebra::{ApproxComplex, BigReal, Coeff};

/// Order of the lowest nonzero term of a series along an arc, or the
/// statement that the series is zero through its reliable order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valuation {
    Finite(u32),
    /// Zero through exponent `N - 1`; everything at `N` and above is
    /// unknown.
    AboveTrunc(u32),
}

impl Valuation {
    pub fn finite(&self) -> Option<u32> {
        match self {
            Valuation::Finite(n) => Some(*n),
            Valuation::AboveTrunc(_) => None,
        }
    }

    /// A lower bound for the true valuation under either variant.
    pub fn lower_bound(&self) -> u32 {
        match self {
            Valuation::Finite(n) => *n,
            Valuation::AboveTrunc(n) => *n,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Valuation::Finite(_))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(n) => write!(f, "{n}"),
            Valuation::AboveTrunc(n) => write!(f, ">={n}"),
        }
    }
}

/// Raised when a leading term is requested from a series that is zero
/// through its reliable order; callers should raise the truncation order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Indeterminate {
    pub reliable_order: u32,
}

impl fmt::Display for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "series is zero through its reliable order {}; raise the truncation order",
            self.reliable_order
        )
    }
}

impl core::error::Error for Indeterminate {}

/// Sorted sparse series `sum c_e s^e` with all stored exponents below the
/// truncation order `trunc`; coefficients at `trunc` and above are unknown.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<C: Coeff> {
    terms: Vec<(u32, C)>,
    trunc: u32,
}

impl<C: Coeff> TruncSeries<C> {
    pub fn zero(trunc: u32) -> Self {
        Self {
            terms: Vec::new(),
            trunc,
        }
    }

    /// `coeff * s^exp`; zero coefficients and terms at or beyond the
    /// truncation are dropped.
    pub fn monomial(exp: u32, coeff: C, trunc: u32) -> Self {
        let mut s = Self::zero(trunc);
        if !coeff.is_zero() && exp < trunc {
            s.terms.push((exp, coeff));
        }
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, C)>, trunc: u32) -> Self {
        let mut map: BTreeMap<u32, C> = BTreeMap::new();
        for (e, c) in terms {
            if e >= trunc || c.is_zero() {
                continue;
            }
            let merged = match map.remove(&e) {
                Some(old) => old.add(&c),
                None => c,
            };
            if !merged.is_zero() {
                map.insert(e, merged);
            }
        }
        Self {
            terms: map.into_iter().collect(),
            trunc,
        }
    }

    pub fn terms(&self) -> &[(u32, C)] {
        &self.terms
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn valuation(&self) -> Valuation {
        match self.terms.first() {
            Some((e, _)) => Valuation::Finite(*e),
            None => Valuation::AboveTrunc(self.trunc),
        }
    }

    /// Exponent and coefficient of the lowest-order term.
    pub fn leading(&self) -> Result<(u32, &C), Indeterminate> {
        self.terms
            .first()
            .map(|(e, c)| (*e, c))
            .ok_or(Indeterminate {
                reliable_order: self.trunc,
            })
    }

    /// Top stored exponent, if any.
    pub fn top_exponent(&self) -> Option<u32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Addition. The reliable order is the minimum of the operands'.
    /// Where both operands carry the same exponent, a sum that is tiny
    /// relative to what was cancelled is treated as noise and dropped
    /// (approximate engine only; the exact engine drops exact zeros).
    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some((e, c)), None) => {
                    if *e < trunc {
                        terms.push((*e, c.clone()));
                    }
                    a.next();
                }
                (None, Some((e, c))) => {
                    if *e < trunc {
                        terms.push((*e, c.clone()));
                    }
                    b.next();
                }
                (Some((ea, ca)), Some((eb, cb))) => {
                    if ea < eb {
                        if *ea < trunc {
                            terms.push((*ea, ca.clone()));
                        }
                        a.next();
                    } else if eb < ea {
                        if *eb < trunc {
                            terms.push((*eb, cb.clone()));
                        }
                        b.next();
                    } else {
                        if *ea < trunc {
                            let sum = ca.add(cb);
                            let scale = C::mag_max(&ca.mag_sq(), &cb.mag_sq());
                            if !sum.is_zero() && !sum.is_noise(&scale) {
                                terms.push((*ea, sum));
                            }
                        }
                        a.next();
                        b.next();
                    }
                }
            }
        }
        Self { terms, trunc }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
            trunc: self.trunc,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.trunc);
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c.mul(k))).collect(),
            trunc: self.trunc,
        }
    }

    /// Multiplication. The reliable order is
    /// `min(N_f + val(g), N_g + val(f))` with `val` read as the truncation
    /// order for series that are zero through it. Per-exponent sums that
    /// are tiny relative to the largest contributing product are dropped as
    /// cancellation noise (approximate engine).
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = (self.trunc.saturating_add(other.valuation().lower_bound()))
            .min(other.trunc.saturating_add(self.valuation().lower_bound()));
        let mut acc: BTreeMap<u32, (C, C::Mag)> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            if *ea >= trunc {
                break;
            }
            for (eb, cb) in &other.terms {
                let e = ea.saturating_add(*eb);
                if e >= trunc {
                    break;
                }
                let p = ca.mul(cb);
                let m = p.mag_sq();
                match acc.remove(&e) {
                    None => {
                        acc.insert(e, (p, m));
                    }
                    Some((sum, scale)) => {
                        acc.insert(e, (sum.add(&p), C::mag_max(&scale, &m)));
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, (c, scale))| !c.is_zero() && !c.is_noise(scale))
            .map(|(e, (c, _))| (e, c))
            .collect();
        Self { terms, trunc }
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Self::monomial(0, C::one(), u32::MAX);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute `s -> s^k`: exponents and the truncation order scale by
    /// `k`, so every valuation is multiplied by exactly `k`.
    pub fn reparam(&self, k: u32) -> Self {
        assert!(k >= 1);
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.saturating_mul(k), c.clone()))
                .collect(),
            trunc: self.trunc.saturating_mul(k),
        }
    }

    /// Numeric value at a real parameter, in the approximate engine.
    pub fn eval_at(&self, s: &BigReal) -> ApproxComplex {
        let mut acc = ApproxComplex::zero();
        let mut prev_exp: Option<u32> = None;
        // Horner from the top exponent down
        for (e, c) in self.terms.iter().rev() {
            if let Some(pe) = prev_exp {
                acc = acc.scale(&real_pow(s, pe - e));
            }
            acc = acc.add(&c.to_approx());
            prev_exp = Some(*e);
        }
        match prev_exp {
            Some(e) if e > 0 => acc.scale(&real_pow(s, e)),
            _ => acc,
        }
    }
}

fn real_pow(s: &BigReal, e: u32) -> BigReal {
    s.powi(e as usize)
}

impl<C: Coeff> fmt::Display for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "O(s^{})", self.trunc)?;
            return Ok(());
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*s")?,
                _ => write!(f, "({c})*s^{e}")?,
            }
        }
        if self.trunc != u32::MAX {
            write!(f, " + O(s^{})", self.trunc)?;
        }
        Ok(())
    }
}
