//! Sparse multivariate polynomials with an ordered variable list.

use alloc::collections::BTreeMap;
use alloc::fmt;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{ApproxComplex, BigReal, Coeff, ExactComplex};
use crate::settings;

/// A polynomial over the coefficient engine `C`. Exponent vectors always
/// have one entry per variable, and stored coefficients are nonzero.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<C: Coeff = ExactComplex> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, C>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyError {
    UnknownVariable(String),
    MixedVariableLists,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            PolyError::MixedVariableLists => write!(f, "operands use different variable lists"),
        }
    }
}

impl core::error::Error for PolyError {}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EvalError {
    UnboundVariable(String),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::UnboundVariable(name) => write!(f, "unbound variable `{name}`"),
        }
    }
}

impl core::error::Error for EvalError {}

/// Result of a point evaluation: the value together with a conservative
/// absolute bound on the accumulated rounding error.
#[derive(Clone, Debug)]
pub struct Evaluated {
    pub value: ApproxComplex,
    pub error_bound: BigReal,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(vars: &[&str]) -> Self {
        Self {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
    {
        let mut p = Self::zero(vars);
        for (exps, coeff) in terms {
            p.accumulate(exps, coeff);
        }
        p
    }

    /// Adds `coeff * x^exps` into the term map, dropping exact zeros.
    pub fn accumulate(&mut self, exps: Vec<u32>, coeff: C) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, coeff);
            }
            Some(existing) => {
                let sum = existing.add(&coeff);
                if !sum.is_zero() {
                    self.terms.insert(exps, sum);
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent of `var` across all terms.
    pub fn degree_in(&self, var_idx: usize) -> u32 {
        self.terms.keys().map(|e| e[var_idx]).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::MixedVariableLists);
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::MixedVariableLists);
        }
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut out = Self::zero(&vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.accumulate(exps, ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
            return Self::zero(&vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// `var * self`, used when assembling `sum_i x_i dF/dx_i`.
    pub fn mul_var(&self, var: &str) -> Result<Self, PolyError> {
        let idx = self
            .var_index(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        Ok(Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[idx] += 1;
                    (e, c.clone())
                })
                .collect(),
        })
    }

    /// Exact formal partial derivative.
    pub fn differentiate(&self, var: &str) -> Result<Self, PolyError> {
        let idx = self
            .var_index(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut out = Self::zero(&vars);
        for (e, c) in &self.terms {
            let k = e[idx];
            if k == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[idx] = k - 1;
            let factor = C::from_exact(&ExactComplex::from_integer(k as i64));
            out.accumulate(exps, c.mul(&factor));
        }
        Ok(out)
    }

    /// Re-coefficient the polynomial into another engine.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), f(c))).collect(),
        }
    }
}

impl MultiPoly<ExactComplex> {
    /// All coefficients rendered into the approximate engine.
    pub fn to_approx(&self) -> MultiPoly<ApproxComplex> {
        self.map(|c| c.to_approx())
    }

    /// True when every coefficient is real (the probe machinery only
    /// accepts real hypersurfaces).
    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }
}

impl MultiPoly<ApproxComplex> {
    /// Horner-style evaluation at a point bound by variable name.
    pub fn evaluate(
        &self,
        point: &BTreeMap<String, ApproxComplex>,
    ) -> Result<Evaluated, EvalError> {
        let mut coords = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            match point.get(v) {
                Some(c) => coords.push(c.clone()),
                None => return Err(EvalError::UnboundVariable(v.clone())),
            }
        }
        Ok(self.evaluate_at(&coords))
    }

    /// Horner-style evaluation at a point given in variable order.
    pub fn evaluate_at(&self, coords: &[ApproxComplex]) -> Evaluated {
        assert_eq!(coords.len(), self.vars.len());
        let entries: Vec<(&Vec<u32>, &ApproxComplex)> = self.terms.iter().collect();
        let (value, error_bound) = eval_rec(&entries, 0, coords);
        Evaluated { value, error_bound }
    }
}

/// One ulp of slack at the working precision, scaled by magnitude; the
/// factor 8 absorbs the handful of roundings inside a complex mul/add.
fn ulp_of(value: &ApproxComplex) -> BigReal {
    let p = settings::precision_bits() as i32;
    let eps = BigReal::from_f64(libm::scalbn(8.0, -(p.min(1000))));
    value.modulus().mul(&eps)
}

fn add_tracked(
    a: (ApproxComplex, BigReal),
    b: (ApproxComplex, BigReal),
) -> (ApproxComplex, BigReal) {
    let v = a.0.add(&b.0);
    let e = a.1.add(&b.1).add(&ulp_of(&v));
    (v, e)
}

fn mul_tracked(
    a: &(ApproxComplex, BigReal),
    b: &(ApproxComplex, BigReal),
) -> (ApproxComplex, BigReal) {
    let v = a.0.mul(&b.0);
    let e = a
        .0
        .modulus()
        .mul(&b.1)
        .add(&b.0.modulus().mul(&a.1))
        .add(&a.1.mul(&b.1))
        .add(&ulp_of(&v));
    (v, e)
}

fn pow_tracked(base: &(ApproxComplex, BigReal), k: u32) -> (ApproxComplex, BigReal) {
    let mut acc = (ApproxComplex::one(), BigReal::zero());
    for _ in 0..k {
        acc = mul_tracked(&acc, base);
    }
    acc
}

/// Recursive sparse Horner over the variable at `var_idx`; `entries` is
/// sorted lexicographically, so groups sharing the leading exponent are
/// contiguous.
fn eval_rec(
    entries: &[(&Vec<u32>, &ApproxComplex)],
    var_idx: usize,
    coords: &[ApproxComplex],
) -> (ApproxComplex, BigReal) {
    if entries.is_empty() {
        return (ApproxComplex::zero(), BigReal::zero());
    }
    if var_idx == coords.len() {
        // all exponents consumed; at most one constant term remains
        let mut acc = (ApproxComplex::zero(), BigReal::zero());
        for (_, c) in entries {
            acc = add_tracked(acc, ((*c).clone(), BigReal::zero()));
        }
        return acc;
    }

    // split into contiguous groups by the exponent of this variable
    let mut groups: Vec<(u32, &[(&Vec<u32>, &ApproxComplex)])> = Vec::new();
    let mut start = 0;
    for i in 1..=entries.len() {
        if i == entries.len() || entries[i].0[var_idx] != entries[start].0[var_idx] {
            groups.push((entries[start].0[var_idx], &entries[start..i]));
            start = i;
        }
    }

    let x = (coords[var_idx].clone(), BigReal::zero());
    // Horner from the highest exponent down, multiplying by gap powers
    let mut acc = eval_rec(groups[groups.len() - 1].1, var_idx + 1, coords);
    let mut prev_exp = groups[groups.len() - 1].0;
    for (exp, group) in groups.iter().rev().skip(1) {
        let gap = pow_tracked(&x, prev_exp - exp);
        acc = mul_tracked(&acc, &gap);
        acc = add_tracked(acc, eval_rec(group, var_idx + 1, coords));
        prev_exp = *exp;
    }
    if prev_exp > 0 {
        let gap = pow_tracked(&x, prev_exp);
        acc = mul_tracked(&acc, &gap);
    }
    acc
}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest term first reads naturally
        for (i, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            let rendered = alloc::format!("{coeff}");
            let (sign, body) = match rendered.strip_prefix('-') {
                Some(rest) if !rendered.starts_with("(-") => ("-", String::from(rest)),
                _ => ("+", rendered),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, e) in self.vars.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(alloc::format!("{v}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", body, factors.join("*"))?;
            }
        }
        Ok(())
    }
}
