//! Analytic arcs: one truncated series per ambient variable, all sharing a
//! single real positive parameter (limits are one-sided, `s -> 0+`).

use alloc::collections::BTreeMap;
use alloc::fmt;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::trunc::TruncSeries;
use crate::algebra::{ApproxComplex, BigReal, Coeff, ExactComplex};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ArcError {
    DuplicateComponent(String),
    ParameterShadowed(String),
}

impl fmt::Display for ArcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcError::DuplicateComponent(v) => write!(f, "duplicate component `{v}`"),
            ArcError::ParameterShadowed(v) => {
                write!(f, "component `{v}` shadows the arc parameter")
            }
        }
    }
}

impl core::error::Error for ArcError {}

/// A parametrised arc `gamma(s)` with one component series per variable.
#[derive(Clone, PartialEq, Debug)]
pub struct Arc<C: Coeff> {
    param: String,
    components: Vec<(String, TruncSeries<C>)>,
}

impl<C: Coeff> Arc<C> {
    pub fn new(
        param: &str,
        components: Vec<(String, TruncSeries<C>)>,
    ) -> Result<Self, ArcError> {
        let mut seen: Vec<&str> = Vec::new();
        for (name, _) in &components {
            if name == param {
                return Err(ArcError::ParameterShadowed(name.clone()));
            }
            if seen.contains(&name.as_str()) {
                return Err(ArcError::DuplicateComponent(name.clone()));
            }
            seen.push(name);
        }
        Ok(Self {
            param: param.to_string(),
            components,
        })
    }

    pub fn param(&self) -> &str {
        &self.param
    }

    pub fn component(&self, var: &str) -> Option<&TruncSeries<C>> {
        self.components
            .iter()
            .find(|(name, _)| name == var)
            .map(|(_, s)| s)
    }

    pub fn components(&self) -> impl Iterator<Item = (&str, &TruncSeries<C>)> {
        self.components.iter().map(|(n, s)| (n.as_str(), s))
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.components.iter().map(|(n, _)| n.as_str()).collect()
    }

    /// Replace one component, keeping the rest.
    pub fn with_component(&self, var: &str, series: TruncSeries<C>) -> Self {
        let mut out = self.clone();
        for (name, s) in out.components.iter_mut() {
            if name == var {
                *s = series;
                return out;
            }
        }
        out.components.push((var.to_string(), series));
        out
    }

    /// Substitute `s -> s^k` in every component.
    pub fn reparam(&self, k: u32) -> Self {
        Self {
            param: self.param.clone(),
            components: self
                .components
                .iter()
                .map(|(n, s)| (n.clone(), s.reparam(k)))
                .collect(),
        }
    }

    /// Numeric point `gamma(s)` keyed by variable name.
    pub fn eval_at(&self, s: &BigReal) -> BTreeMap<String, ApproxComplex> {
        self.components
            .iter()
            .map(|(n, series)| (n.clone(), series.eval_at(s)))
            .collect()
    }

    pub fn engine_name(&self) -> &'static str {
        C::engine_name()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArcParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ArcParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "arc parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl core::error::Error for ArcParseError {}

/// Parse the arc text format: entries `var = expr` separated by `;` or
/// newlines, e.g. `x = s^8; y = a*s^5; z = (4/a^7)*s^5; t = (-5/a^6)*s^2`.
///
/// Expressions admit integers, `i`, the parameter, bound names (`a` above,
/// looked up in `bindings`), `+ - * / ^` and parentheses. Division is by
/// constants only.
pub fn parse_arc<C: Coeff>(
    text: &str,
    param: &str,
    bindings: &BTreeMap<String, C>,
    trunc: u32,
) -> Result<Arc<C>, ArcParseError> {
    let mut components = Vec::new();
    let bytes = text.as_bytes();
    let mut entry_start = 0;
    for (chunk, base) in split_entries(bytes) {
        let chunk_str = core::str::from_utf8(chunk).map_err(|_| ArcParseError {
            pos: base,
            msg: "invalid utf-8".to_string(),
        })?;
        if chunk_str.trim().is_empty() {
            continue;
        }
        let mut p = ExprParser {
            bytes: chunk,
            pos: 0,
            base,
            param,
            bindings,
            trunc,
        };
        let (name, series) = p.entry()?;
        components.push((name, series));
        entry_start = base;
    }
    let _ = entry_start;
    Arc::new(param, components).map_err(|e| ArcParseError {
        pos: 0,
        msg: alloc::format!("{e}"),
    })
}

fn split_entries(bytes: &[u8]) -> Vec<(&[u8], usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, &b) in bytes.iter().enumerate() {
        if b == b';' || b == b'\n' {
            out.push((&bytes[start..i], start));
            start = i + 1;
        }
    }
    out.push((&bytes[start..], start));
    out
}

struct ExprParser<'a, C: Coeff> {
    bytes: &'a [u8],
    pos: usize,
    base: usize,
    param: &'a str,
    bindings: &'a BTreeMap<String, C>,
    trunc: u32,
}

impl<'a, C: Coeff> ExprParser<'a, C> {
    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ArcParseError> {
        Err(ArcParseError {
            pos: self.base + self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn entry(&mut self) -> Result<(String, TruncSeries<C>), ArcParseError> {
        self.skip_ws();
        let name = self.ident()?;
        self.skip_ws();
        if self.peek() != Some(b'=') {
            return self.error("expected `=`");
        }
        self.pos += 1;
        let series = self.expr()?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return self.error("trailing input after expression");
        }
        Ok((name, series))
    }

    fn ident(&mut self) -> Result<String, ArcParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a name");
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos]).to_string())
    }

    fn uint(&mut self) -> Result<u32, ArcParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|_| ArcParseError {
                pos: self.base + start,
                msg: "integer too large".to_string(),
            })
    }

    fn expr(&mut self) -> Result<TruncSeries<C>, ArcParseError> {
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<TruncSeries<C>, ArcParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let div_pos = self.pos;
                    let f = self.factor()?;
                    acc = self.divide(acc, f, div_pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn divide(
        &self,
        num: TruncSeries<C>,
        den: TruncSeries<C>,
        at: usize,
    ) -> Result<TruncSeries<C>, ArcParseError> {
        // constants only: a single term at exponent zero
        let constant = match den.terms() {
            [(0, c)] => c.clone(),
            _ => {
                return Err(ArcParseError {
                    pos: self.base + at,
                    msg: "division is only defined by nonzero constants".to_string(),
                })
            }
        };
        let inv = match C::one().div(&constant) {
            Some(v) => v,
            None => {
                return Err(ArcParseError {
                    pos: self.base + at,
                    msg: "division by zero".to_string(),
                })
            }
        };
        Ok(num.scalar_mul(&inv))
    }

    fn factor(&mut self) -> Result<TruncSeries<C>, ArcParseError> {
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
            self.skip_ws();
        }
        let mut base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            base = base.pow(e);
        }
        if negate {
            base = base.neg();
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<TruncSeries<C>, ArcParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0'..=b'9') => {
                let start = self.pos;
                while matches!(self.peek(), Some(b'0'..=b'9')) {
                    self.pos += 1;
                }
                let text = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let n: i64 = text.parse().map_err(|_| ArcParseError {
                    pos: self.base + start,
                    msg: "integer too large".to_string(),
                })?;
                Ok(TruncSeries::monomial(
                    0,
                    C::from_exact(&ExactComplex::from_integer(n)),
                    self.trunc,
                ))
            }
            Some(b'i') if !self.is_ident_continuation(self.pos + 1) => {
                self.pos += 1;
                Ok(TruncSeries::monomial(
                    0,
                    C::from_exact(&ExactComplex::i()),
                    self.trunc,
                ))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                let name = self.ident()?;
                if name == self.param {
                    return Ok(TruncSeries::monomial(1, C::one(), self.trunc));
                }
                match self.bindings.get(&name) {
                    Some(v) => Ok(TruncSeries::monomial(0, v.clone(), self.trunc)),
                    None => Err(ArcParseError {
                        pos: self.base + start,
                        msg: alloc::format!("unbound name `{name}`"),
                    }),
                }
            }
            _ => self.error("expected a factor"),
        }
    }

    fn is_ident_continuation(&self, pos: usize) -> bool {
        matches!(self.bytes.get(pos), Some(c) if c.is_ascii_alphanumeric() || *c == b'_')
    }
}
