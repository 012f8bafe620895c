//! Parser for the polynomial text grammar.
//!
//! Terms are joined by `+`/`-`; a term is an optional coefficient (`3`,
//! `5/2`, `i`, `2i`, `(1+2i)`) followed by `*`-separated powers `var^k`
//! (`k` omitted means 1). Whitespace is ignored; variables are ASCII
//! identifiers. `i` is the imaginary unit and cannot name a variable.

use alloc::fmt;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Coeff, ExactComplex, MultiPoly};

/// Syntax or binding error, with the byte offset where it happened.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl core::error::Error for ParseError {}

/// Parse `text` into a polynomial over the given ordered variable list.
pub fn parse_polynomial(text: &str, vars: &[&str]) -> Result<MultiPoly<ExactComplex>, ParseError> {
    if vars.iter().any(|v| *v == "i") {
        return Err(ParseError {
            pos: 0,
            msg: "variable name `i` is reserved for the imaginary unit".to_string(),
        });
    }
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        vars,
    };
    parser.poly()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
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

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn poly(&mut self) -> Result<MultiPoly<ExactComplex>, ParseError> {
        let mut p = MultiPoly::zero(self.vars);
        self.skip_ws();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            self.skip_ws();
            let (mut coeff, exps) = self.term()?;
            if negate {
                coeff = coeff.neg();
            }
            p.accumulate(exps, coeff);
            self.skip_ws();
            match self.peek() {
                None => return Ok(p),
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                Some(c) => return self.error(alloc::format!("expected `+` or `-`, found `{}`", c as char)),
            }
        }
    }

    /// One term: product of coefficient literals and variable powers.
    fn term(&mut self) -> Result<(ExactComplex, Vec<u32>), ParseError> {
        let mut coeff = ExactComplex::one();
        let mut exps = alloc::vec![0u32; self.vars.len()];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'0'..=b'9') => {
                    let c = self.number_literal()?;
                    coeff = coeff.mul(&c);
                }
                Some(b'(') => {
                    let c = self.paren_complex()?;
                    coeff = coeff.mul(&c);
                }
                Some(c) if c == b'i' && !self.is_ident_continuation(self.pos + 1) => {
                    self.pos += 1;
                    coeff = coeff.mul(&ExactComplex::i());
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let (name, var_pos) = self.ident();
                    let idx = match self.vars.iter().position(|v| *v == name) {
                        Some(i) => i,
                        None => {
                            return Err(ParseError {
                                pos: var_pos,
                                msg: alloc::format!("unknown variable `{name}`"),
                            })
                        }
                    };
                    let k = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.uint()?
                    } else {
                        1
                    };
                    exps[idx] += k;
                }
                _ => return self.error("expected coefficient or variable"),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((coeff, exps));
            }
        }
    }

    fn is_ident_continuation(&self, pos: usize) -> bool {
        matches!(self.bytes.get(pos), Some(c) if c.is_ascii_alphanumeric() || *c == b'_')
    }

    fn ident(&mut self) -> (String, usize) {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        (
            String::from_utf8_lossy(&self.bytes[start..self.pos]).to_string(),
            start,
        )
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        let text = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<u32>()
            .map_err(|_| ParseError {
                pos: start,
                msg: "integer too large".to_string(),
            })
    }

    fn big_uint(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        let text = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<BigInt>().map_err(|_| ParseError {
            pos: start,
            msg: "invalid integer".to_string(),
        })
    }

    /// `3`, `5/2`, `2i`, `5/2i` — a rational, optionally an imaginary one.
    fn number_literal(&mut self) -> Result<ExactComplex, ParseError> {
        let num = self.big_uint()?;
        let mut value = BigRational::from_integer(num);
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den_pos = self.pos;
            let den = self.big_uint()?;
            if den.is_zero() {
                return Err(ParseError {
                    pos: den_pos,
                    msg: "zero denominator".to_string(),
                });
            }
            value /= BigRational::from_integer(den);
        }
        // the `i` suffix must be adjacent: `2i`, not `2 i`
        if self.peek() == Some(b'i') && !self.is_ident_continuation(self.pos + 1) {
            self.pos += 1;
            return Ok(ExactComplex::new(BigRational::zero(), value));
        }
        Ok(ExactComplex::from_real(value))
    }

    /// `(1+2i)`, `(-5/2)`, `(3-i)` — a parenthesised Gaussian rational.
    fn paren_complex(&mut self) -> Result<ExactComplex, ParseError> {
        debug_assert_eq!(self.peek(), Some(b'('));
        self.pos += 1;
        let mut acc = ExactComplex::zero();
        let mut negate = false;
        self.skip_ws();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            self.skip_ws();
            let mut part = match self.peek() {
                Some(b'0'..=b'9') => self.number_literal()?,
                Some(b'i') if !self.is_ident_continuation(self.pos + 1) => {
                    self.pos += 1;
                    ExactComplex::i()
                }
                _ => return self.error("expected a number inside parentheses"),
            };
            if negate {
                part = part.neg();
            }
            acc = acc.add(&part);
            self.skip_ws();
            match self.bump() {
                Some(b')') => return Ok(acc),
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    return self.error("expected `+`, `-` or `)`");
                }
            }
        }
    }
}
