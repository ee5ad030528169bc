//! Polynomial text grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Division is allowed by any nonzero expression,
//! so rational literals are written `10/27`. Entry points that expect a
//! polynomial reject non-constant denominators.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{BiPoly, RatFn2, UniPoly};
use crate::arith::Rational;

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.msg)
    }
}

type PResult<T> = core::result::Result<T, ParseError>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    tvar: &'a str,
    xvar: &'a str,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> PResult<RatFn2> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<RatFn2> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                acc = match acc.div(&d) {
                    Ok(v) => v,
                    Err(_) => {
                        return Err(ParseError {
                            pos: at,
                            msg: "division by zero".into(),
                        })
                    }
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> PResult<RatFn2> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> PResult<RatFn2> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let n = self.integer()?;
            let e: u32 = match u32::try_from(&n) {
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => {
                    return Err(ParseError {
                        pos: start,
                        msg: "exponent must be an integer in 0..=4096".into(),
                    })
                }
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> PResult<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> PResult<RatFn2> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFn2::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == self.tvar {
                    Ok(RatFn2::poly(BiPoly::t()))
                } else if name == self.xvar {
                    Ok(RatFn2::poly(BiPoly::x()))
                } else {
                    self.pos = start;
                    self.err(alloc::format!("unknown variable '{name}'"))
                }
            }
            Some(c) => self.err(alloc::format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a rational function in two named variables. `tvar` fills the
/// inner (`T`) slot and `xvar` the outer (`X`) slot.
pub fn parse_ratfn(src: &str, tvar: &str, xvar: &str) -> PResult<RatFn2> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        tvar,
        xvar,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses an element of `Q[T][X]`.
pub fn parse_bipoly(src: &str) -> PResult<BiPoly> {
    parse_bipoly_in(src, "T", "X")
}

pub fn parse_bipoly_in(src: &str, tvar: &str, xvar: &str) -> PResult<BiPoly> {
    parse_ratfn(src, tvar, xvar)?
        .into_poly()
        .ok_or_else(|| ParseError {
            pos: 0,
            msg: "denominator is not a constant".into(),
        })
}

/// Parses a polynomial in the single variable `var`.
pub fn parse_unipoly(src: &str, var: &str) -> PResult<UniPoly> {
    let b = parse_bipoly_in(src, var, "\u{0}")?;
    Ok(b.as_t_poly().expect("no outer variable"))
}

/// Parses a constant expression such as `-10/27`.
pub fn parse_rational(src: &str) -> PResult<Rational> {
    let b = parse_bipoly_in(src, "\u{0}", "\u{0}")?;
    Ok(b.as_constant().unwrap_or_else(Rational::zero))
}

impl core::str::FromStr for BiPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> PResult<Self> {
        parse_bipoly(s)
    }
}

impl ParseError {
    pub fn message(&self) -> String {
        self.to_string()
    }
}
