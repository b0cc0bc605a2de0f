//! Polynomial and ring expressions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' INT)?
//! atom  := INT ('/' INT)? | 'x' | '(' expr ')'
//! ring  := 'Q[x]' | 'Q[x]/(' expr ')'
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::{Poly, Rational};
use crate::ring::Ring;

pub const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based column of the offending character.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    fn shifted(mut self, by: usize) -> ParseError {
        self.column += by;
        self
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            let found = self.found();
            Err(self.err(format!("expected '{c}', found {found}")))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            let found = self.found();
            return Err(self.err(format!("expected an integer, found {found}")));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let e = self.integer()?;
        if e > BigInt::from(MAX_EXPONENT) {
            return Err(ParseError {
                column: at + 1,
                message: format!("exponent {e} exceeds {MAX_EXPONENT}"),
            });
        }
        let e: u32 = e.try_into().expect("bounded above");
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                if self.peek() != Some('/') {
                    return Ok(Poly::constant(Rational::from_integer(n)));
                }
                self.pos += 1;
                self.skip_ws();
                let at = self.pos;
                let d = self.integer()?;
                if d.is_zero() {
                    return Err(ParseError {
                        column: at + 1,
                        message: "zero denominator".into(),
                    });
                }
                Ok(Poly::constant(Rational::new(n, d)))
            }
            _ => {
                let found = self.found();
                Err(self.err(format!("expected a number, 'x' or '(', found {found}")))
            }
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut p = Parser::new(text);
    let out = p.expr()?;
    p.finish()?;
    Ok(out)
}

/// Parsed `Q[x]` or `Q[x]/(m)`; building the ring may still fail on the
/// modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Base,
    Quotient(Poly),
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let skip = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    skip(&mut i);
    for want in ['Q', '[', 'x', ']'] {
        skip(&mut i);
        if chars.get(i) != Some(&want) {
            return Err(ParseError {
                column: i + 1,
                message: format!("expected '{want}' in ring \"Q[x]\" or \"Q[x]/(m)\""),
            });
        }
        i += 1;
    }
    skip(&mut i);
    if i == chars.len() {
        return Ok(RingSpec::Base);
    }
    for want in ['/', '('] {
        skip(&mut i);
        if chars.get(i) != Some(&want) {
            return Err(ParseError {
                column: i + 1,
                message: format!("expected '{want}'"),
            });
        }
        i += 1;
    }
    let mut end = chars.len();
    while end > i && chars[end - 1].is_whitespace() {
        end -= 1;
    }
    if end == i || chars[end - 1] != ')' {
        return Err(ParseError {
            column: end + 1,
            message: "expected ')' closing the modulus".into(),
        });
    }
    let inner: String = chars[i..end - 1].iter().collect();
    let m = parse_poly(&inner).map_err(|e| e.shifted(i))?;
    Ok(RingSpec::Quotient(m))
}

impl RingSpec {
    pub fn build(&self) -> crate::error::Result<Ring> {
        match self {
            RingSpec::Base => Ok(Ring::base()),
            RingSpec::Quotient(m) => Ring::quotient(m.clone()),
        }
    }
}

/// A patch `g:a`.
pub fn parse_patch(text: &str) -> Result<(Poly, Poly), ParseError> {
    let Some(colon) = text.find(':') else {
        return Err(ParseError {
            column: text.chars().count() + 1,
            message: "expected a patch of the form g:a".into(),
        });
    };
    let (g, a) = (&text[..colon], &text[colon + 1..]);
    let g = parse_poly(g)?;
    let shift = text[..colon].chars().count() + 1;
    let a = parse_poly(a).map_err(|e| e.shifted(shift))?;
    Ok((g, a))
}
