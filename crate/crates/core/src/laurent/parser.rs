//! Text parser for Laurent polynomials.
//!
//! Grammar: terms separated by `+`/`-`; a term is a `*`-separated product of
//! factors, each being a decimal number, a parenthesized complex constant
//! `(a+bi)`, or a power `z<k>` / `z<k>^<int>` with a possibly negative
//! integer exponent. Whitespace is ignored. Like exponents are merged by
//! summation; exact-zero results are dropped.

use super::{LaurentPolynomial, LatticePoint};
use crate::error::{Error, Result};
use num_complex::Complex64;

pub fn parse_laurent(text: &str, dim: usize) -> Result<LaurentPolynomial> {
    if dim == 0 {
        return Err(Error::Config("dimension must be at least 1".into()));
    }
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        dim,
    };
    let terms = p.polynomial()?;
    LaurentPolynomial::from_terms(dim, terms)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    dim: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn polynomial(&mut self) -> Result<Vec<(LatticePoint, Complex64)>> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                1.0
            }
            Some(b'-') => {
                self.pos += 1;
                -1.0
            }
            Some(_) => 1.0,
            None => return Err(self.error("empty input")),
        };
        loop {
            let (alpha, coeff) = self.term()?;
            terms.push((alpha, coeff * sign));
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1.0;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1.0;
                }
                Some(c) => {
                    return Err(self.error(format!("expected '+' or '-', found '{}'", c as char)))
                }
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(LatticePoint, Complex64)> {
        let mut coeff = Complex64::new(1.0, 0.0);
        let mut exps = vec![0i64; self.dim];
        let mut first = true;
        loop {
            match self.peek() {
                Some(b'z') => {
                    let (var, e) = self.power()?;
                    exps[var] += e;
                }
                Some(b'(') => coeff *= self.complex_constant()?,
                Some(c) if c.is_ascii_digit() || c == b'.' => {
                    coeff *= Complex64::new(self.number()?, 0.0)
                }
                Some(c) if first => {
                    return Err(self.error(format!("expected a term, found '{}'", c as char)))
                }
                _ if first => return Err(self.error("expected a term")),
                _ => break,
            }
            first = false;
            // factors may be joined by an optional '*'
            if self.peek() == Some(b'*') {
                self.pos += 1;
                first = true; // a factor must follow
            } else if !matches!(self.peek(), Some(b'z') | Some(b'(')) {
                break;
            }
        }
        Ok((LatticePoint::new(exps), coeff))
    }

    /// `z<k>` or `z<k>^<int>`; returns (zero-based index, exponent).
    fn power(&mut self) -> Result<(usize, i64)> {
        debug_assert_eq!(self.bump(), Some(b'z'));
        let start = self.pos;
        let k = self.unsigned_integer()? as usize;
        if k == 0 || k > self.dim {
            self.pos = start;
            return Err(self.error(format!(
                "variable z{k} outside dimension {} (variables are z1..z{})",
                self.dim, self.dim
            )));
        }
        let mut e = 1i64;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.signed_integer()?;
        }
        Ok((k - 1, e))
    }

    /// `(a)`, `(bi)`, `(a+bi)` or `(a-bi)`.
    fn complex_constant(&mut self) -> Result<Complex64> {
        debug_assert_eq!(self.bump(), Some(b'('));
        let first_neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            if self.peek() == Some(b'+') {
                self.pos += 1;
            }
            false
        };
        let first = self.number()? * if first_neg { -1.0 } else { 1.0 };
        let value = match self.peek() {
            Some(b'i') => {
                self.pos += 1;
                Complex64::new(0.0, first)
            }
            Some(b')') => Complex64::new(first, 0.0),
            Some(s @ (b'+' | b'-')) => {
                self.pos += 1;
                let im = self.number()? * if s == b'-' { -1.0 } else { 1.0 };
                if self.bump() != Some(b'i') {
                    return Err(self.error("expected 'i' after imaginary part"));
                }
                Complex64::new(first, im)
            }
            _ => return Err(self.error("malformed complex constant")),
        };
        if self.bump() != Some(b')') {
            return Err(self.error("expected ')' closing complex constant"));
        }
        Ok(value)
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit() || *b == b'.')
        {
            self.pos += 1;
        }
        // optional exponent part, e.g. 1.5e-3
        if self.bytes.get(self.pos).is_some_and(|b| *b == b'e' || *b == b'E') {
            let mark = self.pos;
            self.pos += 1;
            if self.bytes.get(self.pos).is_some_and(|b| *b == b'+' || *b == b'-') {
                self.pos += 1;
            }
            if self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
                while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
                    self.pos += 1;
                }
            } else {
                self.pos = mark;
            }
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<f64>()
            .map_err(|e| self.error(format!("bad number: {e}")))
    }

    fn unsigned_integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|e| self.error(format!("bad integer: {e}")))
    }

    fn signed_integer(&mut self) -> Result<i64> {
        let neg = match self.peek() {
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
        let v = self.unsigned_integer()? as i64;
        Ok(if neg { -v } else { v })
    }
}
