//! Text parser for polynomials.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := int ('/' uint)? | var ('^' uint)?
//! ```
//!
//! Whitespace is insignificant and implicit multiplication is rejected.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, MAX_EXPONENT};
use crate::error::ParseError;
use crate::scalar::Rational;

pub fn parse_polynomial<S: AsRef<str>>(text: &str, variables: &[S]) -> Result<Polynomial, ParseError> {
    let names: Vec<&str> = variables.iter().map(|s| s.as_ref()).collect();
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        names: &names,
    };
    p.expr()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let nvars = self.names.len();
        let mut out = Polynomial::zero(nvars);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -Rational::one()
            }
            Some(b'+') => {
                self.pos += 1;
                Rational::one()
            }
            _ => Rational::one(),
        };
        loop {
            let (c, m) = self.term()?;
            out.add_term(m, c * &sign);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = Rational::one(),
                Some(b'-') => sign = -Rational::one(),
                Some(ch) => return Err(self.syntax(format!("unexpected character '{}'", ch as char))),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Rational, Monomial), ParseError> {
        let nvars = self.names.len();
        let mut coeff = Rational::one();
        let mut exps = vec![0u64; nvars];
        loop {
            match self.peek() {
                Some(ch) if ch.is_ascii_digit() => coeff *= self.coefficient()?,
                Some(ch) if ch.is_ascii_alphabetic() || ch == b'_' => {
                    let start = self.pos;
                    let name = self.ident();
                    let idx = self
                        .names
                        .iter()
                        .position(|n| *n == name)
                        .ok_or_else(|| ParseError::UnknownIdentifier {
                            position: start,
                            name: name.to_string(),
                        })?;
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        self.exponent()?
                    } else {
                        1
                    };
                    exps[idx] += e;
                    if exps[idx] > MAX_EXPONENT {
                        return Err(ParseError::ExponentOverflow { position: start });
                    }
                }
                Some(ch) => return Err(self.syntax(format!("expected a factor, found '{}'", ch as char))),
                None => return Err(self.syntax("expected a factor, found end of input")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, Monomial::new(exps.into_iter().map(|e| e as u32).collect())))
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let src: &'a [u8] = self.src;
        std::str::from_utf8(&src[start..self.pos]).expect("ascii identifier")
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string"))
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let num = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(ParseError::Syntax {
                    position: at,
                    message: "zero denominator".into(),
                });
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn exponent(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let e = self.digits()?;
        if e > BigInt::from(MAX_EXPONENT) {
            return Err(ParseError::ExponentOverflow { position: start });
        }
        Ok(u64::try_from(e).expect("bounded exponent"))
    }
}
