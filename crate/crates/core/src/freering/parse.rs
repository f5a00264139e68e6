//! Text form of free-ring polynomials.
//!
//! ```text
//! poly   := ['-'|'+'] term (('+'|'-') term)*
//! term   := rat | [rat '*'] factor ('*' factor)*
//! factor := 'x' int ['^' int]
//! rat    := int ['/' int]
//! ```
//!
//! Whitespace is ignored everywhere. A bare rational term is accepted so that
//! constant terms survive a render/parse round trip.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coefficient, Monomial, Polynomial};
use crate::{Error, Result};

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            text,
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map(|&(i, _)| i).unwrap_or(self.text.len())
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn small_integer(&mut self, what: &str) -> Result<usize> {
        let at = self.offset();
        let value = self.integer()?;
        usize::try_from(value).map_err(|_| Error::Syntax {
            position: at,
            message: format!("{what} is too large"),
        })
    }

    fn rational(&mut self) -> Result<Coefficient> {
        let num = self.integer()?;
        if self.eat('/') {
            let at = self.offset();
            let den = self.integer()?;
            if den.is_zero() {
                return Err(Error::Syntax {
                    position: at,
                    message: "zero denominator".into(),
                });
            }
            Ok(Coefficient::new(num, den))
        } else {
            Ok(Coefficient::from_integer(num))
        }
    }

    fn factor(&mut self, n: usize) -> Result<Monomial> {
        if !self.eat('x') {
            return Err(self.error("expected a factor `x<i>`"));
        }
        let at = self.offset();
        let index = self.small_integer("index")?;
        if index == 0 || index > n {
            let _ = at;
            return Err(Error::IndexOutOfRange { index, arity: n });
        }
        let exp = if self.eat('^') {
            let e = self.small_integer("exponent")?;
            u32::try_from(e).map_err(|_| self.error("exponent is too large"))?
        } else {
            1
        };
        Ok(Monomial::power(index, exp))
    }

    fn term(&mut self, n: usize) -> Result<(Monomial, Coefficient)> {
        let mut coeff = Coefficient::one();
        let mut mono = Monomial::one();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.rational()?;
                if !self.eat('*') {
                    return Ok((mono, coeff));
                }
                mono = self.factor(n)?;
            }
            Some('x') => mono = self.factor(n)?,
            _ => return Err(self.error("expected a term")),
        }
        while self.eat('*') {
            mono = mono.mul(&self.factor(n)?);
        }
        Ok((mono, coeff))
    }

    fn poly(&mut self, n: usize) -> Result<Polynomial> {
        let mut out = Polynomial::zero(n);
        let mut negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        loop {
            let (m, c) = self.term(n)?;
            out.add_term(m, if negative { -c } else { c });
            match self.bump() {
                None => break,
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(other) => {
                    self.pos -= 1;
                    return Err(self.error(format!("unexpected `{other}`")));
                }
            }
        }
        Ok(out)
    }
}

/// Parses a polynomial over `x1..xn`.
pub fn parse_poly(text: &str, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::ZeroArity);
    }
    let mut p = Parser::new(text);
    if p.peek().is_none() {
        return Err(p.error("empty input"));
    }
    p.poly(n)
}

/// Parses a single monomial such as `x1*x3^2*x2` (or `1`).
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    let p = parse_poly(text, n)?;
    match p.terms().collect::<Vec<_>>().as_slice() {
        [(m, c)] if c.is_one() => Ok((*m).clone()),
        _ => Err(Error::Syntax {
            position: 0,
            message: "expected a single monomial with coefficient 1".into(),
        }),
    }
}

pub fn render_poly(p: &Polynomial) -> String {
    p.to_string()
}
