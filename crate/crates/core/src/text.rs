//! Text grammar for polynomials, scalars and matrices.
//!
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := coeff | coeff '*'? 'x' ('^' int)? | 'x' ('^' int)?
//! coeff  := int | int '/' int          (fractions only over the rationals)
//! scalar := poly | '(' poly ')' '/' '(' poly ')'
//! matrix := '[' (row (',' row)*)? ']'
//! row    := '[' (scalar (',' scalar)*)? ']'
//! ```
//!
//! Whitespace is ignored everywhere. Columns in errors are 1-based and refer
//! to the original text.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::linalg::LocalMatrix;
use crate::poly::{Poly, MAX_DEGREE};
use crate::scalar::LocalScalar;

struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
    end_column: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Cursor {
            chars,
            pos: 0,
            end_column: text.chars().count() + 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.end_column, |&(col, _)| col)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.column(), message)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn integer(&mut self) -> Result<Option<BigInt>> {
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            self.pos = start;
            return Ok(None);
        }
        Ok(Some(digits.parse().expect("decimal digits")))
    }

    fn exponent(&mut self) -> Result<usize> {
        let col = self.column();
        let e = self
            .integer()?
            .ok_or_else(|| self.error("expected exponent"))?;
        let e: usize = e
            .try_into()
            .map_err(|_| Error::parse(col, "exponent too large"))?;
        if e > MAX_DEGREE {
            return Err(Error::DegreeOverflow {
                degree: e,
                limit: MAX_DEGREE,
            });
        }
        Ok(e)
    }

    fn poly(&mut self, field: FieldSpec) -> Result<Poly> {
        let mut acc = Poly::zero(field);
        let mut first = true;
        loop {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                break;
            };
            first = false;
            let term = self.term(field)?;
            acc = if negative { acc.sub(&term) } else { acc.add(&term) };
        }
        Ok(acc)
    }

    fn term(&mut self, field: FieldSpec) -> Result<Poly> {
        let col = self.column();
        let coeff: Option<Coeff> = match self.integer()? {
            None => None,
            Some(num) => {
                if self.eat('/') {
                    if field != FieldSpec::Rationals {
                        return Err(Error::parse(
                            col,
                            "fractional coefficients are only allowed over the rationals",
                        ));
                    }
                    let den = self
                        .integer()?
                        .ok_or_else(|| self.error("expected denominator"))?;
                    if den.is_zero() {
                        return Err(Error::parse(col, "zero denominator in coefficient"));
                    }
                    Some(BigRational::new(num, den))
                } else {
                    Some(BigRational::from_integer(num))
                }
            }
        };
        let had_star = coeff.is_some() && self.eat('*');
        let power = if self.eat('x') {
            Some(if self.eat('^') { self.exponent()? } else { 1 })
        } else {
            None
        };
        match (coeff, power) {
            (None, None) => Err(Error::parse(col, "expected a term")),
            (Some(_), None) if had_star => Err(self.error("expected 'x' after '*'")),
            (Some(c), None) => Ok(Poly::constant(field, c)),
            (None, Some(k)) => Ok(Poly::monomial(field, k)),
            (Some(c), Some(k)) => Ok(Poly::monomial(field, k).scale(&field.reduce(c))),
        }
    }

    fn scalar(&mut self, field: FieldSpec) -> Result<LocalScalar> {
        let col = self.column();
        if self.eat('(') {
            let num = self.poly(field)?;
            self.expect(')')?;
            if self.eat('/') {
                self.expect('(')?;
                let den = self.poly(field)?;
                self.expect(')')?;
                return LocalScalar::normalize(num, den).map_err(|e| match e {
                    Error::ZeroDenominator | Error::DenominatorNotUnit => e,
                    other => Error::parse(col, other.to_string()),
                });
            }
            Ok(LocalScalar::from_poly(num))
        } else {
            Ok(LocalScalar::from_poly(self.poly(field)?))
        }
    }
}

pub fn parse_poly(field: FieldSpec, text: &str) -> Result<Poly> {
    let mut c = Cursor::new(text);
    let p = c.poly(field)?;
    if !c.at_end() {
        return Err(c.error("unexpected trailing input"));
    }
    Ok(p)
}

pub fn parse_scalar(field: FieldSpec, text: &str) -> Result<LocalScalar> {
    let mut c = Cursor::new(text);
    let s = c.scalar(field)?;
    if !c.at_end() {
        return Err(c.error("unexpected trailing input"));
    }
    Ok(s)
}

pub fn parse_matrix(field: FieldSpec, text: &str) -> Result<LocalMatrix> {
    let mut c = Cursor::new(text);
    c.expect('[')?;
    let mut rows: Vec<Vec<LocalScalar>> = Vec::new();
    if !c.eat(']') {
        loop {
            c.expect('[')?;
            let mut row = Vec::new();
            if !c.eat(']') {
                loop {
                    row.push(c.scalar(field)?);
                    if c.eat(']') {
                        break;
                    }
                    c.expect(',')?;
                }
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(c.error("rows have different lengths"));
                }
            }
            rows.push(row);
            if c.eat(']') {
                break;
            }
            c.expect(',')?;
        }
    }
    if !c.at_end() {
        return Err(c.error("unexpected trailing input"));
    }
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    if ncols == 0 {
        return Ok(LocalMatrix::zeros(field, nrows, 0));
    }
    LocalMatrix::from_rows(field, rows)
}
