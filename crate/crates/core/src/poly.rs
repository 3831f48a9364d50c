//! Dense univariate polynomials over the residue field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{small_int, Coeff, FieldSpec};

/// Largest polynomial degree any operation may produce.
pub const MAX_DEGREE: usize = 4096;

/// A polynomial in `x`; coefficients ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Coeff>,
}

impl Poly {
    pub fn zero(field: FieldSpec) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field, Coeff::one())
    }

    pub fn constant(field: FieldSpec, c: Coeff) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    pub fn from_i64(field: FieldSpec, c: i64) -> Self {
        Self::constant(field, field.from_i64(c))
    }

    /// `x^k`.
    pub fn monomial(field: FieldSpec, k: usize) -> Self {
        let mut coeffs = vec![Coeff::zero(); k];
        coeffs.push(Coeff::one());
        Poly { field, coeffs }
    }

    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<Coeff>) -> Self {
        let mut p = Poly {
            field,
            coeffs: coeffs.into_iter().map(|c| field.reduce(c)).collect(),
        };
        p.trim();
        p
    }

    pub fn from_i64s(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Coeff {
        self.coeffs.get(i).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplicity of `x`; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(0)
    }

    pub fn leading(&self) -> Option<&Coeff> {
        self.coeffs.last()
    }

    pub(crate) fn check_degree(self) -> Result<Self> {
        match self.degree() {
            Some(d) if d > MAX_DEGREE => Err(Error::DegreeOverflow {
                degree: d,
                limit: MAX_DEGREE,
            }),
            _ => Ok(self),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => self.field.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        let mut p = Poly {
            field: self.field,
            coeffs,
        };
        p.trim();
        p
    }

    pub fn neg(&self) -> Poly {
        Poly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        if let (Some((a, p)), Some((b, _))) =
            (self.field.small_vec(&self.coeffs), self.field.small_vec(&other.coeffs))
        {
            let mut acc = vec![0u64; len];
            for (i, x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
                for (j, y) in b.iter().enumerate() {
                    acc[i + j] = (acc[i + j] + x * y) % p;
                }
            }
            return Poly::from_coeffs(self.field, acc.into_iter().map(FieldSpec::lift).collect());
        }
        let mut coeffs = vec![Coeff::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(self.field, coeffs)
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field);
        }
        Poly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| self.field.mul(a, c)).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Coeff::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            field: self.field,
            coeffs,
        }
    }

    /// Divides by `x^k`, dropping the `k` lowest coefficients.
    pub fn shift_down(&self, k: usize) -> Poly {
        Poly {
            field: self.field,
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead_inv = self.field.inv(divisor.leading().unwrap());
        if let (Some((mut rem, p)), Some((div, _))) =
            (self.field.small_vec(&self.coeffs), self.field.small_vec(&divisor.coeffs))
        {
            let li = lead_inv.numer().to_u64().expect("reduced representative");
            let qlen = rem.len().saturating_sub(d);
            let mut quot = vec![0u64; qlen];
            for i in (0..qlen).rev() {
                let c = rem[i + d] * li % p;
                if c == 0 {
                    continue;
                }
                for (j, b) in div.iter().enumerate() {
                    rem[i + j] = (rem[i + j] + p - c * b % p) % p;
                }
                quot[i] = c;
            }
            rem.truncate(d);
            let lift = |v: Vec<u64>| Poly::from_coeffs(self.field, v.into_iter().map(FieldSpec::lift).collect());
            return (lift(quot), lift(rem));
        }
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len().saturating_sub(d);
        let mut quot = vec![Coeff::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = self.field.mul(&rem[i + d], &lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = self.field.sub(&rem[i + j], &self.field.mul(&c, b));
            }
            quot[i] = c;
        }
        rem.truncate(d);
        (
            Poly::from_coeffs(self.field, quot),
            Poly::from_coeffs(self.field, rem),
        )
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&self.field.inv(l)),
        }
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.degree() == Some(0) || other.degree() == Some(0) {
            return Poly::one(self.field);
        }
        if self.field == FieldSpec::Rationals && !self.is_zero() && !other.is_zero() {
            return self.gcd_primitive(other);
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Primitive remainder sequence over Z; avoids the coefficient growth of
    /// Euclid's algorithm over Q.
    fn gcd_primitive(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (primitive_part(self), primitive_part(other));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_remainder(a, &b);
            a = b;
            b = primitive_part_int(r);
        }
        let coeffs = a.into_iter().map(BigRational::from_integer).collect();
        Poly::from_coeffs(self.field, coeffs).monic()
    }

    /// Drops all terms of degree `>= n`.
    pub fn truncate(&self, n: usize) -> Poly {
        let mut coeffs: Vec<Coeff> = self.coeffs.iter().take(n).cloned().collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: self.field,
            coeffs,
        }
    }

    /// Inverse modulo `x^n` of a polynomial with nonzero constant term.
    pub fn series_inverse(&self, n: usize) -> Poly {
        let c0 = self.constant_term();
        assert!(!c0.is_zero(), "series inverse of a non-unit");
        let inv0 = self.field.inv(&c0);
        let mut out: Vec<Coeff> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                out.push(inv0.clone());
                continue;
            }
            let mut acc = Coeff::zero();
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc += &self.coeffs[j] * &out[k - j];
            }
            let acc = self.field.reduce(acc);
            out.push(self.field.neg(&self.field.mul(&acc, &inv0)));
        }
        Poly::from_coeffs(self.field, out)
    }

    pub fn eval_zero_is_zero(&self) -> bool {
        self.constant_term().is_zero()
    }
}

/// Integer coefficients of `p` scaled to a primitive polynomial.
fn primitive_part(p: &Poly) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p
        .coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    primitive_part_int(ints)
}

fn primitive_part_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &content).collect()
}

/// Remainder of `lc(b)^k a` by `b` over Z, up to content.
fn pseudo_remainder(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while a.len() > db {
        let da = a.len() - 1;
        let la = a[da].clone();
        let g = la.gcd(lb);
        let (ma, mb) = (lb / &g, &la / &g);
        for c in a.iter_mut() {
            *c *= &ma;
        }
        for (j, c) in b.iter().enumerate() {
            a[da - db + j] -= &mb * c;
        }
        a.pop();
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
        a = primitive_part_int(a);
    }
    a
}

impl fmt::Display for Poly {
    /// Ascending powers, e.g. `1 - 2*x + 1/2*x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mag_text = match small_int(&mag) {
                Some(v) => v.to_string(),
                None if mag.is_integer() => mag.numer().to_string(),
                None => format!("{}/{}", mag.numer(), mag.denom()),
            };
            match k {
                0 => write!(f, "{mag_text}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag_text}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Poly {
        Poly::from_i64s(FieldSpec::Rationals, c)
    }

    #[test]
    fn division_and_gcd() {
        // (x^2 + x) = x (1 + x)
        let a = q(&[0, 1, 1]);
        let b = q(&[1, 1]);
        let (quo, rem) = a.div_rem(&b);
        assert_eq!(quo, q(&[0, 1]));
        assert!(rem.is_zero());
        assert_eq!(a.gcd(&b), b);
        assert_eq!(q(&[0, 0, 1]).gcd(&q(&[1, 1])), q(&[1]));
    }

    #[test]
    fn series_inverse_of_one_plus_x() {
        let inv = q(&[1, 1]).series_inverse(4);
        assert_eq!(inv, q(&[1, -1, 1, -1]));
        assert_eq!(q(&[1, 1]).mul(&inv).truncate(4), q(&[1]));
    }

    #[test]
    fn display() {
        assert_eq!(q(&[1, -2, 0, 3]).to_string(), "1 - 2*x + 3*x^3");
        assert_eq!(q(&[0, 0, 1]).to_string(), "x^2");
        assert_eq!(q(&[0, -1]).to_string(), "-x");
        assert_eq!(q(&[]).to_string(), "0");
    }

    #[test]
    fn prime_field_wraps() {
        let f = FieldSpec::prime(2).unwrap();
        let x = Poly::from_i64s(f, &[0, 1]);
        assert!(x.add(&x).is_zero());
    }
}
