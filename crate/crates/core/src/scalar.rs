//! Elements of the discrete valuation ring S = k[x] localized at (x).

use std::fmt;


use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::poly::Poly;

/// An exact element `numerator / denominator` of S.
///
/// Canonical form: the fraction is reduced, the denominator has constant term
/// exactly 1, and zero is `0/1`. Equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalScalar {
    num: Poly,
    den: Poly,
}

/// Binary operations exposed through [`LocalScalar::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl LocalScalar {
    /// Reduces `numer / denom` to canonical form.
    pub fn normalize(numer: Poly, denom: Poly) -> Result<Self> {
        if numer.field() != denom.field() {
            return Err(Error::FieldMismatch);
        }
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if denom.eval_zero_is_zero() {
            return Err(Error::DenominatorNotUnit);
        }
        let numer = numer.check_degree()?;
        let denom = denom.check_degree()?;
        Ok(Self::normalize_unit_den(numer, denom))
    }

    /// Same as [`normalize`](Self::normalize) for a denominator already known
    /// to have nonzero constant term.
    fn normalize_unit_den(numer: Poly, denom: Poly) -> Self {
        let field = numer.field();
        if numer.is_zero() {
            return LocalScalar {
                num: numer,
                den: Poly::one(field),
            };
        }
        let (numer, denom) = if denom.degree() == Some(0) {
            (numer, denom)
        } else {
            let g = numer.gcd(&denom);
            if g.degree() == Some(0) {
                (numer, denom)
            } else {
                (numer.div_rem(&g).0, denom.div_rem(&g).0)
            }
        };
        let c = field.inv(&denom.constant_term());
        if c == field.one() {
            LocalScalar {
                num: numer,
                den: denom,
            }
        } else {
            LocalScalar {
                num: numer.scale(&c),
                den: denom.scale(&c),
            }
        }
    }

    /// Canonical form of a fraction already known to be reduced.
    fn from_reduced(numer: Poly, denom: Poly) -> Self {
        let field = numer.field();
        if numer.is_zero() {
            return Self::zero(field);
        }
        let c = field.inv(&denom.constant_term());
        if c == field.one() {
            LocalScalar {
                num: numer,
                den: denom,
            }
        } else {
            LocalScalar {
                num: numer.scale(&c),
                den: denom.scale(&c),
            }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let field = p.field();
        LocalScalar {
            num: p,
            den: Poly::one(field),
        }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Self::from_poly(Poly::zero(field))
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_poly(Poly::one(field))
    }

    pub fn from_i64(field: FieldSpec, c: i64) -> Self {
        Self::from_poly(Poly::from_i64(field, c))
    }

    pub fn constant(field: FieldSpec, c: Coeff) -> Self {
        Self::from_poly(Poly::constant(field, c))
    }

    /// `x^k`.
    pub fn x_pow(field: FieldSpec, k: usize) -> Self {
        Self::from_poly(Poly::monomial(field, k))
    }

    pub fn field(&self) -> FieldSpec {
        self.num.field()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// x-adic valuation; `None` stands for +infinity (the zero element).
    pub fn valuation(&self) -> Option<u32> {
        self.num.valuation().map(|v| v as u32)
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field() != other.field() {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self::from_poly(self.num.add(&other.num)));
        }
        if self.den == other.den {
            let num = self.num.add(&other.num).check_degree()?;
            return Ok(Self::normalize_unit_den(num, self.den.clone()));
        }
        if other.den.is_one() || self.den.is_one() {
            // a/d + b = (a + b d)/d is already reduced
            let (frac, poly) = if self.den.is_one() { (other, self) } else { (self, other) };
            let num = frac.num.add(&poly.num.mul(&frac.den)).check_degree()?;
            return Ok(Self::from_reduced(num, frac.den.clone()));
        }
        let g = self.den.gcd(&other.den);
        let (d1, d2) = (self.den.div_rem(&g).0, other.den.div_rem(&g).0);
        let num = self.num.mul(&d2).add(&other.num.mul(&d1)).check_degree()?;
        let den = self.den.mul(&d2).check_degree()?;
        if g.degree() == Some(0) {
            return Ok(Self::from_reduced(num, den));
        }
        Ok(Self::normalize_unit_den(num, den))
    }

    pub fn neg(&self) -> Self {
        LocalScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field()));
        }
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self::from_poly(self.num.mul(&other.num).check_degree()?));
        }
        // cross-cancel so that the result is reduced without a final gcd
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        let num = n1.mul(&n2).check_degree()?;
        let den = d1.mul(&d2).check_degree()?;
        Ok(Self::from_reduced(num, den))
    }

    /// Exact quotient in S; fails with `NotDivisible` when it would leave S.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let vb = other.valuation().ok_or(Error::NotDivisible)?;
        let va = match self.valuation() {
            None => return Ok(Self::zero(self.field())),
            Some(v) => v,
        };
        if va < vb {
            return Err(Error::NotDivisible);
        }
        let k = vb as usize;
        let num = self.num.shift_down(k).mul(&other.den).check_degree()?;
        let den = self.den.mul(&other.num.shift_down(k)).check_degree()?;
        Ok(Self::normalize_unit_den(num, den))
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        match op {
            ArithOp::Add => self.add(other),
            ArithOp::Sub => self.sub(other),
            ArithOp::Mul => self.mul(other),
            ArithOp::Div => self.div(other),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotDivisible);
        }
        Ok(Self::normalize_unit_den(self.den.clone(), self.num.clone()))
    }

    /// Splits a nonzero element as `unit * x^v`, returning `(unit, v)`.
    pub fn unit_part(&self) -> Option<(Self, u32)> {
        let v = self.valuation()?;
        let num = self.num.shift_down(v as usize);
        Some((Self::normalize_unit_den(num, self.den.clone()), v))
    }

    /// Coefficients of the image in S/(x^n) = k[x]/(x^n), as a length-`n` vector.
    pub fn truncated_coeffs(&self, n: usize) -> Vec<Coeff> {
        let series = if self.den.is_one() {
            self.num.truncate(n)
        } else {
            self.num.mul(&self.den.series_inverse(n)).truncate(n)
        };
        (0..n).map(|i| series.coeff(i)).collect()
    }

    /// Rebuilds a polynomial element from truncated coefficients.
    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<Coeff>) -> Self {
        Self::from_poly(Poly::from_coeffs(field, coeffs))
    }

    /// Image in the residue field k = S/(x).
    pub fn residue(&self) -> Coeff {
        self.num.constant_term()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }
}

/// Divides `a` and a unit-constant `d` by their gcd.
fn cancel(a: &Poly, d: &Poly) -> (Poly, Poly) {
    if d.degree() == Some(0) {
        return (a.clone(), d.clone());
    }
    let g = a.gcd(d);
    if g.degree() == Some(0) {
        (a.clone(), d.clone())
    } else {
        (a.div_rem(&g).0, d.div_rem(&g).0)
    }
}

impl fmt::Display for LocalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// A normalized omega: a nonzero non-unit of S, stored with its factorization
/// `omega = unit * x^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaSpec {
    omega: LocalScalar,
    n: u32,
    unit: LocalScalar,
}

impl OmegaSpec {
    pub fn new(omega: LocalScalar) -> Result<Self> {
        let (unit, n) = omega.unit_part().ok_or(Error::OmegaIsZero)?;
        if n == 0 {
            return Err(Error::OmegaIsUnit);
        }
        Ok(OmegaSpec { omega, n, unit })
    }

    /// `omega = x^n`.
    pub fn x_pow(field: FieldSpec, n: u32) -> Result<Self> {
        Self::new(LocalScalar::x_pow(field, n as usize))
    }

    pub fn omega(&self) -> &LocalScalar {
        &self.omega
    }

    /// Valuation of omega; R = S/(omega) has length n.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn unit_part(&self) -> &LocalScalar {
        &self.unit
    }

    pub fn field(&self) -> FieldSpec {
        self.omega.field()
    }
}

impl fmt::Display for OmegaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.omega)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(Q, c)
    }

    fn s(c: &[i64]) -> LocalScalar {
        LocalScalar::from_poly(p(c))
    }

    #[test]
    fn normalize_examples() {
        let a = LocalScalar::normalize(p(&[0, 0, 1]), p(&[1])).unwrap();
        assert_eq!(a, s(&[0, 0, 1]));
        let b = LocalScalar::normalize(p(&[0, 1, 1]), p(&[1, 1])).unwrap();
        assert_eq!(b, s(&[0, 1]));
        // cross-multiplication oracle: x * (1 + x) == (x^2 + x) * 1
        assert_eq!(p(&[0, 1]).mul(&p(&[1, 1])), p(&[0, 1, 1]));
        assert_eq!(
            LocalScalar::normalize(p(&[0, 1]), p(&[0, 1])),
            Err(Error::DenominatorNotUnit)
        );
        assert_eq!(
            LocalScalar::normalize(p(&[1]), p(&[])),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn normalization_scales_denominator_constant_to_one() {
        let a = LocalScalar::normalize(p(&[2]), p(&[2, 4])).unwrap();
        assert_eq!(a.denominator(), &p(&[1, 2]));
        assert_eq!(a.numerator(), &p(&[1]));
    }

    #[test]
    fn arithmetic_examples() {
        let x = s(&[0, 1]);
        assert_eq!(x.add(&x).unwrap(), s(&[0, 2]));
        let f2 = FieldSpec::prime(2).unwrap();
        let x2 = LocalScalar::x_pow(f2, 1);
        assert!(x2.add(&x2).unwrap().is_zero());
        assert_eq!(s(&[0, 0, 0, 1]).div(&x).unwrap(), s(&[0, 0, 1]));
        assert_eq!(x.div(&s(&[0, 0, 1])), Err(Error::NotDivisible));
    }

    #[test]
    fn valuation_examples() {
        let a = LocalScalar::normalize(p(&[0, 0, 1, 1]), p(&[1, 2])).unwrap();
        assert_eq!(a.valuation(), Some(2));
        assert_eq!(LocalScalar::zero(Q).valuation(), None);
        assert_eq!(s(&[5]).valuation(), Some(0));
    }

    #[test]
    fn omega_examples() {
        let w = OmegaSpec::new(s(&[0, 0, 1])).unwrap();
        assert_eq!(w.n(), 2);
        assert!(w.unit_part().is_one());
        let w = OmegaSpec::new(s(&[0, 0, 1, 1])).unwrap();
        assert_eq!(w.n(), 2);
        assert_eq!(w.unit_part(), &s(&[1, 1]));
        let back = w
            .unit_part()
            .mul(&LocalScalar::x_pow(Q, 2))
            .unwrap();
        assert_eq!(&back, w.omega());
        assert_eq!(OmegaSpec::new(s(&[1, 1])), Err(Error::OmegaIsUnit));
        assert_eq!(OmegaSpec::new(s(&[])), Err(Error::OmegaIsZero));
    }

    #[test]
    fn degree_guard() {
        let big = LocalScalar::x_pow(Q, 3000);
        assert!(matches!(
            big.mul(&big),
            Err(Error::DegreeOverflow { degree: 6000, .. })
        ));
    }

    #[test]
    fn truncation_in_quotient_ring() {
        let a = LocalScalar::normalize(p(&[1]), p(&[1, 1])).unwrap();
        let v = a.truncated_coeffs(3);
        assert_eq!(v, vec![Coeff::from_integer(1.into()), Coeff::from_integer((-1).into()), Coeff::from_integer(1.into())]);
        assert!(s(&[0, 0, 0, 1]).truncated_coeffs(3).iter().all(|c| *c == Coeff::from_integer(0.into())));
        assert_ne!(a.residue(), Coeff::from_integer(0.into()));
    }
}
