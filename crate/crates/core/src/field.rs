//! The residue field k: either the rationals or a prime field F_p.
//!
//! Field elements are stored as `BigRational`. Over F_p every element is kept
//! as an integer representative in `0..p`, so equality stays syntactic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coeff = BigRational;

/// Choice of residue field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    #[default]
    Rationals,
    PrimeField(u32),
}


fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl FieldSpec {
    /// F_p, checked: `p` must be prime with `2 <= p < 2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    /// Parses `rational` / `q` or `fp:<p>`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim().to_ascii_lowercase();
        match t.as_str() {
            "rational" | "rationals" | "q" => Ok(FieldSpec::Rationals),
            _ => {
                let p = t
                    .strip_prefix("fp:")
                    .and_then(|s| s.parse::<u64>().ok())
                    .ok_or_else(|| Error::parse(1, format!("unknown field {text:?}")))?;
                FieldSpec::prime(p)
            }
        }
    }

    pub(crate) fn reduce(&self, c: Coeff) -> Coeff {
        match self {
            FieldSpec::Rationals => c,
            FieldSpec::PrimeField(p) => {
                if c.is_integer() && !c.is_negative() && c.numer() < &BigInt::from(*p) {
                    return c;
                }
                let p = BigInt::from(*p);
                let num = c.numer().mod_floor(&p);
                let den = c.denom().mod_floor(&p);
                assert!(!den.is_zero(), "denominator divisible by the characteristic");
                let inv = den.modpow(&(&p - 2u32), &p);
                BigRational::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    pub(crate) fn from_i64(&self, v: i64) -> Coeff {
        self.reduce(BigRational::from_integer(BigInt::from(v)))
    }

    /// Both operands as machine integers when working over F_p.
    fn small_pair(&self, a: &Coeff, b: &Coeff) -> Option<(u64, u64, u64)> {
        match self {
            FieldSpec::PrimeField(p) if a.is_integer() && b.is_integer() => {
                Some((a.numer().to_u64()?, b.numer().to_u64()?, *p as u64))
            }
            _ => None,
        }
    }

    /// Representatives of F_p elements as machine integers, with `p`.
    pub(crate) fn small_vec(&self, v: &[Coeff]) -> Option<(Vec<u64>, u64)> {
        match self {
            FieldSpec::PrimeField(p) => {
                let out = v
                    .iter()
                    .map(|c| c.is_integer().then(|| c.numer().to_u64()).flatten())
                    .collect::<Option<Vec<u64>>>()?;
                Some((out, *p as u64))
            }
            FieldSpec::Rationals => None,
        }
    }

    pub(crate) fn lift(v: u64) -> Coeff {
        BigRational::from_integer(BigInt::from(v))
    }

    pub(crate) fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self.small_pair(a, b) {
            Some((x, y, p)) => Self::lift((x + y) % p),
            None => self.reduce(a + b),
        }
    }

    pub(crate) fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self.small_pair(a, b) {
            Some((x, y, p)) => Self::lift((x + p - y % p) % p),
            None => self.reduce(a - b),
        }
    }

    pub(crate) fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self.small_pair(a, b) {
            Some((x, y, p)) => Self::lift(x * y % p),
            None => self.reduce(a * b),
        }
    }

    pub(crate) fn neg(&self, a: &Coeff) -> Coeff {
        match self.small_pair(a, a) {
            Some((x, _, p)) => Self::lift((p - x % p) % p),
            None => self.reduce(-a),
        }
    }

    /// Multiplicative inverse; panics on zero (callers check first).
    pub(crate) fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            FieldSpec::Rationals => a.recip(),
            FieldSpec::PrimeField(p) => match self.small_pair(a, a) {
                Some((x, _, p)) => Self::lift(pow_mod(x % p, p - 2, p)),
                None => {
                    let p = BigInt::from(*p);
                    BigRational::from_integer(a.numer().modpow(&(&p - 2u32), &p))
                }
            },
        }
    }

    pub(crate) fn one(&self) -> Coeff {
        Coeff::one()
    }

    /// Enumerates all field elements; only meaningful for small prime fields.
    pub fn elements(&self) -> Option<Vec<Coeff>> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(
                (0..*p)
                    .map(|v| BigRational::from_integer(BigInt::from(v)))
                    .collect(),
            ),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rational"),
            FieldSpec::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Small integer value of a coefficient, if it has one (used by printers).
pub(crate) fn small_int(c: &Coeff) -> Option<i64> {
    if c.is_integer() {
        c.numer().to_i64()
    } else {
        None
    }
}
