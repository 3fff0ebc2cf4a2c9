//! Field descriptors and exact scalars over ℚ and 𝔽ₚ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::rational::Rational;
use crate::error::{Error, Result};

/// The coefficient field: ℚ or a prime field 𝔽ₚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u32),
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn mod_inverse(a: u32, p: u32) -> Option<u32> {
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i64) as u32)
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::InvalidField(format!("F{p}: {p} is not prime")))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(Rational::from_integer(n)),
            Field::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Image of `num/den` in this field; `None` if `den` vanishes here.
    pub fn from_ratio(self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den);
        d.inv().map(|d| &self.from_i64(num) * &d)
    }

    /// Whether `n` is invertible in the field, i.e. the characteristic does not divide it.
    pub fn is_unit(self, n: u64) -> bool {
        match self {
            Field::Rationals => n != 0,
            Field::Prime(p) => !n.is_multiple_of(p as u64),
        }
    }

    /// Parses a scalar literal: `a` or `a/b` over ℚ, `k` (reduced mod p) over 𝔽ₚ.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let bad = || Error::Parse(format!("invalid scalar literal {s:?} for field {self}"));
        match self {
            Field::Rationals => s
                .parse::<Rational>()
                .map(Scalar::Rational)
                .map_err(|_| bad()),
            Field::Prime(p) => {
                let r: Rational = s.parse().map_err(|_| bad())?;
                if !r.is_integer() {
                    return Err(bad());
                }
                let value = r.mod_prime(p).ok_or_else(bad)?;
                Ok(Scalar::Residue { value, modulus: p })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        let digits = s
            .strip_prefix('F')
            .filter(|d| {
                !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) && !d.starts_with('0')
            })
            .ok_or_else(|| Error::InvalidField(format!("{s:?} is neither \"Q\" nor \"F<p>\"")))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("{s:?}: characteristic out of range")))?;
        Field::prime(p)
    }
}

/// An exact field element. Arithmetic between different fields is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => r.recip().map(Scalar::Rational),
            Scalar::Residue { value, modulus } => {
                mod_inverse(*value, *modulus).map(|v| Scalar::Residue {
                    value: v,
                    modulus: *modulus,
                })
            }
        }
    }
}

fn residues(a: &Scalar, b: &Scalar) -> Option<(u64, u64, u32)> {
    match (a, b) {
        (
            Scalar::Residue {
                value: x,
                modulus: p,
            },
            Scalar::Residue {
                value: y,
                modulus: q,
            },
        ) => {
            assert_eq!(p, q, "arithmetic between different prime fields");
            Some((*x as u64, *y as u64, *p))
        }
        _ => None,
    }
}

fn rationals<'a>(a: &'a Scalar, b: &'a Scalar) -> (&'a Rational, &'a Rational) {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => (x, y),
        _ => panic!("arithmetic between {} and {}", a.field(), b.field()),
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if let Some((x, y, p)) = residues(self, rhs) {
            return Scalar::Residue {
                value: ((x + y) % p as u64) as u32,
                modulus: p,
            };
        }
        let (x, y) = rationals(self, rhs);
        Scalar::Rational(x.add(y))
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if let Some((x, y, p)) = residues(self, rhs) {
            return Scalar::Residue {
                value: ((x + p as u64 - y) % p as u64) as u32,
                modulus: p,
            };
        }
        let (x, y) = rationals(self, rhs);
        Scalar::Rational(x.sub(y))
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if let Some((x, y, p)) = residues(self, rhs) {
            return Scalar::Residue {
                value: ((x * y) % p as u64) as u32,
                modulus: p,
            };
        }
        let (x, y) = rationals(self, rhs);
        Scalar::Rational(x.mul(y))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.neg()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}
