//! Rationals kept in canonical form.
//!
//! A [`Rational`] is always stored as `c/b` with `b >= 1` and
//! `gcd(|c|, b) = 1`; the sign lives on the numerator and zero is `0/1`.
//! With this representation a value is an integer exactly when `b = 1`, and
//! a proper rational (a rational that is not an integer) exactly when
//! `b >= 2`, in which case `c/b` is its standard form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::int::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("zero denominator")]
pub struct ZeroDenominator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("invalid integer in rational literal `{0}`")]
    InvalidInt(String),
    #[error(transparent)]
    ZeroDenominator(#[from] ZeroDenominator),
}

/// Integer versus proper rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Integer,
    ProperRational,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Integer => "integer",
            Classification::ProperRational => "proper rational",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Greatest common divisor; nonnegative, with `gcd(0, 0) = 0`.
pub fn gcd(u: &Int, w: &Int) -> Int {
    u.gcd(w)
}

/// `u | w`. Zero divides only zero.
pub fn divides(u: &Int, w: &Int) -> bool {
    u.divides(w)
}

/// Reduces `numerator/denominator` to canonical form.
pub fn normalize(numerator: Int, denominator: Int) -> Result<Rational, ZeroDenominator> {
    Rational::new(numerator, denominator)
}

/// An exact rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: Int,
    denom: Int,
}

impl Rational {
    pub fn new(numerator: Int, denominator: Int) -> Result<Self, ZeroDenominator> {
        if denominator.is_zero() {
            return Err(ZeroDenominator);
        }
        if numerator.is_zero() {
            return Ok(Rational::zero());
        }
        let g = numerator.gcd(&denominator);
        let (mut c, mut b) = if g.is_one() {
            (numerator, denominator)
        } else {
            (&numerator / &g, &denominator / &g)
        };
        if b.is_negative() {
            c = -c;
            b = -b;
        }
        Ok(Rational { numer: c, denom: b })
    }

    /// Builds from small integers; panics on a zero denominator.
    pub fn from_i64s(numerator: i64, denominator: i64) -> Self {
        Rational::new(numerator.into(), denominator.into()).expect("zero denominator")
    }

    pub fn from_integer(value: Int) -> Self {
        Rational {
            numer: value,
            denom: Int::one(),
        }
    }

    pub fn zero() -> Self {
        Rational::from_integer(Int::zero())
    }

    pub fn one() -> Self {
        Rational::from_integer(Int::one())
    }

    /// `c`, carrying the sign.
    pub fn numer(&self) -> &Int {
        &self.numer
    }

    /// `b`, always at least 1.
    pub fn denom(&self) -> &Int {
        &self.denom
    }

    pub fn into_parts(self) -> (Int, Int) {
        (self.numer, self.denom)
    }

    pub fn classify(&self) -> Classification {
        if self.denom.is_one() {
            Classification::Integer
        } else {
            Classification::ProperRational
        }
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// `None` for zero.
    pub fn recip(&self) -> Option<Rational> {
        if self.numer.is_zero() {
            return None;
        }
        // Already coprime; only the sign has to move.
        let (numer, denom) = if self.numer.is_negative() {
            (-&self.denom, -&self.numer)
        } else {
            (self.denom.clone(), self.numer.clone())
        };
        Some(Rational { numer, denom })
    }
}

/// Exact sum: `(c1*b2 + c2*b1) / (b1*b2)`, reduced.
pub fn add(q1: &Rational, q2: &Rational) -> Rational {
    if q1.denom == q2.denom {
        let n = &q1.numer + &q2.numer;
        return Rational::new(n, q1.denom.clone()).expect("denominator is positive");
    }
    let n = &q1.numer * &q2.denom + &q2.numer * &q1.denom;
    let d = &q1.denom * &q2.denom;
    Rational::new(n, d).expect("product of positive denominators")
}

/// Exact product: `(c1*c2) / (b1*b2)`, reduced.
pub fn mul(q1: &Rational, q2: &Rational) -> Rational {
    let n = &q1.numer * &q2.numer;
    let d = &q1.denom * &q2.denom;
    Rational::new(n, d).expect("product of positive denominators")
}

pub fn classify(q: &Rational) -> Classification {
    q.classify()
}

impl Add<&Rational> for &Rational {
    type Output = Rational;

    fn add(self, rhs: &Rational) -> Rational {
        add(self, rhs)
    }
}

impl Add for Rational {
    type Output = Rational;

    fn add(self, rhs: Rational) -> Rational {
        add(&self, &rhs)
    }
}

impl Mul<&Rational> for &Rational {
    type Output = Rational;

    fn mul(self, rhs: &Rational) -> Rational {
        mul(self, rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;

    fn mul(self, rhs: Rational) -> Rational {
        mul(&self, &rhs)
    }
}

impl Neg for &Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        -&self
    }
}

impl Sub<&Rational> for &Rational {
    type Output = Rational;

    fn sub(self, rhs: &Rational) -> Rational {
        add(self, &-rhs)
    }
}

impl From<Int> for Rational {
    fn from(v: Int) -> Self {
        Rational::from_integer(v)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v.into())
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Always `c/b`, integers included (`6/1`).
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

/// Serializes as the `c/b` string.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `n` or `n/d` with optional signs on either part.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_int = |t: &str| {
            t.trim()
                .parse::<Int>()
                .map_err(|_| ParseRationalError::InvalidInt(s.to_string()))
        };
        match s.split_once('/') {
            Some((n, d)) => Ok(Rational::new(parse_int(n)?, parse_int(d)?)?),
            None => Ok(Rational::from_integer(parse_int(s)?)),
        }
    }
}
