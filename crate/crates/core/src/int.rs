//! Signed integers of unbounded magnitude.
//!
//! Values that fit in an `i64` are stored inline and every operation on them
//! uses checked machine arithmetic; anything that would overflow is promoted
//! to a `BigInt`. Results are demoted back to the inline form whenever they
//! fit, so two equal values always share the same representation and the
//! derived `PartialEq`/`Hash` are value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, ParseBigIntError};
use num_traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64),
    // Invariant: never holds a value that fits in an i64.
    Big(BigInt),
}

/// An exact integer. Arithmetic never wraps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Int(Repr);

impl Int {
    pub const fn from_i64(v: i64) -> Self {
        Int(Repr::Small(v))
    }

    pub const fn zero() -> Self {
        Int::from_i64(0)
    }

    pub const fn one() -> Self {
        Int::from_i64(1)
    }

    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Int(Repr::Small(v)),
            None => Int(Repr::Big(b)),
        }
    }

    fn from_i128(v: i128) -> Self {
        match i64::try_from(v) {
            Ok(v) => Int(Repr::Small(v)),
            Err(_) => Int(Repr::Big(BigInt::from(v))),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match &self.0 {
            Repr::Small(v) => BigInt::from(*v),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self.0 {
            Repr::Small(v) => Some(v),
            Repr::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v > 0,
            Repr::Big(b) => b.is_positive(),
        }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.is_negative() {
            -1
        } else if self.is_zero() {
            0
        } else {
            1
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Truncating division with remainder. `None` when `divisor` is zero.
    ///
    /// The remainder takes the sign of `self`, matching Rust's `/` and `%`
    /// on primitive integers.
    pub fn checked_div_rem(&self, divisor: &Int) -> Option<(Int, Int)> {
        if divisor.is_zero() {
            return None;
        }
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &divisor.0) {
            // Only i64::MIN / -1 fails here.
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return Some((Int::from_i64(q), Int::from_i64(r)));
            }
        }
        let (a, b) = (self.to_bigint(), divisor.to_bigint());
        Some((Int::from_big(&a / &b), Int::from_big(&a % &b)))
    }

    /// Greatest common divisor by the Euclidean algorithm.
    ///
    /// Always nonnegative; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Int) -> Int {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &other.0) {
            let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
            while b != 0 {
                let r = a % b;
                a = b;
                b = r;
            }
            return Int::from_i128(i128::from(a));
        }
        let mut a = self.abs();
        let mut b = other.abs();
        while !b.is_zero() {
            let r = &a % &b;
            a = b;
            b = r;
        }
        a
    }

    /// `self | other`: there is an integer `q` with `other = self * q`.
    ///
    /// Zero divides only zero.
    pub fn divides(&self, other: &Int) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        (other % self).is_zero()
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::zero()
    }
}

macro_rules! impl_from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Int {
            fn from(v: $t) -> Self {
                Int::from_i128(i128::from(v))
            }
        }
    )*};
}

impl_from_prim!(i8, i16, i32, i64, u8, u16, u32, u64);

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::from_big(b)
    }
}

impl From<&Int> for BigInt {
    fn from(v: &Int) -> Self {
        v.to_bigint()
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<i64> for Int {
    fn eq(&self, other: &i64) -> bool {
        matches!(self.0, Repr::Small(v) if v == *other)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => fmt::Display::fmt(v, f),
            Repr::Big(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Int {
    type Err = ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<i64>() {
            Ok(v) => Ok(Int::from_i64(v)),
            Err(_) => s.parse::<BigInt>().map(Int::from_big),
        }
    }
}

/// Serializes as a JSON number when the value fits in an `i64`, otherwise as
/// a decimal string.
impl Serialize for Int {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            Repr::Small(v) => serializer.serialize_i64(*v),
            Repr::Big(b) => serializer.collect_str(b),
        }
    }
}

impl Neg for &Int {
    type Output = Int;

    fn neg(self) -> Int {
        match &self.0 {
            Repr::Small(v) => match v.checked_neg() {
                Some(n) => Int::from_i64(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Repr::Big(b) => Int::from_big(-b),
        }
    }
}

impl Neg for Int {
    type Output = Int;

    fn neg(self) -> Int {
        -&self
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $checked:ident, $big:expr) => {
        impl $trait<&Int> for &Int {
            type Output = Int;

            fn $method(self, rhs: &Int) -> Int {
                if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
                    if let Some(v) = a.$checked(*b) {
                        return Int::from_i64(v);
                    }
                }
                let f: fn(BigInt, BigInt) -> BigInt = $big;
                Int::from_big(f(self.to_bigint(), rhs.to_bigint()))
            }
        }

        impl $trait<Int> for Int {
            type Output = Int;

            fn $method(self, rhs: Int) -> Int {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Int> for Int {
            type Output = Int;

            fn $method(self, rhs: &Int) -> Int {
                (&self).$method(rhs)
            }
        }

        impl $trait<Int> for &Int {
            type Output = Int;

            fn $method(self, rhs: Int) -> Int {
                self.$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, checked_add, |a, b| a + b);
impl_binop!(Sub, sub, checked_sub, |a, b| a - b);
impl_binop!(Mul, mul, checked_mul, |a, b| a * b);

impl Div<&Int> for &Int {
    type Output = Int;

    /// Truncating division. Panics on a zero divisor.
    fn div(self, rhs: &Int) -> Int {
        self.checked_div_rem(rhs).expect("division by zero").0
    }
}

impl Div<Int> for Int {
    type Output = Int;

    fn div(self, rhs: Int) -> Int {
        &self / &rhs
    }
}

impl Rem<&Int> for &Int {
    type Output = Int;

    /// Remainder of truncating division. Panics on a zero divisor.
    fn rem(self, rhs: &Int) -> Int {
        self.checked_div_rem(rhs).expect("division by zero").1
    }
}

impl Rem<Int> for Int {
    type Output = Int;

    fn rem(self, rhs: Int) -> Int {
        &self % &rhs
    }
}

impl std::iter::Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Int {
    fn product<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int::one(), |acc, x| acc * x)
    }
}
