//! Brute-force cross-checks for the integrality verdicts.
//!
//! Integrality here is decided by direct arithmetic on unreduced fractions
//! over `BigInt`, reduced with `num-integer`'s gcd. Nothing in this module
//! consults the divisibility conditions used by [`crate::verdict`] to reach
//! its own answers; the verdicts are only called to be compared against.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::int::Int;
use crate::rational::Rational;
use crate::verdict::{product_verdict, scale_verdict, sum_verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search box needs max numerator >= 1 and max denominator >= 2, got ({0}, {1})")]
    InvalidBox(i64, i64),
    #[error(
        "{theorem} predicate says {predicate} but direct evaluation says {direct} for {tuple}"
    )]
    OracleMismatch {
        theorem: TheoremSelector,
        tuple: String,
        predicate: bool,
        direct: bool,
    },
}

/// Bounds for enumerating proper rationals `c/b` with
/// `0 < |c| <= max_abs_numerator` and `2 <= b <= max_denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBox {
    max_abs_numerator: i64,
    max_denominator: i64,
}

impl SearchBox {
    pub fn new(max_abs_numerator: i64, max_denominator: i64) -> Result<Self, OracleError> {
        if max_abs_numerator < 1 || max_denominator < 2 {
            return Err(OracleError::InvalidBox(max_abs_numerator, max_denominator));
        }
        Ok(SearchBox {
            max_abs_numerator,
            max_denominator,
        })
    }

    pub fn max_abs_numerator(&self) -> i64 {
        self.max_abs_numerator
    }

    pub fn max_denominator(&self) -> i64 {
        self.max_denominator
    }
}

/// Canonical proper rationals in the box, ordered by denominator and then
/// numerator, each exactly once.
pub fn enumerate_proper(bx: SearchBox) -> impl Iterator<Item = Rational> {
    let n = bx.max_abs_numerator;
    (2..=bx.max_denominator).flat_map(move |b| {
        (-n..=n)
            .filter(move |&c| c != 0 && c.abs().gcd(&b) == 1)
            .map(move |c| Rational::from_i64s(c, b))
    })
}

/// A fraction that is never reduced until asked.
#[derive(Debug, Clone)]
struct RawFraction {
    num: BigInt,
    den: BigInt,
}

impl RawFraction {
    fn of(q: &Rational) -> Self {
        RawFraction {
            num: q.numer().to_bigint(),
            den: q.denom().to_bigint(),
        }
    }

    fn of_int(i: &Int) -> Self {
        RawFraction {
            num: i.to_bigint(),
            den: BigInt::one(),
        }
    }

    fn sum(&self, other: &RawFraction) -> RawFraction {
        RawFraction {
            num: &self.num * &other.den + &other.num * &self.den,
            den: &self.den * &other.den,
        }
    }

    fn product(&self, other: &RawFraction) -> RawFraction {
        RawFraction {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    /// Reduce from scratch and test whether the denominator collapses to 1.
    fn is_integral(&self) -> bool {
        assert!(!self.den.is_zero(), "oracle fraction with zero denominator");
        if self.num.is_zero() {
            return true;
        }
        let g = self.num.gcd(&self.den);
        (&self.den / g).abs().is_one()
    }
}

/// Integrality by an independent reduction of `c/b`.
pub fn direct_is_integer(q: &Rational) -> bool {
    RawFraction::of(q).is_integral()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub found: bool,
    pub pair: Option<(Rational, Rational)>,
    pub pairs_scanned: u64,
}

/// Scans every unordered pair (with repetition) of proper rationals in the
/// box for one whose sum and product are both integers. Stops at the first.
pub fn search_sum_product_counterexample(bx: SearchBox) -> CounterexampleReport {
    let values: Vec<(Rational, RawFraction)> = enumerate_proper(bx)
        .map(|q| {
            let raw = RawFraction::of(&q);
            (q, raw)
        })
        .collect();
    let mut pairs_scanned = 0u64;
    for (i, (q1, a)) in values.iter().enumerate() {
        for (q2, b) in &values[i..] {
            pairs_scanned += 1;
            if a.sum(b).is_integral() && a.product(b).is_integral() {
                return CounterexampleReport {
                    found: true,
                    pair: Some((q1.clone(), q2.clone())),
                    pairs_scanned,
                };
            }
        }
    }
    CounterexampleReport {
        found: false,
        pair: None,
        pairs_scanned,
    }
}

/// Which integrality condition to cross-validate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremSelector {
    /// `r * i` for proper `r` and integer `i`.
    Scale,
    /// `r1 + r2` for proper `r1`, `r2`.
    Sum,
    /// `r1 * r2` for proper `r1`, `r2`.
    Product,
}

impl TheoremSelector {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremSelector::Scale => "scale",
            TheoremSelector::Sum => "sum",
            TheoremSelector::Product => "product",
        }
    }
}

impl fmt::Display for TheoremSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Compares the verdict predicate with direct evaluation on every input in
/// the box and returns the number of inputs checked.
///
/// Scale pairs each proper rational with every integer in
/// `[-max_abs_numerator, max_abs_numerator]`; sum and product run over
/// unordered pairs with repetition.
pub fn cross_validate(bx: SearchBox, which: TheoremSelector) -> Result<u64, OracleError> {
    let values: Vec<Rational> = enumerate_proper(bx).collect();
    let raws: Vec<RawFraction> = values.iter().map(RawFraction::of).collect();
    let mut checked = 0u64;
    let mismatch = |tuple: String, predicate: bool, direct: bool| OracleError::OracleMismatch {
        theorem: which,
        tuple,
        predicate,
        direct,
    };

    match which {
        TheoremSelector::Scale => {
            let n = bx.max_abs_numerator;
            for (r, raw) in values.iter().zip(&raws) {
                for i in -n..=n {
                    let i = Int::from(i);
                    let predicate = scale_verdict(r, &i)
                        .expect("enumerated values are proper")
                        .is_integer;
                    let direct = raw.product(&RawFraction::of_int(&i)).is_integral();
                    checked += 1;
                    if predicate != direct {
                        return Err(mismatch(format!("({r}, {i})"), predicate, direct));
                    }
                }
            }
        }
        TheoremSelector::Sum | TheoremSelector::Product => {
            for (k, (r1, a)) in values.iter().zip(&raws).enumerate() {
                for (r2, b) in values[k..].iter().zip(&raws[k..]) {
                    let (predicate, direct) = if which == TheoremSelector::Sum {
                        let v = sum_verdict(r1, r2).expect("enumerated values are proper");
                        (v.is_integer, a.sum(b).is_integral())
                    } else {
                        let v = product_verdict(r1, r2).expect("enumerated values are proper");
                        (v.is_integer, a.product(b).is_integral())
                    };
                    checked += 1;
                    if predicate != direct {
                        return Err(mismatch(format!("({r1}, {r2})"), predicate, direct));
                    }
                }
            }
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_i64s(n, d)
    }

    fn bx(n: i64, b: i64) -> SearchBox {
        SearchBox::new(n, b).unwrap()
    }

    #[test]
    fn box_validation() {
        assert_eq!(SearchBox::new(0, 5), Err(OracleError::InvalidBox(0, 5)));
        assert_eq!(SearchBox::new(3, 1), Err(OracleError::InvalidBox(3, 1)));
        assert!(SearchBox::new(1, 2).is_ok());
    }

    #[test]
    fn enumerate_small_boxes() {
        let got: Vec<_> = enumerate_proper(bx(2, 2)).collect();
        assert_eq!(got, [q(-1, 2), q(1, 2)]);

        let got: Vec<_> = enumerate_proper(bx(1, 2)).collect();
        assert_eq!(got, [q(-1, 2), q(1, 2)]);

        let got: Vec<_> = enumerate_proper(bx(3, 3)).collect();
        assert_eq!(
            got,
            [
                q(-3, 2),
                q(-1, 2),
                q(1, 2),
                q(3, 2),
                q(-2, 3),
                q(-1, 3),
                q(1, 3),
                q(2, 3)
            ]
        );
    }

    #[test]
    fn direct_integer_examples() {
        assert!(direct_is_integer(&q(4, 1)));
        assert!(!direct_is_integer(&q(1, 2)));
        assert!(direct_is_integer(&q(0, 1)));
    }

    #[test]
    fn raw_fraction_reduces_independently() {
        let a = RawFraction::of(&q(3, 4));
        let b = RawFraction::of(&q(5, 4));
        assert!(a.sum(&b).is_integral());
        assert!(!a.product(&b).is_integral());
        let neg = RawFraction {
            num: BigInt::from(-6),
            den: BigInt::from(-3),
        };
        assert!(neg.is_integral());
    }

    #[test]
    fn tiny_search() {
        let report = search_sum_product_counterexample(bx(2, 2));
        assert!(!report.found);
        assert_eq!(report.pair, None);
        assert_eq!(report.pairs_scanned, 3);
    }

    #[test]
    fn tiny_cross_validation() {
        assert_eq!(cross_validate(bx(2, 2), TheoremSelector::Product), Ok(3));
        assert_eq!(cross_validate(bx(2, 2), TheoremSelector::Sum), Ok(3));
        // two rationals times five integers
        assert_eq!(cross_validate(bx(2, 2), TheoremSelector::Scale), Ok(10));
    }
}
