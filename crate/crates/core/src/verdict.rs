//! Integrality decisions for proper rationals.
//!
//! Each verdict decides an integrality question from the divisibility
//! condition on the standard forms of its inputs, records the witnesses it
//! used, and also computes the exact result. The condition and the computed
//! result must agree; a disagreement is a broken invariant and panics.
//!
//! Inputs to the single-rational and pairwise verdicts must be proper
//! rationals (denominator at least 2). Integers are rejected with
//! [`VerdictError::NotProper`] rather than silently accepted.

use thiserror::Error;

use crate::int::Int;
use crate::poly::{eval_int_coeffs, MonicPoly};
use crate::rational::{Classification, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerdictError {
    #[error("{0} is not a proper rational")]
    NotProper(Rational),
    #[error("zero has no reciprocal")]
    ZeroValue,
}

fn require_proper(r: &Rational) -> Result<(), VerdictError> {
    if r.is_proper() {
        Ok(())
    } else {
        Err(VerdictError::NotProper(r.clone()))
    }
}

/// Which branch of the reciprocal trichotomy applies to `c/b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReciprocalCase {
    /// `|c| = 1`: the reciprocal `b/c` is an integer.
    UnitNumerator,
    /// `c >= 2`: the reciprocal is a positive proper rational.
    PositiveProper,
    /// `c <= -2`: the reciprocal is a negative proper rational `-b/|c|`.
    NegativeProper,
}

impl ReciprocalCase {
    pub fn as_str(self) -> &'static str {
        match self {
            ReciprocalCase::UnitNumerator => "unit-numerator",
            ReciprocalCase::PositiveProper => "positive-proper",
            ReciprocalCase::NegativeProper => "negative-proper",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocalVerdict {
    pub case: ReciprocalCase,
    pub result: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleVerdict {
    pub is_integer: bool,
    /// `q` with `i = b * q`, present exactly when the product is an integer.
    pub witness_quotient: Option<Int>,
    pub result: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumVerdict {
    pub is_integer: bool,
    pub denominators_equal: bool,
    /// `b1 | (c1 + c2)`; only evaluated when the denominators are equal.
    pub divisibility_holds: Option<bool>,
    pub result: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductVerdict {
    pub is_integer: bool,
    pub b1_divides_c2: bool,
    pub b2_divides_c1: bool,
    pub result: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JointVerdict {
    pub sum_is_integer: bool,
    pub product_is_integer: bool,
    pub both_inputs_integer: bool,
}

pub fn reciprocal_verdict(r: &Rational) -> Result<ReciprocalVerdict, VerdictError> {
    if r.is_zero() {
        return Err(VerdictError::ZeroValue);
    }
    require_proper(r)?;
    let (c, b) = (r.numer(), r.denom());
    let case = if c.abs().is_one() {
        ReciprocalCase::UnitNumerator
    } else if c.is_positive() {
        ReciprocalCase::PositiveProper
    } else {
        ReciprocalCase::NegativeProper
    };
    let result = r.recip().expect("nonzero");
    match case {
        ReciprocalCase::UnitNumerator => {
            assert!(result.is_integer(), "1/({r}) = {result} must be an integer");
            assert_eq!(result.numer(), &(b * c), "1/({r}) must equal b/c");
        }
        ReciprocalCase::PositiveProper => {
            assert!(
                result.is_proper() && result.numer().is_positive(),
                "1/({r}) = {result} must be a positive proper rational"
            );
        }
        ReciprocalCase::NegativeProper => {
            assert_eq!(result.numer(), &-b, "numerator of 1/({r}) must be -b");
            assert_eq!(
                result.denom(),
                &c.abs(),
                "denominator of 1/({r}) must be |c|"
            );
        }
    }
    Ok(ReciprocalVerdict { case, result })
}

/// `r + d`, which stays proper with the same denominator and numerator `c + d*b`.
pub fn shift_verdict(r: &Rational, d: &Int) -> Result<Rational, VerdictError> {
    require_proper(r)?;
    let result = r + &Rational::from_integer(d.clone());
    assert!(result.is_proper(), "({r}) + {d} = {result} must be proper");
    assert_eq!(
        result.denom(),
        r.denom(),
        "({r}) + {d} changed the denominator"
    );
    assert_eq!(result.numer(), &(r.numer() + &(d * r.denom())));
    Ok(result)
}

/// `r * i` is an integer iff `b | i`.
pub fn scale_verdict(r: &Rational, i: &Int) -> Result<ScaleVerdict, VerdictError> {
    require_proper(r)?;
    let b = r.denom();
    let is_integer = b.divides(i);
    let witness_quotient = is_integer.then(|| i / b);
    let result = r * &Rational::from_integer(i.clone());
    assert_eq!(
        is_integer,
        result.is_integer(),
        "divisibility b | i disagrees with ({r}) * {i} = {result}"
    );
    if let Some(q) = &witness_quotient {
        assert_eq!(result.numer(), &(r.numer() * q));
    }
    Ok(ScaleVerdict {
        is_integer,
        witness_quotient,
        result,
    })
}

/// `r1 + r2` is an integer iff `b1 = b2` and `b1 | (c1 + c2)`.
pub fn sum_verdict(r1: &Rational, r2: &Rational) -> Result<SumVerdict, VerdictError> {
    require_proper(r1)?;
    require_proper(r2)?;
    let denominators_equal = r1.denom() == r2.denom();
    let divisibility_holds =
        denominators_equal.then(|| r1.denom().divides(&(r1.numer() + r2.numer())));
    let is_integer = divisibility_holds == Some(true);
    let result = r1 + r2;
    assert_eq!(
        is_integer,
        result.is_integer(),
        "sum condition disagrees with ({r1}) + ({r2}) = {result}"
    );
    Ok(SumVerdict {
        is_integer,
        denominators_equal,
        divisibility_holds,
        result,
    })
}

/// `r1 * r2` is an integer iff `b1 | c2` and `b2 | c1`.
pub fn product_verdict(r1: &Rational, r2: &Rational) -> Result<ProductVerdict, VerdictError> {
    require_proper(r1)?;
    require_proper(r2)?;
    let b1_divides_c2 = r1.denom().divides(r2.numer());
    let b2_divides_c1 = r2.denom().divides(r1.numer());
    let is_integer = b1_divides_c2 && b2_divides_c1;
    let result = r1 * r2;
    assert_eq!(
        is_integer,
        result.is_integer(),
        "product condition disagrees with ({r1}) * ({r2}) = {result}"
    );
    Ok(ProductVerdict {
        is_integer,
        b1_divides_c2,
        b2_divides_c1,
        result,
    })
}

/// Sum and product integrality for any two rationals.
///
/// Integer sum and integer product force both inputs to be integers; for two
/// proper inputs the sum and product are never both integers.
pub fn joint_verdict(q1: &Rational, q2: &Rational) -> JointVerdict {
    let sum_is_integer = (q1 + q2).is_integer();
    let product_is_integer = (q1 * q2).is_integer();
    let both_inputs_integer =
        q1.classify() == Classification::Integer && q2.classify() == Classification::Integer;
    if sum_is_integer && product_is_integer {
        assert!(
            both_inputs_integer,
            "{q1} and {q2} have integer sum and product but are not both integers"
        );
    }
    if q1.is_proper() && q2.is_proper() {
        assert!(!(sum_is_integer && product_is_integer));
    }
    JointVerdict {
        sum_is_integer,
        product_is_integer,
        both_inputs_integer,
    }
}

/// `x^2 - i1*x + i2`, whose roots have sum `i1` and product `i2`.
pub fn quadratic_from_sum_product(i1: &Int, i2: &Int) -> MonicPoly {
    MonicPoly::new(vec![i2.clone(), -i1, Int::one()]).expect("monic by construction")
}

/// Positive divisors of `n > 0` in increasing order.
fn positive_divisors(n: &Int) -> Vec<Int> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = Int::one();
    while &d * &d <= *n {
        if d.divides(n) {
            let other = n / &d;
            if other != d {
                high.push(other);
            }
            low.push(d.clone());
        }
        d = &d + &Int::one();
    }
    low.extend(high.into_iter().rev());
    low
}

/// Distinct integer roots of `p` in increasing order.
///
/// A rational root of a monic integer polynomial is an integer dividing the
/// constant term, so these are all of its rational roots. A zero constant
/// term contributes the root 0 and the search continues on `p / x`.
pub fn monic_rational_roots(p: &MonicPoly) -> Vec<Int> {
    let mut coeffs = p.coefficients();
    let mut roots = Vec::new();
    if coeffs[0].is_zero() {
        roots.push(Int::zero());
        while coeffs.len() > 1 && coeffs[0].is_zero() {
            coeffs = &coeffs[1..];
        }
    }
    if coeffs.len() > 1 {
        for d in positive_divisors(&coeffs[0].abs()) {
            for candidate in [-&d, d] {
                if eval_int_coeffs(coeffs, &candidate).is_zero() {
                    roots.push(candidate);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Checks by exhaustive evaluation that no proper rational `c/b` with
/// `2 <= b <= search_bound` and `|c| <= search_bound` is a root of `p`.
///
/// Bounds below 2 leave nothing to check and return `true`.
pub fn verify_no_proper_root(p: &MonicPoly, search_bound: i64) -> bool {
    for b in 2..=search_bound {
        let denom = Int::from(b);
        for c in (-search_bound..=search_bound).filter(|&c| c != 0) {
            let numer = Int::from(c);
            if !numer.gcd(&denom).is_one() {
                continue;
            }
            let x = Rational::new(numer, denom.clone()).expect("b >= 2");
            if p.eval(&x).is_zero() {
                return false;
            }
        }
    }
    true
}
