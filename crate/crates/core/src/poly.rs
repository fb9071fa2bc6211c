//! Monic polynomials with integer coefficients.

use std::fmt;

use thiserror::Error;

use crate::int::Int;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial must have degree at least 1")]
    DegreeTooLow,
    #[error("leading coefficient must be 1, got {0}")]
    NotMonic(Int),
}

/// Integer polynomial with leading coefficient 1 and degree at least 1.
///
/// Coefficients run from the constant term upward.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonicPoly {
    coeffs: Vec<Int>,
}

impl MonicPoly {
    pub fn new(coeffs: Vec<Int>) -> Result<Self, PolyError> {
        match coeffs.last() {
            _ if coeffs.len() < 2 => Err(PolyError::DegreeTooLow),
            Some(lead) if !lead.is_one() => Err(PolyError::NotMonic(lead.clone())),
            _ => Ok(MonicPoly { coeffs }),
        }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self, PolyError> {
        MonicPoly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn constant_term(&self) -> &Int {
        &self.coeffs[0]
    }

    /// Exact value at `x` by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            &(&acc * x) + &Rational::from_integer(c.clone())
        })
    }

    /// Value at an integer point.
    pub fn eval_int(&self, x: &Int) -> Int {
        eval_int_coeffs(&self.coeffs, x)
    }
}

pub(crate) fn eval_int_coeffs(coeffs: &[Int], x: &Int) -> Int {
    coeffs
        .iter()
        .rev()
        .fold(Int::zero(), |acc, c| &(&acc * x) + c)
}

pub fn eval_poly(p: &MonicPoly, q: &Rational) -> Rational {
    p.eval(q)
}

/// Highest degree first, e.g. `x^2 - 5x + 6`.
impl fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if power == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonicPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> MonicPoly {
        MonicPoly::from_i64s(c).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert_eq!(MonicPoly::from_i64s(&[1]), Err(PolyError::DegreeTooLow));
        assert_eq!(MonicPoly::from_i64s(&[]), Err(PolyError::DegreeTooLow));
        assert_eq!(
            MonicPoly::from_i64s(&[1, 2]),
            Err(PolyError::NotMonic(Int::from(2)))
        );
        assert_eq!(p(&[6, -5, 1]).degree(), 2);
    }

    #[test]
    fn eval_examples() {
        let quad = p(&[2, -3, 1]);
        assert_eq!(quad.eval(&Rational::from(1)), Rational::zero());
        // 1/4 - 3/2 + 2 = (1 - 6 + 8)/4
        assert_eq!(
            quad.eval(&Rational::from_i64s(1, 2)),
            Rational::from_i64s(3, 4)
        );
        assert_eq!(p(&[5, 1]).eval(&Rational::from(-5)), Rational::zero());
        assert_eq!(quad.eval_int(&Int::from(2)), 0);
        assert_eq!(quad.eval_int(&Int::from(-1)), 6);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[6, -5, 1]).to_string(), "x^2 - 5x + 6");
        assert_eq!(p(&[0, 0, 1]).to_string(), "x^2");
        assert_eq!(p(&[1, -1, 1]).to_string(), "x^2 - x + 1");
        assert_eq!(p(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(p(&[5, 1]).to_string(), "x + 5");
        assert_eq!(p(&[-7, 3, 0, 1]).to_string(), "x^3 + 3x - 7");
    }
}
