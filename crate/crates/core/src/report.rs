//! Explanations of an expression's value in terms of the integrality verdicts.
//!
//! Only the top-level node is explained; operands are evaluated silently.

use std::fmt;

use serde::Serialize;

use crate::expr::{EvalError, Expr};
use crate::int::Int;
use crate::rational::Rational;
use crate::verdict::{
    product_verdict, reciprocal_verdict, scale_verdict, shift_verdict, sum_verdict, ReciprocalCase,
};

pub const RECIPROCAL: &str = "reciprocal-of-proper";
pub const SHIFT: &str = "proper-plus-integer";
pub const SCALE: &str = "proper-times-integer";
pub const SUM: &str = "sum-of-proper-rationals";
pub const PRODUCT: &str = "product-of-proper-rationals";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppliedTheorem {
    pub name: &'static str,
    pub condition_text: &'static str,
    /// Whether the integrality condition is met, i.e. the result is an integer.
    pub integer_result: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub input_text: String,
    pub value: String,
    pub classification: &'static str,
    pub applied_theorems: Vec<AppliedTheorem>,
}

fn w(name: &str, value: impl ToString) -> Witness {
    Witness {
        name: name.to_string(),
        value: value.to_string(),
    }
}

/// Evaluates `e` and attaches the verdict matching its top-level shape.
///
/// `input_text` is the canonical printing of `e`.
pub fn explain(e: &Expr) -> Result<VerdictReport, EvalError> {
    let value = e.eval()?;
    let mut applied = Vec::new();
    match e {
        Expr::Add(a, b) => {
            let (x, y) = (a.eval()?, b.eval()?);
            match (x.is_proper(), y.is_proper()) {
                (true, true) => applied.push(explain_sum(&x, &y)),
                (true, false) => applied.push(explain_shift(&x, y.numer())),
                (false, true) => applied.push(explain_shift(&y, x.numer())),
                (false, false) => {}
            }
        }
        Expr::Mul(a, b) => {
            let (x, y) = (a.eval()?, b.eval()?);
            match (x.is_proper(), y.is_proper()) {
                (true, true) => applied.push(explain_product(&x, &y)),
                (true, false) => applied.push(explain_scale(&x, y.numer())),
                (false, true) => applied.push(explain_scale(&y, x.numer())),
                (false, false) => {}
            }
        }
        Expr::Recip(a) => {
            let x = a.eval()?;
            if x.is_proper() {
                applied.push(explain_reciprocal(&x));
            }
        }
        _ => {}
    }
    Ok(VerdictReport {
        input_text: e.to_string(),
        value: value.to_string(),
        classification: value.classify().as_str(),
        applied_theorems: applied,
    })
}

fn explain_reciprocal(r: &Rational) -> AppliedTheorem {
    let v = reciprocal_verdict(r).expect("caller checked properness");
    let (c, b) = (r.numer(), r.denom());
    let mut witnesses = vec![w("c", c), w("b", b), w("case", v.case.as_str())];
    match v.case {
        ReciprocalCase::UnitNumerator => witnesses.push(w("|c|", "1")),
        ReciprocalCase::PositiveProper => witnesses.push(w("c >= 2", "true")),
        ReciprocalCase::NegativeProper => witnesses.push(w("d = -b", -b)),
    }
    AppliedTheorem {
        name: RECIPROCAL,
        condition_text: "1/r is an integer iff |c| = 1",
        integer_result: v.case == ReciprocalCase::UnitNumerator,
        witnesses,
    }
}

fn explain_shift(r: &Rational, d: &Int) -> AppliedTheorem {
    let result = shift_verdict(r, d).expect("caller checked properness");
    AppliedTheorem {
        name: SHIFT,
        condition_text: "r + d is never an integer",
        integer_result: false,
        witnesses: vec![
            w("c", r.numer()),
            w("b", r.denom()),
            w("d", d),
            w("c + d*b", result.numer()),
        ],
    }
}

fn explain_scale(r: &Rational, i: &Int) -> AppliedTheorem {
    let v = scale_verdict(r, i).expect("caller checked properness");
    let mut witnesses = vec![w("b", r.denom()), w("i", i), w("b | i", v.is_integer)];
    if let Some(q) = &v.witness_quotient {
        witnesses.push(w("q", q));
    }
    AppliedTheorem {
        name: SCALE,
        condition_text: "r * i is an integer iff b | i",
        integer_result: v.is_integer,
        witnesses,
    }
}

fn explain_sum(r1: &Rational, r2: &Rational) -> AppliedTheorem {
    let v = sum_verdict(r1, r2).expect("caller checked properness");
    let (b1, b2) = (r1.denom(), r2.denom());
    let mut witnesses = vec![w("b1", b1), w("b2", b2), w("b1 = b2", v.denominators_equal)];
    if let Some(holds) = v.divisibility_holds {
        let total = r1.numer() + r2.numer();
        witnesses.push(w("c1 + c2", &total));
        witnesses.push(w("b1 | (c1 + c2)", holds));
        if holds {
            witnesses.push(w("q", &total / b1));
        }
    }
    AppliedTheorem {
        name: SUM,
        condition_text: "r1 + r2 is an integer iff b1 = b2 and b1 | (c1 + c2)",
        integer_result: v.is_integer,
        witnesses,
    }
}

fn explain_product(r1: &Rational, r2: &Rational) -> AppliedTheorem {
    let v = product_verdict(r1, r2).expect("caller checked properness");
    AppliedTheorem {
        name: PRODUCT,
        condition_text: "r1 * r2 is an integer iff b1 | c2 and b2 | c1",
        integer_result: v.is_integer,
        witnesses: vec![
            w("b1", r1.denom()),
            w("c2", r2.numer()),
            w("b1 | c2", v.b1_divides_c2),
            w("b2", r2.denom()),
            w("c1", r1.numer()),
            w("b2 | c1", v.b2_divides_c1),
        ],
    }
}

impl fmt::Display for AppliedTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outcome = if self.integer_result {
            "integer"
        } else {
            "not an integer"
        };
        write!(f, "{} [{}]: {outcome}; ", self.name, self.condition_text)?;
        for (k, wit) in self.witnesses.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}: {}", wit.name, wit.value)?;
        }
        Ok(())
    }
}
