//! Exact rational arithmetic centred on proper rationals, the rationals that
//! are not integers.
//!
//! - [`int`], [`rational`], [`poly`]: unbounded integers, canonical rationals
//!   and monic integer polynomials.
//! - [`verdict`]: integrality decisions for reciprocals, integer shifts and
//!   scalings, and pairwise sums and products, each with its divisibility
//!   witnesses; plus integer root extraction for monic polynomials.
//! - [`oracle`]: exhaustive brute-force checks of those decisions.
//! - [`expr`], [`report`], [`cli`]: the `proprat` command line.

pub mod cli;
pub mod expr;
pub mod int;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod report;
pub mod verdict;

pub use int::Int;
pub use poly::{eval_poly, MonicPoly, PolyError};
pub use rational::{
    add, classify, divides, gcd, mul, normalize, Classification, Rational, ZeroDenominator,
};
