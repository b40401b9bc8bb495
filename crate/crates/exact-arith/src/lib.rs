//! Exact arithmetic: arbitrary-precision rationals and multivariate Laurent
//! polynomials with exact division.
//!
//! This crate is the value domain for all seed dynamics: cluster variables and
//! coefficients are either [`Rational`] numbers or [`LaurentPoly`] values, and
//! every operation is exact. In particular [`LaurentPoly::exact_div`] is a hard
//! check: it fails with [`PolyError::NonExactDivision`] whenever no
//! Laurent-polynomial quotient exists, which is how Laurent-phenomenon
//! violations are surfaced.

mod poly;
mod rational;

pub use poly::{poly_arith, LaurentPoly, PolyError, PolyOp};
pub use rational::{parse_rational, rat, rat_int, BigInt, Rational};
