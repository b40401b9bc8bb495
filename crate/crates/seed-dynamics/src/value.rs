use std::fmt;

use exact_arith::{LaurentPoly, Rational};

/// A cluster-variable value: an exact rational in numeric mode, a Laurent
/// polynomial in the initial cluster variables in symbolic mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rat(Rational),
    Poly(LaurentPoly),
}

impl Value {
    pub fn is_rat(&self) -> bool {
        matches!(self, Value::Rat(_))
    }

    pub fn as_rat(&self) -> Option<&Rational> {
        match self {
            Value::Rat(r) => Some(r),
            Value::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        match self {
            Value::Rat(_) => None,
            Value::Poly(p) => Some(p),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rat(r) => write!(f, "{r}"),
            Value::Poly(p) => write!(f, "{p}"),
        }
    }
}
