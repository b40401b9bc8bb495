use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::rational::{BigInt, Rational};

/// Errors raised by Laurent-polynomial operations.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// The two operands do not share the same ordered variable list.
    #[error("variable lists differ")]
    VariableMismatch,
    /// No Laurent-polynomial quotient exists. In seed dynamics this signals a
    /// Laurent-phenomenon violation (a bug or a wrong quiver), never a value
    /// to be approximated.
    #[error("division is not exact: no Laurent-polynomial quotient exists")]
    NonExactDivision,
    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    /// Zero substituted for a variable that appears with a negative exponent.
    #[error("zero assigned to variable `{0}` appearing with a negative exponent")]
    ZeroSubstitution(String),
    /// A variable of the polynomial is missing from the assignment.
    #[error("no value assigned for variable `{0}`")]
    MissingAssignment(String),
}

/// A multivariate Laurent polynomial over the integers.
///
/// Invariants: no zero coefficients are stored, every exponent vector has
/// length equal to the number of variables, and the term map is canonical
/// (two polynomials are equal iff their term maps are identical).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

/// Operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Ring operations on Laurent polynomials sharing one variable list.
pub fn poly_arith(op: PolyOp, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    match op {
        PolyOp::Add => a.add(b),
        PolyOp::Sub => a.sub(b),
        PolyOp::Mul => a.mul(b),
    }
}

impl LaurentPoly {
    /// The zero polynomial in the given variables.
    pub fn zero(vars: Vec<String>) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `c`.
    pub fn constant(vars: Vec<String>, c: impl Into<BigInt>) -> Self {
        let n = vars.len();
        Self::from_terms(vars, [(vec![0; n], c.into())])
    }

    /// The single variable `vars[i]`.
    pub fn variable(vars: Vec<String>, i: usize) -> Self {
        let n = vars.len();
        assert!(i < n, "variable index out of range");
        let mut e = vec![0i64; n];
        e[i] = 1;
        Self::from_terms(vars, [(e, BigInt::one())])
    }

    /// A monomial `c * x^e`.
    pub fn monomial(vars: Vec<String>, exps: Vec<i64>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        Self::from_terms(vars, [(exps, c.into())])
    }

    /// Builds from raw terms, dropping zero coefficients and summing repeats.
    pub fn from_terms(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>,
    ) -> Self {
        let n = vars.len();
        let mut map: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent vector length mismatch");
            let entry = map.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { vars, terms: map }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigInt> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    fn check_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Raises to a nonnegative power.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.vars.clone(), 1);
        for _ in 0..k {
            acc = acc.mul(self).expect("same variable list");
        }
        acc
    }

    /// Exact division: returns `q` with `q * b == a`, or
    /// [`PolyError::NonExactDivision`] if no Laurent-polynomial quotient with
    /// integer coefficients exists.
    ///
    /// The quotient's exponent support is confined to the per-coordinate box
    /// `[min(a) - min(b), max(a) - max(b)]` (Newton-polytope vertex argument),
    /// and successive cancellation leads strictly decrease lexicographically,
    /// so the reduction loop terminates: it either exhausts the dividend or
    /// leaves the box and fails.
    pub fn exact_div(&self, b: &Self) -> Result<Self, PolyError> {
        self.check_vars(b)?;
        if b.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        let n = self.vars.len();
        if self.is_zero() {
            return Ok(Self::zero(self.vars.clone()));
        }
        let mut qmin = vec![i64::MAX; n];
        let mut qmax = vec![i64::MIN; n];
        for i in 0..n {
            let (amin, amax) = coord_range(&self.terms, i);
            let (bmin, bmax) = coord_range(&b.terms, i);
            qmin[i] = amin - bmin;
            qmax[i] = amax - bmax;
            if qmin[i] > qmax[i] {
                return Err(PolyError::NonExactDivision);
            }
        }
        let (blead_e, blead_c) = b.terms.iter().next_back().expect("nonzero divisor");
        let mut rem = self.terms.clone();
        let mut quot: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        while let Some((rlead_e, rlead_c)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let te: Vec<i64> = rlead_e.iter().zip(blead_e).map(|(x, y)| x - y).collect();
            if te
                .iter()
                .enumerate()
                .any(|(i, &e)| e < qmin[i] || e > qmax[i])
            {
                return Err(PolyError::NonExactDivision);
            }
            if (&rlead_c % blead_c) != BigInt::zero() {
                return Err(PolyError::NonExactDivision);
            }
            let tc = &rlead_c / blead_c;
            // rem -= t * b
            for (eb, cb) in &b.terms {
                let e: Vec<i64> = te.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = rem.entry(e).or_insert_with(BigInt::zero);
                *entry -= &tc * cb;
            }
            rem.retain(|_, c| !c.is_zero());
            quot.insert(te, tc);
        }
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms: quot,
        })
    }

    /// Exact substitution of nonzero rationals for the variables.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational, PolyError> {
        let values: Vec<&Rational> = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .ok_or_else(|| PolyError::MissingAssignment(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = Rational::from(c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if values[i].is_zero() && exp < 0 {
                    return Err(PolyError::ZeroSubstitution(self.vars[i].clone()));
                }
                term *= pow_rational(values[i], exp);
            }
            total += term;
        }
        Ok(total)
    }
}

fn pow_rational(x: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    let base = if e >= 0 { x.clone() } else { x.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

fn coord_range(terms: &BTreeMap<Vec<i64>, BigInt>, i: usize) -> (i64, i64) {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for e in terms.keys() {
        lo = lo.min(e[i]);
        hi = hi.max(e[i]);
    }
    (lo, hi)
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: terms sorted lexicographically by exponent
    /// vector, e.g. `-1*x1^-1*x2^2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            if e.iter().all(|&x| x == 0) || !c.is_one() || c.is_negative() {
                parts.push(c.to_string());
            }
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                } else if exp == 1 {
                    parts.push(self.vars[i].clone());
                } else {
                    parts.push(format!("{}^{}", self.vars[i], exp));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
