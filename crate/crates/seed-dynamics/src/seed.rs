use exact_arith::{LaurentPoly, PolyError, Rational};
use num::{One, Zero};
use quiver_core::{mutate_quiver, Quiver, QuiverError};

use crate::value::Value;

/// Errors raised by seed mutation and schedule execution.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SeedError {
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} is frozen")]
    Frozen(usize),
    #[error("cluster variable at vertex {0} is zero")]
    ZeroX(usize),
    #[error("coefficient at vertex {0} is zero")]
    ZeroY(usize),
    #[error("coefficient at vertex {0} is -1 (division by y+1)")]
    MinusOneY(usize),
    #[error("seed has no coefficients (coefficient-mode operation)")]
    NoCoefficients,
    #[error("coefficient mode requires rational cluster variables")]
    SymbolicCoefficients,
    #[error("cluster variables mix rational and symbolic values")]
    MixedValues,
    #[error("size mismatch: {0} values for {1} vertices")]
    SizeMismatch(usize, usize),
    #[error("batch contains adjacent vertices {0} and {1}")]
    BatchAdjacency(usize, usize),
    #[error("finite schedule has only {0} sweeps, {1} requested")]
    SweepsExceeded(usize, usize),
    #[error("label {0} recorded twice")]
    DuplicateLabel(String),
    #[error("polynomial error: {0}")]
    Poly(#[from] PolyError),
    #[error("quiver error: {0}")]
    Quiver(#[from] QuiverError),
}

/// A seed: quiver, cluster variables `x`, and in coefficient mode the
/// coefficients `y` (exact rationals, all nonzero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub quiver: Quiver,
    pub x: Vec<Value>,
    pub y: Option<Vec<Rational>>,
}

impl Seed {
    pub fn new(quiver: Quiver, x: Vec<Value>, y: Option<Vec<Rational>>) -> Result<Self, SeedError> {
        let n = quiver.n();
        if x.len() != n {
            return Err(SeedError::SizeMismatch(x.len(), n));
        }
        let rats = x.iter().filter(|v| v.is_rat()).count();
        if rats != 0 && rats != n {
            return Err(SeedError::MixedValues);
        }
        if let Some(y) = &y {
            if y.len() != n {
                return Err(SeedError::SizeMismatch(y.len(), n));
            }
            if let Some(k) = y.iter().position(|v| v.is_zero()) {
                return Err(SeedError::ZeroY(k));
            }
        }
        Ok(Seed { quiver, x, y })
    }

    /// Numeric seed from rationals.
    pub fn numeric(quiver: Quiver, x: Vec<Rational>, y: Option<Vec<Rational>>) -> Result<Self, SeedError> {
        Seed::new(quiver, x.into_iter().map(Value::Rat).collect(), y)
    }

    /// Symbolic coefficient-free seed with one fresh variable per vertex,
    /// named `x1..xn`.
    pub fn symbolic(quiver: Quiver) -> Self {
        let n = quiver.n();
        let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let x = (0..n)
            .map(|i| Value::Poly(LaurentPoly::variable(vars.clone(), i)))
            .collect();
        Seed { quiver, x, y: None }
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }
}

/// `r^e` for a nonnegative exponent.
pub fn rat_pow(r: &Rational, e: u32) -> Rational {
    num::pow::pow(r.clone(), e as usize)
}

fn check_vertex(seed: &Seed, k: usize) -> Result<(), SeedError> {
    if k >= seed.n() {
        return Err(SeedError::OutOfRange(k));
    }
    if seed.quiver.is_frozen(k) {
        return Err(SeedError::Frozen(k));
    }
    Ok(())
}

/// The two exchange monomials at vertex `k`:
/// out = prod over lambda[k][j] > 0 of x_j^lambda[k][j],
/// in  = prod over lambda[j][k] > 0 of x_j^lambda[j][k].
pub fn exchange_monomials(seed: &Seed, k: usize) -> Result<(Value, Value), SeedError> {
    check_vertex(seed, k)?;
    let n = seed.n();
    let numeric = seed.x[k].is_rat();
    if numeric {
        let mut out = Rational::one();
        let mut inc = Rational::one();
        for j in 0..n {
            let l = seed.quiver.lambda[k][j];
            let xj = seed.x[j].as_rat().expect("uniform numeric seed");
            if l > 0 {
                out *= rat_pow(xj, l as u32);
            } else if l < 0 {
                inc *= rat_pow(xj, (-l) as u32);
            }
        }
        Ok((Value::Rat(out), Value::Rat(inc)))
    } else {
        let vars = seed.x[k].as_poly().expect("uniform symbolic seed").vars().to_vec();
        let mut out = LaurentPoly::constant(vars, 1);
        let mut inc = out.clone();
        for j in 0..n {
            let l = seed.quiver.lambda[k][j];
            let xj = seed.x[j].as_poly().expect("uniform symbolic seed");
            if l > 0 {
                out = out.mul(&xj.pow(l as u32))?;
            } else if l < 0 {
                inc = inc.mul(&xj.pow((-l) as u32))?;
            }
        }
        Ok((Value::Poly(out), Value::Poly(inc)))
    }
}

/// Coefficient-mode mutation at vertex `k`: the coefficient rule
/// (`y_k' = 1/y_k`; for an arrow k -> i, `y_i' = y_i (y_k^-1 + 1)^-lambda[k][i]`;
/// for an arrow i -> k, `y_i' = y_i (y_k + 1)^lambda[i][k]`), the exchange
/// rule `x_k' = (out + y_k in) / ((y_k + 1) x_k)`, and quiver mutation.
pub fn mutate_seed(seed: &Seed, k: usize) -> Result<Seed, SeedError> {
    check_vertex(seed, k)?;
    let y = seed.y.as_ref().ok_or(SeedError::NoCoefficients)?;
    let yk = &y[k];
    if yk.is_zero() {
        return Err(SeedError::ZeroY(k));
    }
    let one = Rational::one();
    if *yk == -one.clone() {
        return Err(SeedError::MinusOneY(k));
    }
    let xk = seed.x[k]
        .as_rat()
        .ok_or(SeedError::SymbolicCoefficients)?
        .clone();
    if xk.is_zero() {
        return Err(SeedError::ZeroX(k));
    }
    let (out, inc) = exchange_monomials(seed, k)?;
    let (out, inc) = (out.as_rat().unwrap().clone(), inc.as_rat().unwrap().clone());
    let new_xk = (out + yk * inc) / ((yk + &one) * xk);

    let mut new_y = y.clone();
    new_y[k] = yk.recip();
    let yk_inv_plus_1 = yk.recip() + &one;
    let yk_plus_1 = yk + &one;
    for i in 0..seed.n() {
        if i == k {
            continue;
        }
        let l = seed.quiver.lambda[k][i];
        if l > 0 {
            // exponent -lambda[k][i]
            new_y[i] = &y[i] / rat_pow(&yk_inv_plus_1, l as u32);
        } else if l < 0 {
            // lambda[i][k] = -l > 0
            new_y[i] = &y[i] * rat_pow(&yk_plus_1, (-l) as u32);
        }
    }

    let mut x = seed.x.clone();
    x[k] = Value::Rat(new_xk);
    Ok(Seed {
        quiver: mutate_quiver(&seed.quiver, k)?,
        x,
        y: Some(new_y),
    })
}

/// Coefficient-free mutation at vertex `k`: `x_k' = (out + in) / x_k`.
/// In symbolic mode the division is the hard Laurent-phenomenon check and
/// surfaces `NonExactDivision` on failure.
pub fn mutate_seed_free(seed: &Seed, k: usize) -> Result<Seed, SeedError> {
    check_vertex(seed, k)?;
    let (out, inc) = exchange_monomials(seed, k)?;
    let new_xk = match (&seed.x[k], out, inc) {
        (Value::Rat(xk), Value::Rat(o), Value::Rat(i)) => {
            if xk.is_zero() {
                return Err(SeedError::ZeroX(k));
            }
            Value::Rat((o + i) / xk)
        }
        (Value::Poly(xk), Value::Poly(o), Value::Poly(i)) => {
            Value::Poly(o.add(&i)?.exact_div(xk)?)
        }
        _ => return Err(SeedError::MixedValues),
    };
    let mut x = seed.x.clone();
    x[k] = new_xk;
    Ok(Seed {
        quiver: mutate_quiver(&seed.quiver, k)?,
        x,
        y: seed.y.clone(),
    })
}

/// The pair `(a, b) = (y_k/(1+y_k), 1/(1+y_k))` multiplying the in- and
/// out-monomials of the exchange relation at `k`, so that `a + b = 1` and
/// the recorded step satisfies the nonautonomous bilinear form.
pub fn extract_bilinear_coefficients(seed: &Seed, k: usize) -> Result<(Rational, Rational), SeedError> {
    if k >= seed.n() {
        return Err(SeedError::OutOfRange(k));
    }
    let y = seed.y.as_ref().ok_or(SeedError::NoCoefficients)?;
    let yk = &y[k];
    let one = Rational::one();
    let denom = yk + &one;
    if denom.is_zero() {
        return Err(SeedError::MinusOneY(k));
    }
    Ok((yk / &denom, one / denom))
}
