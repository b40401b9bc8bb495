pub use num::BigInt;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (both invariants are maintained by `num`).
pub type Rational = num::BigRational;

/// Builds the rational `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Builds the integer rational `p`.
pub fn rat_int(p: i64) -> Rational {
    Rational::from(BigInt::from(p))
}

/// Parses `"p"` or `"p/q"` with arbitrary-precision components.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d: BigInt = den
        .parse()
        .map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}
