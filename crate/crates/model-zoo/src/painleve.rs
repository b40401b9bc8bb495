//! Conserved quantities, proof monitors, the q-Painleve equations, and the
//! bilinear-to-Painleve transformations.
//!
//! Where only squares of constants are determined (q-PII, q-PIII, q-PVI),
//! every reported quantity and asserted identity uses even powers only: the
//! squared-policy combinations (for example c2^4 = (c2^2 c3^2)(c2^2/c3^2))
//! are exactly computable from coefficient data with no square root or
//! branch choice.

use std::collections::BTreeMap;

use exact_arith::Rational;
use num::{One, Zero};
use seed_dynamics::{rat_pow, Trajectory};

use crate::model::{Model, ModelSpec};
use crate::ZooError;

/// Which Painleve system a model's coefficients satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PainleveKind {
    QPI,
    QPII,
    QPIII,
    QPVI,
}

impl PainleveKind {
    pub fn of(model: &Model) -> Option<PainleveKind> {
        match model.spec {
            ModelSpec::QPI => Some(PainleveKind::QPI),
            ModelSpec::QPII => Some(PainleveKind::QPII),
            ModelSpec::QPIII => Some(PainleveKind::QPIII),
            ModelSpec::QPVI => Some(PainleveKind::QPVI),
            _ => None,
        }
    }
}

/// Coefficient values indexed by (family, n): the y_n / z_n / Y_n / Z_n
/// diagonals of a trajectory, or a plain derived sequence.
#[derive(Clone, Debug, Default)]
pub struct CoeffData {
    vals: BTreeMap<(String, i64), Rational>,
}

impl CoeffData {
    /// Extracts all single-index coefficient labels of a trajectory.
    pub fn from_trajectory(traj: &Trajectory) -> Self {
        let mut vals = BTreeMap::new();
        for (label, v) in &traj.y {
            if label.idx.len() == 1 {
                vals.insert((label.family.clone(), label.idx[0]), v.clone());
            }
        }
        CoeffData { vals }
    }

    /// A single-family sequence y_0, y_1, ...
    pub fn from_sequence(seq: &[Rational]) -> Self {
        let vals = seq
            .iter()
            .enumerate()
            .map(|(n, v)| ((String::new(), n as i64), v.clone()))
            .collect();
        CoeffData { vals }
    }

    pub fn get(&self, family: &str, n: i64) -> Result<&Rational, ZooError> {
        self.vals
            .get(&(family.to_string(), n))
            .ok_or_else(|| ZooError::MissingLabel(format!("{family}{n}")))
    }

    pub fn has(&self, family: &str, n: i64) -> bool {
        self.vals.contains_key(&(family.to_string(), n))
    }

    /// Largest `m` such that indices 0..m-1 are present for every family in
    /// `families`.
    pub fn contiguous_len(&self, families: &[&str]) -> i64 {
        let mut n = 0;
        while families.iter().all(|f| self.has(f, n)) {
            n += 1;
        }
        n
    }
}

/// `r^e` for a signed exponent.
pub fn rat_powi(r: &Rational, e: i64) -> Rational {
    if e >= 0 {
        rat_pow(r, e as u32)
    } else {
        rat_pow(&r.recip(), (-e) as u32)
    }
}

fn inv_plus_1(r: &Rational) -> Result<Rational, ZooError> {
    if r.is_zero() {
        return Err(ZooError::Numeric("coefficient is zero".into()));
    }
    Ok(r.recip() + Rational::one())
}

fn plus_1(r: &Rational) -> Rational {
    r + Rational::one()
}

fn nonzero(r: Rational, what: &str) -> Result<Rational, ZooError> {
    if r.is_zero() {
        return Err(ZooError::Numeric(format!("{what} vanishes")));
    }
    Ok(r)
}

// Monitor building blocks.

/// q-PI u_n = y_{n+3}(y_{n+1}^-1+1) / (y_n (y_{n+2}^-1+1)).
fn qpi_u(d: &CoeffData, n: i64) -> Result<Rational, ZooError> {
    let num = d.get("", n + 3)? * inv_plus_1(d.get("", n + 1)?)?;
    let den = nonzero(d.get("", n)? * inv_plus_1(d.get("", n + 2)?)?, "u_n denominator")?;
    Ok(num / den)
}

/// q-PI v_n = y_{n+2} y_{n+1}^2 y_n / (y_{n+1}+1).
fn qpi_v(d: &CoeffData, n: i64) -> Result<Rational, ZooError> {
    let y1 = d.get("", n + 1)?;
    let num = d.get("", n + 2)? * y1 * y1 * d.get("", n)?;
    let den = nonzero(plus_1(y1), "y_{n+1}+1")?;
    Ok(num / den)
}

/// q-PII u_n = y_{n+4}(y_{n+1}^-1+1) / (y_n (y_{n+3}^-1+1)) = c_1^2.
fn qpii_u(d: &CoeffData, n: i64) -> Result<Rational, ZooError> {
    let num = d.get("", n + 4)? * inv_plus_1(d.get("", n + 1)?)?;
    let den = nonzero(d.get("", n)? * inv_plus_1(d.get("", n + 3)?)?, "u_n denominator")?;
    Ok(num / den)
}

/// q-PII v_n = y_{n+2} y_n / (y_{n+1}^-1+1).
fn qpii_v(d: &CoeffData, n: i64) -> Result<Rational, ZooError> {
    let num = d.get("", n + 2)? * d.get("", n)?;
    let den = nonzero(inv_plus_1(d.get("", n + 1)?)?, "y_{n+1}^-1+1")?;
    Ok(num / den)
}

/// q-PIII u_n = y_{n+2}(z_{n+1}^-1+1) / (z_n (y_{n+1}^-1+1)) = c_1 c_2.
fn qpiii_u(d: &CoeffData, n: i64) -> Result<Rational, ZooError> {
    let num = d.get("y", n + 2)? * inv_plus_1(d.get("z", n + 1)?)?;
    let den = nonzero(d.get("z", n)? * inv_plus_1(d.get("y", n + 1)?)?, "u_n denominator")?;
    Ok(num / den)
}

/// q-PIII v_n = z_{n+2}(y_{n+1}^-1+1) / (y_n (z_{n+1}^-1+1)) = c_1 / c_2.
fn qpiii_v(d: &CoeffData, n: i64) -> Result<Rational, ZooError> {
    let num = d.get("z", n + 2)? * inv_plus_1(d.get("y", n + 1)?)?;
    let den = nonzero(d.get("y", n)? * inv_plus_1(d.get("z", n + 1)?)?, "v_n denominator")?;
    Ok(num / den)
}

/// q-PIII t_n = y_n z_n.
fn qpiii_t(d: &CoeffData, n: i64) -> Result<Rational, ZooError> {
    Ok(d.get("y", n)? * d.get("z", n)?)
}

/// q-PVI B_n = y_n z_n (= c_3 c_4^{(-1)^n} c_1^n).
fn qpvi_b(d: &CoeffData, n: i64) -> Result<Rational, ZooError> {
    Ok(d.get("y", n)? * d.get("z", n)?)
}

/// q-PVI C_n = y_n Y_n (= c_5 c_6^{(-1)^n} c_1^n).
fn qpvi_c(d: &CoeffData, n: i64) -> Result<Rational, ZooError> {
    Ok(d.get("y", n)? * d.get("Y", n)?)
}

/// q-PVI D_n = y_n z_n Y_n Z_n (= c_2 c_1^{2n}).
fn qpvi_d(d: &CoeffData, n: i64) -> Result<Rational, ZooError> {
    Ok(d.get("y", n)? * d.get("z", n)? * d.get("Y", n)? * d.get("Z", n)?)
}

/// The model's conserved quantities evaluated from the coefficient window at
/// index `n` (each is independent of `n`). Squared-policy names: `c^2`
/// values are even in the undetermined constants; `c^4` values are the
/// squares of the usual squared constants.
pub fn conserved_quantities(
    kind: PainleveKind,
    d: &CoeffData,
    n: i64,
) -> Result<BTreeMap<String, Rational>, ZooError> {
    let mut out = BTreeMap::new();
    match kind {
        PainleveKind::QPI => {
            let c1 = qpi_u(d, n)?;
            let c2 = qpi_v(d, n)? * rat_powi(&nonzero(c1.clone(), "c1")?, -(n + 1));
            out.insert("c1".into(), c1);
            out.insert("c2".into(), c2);
        }
        PainleveKind::QPII => {
            let c1s = nonzero(qpii_u(d, n)?, "c1^2")?;
            let v0 = qpii_v(d, 2 * n)?;
            let v1 = qpii_v(d, 2 * n + 1)?;
            // c2^2 c3^2 = v_{2n+1}^2 c1^{-(4n+4)}, c2^2/c3^2 = v_{2n}^2 c1^{-(4n+2)}
            let c2_4 = (&v1 * &v1) * (&v0 * &v0) * rat_powi(&c1s, -(4 * n + 3));
            let c3_4 = nonzero(&v1 * &v1, "v_{2n+1}^2")?
                / nonzero(&v0 * &v0, "v_{2n}^2")?
                * rat_powi(&c1s, -1);
            out.insert("c1^2".into(), c1s);
            out.insert("c2^4".into(), c2_4);
            out.insert("c3^4".into(), c3_4);
        }
        PainleveKind::QPIII => {
            let t0 = qpiii_t(d, n)?;
            let t2 = qpiii_t(d, n + 2)?;
            let c1s = nonzero(t2 / nonzero(t0, "t_n")?, "c1^2")?;
            let u = qpiii_u(d, n)?;
            let v = nonzero(qpiii_v(d, n)?, "v_n")?;
            let c2s = u / v;
            let te = qpiii_t(d, 2 * n)?;
            let to = qpiii_t(d, 2 * n + 1)?;
            let c3_4 = (&to * &te) * (&to * &te) * rat_powi(&c1s, -(4 * n + 1));
            let c4_4 = nonzero(&te * &te, "t_{2n}^2")? / nonzero(&to * &to, "t_{2n+1}^2")? * &c1s;
            out.insert("c1^2".into(), c1s);
            out.insert("c2^2".into(), c2s);
            out.insert("c3^4".into(), c3_4);
            out.insert("c4^4".into(), c4_4);
        }
        PainleveKind::QPVI => {
            let d0 = nonzero(qpvi_d(d, n)?, "D_n")?;
            let d1 = qpvi_d(d, n + 1)?;
            let c1s = nonzero(d1 / &d0, "c1^2")?;
            let c2 = &d0 * rat_powi(&c1s, -n);
            let be = qpvi_b(d, 2 * n)?;
            let bo = qpvi_b(d, 2 * n + 1)?;
            let ce = qpvi_c(d, 2 * n)?;
            let co = qpvi_c(d, 2 * n + 1)?;
            let c3_4 = (&bo * &be) * (&bo * &be) * rat_powi(&c1s, -(4 * n + 1));
            let c4_4 = nonzero(&be * &be, "B_{2n}^2")? / nonzero(&bo * &bo, "B_{2n+1}^2")? * &c1s;
            let c5_4 = (&co * &ce) * (&co * &ce) * rat_powi(&c1s, -(4 * n + 1));
            let c6_4 = nonzero(&ce * &ce, "C_{2n}^2")? / nonzero(&co * &co, "C_{2n+1}^2")? * &c1s;
            out.insert("c1^2".into(), c1s);
            out.insert("c2".into(), c2);
            out.insert("c3^4".into(), c3_4);
            out.insert("c4^4".into(), c4_4);
            out.insert("c5^4".into(), c5_4);
            out.insert("c6^4".into(), c6_4);
        }
    }
    Ok(out)
}

/// The proof monitors at index `n`.
pub fn proof_monitors(
    kind: PainleveKind,
    d: &CoeffData,
    n: i64,
) -> Result<BTreeMap<String, Rational>, ZooError> {
    let mut out = BTreeMap::new();
    match kind {
        PainleveKind::QPI => {
            out.insert("u".into(), qpi_u(d, n)?);
            out.insert("v".into(), qpi_v(d, n)?);
        }
        PainleveKind::QPII => {
            out.insert("u".into(), qpii_u(d, n)?);
            out.insert("v".into(), qpii_v(d, n)?);
        }
        PainleveKind::QPIII => {
            out.insert("u".into(), qpiii_u(d, n)?);
            out.insert("v".into(), qpiii_v(d, n)?);
            out.insert("t".into(), qpiii_t(d, n)?);
        }
        PainleveKind::QPVI => {
            out.insert("yz".into(), qpvi_b(d, n)?);
            out.insert("yY".into(), qpvi_c(d, n)?);
            out.insert("yzYZ".into(), qpvi_d(d, n)?);
        }
    }
    Ok(out)
}

/// One asserted identity instance with both sides exactly evaluated.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: String,
    pub index: i64,
    pub lhs: Rational,
    pub rhs: Rational,
    /// True when the identity is asserted on squares (no branch choice).
    pub squared: bool,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The monitor step laws at index `n` (all derived in the proofs):
/// q-PI u_{n+1}=u_n, v_{n+1}=c_1 v_n; q-PII u_{n+1}=u_n, v_{n+2}=c_1^2 v_n;
/// q-PIII u_{n+1}=u_n, v_{n+1}=v_n, t_{n+2}=c_1^2 t_n; q-PVI the B, C, D
/// product laws with ratio c_1^2.
pub fn monitor_laws(
    kind: PainleveKind,
    d: &CoeffData,
    n: i64,
) -> Result<Vec<IdentityCheck>, ZooError> {
    let check = |name: &str, index, lhs, rhs| IdentityCheck {
        name: name.into(),
        index,
        lhs,
        rhs,
        squared: false,
    };
    Ok(match kind {
        PainleveKind::QPI => {
            let c1 = qpi_u(d, n)?;
            vec![
                check("u_{n+1}=u_n", n, qpi_u(d, n + 1)?, c1.clone()),
                check("v_{n+1}=c1*v_n", n, qpi_v(d, n + 1)?, &c1 * qpi_v(d, n)?),
            ]
        }
        PainleveKind::QPII => {
            let c1s = qpii_u(d, n)?;
            vec![
                check("u_{n+1}=u_n", n, qpii_u(d, n + 1)?, c1s.clone()),
                check("v_{n+2}=c1^2*v_n", n, qpii_v(d, n + 2)?, &c1s * qpii_v(d, n)?),
            ]
        }
        PainleveKind::QPIII => {
            let c1s = qpiii_u(d, n)? * qpiii_v(d, n)?;
            vec![
                check("u_{n+1}=u_n", n, qpiii_u(d, n + 1)?, qpiii_u(d, n)?),
                check("v_{n+1}=v_n", n, qpiii_v(d, n + 1)?, qpiii_v(d, n)?),
                check("t_{n+2}=c1^2*t_n", n, qpiii_t(d, n + 2)?, &c1s * qpiii_t(d, n)?),
            ]
        }
        PainleveKind::QPVI => {
            let c1s = qpvi_d(d, n + 1)? / nonzero(qpvi_d(d, n)?, "D_n")?;
            vec![
                check(
                    "D_{n+1}=c1^2*D_n",
                    n,
                    qpvi_d(d, n + 1)?,
                    &c1s * qpvi_d(d, n)?,
                ),
                check(
                    "B_{n+2}=c1^2*B_n",
                    n,
                    qpvi_b(d, n + 2)?,
                    &c1s * qpvi_b(d, n)?,
                ),
                check(
                    "C_{n+2}=c1^2*C_n",
                    n,
                    qpvi_c(d, n + 2)?,
                    &c1s * qpvi_c(d, n)?,
                ),
            ]
        }
    })
}

/// The raw coefficient recurrences ("the equation only for y_n") at index
/// `n`: lhs is the trajectory value, rhs the recurrence evaluation.
pub fn painleve_recurrence(
    kind: PainleveKind,
    d: &CoeffData,
    n: i64,
) -> Result<Vec<IdentityCheck>, ZooError> {
    let check = |name: &str, lhs, rhs| IdentityCheck {
        name: name.into(),
        index: n,
        lhs,
        rhs,
        squared: false,
    };
    Ok(match kind {
        PainleveKind::QPI => {
            let num = plus_1(d.get("", n + 3)?) * plus_1(d.get("", n + 1)?);
            let i2 = inv_plus_1(d.get("", n + 2)?)?;
            let den = nonzero(&i2 * &i2 * d.get("", n)?, "recurrence denominator")?;
            vec![check("y_{n+4}", d.get("", n + 4)?.clone(), num / den)]
        }
        PainleveKind::QPII => {
            let num = plus_1(d.get("", n + 4)?) * plus_1(d.get("", n + 1)?);
            let den = nonzero(
                inv_plus_1(d.get("", n + 3)?)? * inv_plus_1(d.get("", n + 2)?)? * d.get("", n)?,
                "recurrence denominator",
            )?;
            vec![check("y_{n+5}", d.get("", n + 5)?.clone(), num / den)]
        }
        PainleveKind::QPIII => {
            let ynum = plus_1(d.get("y", n + 2)?) * plus_1(d.get("z", n + 1)?);
            let yden = nonzero(
                inv_plus_1(d.get("z", n + 2)?)? * inv_plus_1(d.get("y", n + 1)?)? * d.get("z", n)?,
                "recurrence denominator",
            )?;
            let znum = plus_1(d.get("z", n + 2)?) * plus_1(d.get("y", n + 1)?);
            let zden = nonzero(
                inv_plus_1(d.get("y", n + 2)?)? * inv_plus_1(d.get("z", n + 1)?)? * d.get("y", n)?,
                "recurrence denominator",
            )?;
            vec![
                check("y_{n+3}", d.get("y", n + 3)?.clone(), ynum / yden),
                check("z_{n+3}", d.get("z", n + 3)?.clone(), znum / zden),
            ]
        }
        PainleveKind::QPVI => {
            // The four coupled equations; each divides by the coefficient the
            // mutated vertex carried two steps earlier (the family swap).
            let eq = |a: &str, b: &str, c: &str, e: &str| -> Result<(Rational, Rational), ZooError> {
                let num = plus_1(d.get(a, n + 1)?) * plus_1(d.get(e, n + 1)?);
                let den = nonzero(
                    inv_plus_1(d.get(b, n + 1)?)? * inv_plus_1(d.get(c, n + 1)?)? * d.get(e, n)?,
                    "recurrence denominator",
                )?;
                Ok((d.get(a, n + 2)?.clone(), num / den))
            };
            let (yl, yr) = eq("y", "z", "Y", "Z")?;
            let (zl, zr) = eq("z", "y", "Z", "Y")?;
            let (bl, br) = eq("Y", "Z", "y", "z")?;
            let (cl, cr) = eq("Z", "Y", "z", "y")?;
            vec![
                check("y_{n+2}", yl, yr),
                check("z_{n+2}", zl, zr),
                check("Y_{n+2}", bl, br),
                check("Z_{n+2}", cl, cr),
            ]
        }
    })
}

/// The constant-form q-Painleve equations at index `n >= base + 1`, with
/// constants computed from the window at `base`. q-PI and q-PVI check the
/// printed equations directly (every constant combination involved is
/// even-power computable); q-PII and q-PIII check the squared identities.
pub fn painleve_rhs(
    kind: PainleveKind,
    d: &CoeffData,
    n: i64,
    base: i64,
) -> Result<Vec<IdentityCheck>, ZooError> {
    let sq = |r: &Rational| r * r;
    let check = |name: &str, lhs, rhs, squared| IdentityCheck {
        name: name.into(),
        index: n,
        lhs,
        rhs,
        squared,
    };
    Ok(match kind {
        PainleveKind::QPI => {
            let consts = conserved_quantities(kind, d, base)?;
            let (c1, c2) = (&consts["c1"], &consts["c2"]);
            let yn = d.get("", n)?;
            let rhs = c2 * rat_powi(c1, n) * plus_1(yn) / nonzero(yn * yn, "y_n^2")?;
            vec![check(
                "y_{n+1}y_{n-1}",
                d.get("", n + 1)? * d.get("", n - 1)?,
                rhs,
                false,
            )]
        }
        PainleveKind::QPII => {
            let c1s = nonzero(qpii_u(d, base)?, "c1^2")?;
            // c2^2 c3^2 (even n) and c2^2/c3^2 (odd n), both even-power.
            let v0 = qpii_v(d, 2 * base)?;
            let v1 = qpii_v(d, 2 * base + 1)?;
            let p_even = sq(&v1) * rat_powi(&c1s, -(2 * base + 2));
            let p_odd = sq(&v0) * rat_powi(&c1s, -(2 * base + 1));
            let p = if n % 2 == 0 { p_even } else { p_odd };
            let yn = d.get("", n)?;
            let rhs = p * rat_powi(&c1s, n) * sq(&(plus_1(yn) / nonzero(yn.clone(), "y_n")?));
            vec![check(
                "(y_{n+1}y_{n-1})^2",
                sq(&(d.get("", n + 1)? * d.get("", n - 1)?)),
                rhs,
                true,
            )]
        }
        PainleveKind::QPIII => {
            let consts = conserved_quantities(kind, d, base)?;
            let (c1s, c2s, c3_4) = (&consts["c1^2"], &consts["c2^2"], &consts["c3^4"]);
            let mut out = Vec::new();
            for (fam, inv) in [("y", false), ("z", true)] {
                let xn = d.get(fam, n)?;
                let tn = qpiii_t(d, n)?;
                let pref = if inv { c2s.recip() } else { c2s.clone() };
                let rhs = pref
                    * c3_4
                    * rat_powi(c1s, 2 * n)
                    * sq(&(plus_1(xn)
                        / nonzero(xn * (xn + &tn), "y_n(y_n+t_n)")?));
                out.push(check(
                    &format!("({0}_{{n+1}}{0}_{{n-1}})^2", fam),
                    sq(&(d.get(fam, n + 1)? * d.get(fam, n - 1)?)),
                    rhs,
                    true,
                ));
            }
            out
        }
        PainleveKind::QPVI => {
            let d0 = nonzero(qpvi_d(d, base)?, "D")?;
            let c1s = nonzero(qpvi_d(d, base + 1)? / &d0, "c1^2")?;
            let c2 = &d0 * rat_powi(&c1s, -base);
            let b0 = qpvi_b(d, 2 * base)?;
            let b1 = qpvi_b(d, 2 * base + 1)?;
            let c0 = qpvi_c(d, 2 * base)?;
            let c1c = qpvi_c(d, 2 * base + 1)?;
            // c3^2 c5^2 and c3^2 / c5^2 are even-power computable.
            let c3s_c5s = &b1 * &b0 * &c1c * &c0 * rat_powi(&c1s, -(4 * base + 1));
            let c3s_div_c5s = nonzero(&b1 * &b0, "B products")?
                / nonzero(&c1c * &c0, "C products")?;
            let bn = qpvi_b(d, n)?;
            let cn = qpvi_c(d, n)?;
            let dn = qpvi_d(d, n)?;
            let power = rat_powi(&c1s, n);
            let mk = |fam: &str,
                      pref: Rational,
                      num2: Rational,
                      den1: Rational,
                      den2: Rational|
             -> Result<IdentityCheck, ZooError> {
                let xn = d.get(fam, n)?;
                let rhs = pref
                    * plus_1(xn)
                    * plus_1(&num2)
                    * (nonzero((xn + &den1) * (xn + &den2), "equation denominator")?).recip();
                Ok(check(
                    &format!("{0}_{{n+1}}{0}_{{n-1}}", fam),
                    d.get(fam, n + 1)? * d.get(fam, n - 1)?,
                    rhs,
                    false,
                ))
            };
            vec![
                // y: c2^-1 c3^2 c5^2 c1^{2n}; inner constants become Z_n, B_n, C_n.
                mk(
                    "y",
                    &c3s_c5s / nonzero(c2.clone(), "c2")? * &power,
                    d.get("Z", n)?.clone(),
                    bn.clone(),
                    cn.clone(),
                )?,
                // z: c2 c3^2 c5^-2 c1^{2n}; inner constants become Y_n, B_n, D_n/C_n.
                mk(
                    "z",
                    &c2 * &c3s_div_c5s * &power,
                    d.get("Y", n)?.clone(),
                    bn.clone(),
                    &dn / nonzero(cn.clone(), "C_n")?,
                )?,
                // Y: c2 c3^-2 c5^2 c1^{2n}; inner constants become z_n, D_n/B_n, C_n.
                mk(
                    "Y",
                    &c2 / &c3s_div_c5s * &power,
                    d.get("z", n)?.clone(),
                    &dn / nonzero(bn.clone(), "B_n")?,
                    cn.clone(),
                )?,
                // Z: c2^3 c3^-2 c5^-2 c1^{2n}; inner constants become y_n, D_n/B_n, D_n/C_n.
                mk(
                    "Z",
                    &c2 * &c2 * &c2 / nonzero(c3s_c5s.clone(), "c3^2c5^2")? * &power,
                    d.get("y", n)?.clone(),
                    &dn / nonzero(bn, "B_n")?,
                    &dn / nonzero(cn, "C_n")?,
                )?,
            ]
        }
    })
}

/// The squared two-component (f, g) form of q-PIII:
/// (f_{n+1}f_n)^2 = c2^2 c3^4 c1^{2(4n+2)} ((g_n+1)/(g_n(g_n+t_{2n+1})))^2 and
/// (g_n g_{n-1})^2 = c2^2 c3^4 c1^{2(4n)} ((f_n+1)/(f_n(f_n+t_{2n})))^2,
/// with f_n = y_{2n}, g_n = y_{2n+1}.
pub fn qpiii_even_odd_checks(
    d: &CoeffData,
    n: i64,
    base: i64,
) -> Result<Vec<IdentityCheck>, ZooError> {
    let sq = |r: &Rational| r * r;
    let consts = conserved_quantities(PainleveKind::QPIII, d, base)?;
    let (c1s, c2s, c3_4) = (&consts["c1^2"], &consts["c2^2"], &consts["c3^4"]);
    let f = |m: i64| d.get("y", 2 * m);
    let g = |m: i64| d.get("y", 2 * m + 1);
    let mut out = Vec::new();
    let gn = g(n)?;
    let t_odd = qpiii_t(d, 2 * n + 1)?;
    out.push(IdentityCheck {
        name: "(f_{n+1}f_n)^2".into(),
        index: n,
        lhs: sq(&(f(n + 1)? * f(n)?)),
        rhs: c2s
            * c3_4
            * rat_powi(c1s, 4 * n + 2)
            * sq(&(plus_1(gn) / nonzero(gn * (gn + &t_odd), "g_n(g_n+t)")?)),
        squared: true,
    });
    if n >= 1 {
        let fn_ = f(n)?;
        let t_even = qpiii_t(d, 2 * n)?;
        out.push(IdentityCheck {
            name: "(g_n g_{n-1})^2".into(),
            index: n,
            lhs: sq(&(g(n)? * g(n - 1)?)),
            rhs: c2s
                * c3_4
                * rat_powi(c1s, 4 * n)
                * sq(&(plus_1(fn_) / nonzero(fn_ * (fn_ + &t_even), "f_n(f_n+t)")?)),
            squared: true,
        });
    }
    Ok(out)
}

/// Splits a sequence into its even- and odd-index subsequences
/// (f_n = y_{2n}, g_n = y_{2n+1}).
pub fn even_odd_split(seq: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let f = seq.iter().step_by(2).cloned().collect();
    let g = seq.iter().skip(1).step_by(2).cloned().collect();
    (f, g)
}

/// Applies the bilinear-to-Painleve transformation to a coefficient-free
/// trajectory: q-PI y_n = x_{n+2}x_n / x_{n+1}^2, q-PII
/// y_n = x_{n+3}x_n / (x_{n+2}x_{n+1}). Returns the derived sequence from
/// n = 0 as far as the recorded cluster variables allow.
pub fn bilinear_to_painleve(
    kind: PainleveKind,
    traj: &Trajectory,
) -> Result<Vec<Rational>, ZooError> {
    let span: i64 = match kind {
        PainleveKind::QPI => 2,
        PainleveKind::QPII => 3,
        _ => {
            return Err(ZooError::UnsupportedParameters(
                "the transformation is stated for qPI and qPII".into(),
            ))
        }
    };
    let mut xs: BTreeMap<i64, Rational> = BTreeMap::new();
    for (label, v) in &traj.x {
        if label.family.is_empty() && label.idx.len() == 1 {
            let r = v
                .as_rat()
                .ok_or_else(|| ZooError::Numeric("symbolic trajectory".into()))?;
            xs.insert(label.idx[0], r.clone());
        }
    }
    let mut out = Vec::new();
    let mut n = 0i64;
    while (0..=span).all(|k| xs.contains_key(&(n + k))) {
        let num = nonzero(&xs[&(n + span)] * &xs[&n], "x product")?;
        let den = match kind {
            PainleveKind::QPI => &xs[&(n + 1)] * &xs[&(n + 1)],
            _ => &xs[&(n + 2)] * &xs[&(n + 1)],
        };
        out.push(num / nonzero(den, "x product")?);
        n += 1;
    }
    Ok(out)
}
