//! Folding certified profiles along a reduction orbit and the seven
//! reduction pedigrees of the catalog.
//!
//! A reduction superimposes the vertices of an orbit of the reduction
//! vector; on a translation-invariant profile this is a fold of the offset
//! rows. Each pedigree stores the fold that produces the child quiver (or
//! child profile) exactly, including the vertex order identifying folded
//! classes with the child's numbered vertices.

use std::collections::BTreeMap;

use quiver_core::Quiver;

use crate::matrices;
use crate::profiles::{self, Profile1, Profile2};

/// Folds a train profile onto `k` classes mod `k`: the finite quiver of the
/// (n, -m)-reduction of the dKdV quiver with k = n + 2m.
pub fn fold_train(k: usize) -> Quiver {
    let lam = profiles::train_profile(k);
    let mut lambda = vec![vec![0i64; k]; k];
    for (c, row) in lam.iter().enumerate() {
        for (&d, &m) in row {
            lambda[c][(c as i64 + d).rem_euclid(k as i64) as usize] += m;
        }
    }
    Quiver::new(lambda, Default::default()).expect("folded train is skew-symmetric")
}

/// Folds a dmKdV profile with `k` chain classes by the identification
/// (s, p) ~ (s + ds, p + dp): vertices are named by `order`, a list of
/// (chain rep, component) pairs fixing the child's vertex numbering.
pub fn fold_mkdv(k: usize, ds: i64, dp: i64, order: &[(i64, i64)]) -> Quiver {
    let lam = profiles::mkdv_profile(k);
    let cls = |s: i64, p: i64| -> (i64, i64) {
        let s0 = s.rem_euclid(ds);
        let steps = (s - s0) / ds;
        (s0, (p + steps * dp).rem_euclid(2))
    };
    let ci: BTreeMap<(i64, i64), usize> = order
        .iter()
        .enumerate()
        .map(|(i, &(s, p))| (cls(s, p), i))
        .collect();
    let n = order.len();
    let mut lambda = vec![vec![0i64; n]; n];
    for (i, &(s, p)) in order.iter().enumerate() {
        for (&(d, q), &m) in &lam[(s.rem_euclid(k as i64)) as usize] {
            let j = ci[&cls(s + d, (p + q).rem_euclid(2))];
            lambda[i][j] += m;
        }
    }
    Quiver::new(lambda, Default::default()).expect("folded dmKdV chain is skew-symmetric")
}

/// Vertex order of the q-PIII fold (w1, x1, w2, x2, w3, x3).
pub const QPIII_FOLD_ORDER: [(i64, i64); 6] = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)];

/// Vertex order of the q-PVI fold (w1, x1, W1, X1, w2, x2, W2, X2); the
/// chain reps 2 and 3 enter at odd phase, flipping their component naming.
pub const QPVI_FOLD_ORDER: [(i64, i64); 8] = [
    (0, 0),
    (0, 1),
    (2, 1),
    (2, 0),
    (1, 0),
    (1, 1),
    (3, 1),
    (3, 0),
];

/// Folds an HM profile along the (1,0,1)-reduction orbit: on the orbit
/// plane the quotient is the diagonal (1,1), leaving the chain coordinate
/// u - w. Produces a train profile.
pub fn fold_hm_diag(lam: &Profile2) -> Profile1 {
    lam.iter()
        .map(|row| {
            let mut out: BTreeMap<i64, i64> = BTreeMap::new();
            for (&(du, dw), &m) in row {
                *out.entry(du - dw).or_insert(0) += m;
            }
            out.retain(|_, m| *m != 0);
            out
        })
        .collect()
}

/// Folds an HM profile along the (0,0,2)-reduction orbit: orbit-plane
/// quotient (0,2), leaving (u, w mod 2). Produces a dmKdV profile.
pub fn fold_hm_wmod2(lam: &Profile2) -> Profile2 {
    fold_hm_pairs(lam, |du, dw| (du, dw.rem_euclid(2)))
}

/// Folds an HM profile along the (1,-1,1)-reduction orbit: orbit-plane
/// quotient (2,0), leaving (u mod 2, w). Produces the dToda ladder profile.
pub fn fold_hm_ladder(lam: &Profile2) -> Profile2 {
    fold_hm_pairs(lam, |du, dw| (du.rem_euclid(2), dw))
}

fn fold_hm_pairs(lam: &Profile2, f: impl Fn(i64, i64) -> (i64, i64)) -> Profile2 {
    lam.iter()
        .map(|row| {
            let mut out: BTreeMap<(i64, i64), i64> = BTreeMap::new();
            for (&(du, dw), &m) in row {
                *out.entry(f(du, dw)).or_insert(0) += m;
            }
            out.retain(|_, m| *m != 0);
            out
        })
        .collect()
}

/// A certified reduction pedigree: the named parent, the reduction vector,
/// and the child it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pedigree {
    pub parent: String,
    pub vector: Vec<i64>,
    pub child: String,
}

impl Pedigree {
    pub fn describe(&self) -> String {
        let v: Vec<String> = self.vector.iter().map(|x| x.to_string()).collect();
        format!("{} / ({})", self.parent, v.join(","))
    }
}

/// The seven reduction pedigrees of the catalog, keyed by child name.
pub fn pedigrees() -> Vec<Pedigree> {
    let p = |parent: &str, vector: &[i64], child: &str| Pedigree {
        parent: parent.into(),
        vector: vector.to_vec(),
        child: child.into(),
    };
    vec![
        p("dKdV(2,1)", &[2, -1], "qPI"),
        p("dKdV(3,1)", &[3, -1], "qPII"),
        p("dmKdV(2,1)", &[2, -1], "qPIII"),
        p("dmKdV(1,1)", &[2, -2], "qPVI"),
        p("HM(2)", &[1, 0, 1], "dKdV(1,1)"),
        p("HM(1)", &[0, 0, 2], "dmKdV(1,1)"),
        p("HM(1)", &[1, -1, 1], "dToda"),
    ]
}

/// Certifies one pedigree: re-runs the fold from the (dynamically certified)
/// parent profile and checks exact equality with the child quiver or child
/// profile, in the stored vertex order.
pub fn certify_pedigree(child: &str) -> Result<(), String> {
    match child {
        "qPI" => {
            profiles::certify_train(4, &profiles::train_profile(4), 5)?;
            expect_quiver(fold_train(4), matrices::qpi_quiver(), "qPI")
        }
        "qPII" => {
            profiles::certify_train(5, &profiles::train_profile(5), 5)?;
            expect_quiver(fold_train(5), matrices::qpii_quiver(), "qPII")
        }
        "qPIII" => {
            profiles::certify_mkdv(3, &profiles::mkdv_profile(3), 5)?;
            expect_quiver(
                fold_mkdv(3, 3, 1, &QPIII_FOLD_ORDER),
                matrices::qpiii_quiver(),
                "qPIII",
            )
        }
        "qPVI" => {
            profiles::certify_mkdv(2, &profiles::mkdv_profile(2), 5)?;
            expect_quiver(
                fold_mkdv(2, 4, 0, &QPVI_FOLD_ORDER),
                matrices::qpvi_quiver(),
                "qPVI",
            )
        }
        "dKdV(1,1)" => {
            profiles::certify_hm(3, &profiles::hm_profile(3), 9)?;
            let folded = fold_hm_diag(&profiles::hm_profile(3));
            let target = profiles::train_profile(3);
            if folded != target {
                return Err("HM(2) / (1,0,1) fold does not match the dKdV train".into());
            }
            profiles::certify_train(3, &target, 5)
        }
        "dmKdV(1,1)" => {
            profiles::certify_hm(2, &profiles::hm_profile(2), 9)?;
            let folded = fold_hm_wmod2(&profiles::hm_profile(2));
            let target = profiles::mkdv_profile(2);
            if folded != target {
                return Err("HM(1) / (0,0,2) fold does not match the dmKdV profile".into());
            }
            profiles::certify_mkdv(2, &target, 5)
        }
        "dToda" => {
            profiles::certify_hm(2, &profiles::hm_profile(2), 9)?;
            let folded = fold_hm_ladder(&profiles::hm_profile(2));
            let target = profiles::ladder_profile();
            if folded != target {
                return Err("HM(1) / (1,-1,1) fold does not match the dToda ladder".into());
            }
            profiles::certify_ladder(&target, 8, 3)
        }
        other => Err(format!("no pedigree for {other}")),
    }
}

fn expect_quiver(got: Quiver, want: Quiver, name: &str) -> Result<(), String> {
    if got != want {
        return Err(format!("{name} fold does not match the stored quiver"));
    }
    Ok(())
}
