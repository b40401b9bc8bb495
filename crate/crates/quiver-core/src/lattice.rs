use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::quiver::Quiver;

/// Errors raised by lattice-quiver construction and reduction.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice dimension must be 2 or 3, got {0}")]
    BadDimension(usize),
    #[error("window is empty or has the wrong number of axes")]
    BadWindow,
    #[error("stencil offset has wrong length or is zero (loops are not allowed)")]
    BadOffset,
    #[error("stencil violates skew-symmetry after summation at offset {0:?}")]
    StencilNotSkew(Vec<i64>),
    #[error("reduction vector must be nonzero and of the lattice dimension")]
    BadVector,
    #[error("quotient produces a loop (offset {0:?} is collapsed to zero)")]
    LoopProduced(Vec<i64>),
}

/// A translation-invariant arrow stencil on a finite window of `Z^2` or
/// `Z^3`, optionally quotiented by a reduction vector.
///
/// Each stencil entry `(offset, mult)` contributes `mult` net arrows
/// `site -> site + offset` at every site. If both an offset and its negation
/// are listed they must agree skewly (`mult(-o) == -mult(o)`).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct LatticeSpec {
    pub dimension: usize,
    /// Inclusive per-axis bounds `(lo, hi)`.
    pub window: Vec<(i64, i64)>,
    pub stencil: Vec<(Vec<i64>, i64)>,
    pub quotient: Option<Vec<i64>>,
}

/// Mapping between quiver vertex indices and (canonical) lattice sites.
#[derive(Clone, Debug)]
pub struct SiteMap {
    pub sites: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl SiteMap {
    /// Builds a map from an explicit vertex-order site list (used by models
    /// whose vertex set is not enumerated from a [`LatticeSpec`] window).
    pub fn from_sites(sites: Vec<Vec<i64>>) -> Self {
        SiteMap::new(sites)
    }

    fn new(sites: Vec<Vec<i64>>) -> Self {
        let index = sites
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        SiteMap { sites, index }
    }

    pub fn index_of(&self, site: &[i64]) -> Option<usize> {
        self.index.get(site).copied()
    }
}

/// Integer row-echelon basis of the subgroup generated by `gens`, used to
/// compute unique coset representatives.
struct CosetLattice {
    d: usize,
    /// Echelon rows with positive pivots; pivot columns strictly increase.
    rows: Vec<(usize, Vec<i64>)>,
}

impl CosetLattice {
    fn new(d: usize, gens: &[Vec<i64>]) -> Self {
        let mut work: Vec<Vec<i64>> = gens
            .iter()
            .filter(|g| g.iter().any(|&x| x != 0))
            .cloned()
            .collect();
        let mut rows: Vec<(usize, Vec<i64>)> = Vec::new();
        for col in 0..d {
            loop {
                work.retain(|r| r.iter().any(|&x| x != 0));
                let mut idx: Vec<usize> = (0..work.len()).filter(|&i| work[i][col] != 0).collect();
                if idx.is_empty() {
                    break;
                }
                idx.sort_by_key(|&i| work[i][col].abs());
                if idx.len() == 1 {
                    let mut r = work.remove(idx[0]);
                    if r[col] < 0 {
                        for x in r.iter_mut() {
                            *x = -*x;
                        }
                    }
                    rows.push((col, r));
                    break;
                }
                let piv = work[idx[0]].clone();
                let pv = piv[col];
                for &i in &idx[1..] {
                    let q = work[i][col].div_euclid(pv);
                    for c in 0..d {
                        work[i][c] -= q * piv[c];
                    }
                }
            }
        }
        CosetLattice { d, rows }
    }

    /// Unique representative of the coset `site + L`.
    fn rep(&self, site: &[i64]) -> Vec<i64> {
        let mut s = site.to_vec();
        for (col, row) in &self.rows {
            let q = s[*col].div_euclid(row[*col]);
            for c in 0..self.d {
                s[c] -= q * row[c];
            }
        }
        s
    }

    fn is_trivial_coset(&self, site: &[i64]) -> bool {
        self.rep(site).iter().all(|&x| x == 0)
    }
}

fn validate(spec: &LatticeSpec, extra: Option<&[i64]>) -> Result<Vec<Vec<i64>>, LatticeError> {
    let d = spec.dimension;
    if d != 2 && d != 3 {
        return Err(LatticeError::BadDimension(d));
    }
    if spec.window.len() != d || spec.window.iter().any(|&(lo, hi)| lo > hi) {
        return Err(LatticeError::BadWindow);
    }
    for (off, _) in &spec.stencil {
        if off.len() != d || off.iter().all(|&x| x == 0) {
            return Err(LatticeError::BadOffset);
        }
    }
    let mut gens: Vec<Vec<i64>> = Vec::new();
    if let Some(q) = &spec.quotient {
        if q.len() != d || q.iter().all(|&x| x == 0) {
            return Err(LatticeError::BadVector);
        }
        gens.push(q.clone());
    }
    if let Some(v) = extra {
        if v.len() != d || v.iter().all(|&x| x == 0) {
            return Err(LatticeError::BadVector);
        }
        gens.push(v.to_vec());
    }
    Ok(gens)
}

/// Net stencil with one representative per offset pair, after verifying
/// skew-consistency of explicitly mirrored entries.
fn net_stencil(stencil: &[(Vec<i64>, i64)]) -> Result<Vec<(Vec<i64>, i64)>, LatticeError> {
    let mut net: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (off, m) in stencil {
        *net.entry(off.clone()).or_insert(0) += m;
    }
    net.retain(|_, m| *m != 0);
    let mut kept: Vec<(Vec<i64>, i64)> = Vec::new();
    for (off, &m) in &net {
        let neg: Vec<i64> = off.iter().map(|&x| -x).collect();
        match net.get(&neg) {
            Some(&mn) => {
                if mn != -m {
                    return Err(LatticeError::StencilNotSkew(off.clone()));
                }
                // keep the lexicographically larger of the mirrored pair once
                if *off > neg {
                    kept.push((off.clone(), m));
                }
            }
            None => kept.push((off.clone(), m)),
        }
    }
    Ok(kept)
}

fn build_core(
    spec: &LatticeSpec,
    extra: Option<&[i64]>,
) -> Result<(Quiver, SiteMap), LatticeError> {
    let d = spec.dimension;
    let gens = validate(spec, extra)?;
    let kept = net_stencil(&spec.stencil)?;
    let lat = CosetLattice::new(d, &gens);
    if !gens.is_empty() {
        for (off, _) in &kept {
            if lat.is_trivial_coset(off) {
                return Err(LatticeError::LoopProduced(off.clone()));
            }
        }
    }
    // Enumerate window sites and collect canonical class representatives.
    let mut sites_in_window: Vec<Vec<i64>> = vec![vec![]];
    for &(lo, hi) in &spec.window {
        let mut next = Vec::new();
        for s in &sites_in_window {
            for x in lo..=hi {
                let mut t = s.clone();
                t.push(x);
                next.push(t);
            }
        }
        sites_in_window = next;
    }
    let mut classes: BTreeSet<Vec<i64>> = BTreeSet::new();
    for s in &sites_in_window {
        classes.insert(lat.rep(s));
    }
    let class_list: Vec<Vec<i64>> = classes.iter().cloned().collect();
    let map = SiteMap::new(class_list.clone());
    let n = class_list.len();
    let mut lambda = vec![vec![0i64; n]; n];
    for (a, rep) in class_list.iter().enumerate() {
        for (off, m) in &kept {
            let tgt: Vec<i64> = rep.iter().zip(off).map(|(x, y)| x + y).collect();
            let tgt = lat.rep(&tgt);
            if let Some(b) = map.index_of(&tgt) {
                lambda[a][b] += m;
                lambda[b][a] -= m;
            }
        }
    }
    // A class is interior iff some window member has its whole stencil
    // neighborhood (both arrow directions) present among the classes.
    let mut interior = vec![false; n];
    for s in &sites_in_window {
        let cls = map.index_of(&lat.rep(s)).expect("class present");
        if interior[cls] {
            continue;
        }
        let mut ok = true;
        'offs: for (off, _) in &kept {
            for sign in [1i64, -1] {
                let nb: Vec<i64> = s.iter().zip(off).map(|(x, y)| x + sign * y).collect();
                if map.index_of(&lat.rep(&nb)).is_none() {
                    ok = false;
                    break 'offs;
                }
            }
        }
        if ok {
            interior[cls] = true;
        }
    }
    let frozen: BTreeSet<usize> = (0..n).filter(|&i| !interior[i]).collect();
    let quiver = Quiver { lambda, frozen };
    Ok((quiver, map))
}

/// Builds the finite quiver of a lattice spec: the stencil restricted to the
/// window, with clipped vertices marked frozen.
pub fn build_lattice_quiver(spec: &LatticeSpec) -> Result<(Quiver, SiteMap), LatticeError> {
    build_core(spec, None)
}

/// The `v`-reduction of a lattice spec: vertices are equivalence classes
/// `site ~ site + v` (on top of any quotient already in the spec); arrow
/// multiplicity between classes sums the stencil over all offsets joining
/// them. Fails if `v` is zero or if the quotient collapses an arrow to a
/// loop.
pub fn reduce(spec: &LatticeSpec, v: &[i64]) -> Result<(Quiver, SiteMap), LatticeError> {
    if v.len() != spec.dimension || v.iter().all(|&x| x == 0) {
        return Err(LatticeError::BadVector);
    }
    build_core(spec, Some(v))
}
