use std::collections::BTreeSet;

use crate::perm::Permutation;

/// Errors raised by quiver operations.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("vertex {0} is out of range (quiver has {1} vertices)")]
    OutOfRange(usize, usize),
    #[error("vertex {0} is frozen and cannot be mutated")]
    Frozen(usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("matrix is not skew-symmetric at ({0},{1})")]
    NotSkewSymmetric(usize, usize),
}

/// A finite quiver without loops or 2-cycles, stored as the skew-symmetric
/// net arrow-multiplicity matrix `lambda` plus a set of frozen vertices.
///
/// Vertex indices are 0-based internally; all user-facing formats are
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub lambda: Vec<Vec<i64>>,
    pub frozen: BTreeSet<usize>,
}

impl Quiver {
    /// Builds a quiver after validating skew-symmetry and a zero diagonal.
    pub fn new(lambda: Vec<Vec<i64>>, frozen: BTreeSet<usize>) -> Result<Self, QuiverError> {
        let n = lambda.len();
        for (i, row) in lambda.iter().enumerate() {
            if row.len() != n {
                return Err(QuiverError::SizeMismatch(row.len(), n));
            }
            for j in 0..n {
                if lambda[i][j] != -lambda[j][i] {
                    return Err(QuiverError::NotSkewSymmetric(i, j));
                }
            }
        }
        for &f in &frozen {
            if f >= n {
                return Err(QuiverError::OutOfRange(f, n));
            }
        }
        Ok(Quiver { lambda, frozen })
    }

    /// An arrowless quiver on `n` vertices.
    pub fn arrowless(n: usize) -> Self {
        Quiver {
            lambda: vec![vec![0; n]; n],
            frozen: BTreeSet::new(),
        }
    }

    /// Builds from a signed arrow list `(i, j, mult)`, 0-based.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize, i64)], frozen: &[usize]) -> Self {
        let mut lambda = vec![vec![0i64; n]; n];
        for &(i, j, m) in arrows {
            lambda[i][j] += m;
            lambda[j][i] -= m;
        }
        Quiver {
            lambda,
            frozen: frozen.iter().copied().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_frozen(&self, v: usize) -> bool {
        self.frozen.contains(&v)
    }
}

/// Mutation of the quiver at vertex `k` (matrix form of the three
/// operations: compose arrows through `k`, cancel 2-cycles, reverse the
/// arrows at `k`).
pub fn mutate_quiver(q: &Quiver, k: usize) -> Result<Quiver, QuiverError> {
    let n = q.n();
    if k >= n {
        return Err(QuiverError::OutOfRange(k, n));
    }
    if q.is_frozen(k) {
        return Err(QuiverError::Frozen(k));
    }
    let l = &q.lambda;
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == k || j == k {
                m[i][j] = -l[i][j];
            } else {
                m[i][j] = l[i][j] + (l[i][k].abs() * l[k][j] + l[i][k] * l[k][j].abs()) / 2;
            }
        }
    }
    Ok(Quiver {
        lambda: m,
        frozen: q.frozen.clone(),
    })
}

/// Literal three-operation multiset implementation of mutation, used only to
/// certify [`mutate_quiver`]: (1) for every path `i -> k -> j` add
/// `lambda[i][k] * lambda[k][j]` arrows `i -> j`; (2) cancel 2-cycles (net
/// storage makes this automatic); (3) reverse all arrows at `k`.
pub fn mutate_quiver_multiset(q: &Quiver, k: usize) -> Result<Quiver, QuiverError> {
    let n = q.n();
    if k >= n {
        return Err(QuiverError::OutOfRange(k, n));
    }
    if q.is_frozen(k) {
        return Err(QuiverError::Frozen(k));
    }
    let mut arrows: Vec<(usize, usize, i64)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if q.lambda[i][j] > 0 {
                arrows.push((i, j, q.lambda[i][j]));
            }
        }
    }
    // (1) compose through k
    let mut created: Vec<(usize, usize, i64)> = Vec::new();
    for &(i, k1, m1) in &arrows {
        if k1 != k {
            continue;
        }
        for &(k2, j, m2) in &arrows {
            if k2 != k {
                continue;
            }
            created.push((i, j, m1 * m2));
        }
    }
    // (3) reverse arrows incident to k
    let mut result: Vec<(usize, usize, i64)> = Vec::new();
    for &(i, j, m) in &arrows {
        if i == k || j == k {
            result.push((j, i, m));
        } else {
            result.push((i, j, m));
        }
    }
    result.extend(created);
    // (2) net storage cancels 2-cycles
    Ok(Quiver::from_arrows(
        n,
        &result,
        &q.frozen.iter().copied().collect::<Vec<_>>(),
    ))
}

/// Relabels vertices: `lambda'[nu(i)][nu(j)] = lambda[i][j]`.
pub fn apply_permutation(q: &Quiver, nu: &Permutation) -> Result<Quiver, QuiverError> {
    let n = q.n();
    if nu.len() != n {
        return Err(QuiverError::SizeMismatch(nu.len(), n));
    }
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[nu.image(i)][nu.image(j)] = q.lambda[i][j];
        }
    }
    Ok(Quiver {
        lambda: m,
        frozen: q.frozen.iter().map(|&v| nu.image(v)).collect(),
    })
}

/// True iff `apply_permutation(q1, nu)` has the identical lambda matrix to
/// `q2`.
pub fn quivers_equal_up_to(q1: &Quiver, q2: &Quiver, nu: &Permutation) -> Result<bool, QuiverError> {
    if q1.n() != q2.n() {
        return Err(QuiverError::SizeMismatch(q1.n(), q2.n()));
    }
    Ok(apply_permutation(q1, nu)?.lambda == q2.lambda)
}

/// True iff mutating `q` at the vertices of `seq` in order yields `nu(q)`.
pub fn is_mutation_periodic(
    q: &Quiver,
    seq: &[usize],
    nu: &Permutation,
) -> Result<bool, QuiverError> {
    let mut cur = q.clone();
    for &k in seq {
        cur = mutate_quiver(&cur, k)?;
    }
    Ok(cur.lambda == apply_permutation(q, nu)?.lambda)
}
