//! Exchange matrices, permutations and batch orders of the four
//! mutation-periodic Painleve quivers (vertex numbering 0-based here,
//! 1-based in user-facing output).

use quiver_core::{Permutation, Quiver};

/// q-PI quiver: nu cyclic on 4 vertices, nu-period (1).
pub const B_PI: [[i64; 4]; 4] = [
    [0, -1, 2, -1],
    [1, 0, -3, 2],
    [-2, 3, 0, -1],
    [1, -2, 1, 0],
];

/// q-PII quiver: nu cyclic on 5 vertices, nu-period (1).
pub const B_PII: [[i64; 5]; 5] = [
    [0, -1, 1, 1, -1],
    [1, 0, -2, 0, 1],
    [-1, 2, 0, -2, 1],
    [-1, 0, 2, 0, -1],
    [1, -1, -1, 1, 0],
];

/// q-PIII quiver: nu = (1..6) -> (3,4,5,6,2,1), nu-period (1,2).
/// Vertices carry (w1, x1, w2, x2, w3, x3).
pub const B_PIII: [[i64; 6]; 6] = [
    [0, 0, -1, 1, 1, -1],
    [0, 0, 1, -1, -1, 1],
    [1, -1, 0, 0, -1, 1],
    [-1, 1, 0, 0, 1, -1],
    [-1, 1, 1, -1, 0, 0],
    [1, -1, -1, 1, 0, 0],
];

/// q-PVI quiver: nu = (1..8) -> (5,6,7,8,4,3,2,1), nu-period (1,2,3,4).
/// Vertices carry (w1, x1, W1, X1, w2, x2, W2, X2).
pub const B_PVI: [[i64; 8]; 8] = [
    [0, 0, 0, 0, -1, 1, 1, -1],
    [0, 0, 0, 0, 1, -1, -1, 1],
    [0, 0, 0, 0, 1, -1, -1, 1],
    [0, 0, 0, 0, -1, 1, 1, -1],
    [1, -1, -1, 1, 0, 0, 0, 0],
    [-1, 1, 1, -1, 0, 0, 0, 0],
    [-1, 1, 1, -1, 0, 0, 0, 0],
    [1, -1, -1, 1, 0, 0, 0, 0],
];

fn quiver_from<const N: usize>(b: &[[i64; N]; N]) -> Quiver {
    let lambda = b.iter().map(|row| row.to_vec()).collect();
    Quiver::new(lambda, Default::default()).expect("constant matrix is skew-symmetric")
}

pub fn qpi_quiver() -> Quiver {
    quiver_from(&B_PI)
}

pub fn qpii_quiver() -> Quiver {
    quiver_from(&B_PII)
}

pub fn qpiii_quiver() -> Quiver {
    quiver_from(&B_PIII)
}

pub fn qpvi_quiver() -> Quiver {
    quiver_from(&B_PVI)
}

pub fn qpi_nu() -> Permutation {
    Permutation::cyclic(4)
}

pub fn qpii_nu() -> Permutation {
    Permutation::cyclic(5)
}

pub fn qpiii_nu() -> Permutation {
    Permutation::from_one_based(&[3, 4, 5, 6, 2, 1])
}

pub fn qpvi_nu() -> Permutation {
    Permutation::from_one_based(&[5, 6, 7, 8, 4, 3, 2, 1])
}
