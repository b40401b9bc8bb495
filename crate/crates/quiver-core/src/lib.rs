//! Quivers as skew-symmetric integer matrices, quiver mutation, permutation
//! action, mutation-periodicity testing, lattice quivers and their
//! reductions.
//!
//! Arrows are stored as net multiplicities (`lambda[i][j]` = net arrows
//! `i -> j`), which makes the textbook "cancel all 2-cycles" step automatic;
//! a unit test certifies that the matrix form of mutation agrees with a
//! literal three-operation multiset implementation.

mod dot;
mod json;
mod lattice;
mod perm;
mod quiver;

pub use dot::quiver_to_dot;
pub use json::{quiver_from_json, quiver_to_json};
pub use lattice::{build_lattice_quiver, reduce, LatticeError, LatticeSpec, SiteMap};
pub use perm::Permutation;
pub use quiver::{
    apply_permutation, is_mutation_periodic, mutate_quiver, mutate_quiver_multiset,
    quivers_equal_up_to, Quiver, QuiverError,
};
