//! The model catalog: lattice bilinear systems (dKdV, Hirota-Miwa, dmKdV,
//! dToda) with certified mutation schedules, the four mutation-periodic
//! q-Painleve quivers with their reduction pedigrees, and the analysis
//! toolkit for their coefficient dynamics (conserved quantities, proof
//! monitors, equation checks, bilinear-to-Painleve transformations).

pub mod bootstrap;
pub mod folds;
pub mod matrices;
pub mod model;
pub mod painleve;
pub mod profiles;

pub use bootstrap::{build_board, Board, Geometry, Site};
pub use folds::{certify_pedigree, pedigrees, Pedigree};
pub use matrices::{
    qpi_nu, qpi_quiver, qpii_nu, qpii_quiver, qpiii_nu, qpiii_quiver, qpvi_nu, qpvi_quiver,
};
pub use model::{
    catalog_specs, lattice_spec, make_model, model_to_json, numeric_seed, ones_seed,
    seed_from_recurrence_data, symbolic_seed, Model, ModelSpec,
};
pub use painleve::{
    bilinear_to_painleve, conserved_quantities, even_odd_split, monitor_laws, painleve_recurrence,
    painleve_rhs, proof_monitors, qpiii_even_odd_checks, rat_powi, CoeffData, IdentityCheck,
    PainleveKind,
};

use seed_dynamics::SeedError;
use quiver_core::QuiverError;

/// Errors raised while building, certifying, or analyzing catalog models.
#[derive(Debug, thiserror::Error)]
pub enum ZooError {
    /// A mutation-schedule certification (board replay or profile check)
    /// found a mismatch with the required bilinear stencil.
    #[error("board certification failed: {0}")]
    BoardCertification(String),
    /// The requested model parameters are outside the supported catalog.
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
    /// A trajectory is missing a label required by the analysis.
    #[error("missing trajectory label {0}")]
    MissingLabel(String),
    /// A value required to be nonzero (or invertible) vanished.
    #[error("degenerate value: {0}")]
    Numeric(String),
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
