//! Mechanical verification of every identity the library asserts: bilinear
//! exchange relations on the lattice boards and periodic quivers, the
//! q-Painleve recurrences and their constant-form equations, monitor step
//! laws and conserved quantities, reduction correspondences, and the Laurent
//! phenomenon. All checks are exact; a report passes only when at least one
//! instance was verified and none failed.

mod bilinear;
mod laurent;
mod painleve_checks;
mod reduction;
mod report;
mod rng;

pub use bilinear::{check_bilinear, check_bilinear_with_coefficients};
pub use laurent::{check_laurent, LaurentCheck};
pub use painleve_checks::check_painleve;
pub use reduction::{check_dkdv_to_qpi, check_hm_to_dkdv, check_reduction_correspondence};
pub use report::{report_to_json, reports_to_json, Failure, VerificationReport};
pub use rng::{generator, random_rational, random_rationals, GENERATOR_NAME};
