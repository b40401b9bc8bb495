//! Seeds (quiver + cluster variables + optional coefficients), mutation of
//! seeds in coefficient and coefficient-free form, batch mutation schedules
//! with the per-model relabeling conventions, and exact trajectory recording.

mod schedule;
mod seed;
mod trajectory;
mod value;

pub use schedule::{Label, MutationSchedule, RelabelRule, ScheduleKind};
pub use seed::{
    exchange_monomials, extract_bilinear_coefficients, mutate_seed, mutate_seed_free, rat_pow,
    Seed, SeedError,
};
pub use trajectory::{run_schedule, seed_to_json, trajectory_to_csv, StepRecord, Trajectory};
pub use value::Value;
