//! From a job description to an index report: hypothesis checks, the
//! algebra `B`, `tau'`, the small Gobelin and both index formulas.

mod compute;
mod job;
mod report;

pub use compute::{
    compute_index, cross_check, dim_b, run, Computation, CrossCheck, CrossCheckEntry, Formula,
    IndexOptions, Prepared,
};
pub use job::{load_job, load_job_file, Job};
pub use report::{emit_report, IndexReport, OutputFormat, PRIME_FIELD_CAVEAT};
