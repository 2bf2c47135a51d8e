//! Batch front end for `minkq`: reads a JSON job description, runs the
//! requested pipeline and writes CSV tables plus a JSON summary.

pub mod config;
pub mod error;
pub mod registry;
pub mod run;
pub mod table;

pub use config::{JobConfig, JobKind};
pub use error::{CliError, Diagnostic};
pub use run::{emit_potential_profile, execute, render_report, run_job, validate, validate_config, RunReport};
pub use table::{Cell, Metadata, ResultTable};
