//! Library half of the `heckeforge` command: configuration, verification
//! suites, reports and the one-shot computations behind each subcommand.

pub mod acceptance;
pub mod compute;
pub mod config;
pub mod report;
pub mod suites;

pub use compute::CliError;
pub use config::{Format, RunConfig};
pub use report::{Case, Report, Status};
pub use suites::run_suite;
