//! Command implementations behind the `qbos` binary.

pub mod commands;
pub mod error;
pub mod report;
pub mod spec;

pub use error::{CliError, ExitStatus};
pub use spec::{GameSpec, StateSpec};
