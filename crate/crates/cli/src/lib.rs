//! Workspace loading, command dispatch and reports for the `descent` tool.

pub mod commands;
pub mod error;
pub mod report;
pub mod workspace;

pub use commands::{run_command, Context, COMMANDS};
pub use error::{CliError, ErrorKind};
pub use report::{Format, Report};
pub use workspace::{catalog_workspace, Document, Workspace};
