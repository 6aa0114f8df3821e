//! Command implementations behind the `kerrcat` binary.

pub mod cat_dump;
pub mod config;
pub mod energy;
pub mod error;
pub mod format;
pub mod fourier_report;
pub mod sweep;

pub use error::{CliError, Result};

use std::io::Write;
use std::path::Path;

/// Write to the path, or to stdout when no path is given.
pub fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
