//! Command-line front end over `qhe-core`: parameter sweeps, region
//! rasterization, work curves, high-temperature limit studies, and single
//! cycle reports, emitted as CSV or JSON.

pub mod commands;
pub mod config;
pub mod emit;
pub mod grid;

use std::fmt;

/// Exit-code bearing error. Config problems exit 2, internal numeric
/// failures exit 3, plain I/O trouble exits 1.
#[derive(Debug, Clone)]
pub enum CliError {
    Config(String),
    Numeric(String),
    Io(String),
}

impl CliError {
    pub fn config(msg: String) -> Self {
        CliError::Config(msg)
    }
    pub fn numeric(msg: String) -> Self {
        CliError::Numeric(msg)
    }
    pub fn io(msg: String) -> Self {
        CliError::Io(msg)
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "config error: {m}"),
            CliError::Numeric(m) => write!(f, "numeric failure: {m}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}
