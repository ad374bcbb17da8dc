//! Batch harness around the `edge-depth` library: depth tables compared with
//! closed forms, colon-identity replay, closure sweeps and randomized
//! property suites, with an on-disk report cache.

pub mod cache;
pub mod closure_suite;
pub mod colon_suite;
pub mod config;
pub mod engine;
pub mod graph_spec;
pub mod oracle;
pub mod property_suite;
pub mod table;

pub use config::{FieldChoice, OutputFormat, RunConfig, DEFAULT_SEED};

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const MISMATCH: i32 = 2;
    pub const INPUT: i32 = 3;
    pub const CAP: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error(transparent)]
    Engine(#[from] edge_depth::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("output error: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(edge_depth::Error::SizeLimit { .. }) => exit::CAP,
            CliError::Engine(_) | CliError::Input(_) => exit::INPUT,
            CliError::Io(_) | CliError::Output(_) => exit::INPUT,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Exit code for a run with the given failure and skip counts.
pub fn outcome_code(failures: usize, skipped: usize) -> i32 {
    if failures > 0 {
        exit::MISMATCH
    } else if skipped > 0 {
        exit::CAP
    } else {
        exit::PASS
    }
}
