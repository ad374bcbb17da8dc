use std::path::PathBuf;

use edge_depth::depth::{EngineConfig, Field, DEFAULT_MAX_GENERATORS, DEFAULT_MAX_LATTICE};
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

pub const DEFAULT_SEED: u64 = 20_240_611;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FieldChoice {
    Gf2,
    Rational,
    Both,
}

impl FieldChoice {
    pub fn fields(self) -> Vec<Field> {
        match self {
            FieldChoice::Gf2 => vec![Field::Gf2],
            FieldChoice::Rational => vec![Field::Rational],
            FieldChoice::Both => vec![Field::Gf2, Field::Rational],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub field: FieldChoice,
    pub max_gens: usize,
    pub max_lattice: usize,
    pub cache_dir: Option<PathBuf>,
    pub format: OutputFormat,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: FieldChoice::Gf2,
            max_gens: DEFAULT_MAX_GENERATORS,
            max_lattice: DEFAULT_MAX_LATTICE,
            cache_dir: None,
            format: OutputFormat::Csv,
            seed: DEFAULT_SEED,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> CliResult<()> {
        if self.max_gens == 0 || self.max_lattice == 0 {
            return Err(CliError::Input("caps must be positive".into()));
        }
        Ok(())
    }

    pub fn engine(&self) -> EngineConfig {
        EngineConfig {
            max_gens: self.max_gens,
            max_lattice: self.max_lattice,
        }
    }
}
