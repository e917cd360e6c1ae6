//! Settings resolution: command-line flags, then `GARSIDE_AL_*` environment
//! variables (both handled by clap), then an optional TOML file.

use std::fs;
use std::path::{Path, PathBuf};

use garside_al::absorb::DEFAULT_BUDGET;
use serde::Deserialize;

pub const DEFAULT_N: usize = 4;
pub const DEFAULT_VERTEX_BUDGET: u64 = 2_000_000;

/// Keys accepted in the config file.
#[derive(Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub n: Option<usize>,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
    pub vertex_budget: Option<u64>,
    pub cache: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("config {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("config {}: {e}", path.display()))
    }
}

/// Values given on the command line or through the environment.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub n: Option<usize>,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
    pub vertex_budget: Option<u64>,
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub n: usize,
    pub seed: u64,
    pub budget: u64,
    pub vertex_budget: u64,
    pub cache: Option<PathBuf>,
}

impl Settings {
    pub fn resolve(over: Overrides, file: FileConfig) -> Settings {
        Settings {
            n: over.n.or(file.n).unwrap_or(DEFAULT_N),
            seed: over.seed.or(file.seed).unwrap_or(0),
            budget: over.budget.or(file.budget).unwrap_or(DEFAULT_BUDGET),
            vertex_budget: over.vertex_budget.or(file.vertex_budget).unwrap_or(DEFAULT_VERTEX_BUDGET),
            cache: over.cache.or(file.cache),
        }
    }
}
