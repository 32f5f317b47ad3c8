use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use paraq::quantum::{AngleMap, SignPattern};
use paraq::semantics::DEFAULT_BRANCH_BUDGET;
use paraq::{IffMode, C1};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

/// Effective settings after merging defaults, the config file and flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    pub iff_mode: IffMode,
    pub branch_budget: usize,
    pub sign_pattern: SignPattern,
    pub angle_map: AngleMap,
    pub seed: u64,
    pub output_format: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            iff_mode: IffMode::Conjunctive,
            branch_budget: DEFAULT_BRANCH_BUDGET,
            sign_pattern: SignPattern::Max,
            angle_map: AngleMap::PairOffset,
            seed: 0,
            output_format: OutputFormat::Text,
        }
    }
}

/// Keys accepted in the TOML config file; all optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub iff_mode: Option<String>,
    pub branch_budget: Option<usize>,
    pub sign_pattern: Option<String>,
    pub angle_map: Option<String>,
    pub seed: Option<u64>,
    pub output_format: Option<OutputFormat>,
}

/// Command-line overrides; `None` leaves the file or default value.
#[derive(Debug, Default)]
pub struct Overrides {
    pub iff_mode: Option<String>,
    pub branch_budget: Option<usize>,
    pub sign_pattern: Option<String>,
    pub angle_map: Option<String>,
    pub seed: Option<u64>,
    pub output_format: Option<OutputFormat>,
}

fn parse_key<T: FromStr<Err = String>>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|e: String| CliError::Input(format!("{key}: {e}")))
}

impl Config {
    pub fn load(path: Option<&Path>, ov: Overrides) -> Result<Config, CliError> {
        let file = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| {
                    CliError::Input(format!("cannot read config {}: {e}", p.display()))
                })?;
                toml::from_str::<ConfigFile>(&text).map_err(|e| {
                    CliError::Input(format!("bad config {}: {}", p.display(), e.message()))
                })?
            }
            None => ConfigFile::default(),
        };
        let mut c = Config::default();
        if let Some(v) = ov.iff_mode.or(file.iff_mode) {
            c.iff_mode = parse_key("iff_mode", &v)?;
        }
        if let Some(v) = ov.sign_pattern.or(file.sign_pattern) {
            c.sign_pattern = parse_key("sign_pattern", &v)?;
        }
        if let Some(v) = ov.angle_map.or(file.angle_map) {
            c.angle_map = parse_key("angle_map", &v)?;
        }
        if let Some(v) = ov.branch_budget.or(file.branch_budget) {
            c.branch_budget = v;
        }
        if let Some(v) = ov.seed.or(file.seed) {
            c.seed = v;
        }
        if let Some(v) = ov.output_format.or(file.output_format) {
            c.output_format = v;
        }
        Ok(c)
    }

    pub fn c1(&self) -> C1 {
        C1 {
            iff_mode: self.iff_mode,
            branch_budget: self.branch_budget,
        }
    }
}
