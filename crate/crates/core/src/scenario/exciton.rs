//! Config documents for the 1-D exciton solver.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exciton1d::{self, EigenResult, GridSpec, PotentialSpec};

use super::config::{ConfigError, Issue};

fn default_mass() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PotentialConfig {
    Harmonic {
        omega: f64,
    },
    SquareWell {
        depth: f64,
        width: f64,
    },
    Tabulated {
        samples: Vec<f64>,
    },
    /// `x,V(x)` CSV, relative paths resolved against the config file.
    TabulatedFile {
        path: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExcitonConfig {
    pub schema_version: u32,
    pub name: String,
    #[serde(default = "default_mass")]
    pub mass: f64,
    pub n_states: usize,
    #[serde(default)]
    pub wavefunctions: bool,
    pub grid: GridSpec,
    pub potential: PotentialConfig,
}

pub fn parse_exciton_config(text: &str) -> std::result::Result<ExcitonConfig, ConfigError> {
    let table: toml::Table = text
        .parse()
        .map_err(|e: toml::de::Error| ConfigError::Parse(e.message().to_owned()))?;
    let cfg: ExcitonConfig =
        serde_path_to_error::deserialize(toml::Value::Table(table)).map_err(|e| {
            let path = e.path().to_string();
            ConfigError::Validation(vec![Issue {
                path,
                message: e.into_inner().message().trim().to_owned(),
            }])
        })?;
    let mut issues = Vec::new();
    let mut push = |path: &str, message: String| {
        issues.push(Issue {
            path: path.into(),
            message,
        })
    };
    if cfg.schema_version != super::config::SCHEMA_VERSION {
        push(
            "schema_version",
            format!("unsupported version {}", cfg.schema_version),
        );
    }
    if !(cfg.mass.is_finite() && cfg.mass > 0.0) {
        push("mass", "must be finite and > 0".into());
    }
    if let Err(e) = cfg.grid.check() {
        push("grid", e.to_string());
    } else if cfg.n_states == 0 || cfg.n_states + 2 >= cfg.grid.n_points {
        push(
            "n_states",
            format!("must be between 1 and {}", cfg.grid.n_points - 3),
        );
    }
    match &cfg.potential {
        PotentialConfig::Harmonic { omega } if !omega.is_finite() => {
            push("potential.omega", "must be finite".into())
        }
        PotentialConfig::SquareWell { depth, width }
            if !(depth.is_finite() && width.is_finite() && *width > 0.0) =>
        {
            push(
                "potential",
                "depth must be finite and width finite and > 0".into(),
            )
        }
        PotentialConfig::Tabulated { samples } if samples.len() != cfg.grid.n_points => push(
            "potential.samples",
            format!(
                "{} samples for {} grid points",
                samples.len(),
                cfg.grid.n_points
            ),
        ),
        _ => {}
    }
    if issues.is_empty() {
        Ok(cfg)
    } else {
        Err(ConfigError::Validation(issues))
    }
}

impl ExcitonConfig {
    /// Resolves the potential, reading tabulated files relative to `base`.
    pub fn potential(&self, base: &Path) -> Result<PotentialSpec> {
        Ok(match &self.potential {
            PotentialConfig::Harmonic { omega } => PotentialSpec::Harmonic { omega: *omega },
            PotentialConfig::SquareWell { depth, width } => PotentialSpec::SquareWell {
                depth: *depth,
                width: *width,
            },
            PotentialConfig::Tabulated { samples } => PotentialSpec::Tabulated {
                samples: samples.clone(),
            },
            PotentialConfig::TabulatedFile { path } => {
                let full = base.join(path);
                let text = std::fs::read_to_string(&full)
                    .map_err(|e| Error::Io(format!("cannot read {}: {e}", full.display())))?;
                exciton1d::tabulated_from_rows(&self.grid, &exciton1d::parse_potential_csv(&text)?)?
            }
        })
    }

    pub fn solve(&self, base: &Path) -> Result<EigenResult> {
        exciton1d::solve_eigen(&self.grid, &self.potential(base)?, self.mass, self.n_states)
    }
}
