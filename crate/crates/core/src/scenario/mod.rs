//! Declarative scenarios: TOML configs, preset library, runs and exports.
//!
//! ```
//! use creditfock::scenario::{self, presets, OutputFormat};
//!
//! let config = presets::load("earned_money").unwrap();
//! let result = scenario::run_scenario(&config).unwrap();
//! let csv = scenario::export_series(&result, OutputFormat::Csv);
//! assert!(csv.starts_with("t,N_money,"));
//! ```

pub mod config;
pub mod exciton;
pub mod export;
pub mod model;
pub mod presets;
pub mod run;

pub use config::{
    parse_scenario, to_toml, validate, ConfigError, Issue, OutputFormat, ScenarioConfig,
};
pub use export::{export_series, to_csv, to_jsonl};
pub use model::{build_model, spectrum, Model};
pub use run::{config_hash, run_scenario, RunResult};
