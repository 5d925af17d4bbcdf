//! The shipped scenario library.

use crate::error::{Error, Result};
use crate::observe;

use super::config::{parse_scenario, ConfigError, ScenarioConfig, TermSpec};
use super::model::{build_model, initial_state};

const PRESETS: &[(&str, &str)] = &[
    (
        "qe_pair_rabi",
        include_str!("../../presets/qe_pair_rabi.toml"),
    ),
    (
        "gold_backed_collapse",
        include_str!("../../presets/gold_backed_collapse.toml"),
    ),
    ("microloan", include_str!("../../presets/microloan.toml")),
    (
        "informal_lending",
        include_str!("../../presets/informal_lending.toml"),
    ),
    (
        "market_exchange",
        include_str!("../../presets/market_exchange.toml"),
    ),
    (
        "earned_money",
        include_str!("../../presets/earned_money.toml"),
    ),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    PRESETS.iter().map(|p| p.0)
}

/// TOML source of a preset.
pub fn source(name: &str) -> Option<&'static str> {
    PRESETS.iter().find(|p| p.0 == name).map(|p| p.1)
}

pub fn load(name: &str) -> std::result::Result<ScenarioConfig, ConfigError> {
    let text = source(name).ok_or_else(|| {
        ConfigError::Parse(format!(
            "unknown preset `{name}`; available: {}",
            names().collect::<Vec<_>>().join(", ")
        ))
    })?;
    parse_scenario(text)
}

pub fn all() -> Vec<ScenarioConfig> {
    names()
        .map(|n| load(n).expect("shipped presets validate"))
        .collect()
}

/// A copy of `config` with every violation term set to `delta_pr`.
pub fn with_delta_pr(config: &ScenarioConfig, delta_pr: f64) -> ScenarioConfig {
    let mut out = config.clone();
    for term in &mut out.terms {
        if let TermSpec::Viol { delta_pr: d, .. } = term {
            *d = delta_pr;
        }
    }
    out
}

/// Diagonal energy `⟨ψ0|H_static|ψ0⟩` of the initial state.
pub fn pair_energy(config: &ScenarioConfig) -> Result<f64> {
    let model = build_model(config)?;
    let psi = initial_state(config, &model)?;
    observe::expectation_real(&model.static_h, &psi)
}

/// `(Δ_pr, pair energy)` for each value, on the informal-lending model.
pub fn delta_pr_sweep(config: &ScenarioConfig, values: &[f64]) -> Result<Vec<(f64, f64)>> {
    if !config
        .terms
        .iter()
        .any(|t| matches!(t, TermSpec::Viol { .. }))
    {
        return Err(Error::UnknownLabel("scenario has no viol term".into()));
    }
    values
        .iter()
        .map(|&d| pair_energy(&with_delta_pr(config, d)).map(|e| (d, e)))
        .collect()
}
