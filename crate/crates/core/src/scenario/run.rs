use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::evolve::{self, TimeGrid};
use crate::observe::{self, TimeSeries, ENTANGLED_THRESHOLD};
use crate::ops::{self, SparseOperator};
use crate::states::{self, Space, StateVector, RNG_NAME};

use super::config::{parse_mode, EventSpec, ScenarioConfig};
use super::model::{build_model, initial_state, observables, Model};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// How many of the largest amplitudes a summary keeps.
const LEADING: usize = 4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Amplitude {
    pub state: String,
    pub re: f64,
    pub im: f64,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FinalSummary {
    pub leading_amplitudes: Vec<Amplitude>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charge: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exciton_count: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entropy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutual_information: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separability_gap: Option<f64>,
    /// Mutual information above [`ENTANGLED_THRESHOLD`].
    pub entangled_like: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunMetadata {
    pub scenario: String,
    pub schema_version: u32,
    pub config_hash: String,
    pub seed: u64,
    pub rng: String,
    pub version: String,
    pub n_steps: usize,
    pub dt: f64,
    /// `max |‖ψ‖ − 1|` over the grid.
    pub norm_drift: f64,
    /// Largest `⟨Q⟩` drift within any stretch between events (Fock runs).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charge_drift: Option<f64>,
    /// Largest `⟨H⟩` drift between events, for static Hamiltonians only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energy_drift: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EventRecord {
    pub index: usize,
    pub t: f64,
    pub kind: String,
    pub outcome: String,
}

#[derive(Debug, Clone)]
pub struct RunResult {
    pub series: TimeSeries,
    pub final_state: StateVector,
    pub summary: FinalSummary,
    pub metadata: RunMetadata,
    pub events: Vec<EventRecord>,
}

/// SHA-256 of the config as key-sorted compact JSON.
pub fn config_hash(config: &ScenarioConfig) -> String {
    // serde_json's default map is ordered, which makes the encoding canonical
    let value = serde_json::to_value(config).expect("configs serialize to JSON");
    let digest = Sha256::digest(value.to_string().as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn state_label(space: &Space, index: usize) -> String {
    match space {
        Space::Fock(b) => b.states()[index].to_string(),
        Space::Qubits(r) => format!("{index:0width$b}", width = r.n_qubits()),
    }
}

pub fn summarize(psi: &StateVector) -> Result<FinalSummary> {
    let norm2 = psi.norm().powi(2);
    let mut order: Vec<usize> = (0..psi.dim()).collect();
    // stable sort keeps basis order among equal weights
    order.sort_by(|&a, &b| {
        psi.amplitude(b)
            .norm_sqr()
            .partial_cmp(&psi.amplitude(a).norm_sqr())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let leading_amplitudes = order
        .into_iter()
        .filter(|&i| psi.amplitude(i).norm_sqr() > 1e-30)
        .take(LEADING)
        .map(|i| {
            let a = psi.amplitude(i);
            Amplitude {
                state: state_label(psi.space(), i),
                re: a.re,
                im: a.im,
                probability: a.norm_sqr() / norm2,
            }
        })
        .collect();
    let fock = psi.fock_basis().is_some();
    let (entropy, mi, gap) = match observe::default_partition(psi) {
        Ok(part) => (
            Some(observe::entropy(&observe::reduced_density(psi, &part)?)?),
            Some(observe::mutual_information(psi, &part)?),
            Some(observe::separability_gap(psi, &part)?),
        ),
        Err(_) => (None, None, None),
    };
    Ok(FinalSummary {
        leading_amplitudes,
        charge: fock.then(|| observe::charge(psi)).transpose()?,
        exciton_count: fock.then(|| observe::exciton_count(psi)).transpose()?,
        entropy,
        mutual_information: mi,
        separability_gap: gap,
        entangled_like: mi.is_some_and(|x| x > ENTANGLED_THRESHOLD),
    })
}

/// Tracks drift of a quantity within stretches separated by events.
#[derive(Default)]
struct SegmentDrift {
    start: Option<f64>,
    worst: f64,
}

impl SegmentDrift {
    fn restart(&mut self) {
        self.start = None;
    }

    fn observe(&mut self, x: f64) {
        match self.start {
            None => self.start = Some(x),
            Some(s) => self.worst = self.worst.max((x - s).abs()),
        }
    }
}

fn apply_event(
    event: &EventSpec,
    index: usize,
    seed: u64,
    psi: &mut StateVector,
) -> Result<String> {
    match event {
        EventSpec::Repay { k, q, .. } => {
            let basis = psi.fock_basis().ok_or(Error::WrongBasisKind)?.clone();
            let recombine = ops::pair_creation(&basis, *k, *q)?.adjoint();
            let after = psi.apply(&recombine)?;
            let weight = after.norm();
            if weight <= 1e-150 {
                return Err(Error::ZeroProbabilityCollapse);
            }
            let amps = after.amplitudes().iter().map(|a| a / weight).collect();
            psi.replace_amplitudes(amps);
            Ok(format!(
                "repaid pair ({k}, {q}) with weight {:.17e}",
                weight * weight
            ))
        }
        EventSpec::Measure { qubit, mode, .. } => {
            let event_seed = seed.wrapping_add(index as u64);
            let (text, collapsed) = match (qubit, mode) {
                (Some(label), _) => {
                    let (up, collapsed) = states::measure_qubit(psi, label, event_seed)?;
                    (
                        format!("{label} = {}", if up { "up" } else { "down" }),
                        collapsed,
                    )
                }
                (None, Some(name)) => {
                    let basis = psi.fock_basis().ok_or(Error::WrongBasisKind)?.clone();
                    let id = parse_mode(name).ok_or_else(|| Error::ModeOutOfRange(name.clone()))?;
                    let projectors = states::occupation_projectors(&basis, id)?;
                    let (outcome, collapsed) = states::measure(psi, &projectors, event_seed)?;
                    (format!("{name} = {outcome}"), collapsed)
                }
                (None, None) => return Err(Error::UnknownLabel("measurement target".into())),
            };
            *psi = collapsed;
            Ok(text)
        }
    }
}

/// Runs a validated scenario.
pub fn run_scenario(config: &ScenarioConfig) -> Result<RunResult> {
    let model = build_model(config)?;
    run_model(config, &model)
}

/// Runs `config` against an already assembled model.
pub fn run_model(config: &ScenarioConfig, model: &Model) -> Result<RunResult> {
    let psi0 = initial_state(config, model)?;
    let obs = observables(config, model)?;
    let g = &config.grid;
    let grid = TimeGrid::new(g.t_start, g.t_end, g.n_steps).map_err(|e| e.in_scenario("grid"))?;

    let mut schedule: Vec<(usize, usize)> = Vec::new();
    for (i, ev) in config.events.iter().enumerate() {
        let step = grid
            .index_of(ev.at(), 1e-6)
            .ok_or_else(|| Error::InvalidGrid(format!("event at {} is off the grid", ev.at())))
            .map_err(|e| e.in_scenario(format!("events[{i}]")))?;
        schedule.push((step, i));
    }
    schedule.sort();

    let fock = model.fock_basis().is_some();
    let static_h = model.is_static();
    let mut charge = SegmentDrift::default();
    let mut energy = SegmentDrift::default();
    let mut log = Vec::new();

    let mut hook = |step: usize, t: f64, psi: &mut StateVector| -> Result<()> {
        for &(_, i) in schedule.iter().filter(|(s, _)| *s == step) {
            let ev = &config.events[i];
            let outcome = apply_event(ev, i, config.seed, psi)
                .map_err(|e| e.in_scenario(format!("events[{i}]")))?;
            log.push(EventRecord {
                index: i,
                t,
                kind: match ev {
                    EventSpec::Repay { .. } => "repay".into(),
                    EventSpec::Measure { .. } => "measure".into(),
                },
                outcome,
            });
            charge.restart();
            energy.restart();
        }
        if fock {
            charge.observe(observe::charge(psi)?);
        }
        if static_h {
            energy.observe(observe::expectation_real(&model.static_h, psi)?);
        }
        Ok(())
    };

    let perturbation = |t: f64| -> Result<SparseOperator> { model.perturbation_at(t) };
    let pert: Option<&evolve::PerturbationFn<'_>> =
        if static_h { None } else { Some(&perturbation) };
    let report = evolve::evolve_with_hook(&model.static_h, pert, &psi0, &grid, &obs, &mut hook)
        .map_err(|e| e.in_scenario(format!("scenario `{}`", config.name)))?;

    let summary = summarize(&report.final_state)?;
    let metadata = RunMetadata {
        scenario: config.name.clone(),
        schema_version: config.schema_version,
        config_hash: config_hash(config),
        seed: config.seed,
        rng: RNG_NAME.to_owned(),
        version: VERSION.to_owned(),
        n_steps: grid.n_steps(),
        dt: grid.dt(),
        norm_drift: report.norm_drift,
        charge_drift: fock.then_some(charge.worst),
        energy_drift: static_h.then_some(energy.worst),
    };
    Ok(RunResult {
        series: report.series.unwrap_or_default(),
        final_state: report.final_state,
        summary,
        metadata,
        events: log,
    })
}
