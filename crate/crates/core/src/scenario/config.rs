//! Scenario documents: schema, parsing and total validation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fock::ModeId;
use crate::schedule::Schedule;

pub const SCHEMA_VERSION: u32 = 1;

/// Largest mode count a scenario may request (dense evolution limit).
pub const MAX_MODES: usize = 12;
pub const MAX_STEPS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub schema_version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub seed: u64,
    pub observables: Vec<String>,
    #[serde(default = "default_outputs")]
    pub outputs: Vec<OutputFormat>,
    pub basis: BasisSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub energies: Option<EnergySpec>,
    #[serde(default)]
    pub terms: Vec<TermSpec>,
    pub initial_state: InitialStateSpec,
    pub grid: GridConfig,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub events: Vec<EventSpec>,
}

fn default_outputs() -> Vec<OutputFormat> {
    vec![OutputFormat::Csv]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

impl OutputFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Jsonl => "jsonl",
        }
    }
}

impl std::str::FromStr for OutputFormat {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" | "json-lines" => Ok(OutputFormat::Jsonl),
            other => Err(crate::Error::UnsupportedFormat(other.to_owned())),
        }
    }
}

/// Either a Fock basis (`money`, `debt`, optional `sector`) or a qubit
/// register (`qubits`).
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub money: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub debt: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sector: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qubits: Option<Vec<String>>,
}

impl BasisSpec {
    pub fn fock(money: usize, debt: usize, sector: Option<i64>) -> Self {
        BasisSpec {
            money: Some(money),
            debt: Some(debt),
            sector,
            qubits: None,
        }
    }

    pub fn is_register(&self) -> bool {
        self.qubits.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnergySpec {
    #[serde(default)]
    pub money: Vec<f64>,
    /// Omitted with `particle_hole_symmetric = true` to mirror the money energies.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub debt: Option<Vec<f64>>,
    #[serde(default)]
    pub particle_hole_symmetric: bool,
}

/// A scalar broadcast to every entry or a full matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixOrScalar {
    Scalar(f64),
    Matrix(Vec<Vec<f64>>),
}

/// One schedule for every mode of a species, or one per mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScheduleSpec {
    Broadcast(Schedule),
    PerMode(Vec<Schedule>),
}

impl ScheduleSpec {
    pub fn expand(&self, n: usize) -> Vec<Schedule> {
        match self {
            ScheduleSpec::Broadcast(s) => vec![s.clone(); n],
            ScheduleSpec::PerMode(v) => v.clone(),
        }
    }

    fn entries(&self) -> Vec<(Option<usize>, &Schedule)> {
        match self {
            ScheduleSpec::Broadcast(s) => vec![(None, s)],
            ScheduleSpec::PerMode(v) => v.iter().enumerate().map(|(i, s)| (Some(i), s)).collect(),
        }
    }
}

fn default_one() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermSpec {
    /// Mode energies from `[energies]`.
    Free {},
    /// `g Σ (ĉ†_k d̂†_q + h.c.)` over the listed pairs.
    Qe {
        #[serde(default = "default_one")]
        amplitude: f64,
        pairs: Vec<[usize; 2]>,
    },
    /// Pair binding `Σ U_kq ĉ†_k d̂†_q + h.c.`.
    Exciton {
        u: MatrixOrScalar,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        u_imag: Option<MatrixOrScalar>,
    },
    /// Coercive density-density interaction `V = g · Δ_pr`.
    Viol {
        delta_pr: f64,
        #[serde(default = "default_one")]
        g: f64,
    },
    /// Profit and interest schedules acting on the two species.
    Perturb {
        profit: ScheduleSpec,
        interest: ScheduleSpec,
    },
    /// `amplitude · Σ P_ij` over a chain of mode pairs, e.g. `["money[0]", "money[1]"]`.
    Exchange {
        #[serde(default = "default_one")]
        amplitude: f64,
        pairs: Vec<[String; 2]>,
    },
    /// `amplitude · σ_x` on one qubit of a register.
    SigmaX {
        qubit: String,
        #[serde(default = "default_one")]
        amplitude: f64,
    },
}

impl TermSpec {
    pub fn key(&self) -> &'static str {
        match self {
            TermSpec::Free {} => "free",
            TermSpec::Qe { .. } => "qe",
            TermSpec::Exciton { .. } => "exciton",
            TermSpec::Viol { .. } => "viol",
            TermSpec::Perturb { .. } => "perturb",
            TermSpec::Exchange { .. } => "exchange",
            TermSpec::SigmaX { .. } => "sigma_x",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialStateSpec {
    Vacuum,
    QePair {
        k: usize,
        q: usize,
    },
    LoanPair {
        k: usize,
        q: usize,
    },
    MoneyExcitation {
        k: usize,
    },
    /// Occupation pattern such as `"0110"`, money modes first.
    Occupation {
        bits: String,
    },
    /// `a|Money↑⟩ + b|Gold↓⟩`, amplitudes as `[re, im]`.
    AssetSuperposition {
        a: [f64; 2],
        b: [f64; 2],
    },
    BellQe,
}

impl InitialStateSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            InitialStateSpec::Vacuum => "vacuum",
            InitialStateSpec::QePair { .. } => "qe_pair",
            InitialStateSpec::LoanPair { .. } => "loan_pair",
            InitialStateSpec::MoneyExcitation { .. } => "money_excitation",
            InitialStateSpec::Occupation { .. } => "occupation",
            InitialStateSpec::AssetSuperposition { .. } => "asset_superposition",
            InitialStateSpec::BellQe => "bell_qe",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default)]
    pub t_start: f64,
    pub t_end: f64,
    pub n_steps: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum EventSpec {
    /// Instantaneous repayment: apply `(ĉ†_k d̂†_q)†`, then renormalize.
    Repay { at: f64, k: usize, q: usize },
    /// Seeded projective measurement of one qubit or one mode occupancy.
    Measure {
        at: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        qubit: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mode: Option<String>,
    },
}

impl EventSpec {
    pub fn at(&self) -> f64 {
        match self {
            EventSpec::Repay { at, .. } | EventSpec::Measure { at, .. } => *at,
        }
    }
}

/// Parses `"money[2]"` / `"debt[0]"`.
pub fn parse_mode(text: &str) -> Option<ModeId> {
    let (species, rest): (fn(usize) -> ModeId, &str) = match text.strip_prefix("money[") {
        Some(r) => (ModeId::money, r),
        None => (ModeId::debt, text.strip_prefix("debt[")?),
    };
    rest.strip_suffix(']')?.parse().ok().map(species)
}

/// One schema problem, located by a key path such as `terms[1].viol.delta_pr`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Issue {
    pub path: String,
    pub message: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("malformed scenario document: {0}")]
    Parse(String),
    #[error("invalid scenario:\n{}", .0.iter().map(|i| format!("  {i}")).collect::<Vec<_>>().join("\n"))]
    Validation(Vec<Issue>),
}

impl ConfigError {
    pub fn issues(&self) -> &[Issue] {
        match self {
            ConfigError::Validation(v) => v,
            ConfigError::Parse(_) => &[],
        }
    }
}

/// Parses and validates a TOML scenario document.
pub fn parse_scenario(text: &str) -> Result<ScenarioConfig, ConfigError> {
    let table: toml::Table = text
        .parse()
        .map_err(|e: toml::de::Error| ConfigError::Parse(e.message().to_owned()))?;
    let config: ScenarioConfig = serde_path_to_error::deserialize(toml::Value::Table(table))
        .map_err(|e| {
            let path = e.path().to_string();
            ConfigError::Validation(vec![Issue {
                path: if path == "." {
                    "(document)".into()
                } else {
                    path
                },
                message: e.into_inner().message().trim().to_owned(),
            }])
        })?;
    let issues = validate(&config);
    if issues.is_empty() {
        Ok(config)
    } else {
        Err(ConfigError::Validation(issues))
    }
}

/// Serializes a config back to TOML.
pub fn to_toml(config: &ScenarioConfig) -> String {
    toml::to_string(config).expect("scenario configs always serialize")
}

/// Observable names accepted for a Fock-space scenario.
pub fn fock_observable_names(money: usize, debt: usize) -> Vec<String> {
    let mut names: Vec<String> = [
        "N_money",
        "N_debt",
        "charge",
        "energy",
        "exciton_count",
        "norm",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    if money > 0 && debt > 0 {
        names.extend(
            ["entropy", "mutual_information", "separability_gap"]
                .iter()
                .map(|s| s.to_string()),
        );
    }
    names.extend((0..money).map(|k| format!("n_money[{k}]")));
    names.extend((0..debt).map(|q| format!("n_debt[{q}]")));
    names
}

/// Observable names accepted for a qubit-register scenario.
pub fn register_observable_names(labels: &[String]) -> Vec<String> {
    let mut names: Vec<String> = vec!["energy".into(), "norm".into()];
    if labels.len() >= 2 {
        names.extend(
            ["entropy", "mutual_information", "separability_gap"]
                .iter()
                .map(|s| s.to_string()),
        );
    }
    names.extend(labels.iter().map(|l| format!("p_up[{l}]")));
    names
}

struct Collector(Vec<Issue>);

impl Collector {
    fn push(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.0.push(Issue {
            path: path.into(),
            message: message.into(),
        });
    }
}

fn finite(x: f64) -> bool {
    x.is_finite()
}

/// Every problem with a structurally well-formed config; empty when valid.
pub fn validate(config: &ScenarioConfig) -> Vec<Issue> {
    let mut c = Collector(Vec::new());
    if config.schema_version != SCHEMA_VERSION {
        c.push(
            "schema_version",
            format!(
                "unsupported version {}, expected {SCHEMA_VERSION}",
                config.schema_version
            ),
        );
    }
    if config.name.trim().is_empty() {
        c.push("name", "must not be empty");
    }
    if config.seed > i64::MAX as u64 {
        c.push("seed", "must fit in a signed 64-bit integer");
    }

    // basis
    let b = &config.basis;
    let mut fock: Option<(usize, usize)> = None;
    let mut labels: Option<Vec<String>> = None;
    match (&b.qubits, b.money, b.debt) {
        (Some(q), None, None) => {
            if b.sector.is_some() {
                c.push("basis.sector", "only applies to Fock bases");
            }
            if q.is_empty() || q.len() > MAX_MODES {
                c.push(
                    "basis.qubits",
                    format!("need between 1 and {MAX_MODES} qubits"),
                );
            } else if crate::ops::QubitRegister::new(q).is_err() {
                c.push("basis.qubits", "labels must be unique");
            } else {
                labels = Some(q.clone());
            }
        }
        (None, Some(m), Some(d)) => {
            if m + d > MAX_MODES {
                c.push("basis", format!("money + debt must be at most {MAX_MODES}"));
            } else if let Some(q) = b.sector {
                if q < -(d as i64) || q > m as i64 {
                    c.push(
                        "basis.sector",
                        format!("sector {q} is empty for {m} money and {d} debt modes"),
                    );
                } else {
                    fock = Some((m, d));
                }
            } else {
                fock = Some((m, d));
            }
        }
        (Some(_), _, _) => c.push("basis", "give either qubits or money/debt, not both"),
        (None, _, _) => c.push("basis", "money and debt counts are required"),
    }

    // energies
    if let Some(e) = &config.energies {
        if labels.is_some() {
            c.push("energies", "only applies to Fock bases");
        }
        if e.money
            .iter()
            .chain(e.debt.iter().flatten())
            .any(|x| !finite(*x))
        {
            c.push("energies", "must be finite");
        }
        if let Some((m, d)) = fock {
            if e.money.len() != m {
                c.push(
                    "energies.money",
                    format!("expected {m} entries, got {}", e.money.len()),
                );
            }
            match &e.debt {
                Some(debt) if debt.len() != d => c.push(
                    "energies.debt",
                    format!("expected {d} entries, got {}", debt.len()),
                ),
                Some(debt) if e.particle_hole_symmetric => {
                    if debt.len() != e.money.len()
                        || debt.iter().zip(&e.money).any(|(x, y)| *x != -*y)
                    {
                        c.push(
                            "energies.debt",
                            "particle_hole_symmetric requires debt[k] = -money[k] at t = 0",
                        );
                    }
                }
                None if e.particle_hole_symmetric && m != d => c.push(
                    "energies.particle_hole_symmetric",
                    "mirroring needs as many debt modes as money modes",
                ),
                None if !e.particle_hole_symmetric && d > 0 => c.push(
                    "energies.debt",
                    "required unless particle_hole_symmetric = true",
                ),
                _ => {}
            }
        }
    }

    // terms
    for (i, term) in config.terms.iter().enumerate() {
        let path = format!("terms[{i}].{}", term.key());
        let register_term = matches!(term, TermSpec::SigmaX { .. });
        if labels.is_some() && !register_term {
            c.push(&path, "only applies to Fock bases");
            continue;
        }
        if fock.is_some() && register_term {
            c.push(&path, "only applies to qubit registers");
            continue;
        }
        validate_term(
            &mut c,
            &path,
            term,
            fock,
            labels.as_deref(),
            config.energies.is_some(),
        );
    }

    // initial state
    validate_initial(&mut c, &config.initial_state, b, fock, labels.as_deref());

    // grid
    let g = &config.grid;
    if !finite(g.t_start) || !finite(g.t_end) {
        c.push("grid", "times must be finite");
    } else if g.t_end <= g.t_start {
        c.push("grid.t_end", "must exceed t_start");
    }
    if g.n_steps == 0 || g.n_steps > MAX_STEPS {
        c.push("grid.n_steps", format!("must be between 1 and {MAX_STEPS}"));
    }
    let grid = crate::evolve::TimeGrid::new(g.t_start, g.t_end, g.n_steps.clamp(1, MAX_STEPS)).ok();

    // events
    for (i, ev) in config.events.iter().enumerate() {
        let path = format!("events[{i}]");
        if let Some(grid) = &grid {
            if grid.index_of(ev.at(), 1e-6).is_none() {
                c.push(format!("{path}.at"), "must coincide with a grid point");
            }
        }
        match ev {
            EventSpec::Repay { k, q, .. } => match fock {
                Some((m, d)) => {
                    if *k >= m || *q >= d {
                        c.push(&path, format!("pair ({k}, {q}) is out of range"));
                    }
                }
                None => c.push(&path, "repayment needs a Fock basis"),
            },
            EventSpec::Measure { qubit, mode, .. } => match (qubit, mode) {
                (Some(qb), None) => match &labels {
                    Some(l) if l.contains(qb) => {}
                    Some(_) => c.push(format!("{path}.qubit"), format!("unknown qubit `{qb}`")),
                    None => c.push(
                        format!("{path}.qubit"),
                        "qubit measurement needs a register",
                    ),
                },
                (None, Some(md)) => match (parse_mode(md), fock) {
                    (Some(id), Some((m, d))) if mode_in_range(id, m, d) => {}
                    (_, Some(_)) => c.push(format!("{path}.mode"), format!("unknown mode `{md}`")),
                    (_, None) => c.push(
                        format!("{path}.mode"),
                        "mode measurement needs a Fock basis",
                    ),
                },
                _ => c.push(&path, "give exactly one of qubit or mode"),
            },
        }
    }

    // observables
    let valid = match (&fock, &labels) {
        (Some((m, d)), _) => fock_observable_names(*m, *d),
        (None, Some(l)) => register_observable_names(l),
        _ => Vec::new(),
    };
    if config.observables.is_empty() {
        c.push("observables", "at least one observable is required");
    }
    if !valid.is_empty() {
        for (i, name) in config.observables.iter().enumerate() {
            if !valid.contains(name) {
                c.push(
                    format!("observables[{i}]"),
                    format!(
                        "unknown observable `{name}`; valid names: {}",
                        valid.join(", ")
                    ),
                );
            }
            if config.observables[..i].contains(name) {
                c.push(
                    format!("observables[{i}]"),
                    format!("duplicate observable `{name}`"),
                );
            }
        }
    }
    if config.outputs.is_empty() {
        c.push("outputs", "at least one output format is required");
    }
    c.0
}

fn mode_in_range(id: ModeId, m: usize, d: usize) -> bool {
    match id.species {
        crate::fock::Species::Money => id.index < m,
        crate::fock::Species::Debt => id.index < d,
    }
}

fn check_matrix(c: &mut Collector, path: &str, value: &MatrixOrScalar, m: usize, d: usize) {
    match value {
        MatrixOrScalar::Scalar(x) if !finite(*x) => c.push(path, "must be finite"),
        MatrixOrScalar::Scalar(_) => {}
        MatrixOrScalar::Matrix(rows) => {
            if rows.len() != m || rows.iter().any(|r| r.len() != d) {
                c.push(path, format!("expected a {m}x{d} matrix"));
            }
            if rows.iter().flatten().any(|x| !finite(*x)) {
                c.push(path, "entries must be finite");
            }
        }
    }
}

fn validate_term(
    c: &mut Collector,
    path: &str,
    term: &TermSpec,
    fock: Option<(usize, usize)>,
    labels: Option<&[String]>,
    has_energies: bool,
) {
    match term {
        TermSpec::Free {} => {
            if !has_energies {
                c.push(path, "needs an [energies] table");
            }
        }
        TermSpec::Qe { amplitude, pairs } => {
            if !finite(*amplitude) {
                c.push(format!("{path}.amplitude"), "must be finite");
            }
            if pairs.is_empty() {
                c.push(
                    format!("{path}.pairs"),
                    "must list at least one (k, q) pair",
                );
            }
            if let Some((m, d)) = fock {
                for (j, [k, q]) in pairs.iter().enumerate() {
                    if *k >= m || *q >= d {
                        c.push(
                            format!("{path}.pairs[{j}]"),
                            format!("pair ({k}, {q}) is out of range"),
                        );
                    }
                }
            }
        }
        TermSpec::Exciton { u, u_imag } => {
            if let Some((m, d)) = fock {
                check_matrix(c, &format!("{path}.u"), u, m, d);
                if let Some(ui) = u_imag {
                    check_matrix(c, &format!("{path}.u_imag"), ui, m, d);
                }
            }
        }
        TermSpec::Viol { delta_pr, g } => {
            if !(finite(*delta_pr) && *delta_pr >= 0.0) {
                c.push(format!("{path}.delta_pr"), "must be finite and >= 0");
            }
            if !(finite(*g) && *g >= 0.0) {
                c.push(format!("{path}.g"), "must be finite and >= 0");
            }
        }
        TermSpec::Perturb { profit, interest } => {
            let (m, d) = fock.unwrap_or((0, 0));
            for (name, spec, n) in [("profit", profit, m), ("interest", interest, d)] {
                if let ScheduleSpec::PerMode(v) = spec {
                    if fock.is_some() && v.len() != n {
                        c.push(
                            format!("{path}.{name}"),
                            format!("expected {n} schedules, got {}", v.len()),
                        );
                    }
                }
                for (j, s) in spec.entries() {
                    let p = match j {
                        Some(j) => format!("{path}.{name}[{j}]"),
                        None => format!("{path}.{name}"),
                    };
                    for problem in s.structural_problems() {
                        c.push(&p, problem);
                    }
                    if s.check_initial_condition().is_err() {
                        c.push(
                            &p,
                            format!(
                                "value(0) ≠ 0 (got {}); perturbations must satisfy V(t=0) = 0",
                                s.value(0.0)
                            ),
                        );
                    }
                }
            }
        }
        TermSpec::Exchange { amplitude, pairs } => {
            if !finite(*amplitude) {
                c.push(format!("{path}.amplitude"), "must be finite");
            }
            if pairs.is_empty() {
                c.push(format!("{path}.pairs"), "must list at least one mode pair");
            }
            if let Some((m, d)) = fock {
                for (j, [a, b]) in pairs.iter().enumerate() {
                    match (parse_mode(a), parse_mode(b)) {
                        (Some(x), Some(y)) if x == y => {
                            c.push(format!("{path}.pairs[{j}]"), "modes must differ")
                        }
                        (Some(x), Some(y)) if x.species != y.species => c.push(
                            format!("{path}.pairs[{j}]"),
                            "exchange must stay within one species to conserve charge",
                        ),
                        (Some(x), Some(y)) if mode_in_range(x, m, d) && mode_in_range(y, m, d) => {}
                        _ => c.push(
                            format!("{path}.pairs[{j}]"),
                            format!("unknown modes `{a}`, `{b}` (use money[k] / debt[q])"),
                        ),
                    }
                }
            }
        }
        TermSpec::SigmaX { qubit, amplitude } => {
            if !finite(*amplitude) {
                c.push(format!("{path}.amplitude"), "must be finite");
            }
            if let Some(l) = labels {
                if !l.contains(qubit) {
                    c.push(format!("{path}.qubit"), format!("unknown qubit `{qubit}`"));
                }
            }
        }
    }
}

fn validate_initial(
    c: &mut Collector,
    init: &InitialStateSpec,
    basis: &BasisSpec,
    fock: Option<(usize, usize)>,
    labels: Option<&[String]>,
) {
    let path = "initial_state";
    let sector = basis.sector;
    match init {
        InitialStateSpec::AssetSuperposition { a, b } => {
            if labels.map(|l| l.len() == 1 && l[0] == crate::states::ASSET_QUBIT) != Some(true) {
                c.push(path, "asset_superposition needs basis.qubits = [\"asset\"]");
            }
            let n2 = a[0] * a[0] + a[1] * a[1] + b[0] * b[0] + b[1] * b[1];
            if !n2.is_finite() || (n2 - 1.0).abs() > 1e-9 {
                c.push(path, format!("|a|² + |b|² = {n2}, must be 1"));
            }
        }
        InitialStateSpec::BellQe => {
            let expected: Vec<String> = crate::states::VALUATION_QUBITS
                .iter()
                .map(|s| s.to_string())
                .collect();
            if labels != Some(expected.as_slice()) {
                c.push(
                    path,
                    "bell_qe needs basis.qubits = [\"money_valuation\", \"bond_valuation\"]",
                );
            }
        }
        _ if fock.is_none() => {
            if labels.is_some() {
                c.push(path, format!("{} needs a Fock basis", init.kind()));
            }
        }
        InitialStateSpec::Vacuum => {
            if sector.is_some_and(|q| q != 0) {
                c.push(path, "the vacuum lies in sector 0");
            }
        }
        InitialStateSpec::QePair { k, q } | InitialStateSpec::LoanPair { k, q } => {
            let (m, d) = fock.unwrap_or_default();
            if *k >= m || *q >= d {
                c.push(path, format!("pair ({k}, {q}) is out of range"));
            }
            if sector.is_some_and(|s| s != 0) {
                c.push(path, "pairs lie in sector 0");
            }
        }
        InitialStateSpec::MoneyExcitation { k } => {
            let (m, _) = fock.unwrap_or_default();
            if *k >= m {
                c.push(path, format!("money mode {k} is out of range"));
            }
            if sector.is_some_and(|s| s != 1) {
                c.push(path, "a single money excitation lies in sector 1");
            }
        }
        InitialStateSpec::Occupation { bits } => {
            let (m, d) = fock.unwrap_or_default();
            match crate::fock::OccupationState::parse(bits) {
                Some(occ) if occ.width() == m + d => {
                    let q = occ.count_range(0, m) as i64 - occ.count_range(m, m + d) as i64;
                    if sector.is_some_and(|s| s != q) {
                        c.push(
                            format!("{path}.bits"),
                            format!("pattern has charge {q}, outside the sector"),
                        );
                    }
                }
                _ => c.push(
                    format!("{path}.bits"),
                    format!("expected {} characters of 0/1", m + d),
                ),
            }
        }
    }
}
