//! Assembles bases, Hamiltonians, initial states and observables from a
//! validated config.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{FockBasis, OccupationState};
use crate::hamiltonian::{self, CouplingMatrix, ModeEnergies, Perturbation, ViolationSpec};
use crate::observe::{self, Observable};
use crate::ops::{self, QubitRegister, SparseOperator};
use crate::states::{self, Space, StateVector, SuperpositionSpec};

use super::config::{
    parse_mode, EnergySpec, InitialStateSpec, MatrixOrScalar, ScenarioConfig, TermSpec,
};

/// The assembled system: its space, the static Hamiltonian and any
/// scheduled perturbations.
#[derive(Debug, Clone)]
pub struct Model {
    pub space: Space,
    pub static_h: SparseOperator,
    pub perturbations: Vec<Perturbation>,
}

impl Model {
    pub fn fock_basis(&self) -> Option<&FockBasis> {
        match &self.space {
            Space::Fock(b) => Some(b),
            Space::Qubits(_) => None,
        }
    }

    pub fn is_static(&self) -> bool {
        self.perturbations
            .iter()
            .all(Perturbation::is_identically_zero)
    }

    /// The scheduled part `V(t)`.
    pub fn perturbation_at(&self, t: f64) -> Result<SparseOperator> {
        let mut v = SparseOperator::zero(self.space.tag(), self.space.dim());
        if let Some(basis) = self.fock_basis() {
            for p in &self.perturbations {
                v = v.add(&hamiltonian::v_perturb(basis, p, t)?)?;
            }
        }
        Ok(v)
    }

    /// `H(t) = H_static + V(t)`.
    pub fn hamiltonian_at(&self, t: f64) -> Result<SparseOperator> {
        if self.is_static() {
            return Ok(self.static_h.clone());
        }
        self.static_h.add(&self.perturbation_at(t)?)
    }
}

fn energies(spec: &EnergySpec) -> ModeEnergies {
    match (&spec.debt, spec.particle_hole_symmetric) {
        (None, true) => ModeEnergies::mirrored(&spec.money),
        (debt, _) => ModeEnergies::new(spec.money.clone(), debt.clone().unwrap_or_default()),
    }
}

fn fill(value: &MatrixOrScalar, m: usize, d: usize) -> Vec<Vec<f64>> {
    match value {
        MatrixOrScalar::Scalar(x) => vec![vec![*x; d]; m],
        MatrixOrScalar::Matrix(rows) => rows.clone(),
    }
}

fn coupling(
    u: &MatrixOrScalar,
    u_imag: Option<&MatrixOrScalar>,
    m: usize,
    d: usize,
) -> CouplingMatrix {
    let re = fill(u, m, d);
    let im = u_imag.map(|v| fill(v, m, d));
    let mut c = CouplingMatrix::zeros(m, d);
    for k in 0..m {
        for q in 0..d {
            let imag = im.as_ref().map_or(0.0, |v| v[k][q]);
            c.set(k, q, Complex64::new(re[k][q], imag));
        }
    }
    c
}

fn fock_term(
    basis: &FockBasis,
    config: &ScenarioConfig,
    term: &TermSpec,
) -> Result<SparseOperator> {
    let (m, d) = (basis.m_money(), basis.n_debt());
    match term {
        TermSpec::Free {} => {
            let spec = config
                .energies
                .as_ref()
                .ok_or_else(|| Error::DimensionMismatch("free term without energies".into()))?;
            hamiltonian::h_free(basis, &energies(spec))
        }
        TermSpec::Qe { amplitude, pairs } => {
            let pairs: Vec<(usize, usize)> = pairs.iter().map(|p| (p[0], p[1])).collect();
            hamiltonian::h_qe(basis, *amplitude, &pairs)
        }
        TermSpec::Exciton { u, u_imag } => {
            hamiltonian::h_binding(basis, &coupling(u, u_imag.as_ref(), m, d))
        }
        TermSpec::Viol { delta_pr, g } => {
            hamiltonian::h_viol(basis, &ViolationSpec::new(*delta_pr, *g))
        }
        TermSpec::Perturb { .. } => Ok(SparseOperator::zero(basis.tag(), basis.dim())),
        TermSpec::Exchange { amplitude, pairs } => {
            let mut h = SparseOperator::zero(basis.tag(), basis.dim());
            for [a, b] in pairs {
                let (i, j) = match (parse_mode(a), parse_mode(b)) {
                    (Some(i), Some(j)) => (i, j),
                    _ => return Err(Error::ModeOutOfRange(format!("{a} / {b}"))),
                };
                h = h.add(&ops::exchange(basis, i, j)?)?;
            }
            Ok(h.scale_real(*amplitude))
        }
        TermSpec::SigmaX { .. } => Err(Error::WrongBasisKind),
    }
}

/// Builds the model described by `config`.
pub fn build_model(config: &ScenarioConfig) -> Result<Model> {
    let b = &config.basis;
    if let Some(labels) = &b.qubits {
        let register = QubitRegister::new(labels)?;
        let mut h = SparseOperator::zero(register.tag(), register.dim());
        for (i, term) in config.terms.iter().enumerate() {
            let op = match term {
                TermSpec::SigmaX { qubit, amplitude } => {
                    ops::sigma_x(&register, qubit).map(|x| x.scale_real(*amplitude))
                }
                _ => Err(Error::WrongBasisKind),
            };
            h = h.add(&op.map_err(|e| e.in_scenario(format!("terms[{i}]")))?)?;
        }
        return Ok(Model {
            space: Space::Qubits(register),
            static_h: h,
            perturbations: Vec::new(),
        });
    }

    let (m, d) = match (b.money, b.debt) {
        (Some(m), Some(d)) => (m, d),
        _ => {
            return Err(Error::DimensionMismatch(
                "basis needs money and debt counts".into(),
            ))
        }
    };
    let basis = FockBasis::new(m, d, b.sector).map_err(|e| e.in_scenario("basis"))?;
    let mut h = SparseOperator::zero(basis.tag(), basis.dim());
    let mut perturbations = Vec::new();
    for (i, term) in config.terms.iter().enumerate() {
        let ctx = format!("terms[{i}].{}", term.key());
        if let TermSpec::Perturb { profit, interest } = term {
            let p = Perturbation {
                profit: profit.expand(m),
                interest: interest.expand(d),
            };
            p.check(&basis).map_err(|e| e.in_scenario(&ctx))?;
            perturbations.push(p);
            continue;
        }
        let op = fock_term(&basis, config, term).map_err(|e| e.in_scenario(&ctx))?;
        h = h.add(&op)?;
    }
    Ok(Model {
        space: Space::Fock(basis),
        static_h: h,
        perturbations,
    })
}

/// The configured initial state.
pub fn initial_state(config: &ScenarioConfig, model: &Model) -> Result<StateVector> {
    let fock = || model.fock_basis().ok_or(Error::WrongBasisKind);
    let state = match &config.initial_state {
        InitialStateSpec::Vacuum => states::vacuum(fock()?),
        InitialStateSpec::QePair { k, q } => states::qe_pair(fock()?, *k, *q),
        InitialStateSpec::LoanPair { k, q } => states::loan_pair(fock()?, *k, *q),
        InitialStateSpec::MoneyExcitation { k } => states::money_excitation(fock()?, *k),
        InitialStateSpec::Occupation { bits } => {
            let occ =
                OccupationState::parse(bits).ok_or_else(|| Error::NotInBasis(bits.clone()))?;
            states::occupation(fock()?, &occ)
        }
        InitialStateSpec::AssetSuperposition { a, b } => {
            states::asset_superposition(SuperpositionSpec {
                a: Complex64::new(a[0], a[1]),
                b: Complex64::new(b[0], b[1]),
            })
        }
        InitialStateSpec::BellQe => Ok(states::bell_qe()),
    };
    let state = state.map_err(|e| e.in_scenario("initial_state"))?;
    if state.tag() != model.space.tag() {
        return Err(Error::BasisMismatch.in_scenario("initial_state"));
    }
    Ok(state)
}

fn entanglement(name: &str) -> Observable {
    let which = name.to_owned();
    Observable::state(move |psi| {
        let part = observe::default_partition(psi)?;
        match which.as_str() {
            "entropy" => observe::entropy(&observe::reduced_density(psi, &part)?),
            "mutual_information" => observe::mutual_information(psi, &part),
            _ => observe::separability_gap(psi, &part),
        }
    })
}

fn indexed(name: &str, prefix: &str) -> Option<String> {
    name.strip_prefix(prefix)?
        .strip_suffix(']')
        .map(str::to_owned)
}

/// Resolves one observable name against the model.
pub fn observable(name: &str, model: &Model) -> Result<Observable> {
    let unknown = || Error::UnknownLabel(name.to_owned());
    let obs = match name {
        "norm" => Observable::state(|psi| Ok(psi.norm())),
        "energy" if model.is_static() => Observable::Operator(model.static_h.clone()),
        "energy" => {
            let m = Arc::new(model.clone());
            Observable::TimeDependent(Arc::new(move |t| m.hamiltonian_at(t)))
        }
        "entropy" | "mutual_information" | "separability_gap" => entanglement(name),
        "N_money" => Observable::state(observe::n_money),
        "N_debt" => Observable::state(observe::n_debt),
        "charge" => Observable::state(observe::charge),
        "exciton_count" => Observable::state(observe::exciton_count),
        _ => {
            if let Some(label) = indexed(name, "p_up[") {
                let register = match &model.space {
                    Space::Qubits(r) => r,
                    Space::Fock(_) => return Err(unknown()),
                };
                Observable::Operator(ops::qubit_projector(register, &label, true)?)
            } else {
                let mode = parse_mode(&name.replacen("n_", "", 1)).ok_or_else(unknown)?;
                let basis = model.fock_basis().ok_or_else(unknown)?;
                Observable::Operator(ops::number(basis, mode)?)
            }
        }
    };
    Ok(obs)
}

pub fn observables(config: &ScenarioConfig, model: &Model) -> Result<Vec<(String, Observable)>> {
    config
        .observables
        .iter()
        .enumerate()
        .map(|(i, name)| {
            observable(name, model)
                .map(|o| (name.clone(), o))
                .map_err(|e| e.in_scenario(format!("observables[{i}]")))
        })
        .collect()
}

/// Static Hamiltonian spectrum, ascending.
pub fn spectrum(config: &ScenarioConfig) -> Result<Vec<f64>> {
    let model = build_model(config)?;
    crate::linalg::spectrum(&model.static_h)
}
