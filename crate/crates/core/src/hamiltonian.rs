//! Hamiltonian builders for credit creation, binding, coercion and
//! time-dependent profit/interest asymmetry.
//!
//! Units: ħ = 1, time in periods, energy in economic energy units.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{FockBasis, ModeId};
use crate::ops::{self, SparseOperator};
use crate::schedule::Schedule;

/// Per-mode energies `ε_k^M` and `ε_q^D`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeEnergies {
    pub money: Vec<f64>,
    pub debt: Vec<f64>,
}

impl ModeEnergies {
    pub fn new(money: Vec<f64>, debt: Vec<f64>) -> Self {
        ModeEnergies { money, debt }
    }

    pub fn zeros(basis: &FockBasis) -> Self {
        ModeEnergies {
            money: vec![0.0; basis.m_money()],
            debt: vec![0.0; basis.n_debt()],
        }
    }

    /// Particle-hole symmetric energies: `ε_q^D = −ε_q^M`.
    pub fn mirrored(money: &[f64]) -> Self {
        ModeEnergies {
            money: money.to_vec(),
            debt: money.iter().map(|e| -e).collect(),
        }
    }

    pub fn is_particle_hole_symmetric(&self) -> bool {
        self.money.len() == self.debt.len()
            && self.money.iter().zip(&self.debt).all(|(m, d)| *d == -*m)
    }

    pub fn check(&self, basis: &FockBasis) -> Result<()> {
        if self.money.len() != basis.m_money() || self.debt.len() != basis.n_debt() {
            return Err(Error::DimensionMismatch(format!(
                "energies have {}+{} entries for a basis of {}+{} modes",
                self.money.len(),
                self.debt.len(),
                basis.m_money(),
                basis.n_debt()
            )));
        }
        Ok(())
    }
}

/// Money-debt pairing amplitudes `U_kq`.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingMatrix {
    m_money: usize,
    n_debt: usize,
    entries: Vec<Complex64>,
}

impl CouplingMatrix {
    pub fn zeros(m_money: usize, n_debt: usize) -> Self {
        CouplingMatrix {
            m_money,
            n_debt,
            entries: vec![Complex64::new(0.0, 0.0); m_money * n_debt],
        }
    }

    /// Same amplitude on every `(k, q)` pair.
    pub fn uniform(m_money: usize, n_debt: usize, u: Complex64) -> Self {
        CouplingMatrix {
            m_money,
            n_debt,
            entries: vec![u; m_money * n_debt],
        }
    }

    pub fn set(&mut self, k: usize, q: usize, u: Complex64) {
        assert!(k < self.m_money && q < self.n_debt);
        self.entries[k * self.n_debt + q] = u;
    }

    pub fn with(mut self, k: usize, q: usize, u: Complex64) -> Self {
        self.set(k, q, u);
        self
    }

    pub fn get(&self, k: usize, q: usize) -> Complex64 {
        self.entries[k * self.n_debt + q]
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m_money, self.n_debt)
    }

    fn check(&self, basis: &FockBasis) -> Result<()> {
        if self.shape() != (basis.m_money(), basis.n_debt()) {
            return Err(Error::DimensionMismatch(format!(
                "coupling is {}x{}, basis has {} money and {} debt modes",
                self.m_money,
                self.n_debt,
                basis.m_money(),
                basis.n_debt()
            )));
        }
        if self
            .entries
            .iter()
            .any(|u| !u.re.is_finite() || !u.im.is_finite())
        {
            return Err(Error::DimensionMismatch(
                "coupling entries must be finite".into(),
            ));
        }
        Ok(())
    }
}

/// Strength of the coercive money-debt interaction as a function of the
/// poor-rich gap: `V = g_viol · Δ_pr`, unless a pair override is given.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ViolationSpec {
    pub delta_pr: f64,
    #[serde(default = "default_g_viol")]
    pub g_viol: f64,
    /// `(k, q, V_kq)` replacing the linear rule for one pair.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub overrides: Vec<(usize, usize, f64)>,
}

fn default_g_viol() -> f64 {
    1.0
}

impl ViolationSpec {
    pub fn new(delta_pr: f64, g_viol: f64) -> Self {
        ViolationSpec {
            delta_pr,
            g_viol,
            overrides: Vec::new(),
        }
    }

    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !(self.delta_pr.is_finite() && self.delta_pr >= 0.0) {
            out.push("delta_pr must be finite and >= 0".into());
        }
        if !(self.g_viol.is_finite() && self.g_viol >= 0.0) {
            out.push("g_viol must be finite and >= 0".into());
        }
        if self
            .overrides
            .iter()
            .any(|o| !(o.2.is_finite() && o.2 >= 0.0))
        {
            out.push("override strengths must be finite and >= 0".into());
        }
        out
    }
}

pub fn viol_strength(spec: &ViolationSpec, k: usize, q: usize) -> f64 {
    spec.overrides
        .iter()
        .rev()
        .find(|o| o.0 == k && o.1 == q)
        .map(|o| o.2)
        .unwrap_or(spec.g_viol * spec.delta_pr)
}

/// Profit schedules per money mode and interest schedules per debt mode.
#[derive(Debug, Clone, PartialEq)]
pub struct Perturbation {
    pub profit: Vec<Schedule>,
    pub interest: Vec<Schedule>,
}

impl Perturbation {
    /// One profit schedule for every money mode, one interest schedule for
    /// every debt mode.
    pub fn broadcast(basis: &FockBasis, profit: Schedule, interest: Schedule) -> Self {
        Perturbation {
            profit: vec![profit; basis.m_money()],
            interest: vec![interest; basis.n_debt()],
        }
    }

    pub fn none(basis: &FockBasis) -> Self {
        Self::broadcast(basis, Schedule::zero(), Schedule::zero())
    }

    pub fn is_identically_zero(&self) -> bool {
        self.profit
            .iter()
            .chain(&self.interest)
            .all(Schedule::is_identically_zero)
    }

    pub fn check(&self, basis: &FockBasis) -> Result<()> {
        if self.profit.len() != basis.m_money() || self.interest.len() != basis.n_debt() {
            return Err(Error::DimensionMismatch(
                "one schedule per money mode and per debt mode is required".into(),
            ));
        }
        self.profit
            .iter()
            .chain(&self.interest)
            .try_for_each(Schedule::check_initial_condition)
    }
}

/// `Σ_k ε_k^M n̂_k + Σ_q ε_q^D n̂_q`.
pub fn h_free(basis: &FockBasis, energies: &ModeEnergies) -> Result<SparseOperator> {
    energies.check(basis)?;
    let m = basis.m_money();
    let diag: Vec<f64> = basis
        .states()
        .iter()
        .map(|s| {
            let money: f64 = (0..m)
                .filter(|&k| s.is_occupied(k))
                .map(|k| energies.money[k])
                .sum();
            let debt: f64 = (0..basis.n_debt())
                .filter(|&q| s.is_occupied(m + q))
                .map(|q| energies.debt[q])
                .sum();
            money + debt
        })
        .collect();
    Ok(SparseOperator::diagonal(basis.tag(), &diag))
}

/// `Σ_k Π_k(t) n̂_k + Σ_q r_q(t) n̂_q`, which vanishes at `t = 0`.
pub fn v_perturb(basis: &FockBasis, schedules: &Perturbation, t: f64) -> Result<SparseOperator> {
    schedules.check(basis)?;
    let profit: Vec<f64> = schedules.profit.iter().map(|s| s.value(t)).collect();
    let interest: Vec<f64> = schedules.interest.iter().map(|s| s.value(t)).collect();
    h_free(basis, &ModeEnergies::new(profit, interest))
}

/// The asymmetry term of the informal-lending model; the same operator as
/// [`v_perturb`] with the energy shifts read as `δε^M(t)`, `δε^D(t)`.
pub fn h_asym(basis: &FockBasis, schedules: &Perturbation, t: f64) -> Result<SparseOperator> {
    v_perturb(basis, schedules, t)
}

/// Quantitative easing: `g Σ_(k,q) (ĉ†_k d̂†_q + h.c.)`.
pub fn h_qe(basis: &FockBasis, amplitude: f64, pairs: &[(usize, usize)]) -> Result<SparseOperator> {
    let mut create = SparseOperator::zero(basis.tag(), basis.dim());
    for &(k, q) in pairs {
        create = create.add(&ops::pair_creation(basis, k, q)?)?;
    }
    let create = create.scale_real(amplitude);
    create.add(&create.adjoint())
}

/// `Σ_kq U_kq ĉ†_k d̂†_q + h.c.`
pub fn h_binding(basis: &FockBasis, coupling: &CouplingMatrix) -> Result<SparseOperator> {
    coupling.check(basis)?;
    let mut create = SparseOperator::zero(basis.tag(), basis.dim());
    for k in 0..basis.m_money() {
        for q in 0..basis.n_debt() {
            let u = coupling.get(k, q);
            if u != Complex64::new(0.0, 0.0) {
                create = create.add(&ops::pair_creation(basis, k, q)?.scale(u))?;
            }
        }
    }
    create.add(&create.adjoint())
}

/// Bound money-debt pair (exciton) Hamiltonian: free part plus binding.
pub fn h_exciton(
    basis: &FockBasis,
    energies: &ModeEnergies,
    coupling: &CouplingMatrix,
) -> Result<SparseOperator> {
    h_free(basis, energies)?.add(&h_binding(basis, coupling)?)
}

/// `Σ_kq V_kq n̂_k^M n̂_q^D`.
pub fn h_viol(basis: &FockBasis, spec: &ViolationSpec) -> Result<SparseOperator> {
    let m = basis.m_money();
    let d = basis.n_debt();
    for &(k, q, _) in &spec.overrides {
        basis.position(ModeId::money(k))?;
        basis.position(ModeId::debt(q))?;
    }
    let diag: Vec<f64> = basis
        .states()
        .iter()
        .map(|s| {
            let mut v = 0.0;
            for k in (0..m).filter(|&k| s.is_occupied(k)) {
                for q in (0..d).filter(|&q| s.is_occupied(m + q)) {
                    v += viol_strength(spec, k, q);
                }
            }
            v
        })
        .collect();
    Ok(SparseOperator::diagonal(basis.tag(), &diag))
}

/// Static part of the informal-lending Hamiltonian: free + binding + violation.
pub fn h_informal_static(
    basis: &FockBasis,
    energies: &ModeEnergies,
    coupling: &CouplingMatrix,
    spec: &ViolationSpec,
) -> Result<SparseOperator> {
    h_exciton(basis, energies, coupling)?.add(&h_viol(basis, spec)?)
}

/// Informal lending at time `t`: free + binding + violation + asymmetry.
pub fn h_informal(
    basis: &FockBasis,
    energies: &ModeEnergies,
    coupling: &CouplingMatrix,
    spec: &ViolationSpec,
    schedules: &Perturbation,
    t: f64,
) -> Result<SparseOperator> {
    h_informal_static(basis, energies, coupling, spec)?.add(&h_asym(basis, schedules, t)?)
}
