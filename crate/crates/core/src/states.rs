//! Canonical states and seeded projective measurement.
//!
//! Occupancy states (vacuum, credit pairs, earned money) live on a
//! [`FockBasis`]. Valuation states (asset superposition, Bell-type QE
//! correlations) live on a [`QubitRegister`]. The two are never mixed in one
//! vector.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fock::{FockBasis, ModeId, OccupationState};
use crate::ops::{self, BasisTag, QubitRegister, SparseOperator};

/// Name of the generator behind [`measure`], reported in run metadata.
pub const RNG_NAME: &str = "ChaCha8Rng";

const NORM_TOL: f64 = 1e-12;

/// Label of the single asset qubit.
pub const ASSET_QUBIT: &str = "asset";
/// Labels of the two valuation qubits of the QE Bell state.
pub const VALUATION_QUBITS: [&str; 2] = ["money_valuation", "bond_valuation"];

/// Where a state vector lives.
#[derive(Debug, Clone, PartialEq)]
pub enum Space {
    Fock(FockBasis),
    Qubits(QubitRegister),
}

impl Space {
    pub fn dim(&self) -> usize {
        match self {
            Space::Fock(b) => b.dim(),
            Space::Qubits(r) => r.dim(),
        }
    }

    pub fn tag(&self) -> BasisTag {
        match self {
            Space::Fock(b) => b.tag(),
            Space::Qubits(r) => r.tag(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    space: Space,
    label: Option<String>,
}

impl StateVector {
    /// Wraps amplitudes without normalizing them.
    pub fn from_amplitudes(space: Space, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != space.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} amplitudes for a space of dimension {}",
                amplitudes.len(),
                space.dim()
            )));
        }
        Ok(StateVector {
            amplitudes,
            space,
            label: None,
        })
    }

    /// Normalizes and fixes the global phase (leading amplitude real positive).
    pub fn normalized(space: Space, amplitudes: Vec<Complex64>) -> Result<Self> {
        let mut s = Self::from_amplitudes(space, amplitudes)?;
        let n = s.norm();
        if n < 1e-300 || !n.is_finite() {
            return Err(Error::ZeroProbabilityCollapse);
        }
        s.amplitudes.iter_mut().for_each(|a| *a /= n);
        s.fix_phase();
        Ok(s)
    }

    fn basis_state(space: Space, index: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); space.dim()];
        amps[index] = Complex64::new(1.0, 0.0);
        StateVector {
            amplitudes: amps,
            space,
            label: None,
        }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn tag(&self) -> BasisTag {
        self.space.tag()
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn fock_basis(&self) -> Option<&FockBasis> {
        match &self.space {
            Space::Fock(b) => Some(b),
            Space::Qubits(_) => None,
        }
    }

    pub fn register(&self) -> Option<&QubitRegister> {
        match &self.space {
            Space::Qubits(r) => Some(r),
            Space::Fock(_) => None,
        }
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm() - 1.0).abs() <= NORM_TOL
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.tag() != other.tag() {
            return Err(Error::BasisMismatch);
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Applies an operator without renormalizing.
    pub fn apply(&self, op: &SparseOperator) -> Result<StateVector> {
        if !op.is_square() || *op.tag() != self.tag() {
            return Err(Error::BasisMismatch);
        }
        Ok(StateVector {
            amplitudes: op.apply(&self.amplitudes)?,
            space: self.space.clone(),
            label: self.label.clone(),
        })
    }

    pub(crate) fn replace_amplitudes(&mut self, amplitudes: Vec<Complex64>) {
        debug_assert_eq!(amplitudes.len(), self.amplitudes.len());
        self.amplitudes = amplitudes;
    }

    fn fix_phase(&mut self) {
        if let Some(lead) = self.amplitudes.iter().find(|a| a.norm() > 1e-14).copied() {
            let phase = lead.conj() / lead.norm();
            self.amplitudes.iter_mut().for_each(|a| *a *= phase);
        }
    }
}

/// Amplitudes `a` on `|Money↑⟩` and `b` on `|Gold↓⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperpositionSpec {
    pub a: Complex64,
    pub b: Complex64,
}

impl SuperpositionSpec {
    pub fn real(a: f64, b: f64) -> Self {
        SuperpositionSpec {
            a: Complex64::new(a, 0.0),
            b: Complex64::new(b, 0.0),
        }
    }
}

/// The economic vacuum: no money, no debt.
pub fn vacuum(basis: &FockBasis) -> Result<StateVector> {
    let empty = OccupationState::from_bits(0, basis.n_modes());
    let index = basis.lookup(&empty).ok_or(Error::VacuumNotInSector)?;
    Ok(StateVector::basis_state(Space::Fock(basis.clone()), index))
}

/// A single occupation basis state.
pub fn occupation(basis: &FockBasis, occ: &OccupationState) -> Result<StateVector> {
    let index = basis.index_of(occ)?;
    Ok(StateVector::basis_state(Space::Fock(basis.clone()), index))
}

/// `ĉ†_k d̂†_q |vac⟩`: money and a bond issued together.
pub fn qe_pair(basis: &FockBasis, k: usize, q: usize) -> Result<StateVector> {
    let created = vacuum(basis)?.apply(&ops::pair_creation(basis, k, q)?)?;
    Ok(StateVector::normalized(created.space, created.amplitudes)?.with_label("qe_pair"))
}

/// A loan: released (mobile) money paired with stored (confined) debt.
/// Same vector as [`qe_pair`], labeled for reporting.
pub fn loan_pair(basis: &FockBasis, k: usize, q: usize) -> Result<StateVector> {
    Ok(qe_pair(basis, k, q)?.with_label("loan_pair: money released, debt stored"))
}

/// `ĉ†_k |vac⟩`: earned money with no associated debt.
pub fn money_excitation(basis: &FockBasis, k: usize) -> Result<StateVector> {
    let pos = basis.position(ModeId::money(k))?;
    let occ = OccupationState::from_bits(0, basis.n_modes()).flipped(pos);
    Ok(occupation(basis, &occ)?.with_label("earned_money"))
}

/// `a|Money↑⟩ + b|Gold↓⟩` on the one-qubit register `["asset"]`.
pub fn asset_superposition(spec: SuperpositionSpec) -> Result<StateVector> {
    let norm2 = spec.a.norm_sqr() + spec.b.norm_sqr();
    if (norm2 - 1.0).abs() > 1e-9 {
        return Err(Error::NotNormalized(norm2));
    }
    let register = QubitRegister::new(&[ASSET_QUBIT])?;
    Ok(
        StateVector::from_amplitudes(Space::Qubits(register), vec![spec.a, spec.b])?
            .with_label("asset_superposition"),
    )
}

/// `(|Money↓,Bond↑⟩ + |Money↑,Bond↓⟩)/√2` on `["money_valuation", "bond_valuation"]`.
pub fn bell_qe() -> StateVector {
    let register = QubitRegister::new(&VALUATION_QUBITS).expect("static labels");
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let z = Complex64::new(0.0, 0.0);
    StateVector::from_amplitudes(Space::Qubits(register), vec![z, h, h, z])
        .expect("dimension 4")
        .with_label("bell_qe")
}

/// Computational-basis product state; `true` is `↓` (bit 1).
pub fn qubit_product(register: &QubitRegister, down: &[bool]) -> Result<StateVector> {
    if down.len() != register.n_qubits() {
        return Err(Error::DimensionMismatch(format!(
            "{} bits for {} qubits",
            down.len(),
            register.n_qubits()
        )));
    }
    let index = down
        .iter()
        .fold(0usize, |acc, &bit| (acc << 1) | usize::from(bit));
    Ok(StateVector::basis_state(
        Space::Qubits(register.clone()),
        index,
    ))
}

/// Projectors `[empty, occupied]` for one Fock mode.
pub fn occupation_projectors(basis: &FockBasis, mode: ModeId) -> Result<Vec<SparseOperator>> {
    let n = ops::number(basis, mode)?;
    let id = SparseOperator::identity(basis.tag(), basis.dim());
    Ok(vec![id.sub(&n)?, n])
}

/// Projectors `[↑, ↓]` for one qubit.
pub fn qubit_projectors(register: &QubitRegister, label: &str) -> Result<Vec<SparseOperator>> {
    Ok(vec![
        ops::qubit_projector(register, label, true)?,
        ops::qubit_projector(register, label, false)?,
    ])
}

fn check_projectors(tag: &BasisTag, dim: usize, projectors: &[SparseOperator]) -> Result<()> {
    const TOL: f64 = 1e-10;
    if projectors.is_empty() {
        return Err(Error::IncompleteProjectors("empty family".into()));
    }
    if projectors.iter().any(|p| !p.is_square() || p.tag() != tag) {
        return Err(Error::BasisMismatch);
    }
    let mut sum = SparseOperator::zero(tag.clone(), dim);
    for p in projectors {
        sum = sum.add(p)?;
    }
    if !sum.approx_eq(&SparseOperator::identity(tag.clone(), dim), TOL) {
        return Err(Error::IncompleteProjectors(
            "projectors do not sum to identity".into(),
        ));
    }
    for (i, p) in projectors.iter().enumerate() {
        if !p.multiply(p)?.approx_eq(p, TOL) || !p.is_hermitian(TOL) {
            return Err(Error::IncompleteProjectors(format!(
                "element {i} is not a projector"
            )));
        }
        for q in &projectors[i + 1..] {
            if p.multiply(q)?.max_abs() > TOL {
                return Err(Error::IncompleteProjectors(format!(
                    "element {i} is not orthogonal to the rest"
                )));
            }
        }
    }
    Ok(())
}

/// Born-rule measurement with a seeded generator.
///
/// Returns the outcome index and the normalized post-measurement state.
/// Equal `(state, projectors, seed)` always give the same result.
pub fn measure(
    state: &StateVector,
    projectors: &[SparseOperator],
    seed: u64,
) -> Result<(usize, StateVector)> {
    let tag = state.tag();
    check_projectors(&tag, state.dim(), projectors)?;
    let mut branches = Vec::with_capacity(projectors.len());
    for p in projectors {
        let projected = state.apply(p)?;
        let prob = projected.norm().powi(2);
        branches.push((prob, projected));
    }
    let total: f64 = branches.iter().map(|b| b.0).sum();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u: f64 = rng.random::<f64>() * total;
    let mut acc = 0.0;
    let mut outcome = branches.len() - 1;
    for (i, (p, _)) in branches.iter().enumerate() {
        acc += p;
        if u < acc {
            outcome = i;
            break;
        }
    }
    // never land on an empty trailing branch through rounding
    while branches[outcome].0 <= 0.0 && outcome > 0 {
        outcome -= 1;
    }
    let (prob, projected) = branches.swap_remove(outcome);
    if prob <= 1e-300 {
        return Err(Error::ZeroProbabilityCollapse);
    }
    let scale = prob.sqrt();
    let amplitudes = projected.amplitudes.iter().map(|a| a / scale).collect();
    Ok((
        outcome,
        StateVector {
            amplitudes,
            space: projected.space,
            label: projected.label,
        },
    ))
}

/// Measures one qubit in the `↑/↓` basis; outcome `true` means `↑`.
pub fn measure_qubit(state: &StateVector, label: &str, seed: u64) -> Result<(bool, StateVector)> {
    let register = state.register().ok_or(Error::WrongBasisKind)?;
    let projectors = qubit_projectors(register, label)?;
    let (outcome, collapsed) = measure(state, &projectors, seed)?;
    Ok((outcome == 0, collapsed))
}
