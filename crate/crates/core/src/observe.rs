//! Observables: expectations, reduced density matrices, entanglement
//! measures, charge and the exciton (bound pair) count.
//!
//! Partial traces use the tensor factorization induced by the global mode
//! order (or qubit order). Fermionic signs are already carried by the
//! Jordan-Wigner operators, and every cross-partition observable used here is
//! a bilinear, for which this factorization is exact.

use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::evolve::TimeGrid;
use crate::fock::FockBasis;
use crate::ops::{QubitRegister, SparseOperator};
use crate::states::{Space, StateVector};

/// Mutual information above which a state is reported as entangled-like.
pub const ENTANGLED_THRESHOLD: f64 = 1e-9;

/// `⟨ψ|A|ψ⟩`.
pub fn expectation(op: &SparseOperator, psi: &StateVector) -> Result<Complex64> {
    let applied = psi.apply(op)?;
    psi.inner(&applied)
}

/// Real part of `⟨ψ|A|ψ⟩`, for Hermitian `A`.
pub fn expectation_real(op: &SparseOperator, psi: &StateVector) -> Result<f64> {
    expectation(op, psi).map(|z| z.re)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Wraps a matrix after checking hermiticity, unit trace and positivity.
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self> {
        let rho = DensityMatrix { entries };
        rho.validate()?;
        Ok(rho)
    }

    fn validate(&self) -> Result<()> {
        let m = &self.entries;
        if !m.is_square() || m.nrows() == 0 {
            return Err(Error::InvalidDensityMatrix("not square".into()));
        }
        let n = m.nrows();
        for r in 0..n {
            for c in r..n {
                if (m[(r, c)] - m[(c, r)].conj()).norm() > 1e-12 {
                    return Err(Error::InvalidDensityMatrix("not hermitian".into()));
                }
            }
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > 1e-12 || tr.im.abs() > 1e-12 {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr}")));
        }
        if self.eigenvalues().iter().any(|&l| l < -1e-10) {
            return Err(Error::InvalidDensityMatrix("negative eigenvalue".into()));
        }
        Ok(())
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut v: Vec<f64> = SymmetricEigen::new(self.entries.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        v.sort_by(f64::total_cmp);
        v
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn kron(&self, other: &DensityMatrix) -> DensityMatrix {
        DensityMatrix {
            entries: self.entries.kronecker(&other.entries),
        }
    }
}

/// Bipartition of the sites (modes or qubits) of a state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n_sites: usize,
    subsystem_a: Vec<usize>,
    subsystem_b: Vec<usize>,
}

impl Partition {
    /// `subsystem_a` holds site positions; B is the complement.
    pub fn new(n_sites: usize, subsystem_a: &[usize]) -> Result<Self> {
        let mut a = subsystem_a.to_vec();
        a.sort_unstable();
        a.dedup();
        if a.len() != subsystem_a.len() {
            return Err(Error::InvalidPartition("repeated site".into()));
        }
        if a.iter().any(|&s| s >= n_sites) {
            return Err(Error::InvalidPartition("site out of range".into()));
        }
        let b: Vec<usize> = (0..n_sites).filter(|s| !a.contains(s)).collect();
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidPartition(
                "both subsystems must be nonempty".into(),
            ));
        }
        Ok(Partition {
            n_sites,
            subsystem_a: a,
            subsystem_b: b,
        })
    }

    /// Money modes against debt modes.
    pub fn money_debt(basis: &FockBasis) -> Result<Self> {
        let a: Vec<usize> = (0..basis.m_money()).collect();
        Self::new(basis.n_modes(), &a)
    }

    /// Named qubits against the rest of the register.
    pub fn qubits(register: &QubitRegister, labels: &[&str]) -> Result<Self> {
        let a = labels
            .iter()
            .map(|l| register.position(l))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidPartition(e.to_string()))?;
        Self::new(register.n_qubits(), &a)
    }

    /// First site against the rest; the default split of a qubit register.
    pub fn leading(n_sites: usize) -> Result<Self> {
        Self::new(n_sites, &[0])
    }

    pub fn subsystem_a(&self) -> &[usize] {
        &self.subsystem_a
    }

    pub fn subsystem_b(&self) -> &[usize] {
        &self.subsystem_b
    }

    fn swapped(&self) -> Partition {
        Partition {
            n_sites: self.n_sites,
            subsystem_a: self.subsystem_b.clone(),
            subsystem_b: self.subsystem_a.clone(),
        }
    }
}

/// Default bipartition of a state's space: money|debt or first qubit|rest.
pub fn default_partition(psi: &StateVector) -> Result<Partition> {
    match psi.space() {
        Space::Fock(b) => Partition::money_debt(b),
        Space::Qubits(r) => Partition::leading(r.n_qubits()),
    }
}

/// `(full site bit pattern, amplitude)` for every nonzero amplitude.
fn site_amplitudes(psi: &StateVector) -> (usize, Vec<(u64, Complex64)>) {
    match psi.space() {
        Space::Fock(b) => (
            b.n_modes(),
            b.states()
                .iter()
                .zip(psi.amplitudes())
                .filter(|(_, a)| a.norm_sqr() > 0.0)
                .map(|(s, a)| (s.bits(), *a))
                .collect(),
        ),
        Space::Qubits(r) => (
            r.n_qubits(),
            psi.amplitudes()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.norm_sqr() > 0.0)
                .map(|(i, a)| (i as u64, *a))
                .collect(),
        ),
    }
}

fn gather(bits: u64, n_sites: usize, sites: &[usize]) -> usize {
    sites.iter().fold(0usize, |acc, &p| {
        (acc << 1) | ((bits >> (n_sites - 1 - p)) & 1) as usize
    })
}

fn check_partition(psi: &StateVector, part: &Partition) -> Result<usize> {
    let (n_sites, _) = site_amplitudes(psi);
    if n_sites != part.n_sites {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} sites, state has {n_sites}",
            part.n_sites
        )));
    }
    Ok(n_sites)
}

/// `ρ_A = Tr_B |ψ⟩⟨ψ|`.
pub fn reduced_density(psi: &StateVector, part: &Partition) -> Result<DensityMatrix> {
    check_partition(psi, part)?;
    let (n, amps) = site_amplitudes(psi);
    let dim_a = 1usize << part.subsystem_a.len();
    let dim_b = 1usize << part.subsystem_b.len();
    // ψ reshaped as a (dim_a x dim_b) matrix
    let mut psi_ab = DMatrix::<Complex64>::zeros(dim_a, dim_b);
    for (bits, amp) in amps {
        let a = gather(bits, n, &part.subsystem_a);
        let b = gather(bits, n, &part.subsystem_b);
        psi_ab[(a, b)] = amp;
    }
    DensityMatrix::new(&psi_ab * psi_ab.adjoint() / Complex64::new(norm_sqr(psi), 0.0))
}

// Density matrices describe the normalized ray; integrator drift is
// reported by the evolution, not propagated into traces.
fn norm_sqr(psi: &StateVector) -> f64 {
    psi.norm().powi(2)
}

/// Pure-state density matrix ordered as `(a, b) -> a·dim_b + b`.
fn joint_density(psi: &StateVector, part: &Partition) -> Result<DensityMatrix> {
    check_partition(psi, part)?;
    let (n, amps) = site_amplitudes(psi);
    let dim_b = 1usize << part.subsystem_b.len();
    let dim = (1usize << part.subsystem_a.len()) * dim_b;
    let mut v = nalgebra::DVector::<Complex64>::zeros(dim);
    for (bits, amp) in amps {
        let a = gather(bits, n, &part.subsystem_a);
        let b = gather(bits, n, &part.subsystem_b);
        v[a * dim_b + b] = amp;
    }
    DensityMatrix::new(&v * v.adjoint() / Complex64::new(norm_sqr(psi), 0.0))
}

/// Von Neumann entropy in nats, `0 ln 0 = 0`.
pub fn entropy(rho: &DensityMatrix) -> Result<f64> {
    rho.validate()?;
    let s: f64 = rho
        .eigenvalues()
        .into_iter()
        .filter(|&l| l > 0.0)
        .map(|l| -l * l.ln())
        .sum();
    Ok(s.max(0.0))
}

/// `S(ρ_A) + S(ρ_B) − S(ρ_AB)`.
pub fn mutual_information(psi: &StateVector, part: &Partition) -> Result<f64> {
    let sa = entropy(&reduced_density(psi, part)?)?;
    let sb = entropy(&reduced_density(psi, &part.swapped())?)?;
    let sab = entropy(&joint_density(psi, part)?)?;
    Ok((sa + sb - sab).max(0.0))
}

/// `‖ρ_AB − ρ_A ⊗ ρ_B‖_F`; zero exactly for product states.
pub fn separability_gap(psi: &StateVector, part: &Partition) -> Result<f64> {
    let rho_a = reduced_density(psi, part)?;
    let rho_b = reduced_density(psi, &part.swapped())?;
    let joint = joint_density(psi, part)?;
    let diff = joint.matrix() - rho_a.kron(&rho_b).matrix();
    Ok(diff.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
}

fn fock_weights(
    psi: &StateVector,
) -> Result<(&FockBasis, impl Iterator<Item = (f64, u32, u32)> + '_)> {
    let basis = psi.fock_basis().ok_or(Error::WrongBasisKind)?;
    let it = basis
        .states()
        .iter()
        .zip(psi.amplitudes())
        .map(move |(s, a)| (a.norm_sqr(), basis.n_money_of(s), basis.n_debt_of(s)));
    Ok((basis, it))
}

/// `⟨N̂_money − N̂_debt⟩`.
pub fn charge(psi: &StateVector) -> Result<f64> {
    let (_, w) = fock_weights(psi)?;
    Ok(w.map(|(p, m, d)| p * (m as f64 - d as f64)).sum())
}

pub fn n_money(psi: &StateVector) -> Result<f64> {
    let (_, w) = fock_weights(psi)?;
    Ok(w.map(|(p, m, _)| p * m as f64).sum())
}

pub fn n_debt(psi: &StateVector) -> Result<f64> {
    let (_, w) = fock_weights(psi)?;
    Ok(w.map(|(p, _, d)| p * d as f64).sum())
}

/// Branch-weighted count of formed money-debt pairs,
/// `Σ |ψ_s|² min(N_money(s), N_debt(s))`.
pub fn exciton_count(psi: &StateVector) -> Result<f64> {
    let (_, w) = fock_weights(psi)?;
    Ok(w.map(|(p, m, d)| p * m.min(d) as f64).sum())
}

pub type StateFn = Arc<dyn Fn(&StateVector) -> Result<f64> + Send + Sync>;
pub type HamiltonianFn = Arc<dyn Fn(f64) -> Result<SparseOperator> + Send + Sync>;

/// A named quantity sampled along a trajectory.
#[derive(Clone)]
pub enum Observable {
    /// Expectation of a fixed operator.
    Operator(SparseOperator),
    /// Expectation of an operator that depends on time, such as `H(t)`.
    TimeDependent(HamiltonianFn),
    /// Any real functional of the state.
    State(StateFn),
}

impl fmt::Debug for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Observable::Operator(op) => write!(f, "Operator({}x{})", op.dim(), op.dim()),
            Observable::TimeDependent(_) => f.write_str("TimeDependent"),
            Observable::State(_) => f.write_str("State"),
        }
    }
}

impl Observable {
    pub fn state(f: impl Fn(&StateVector) -> Result<f64> + Send + Sync + 'static) -> Self {
        Observable::State(Arc::new(f))
    }

    pub fn evaluate(&self, t: f64, psi: &StateVector) -> Result<f64> {
        match self {
            Observable::Operator(op) => expectation_real(op, psi),
            Observable::TimeDependent(h) => expectation_real(&h(t)?, psi),
            Observable::State(f) => f(psi),
        }
    }
}

/// Named real columns sampled at each grid time, endpoints included.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TimeSeries {
    pub names: Vec<String>,
    pub times: Vec<f64>,
    /// `columns[j][i]` is observable `j` at `times[i]`.
    pub columns: Vec<Vec<f64>>,
}

impl TimeSeries {
    pub fn new(names: Vec<String>) -> Self {
        let columns = vec![Vec::new(); names.len()];
        TimeSeries {
            names,
            times: Vec::new(),
            columns,
        }
    }

    pub fn push_row(&mut self, t: f64, values: Vec<f64>) {
        assert_eq!(values.len(), self.names.len());
        self.times.push(t);
        for (col, v) in self.columns.iter_mut().zip(values) {
            col.push(v);
        }
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| self.columns[i].as_slice())
    }

    /// `max |x_i − x_0|` of a column.
    pub fn drift(&self, name: &str) -> Option<f64> {
        let col = self.column(name)?;
        let first = *col.first()?;
        Some(col.iter().map(|x| (x - first).abs()).fold(0.0, f64::max))
    }
}

/// Samples every observable on every state of a trajectory.
pub fn record_series(
    grid: &TimeGrid,
    observables: &[(String, Observable)],
    trajectory: &[StateVector],
) -> Result<TimeSeries> {
    if trajectory.len() != grid.n_steps() + 1 {
        return Err(Error::DimensionMismatch(format!(
            "trajectory has {} states for {} grid points",
            trajectory.len(),
            grid.n_steps() + 1
        )));
    }
    let mut series = TimeSeries::new(observables.iter().map(|o| o.0.clone()).collect());
    for (i, psi) in trajectory.iter().enumerate() {
        let t = grid.time(i);
        let row = observables
            .iter()
            .map(|(_, o)| o.evaluate(t, psi))
            .collect::<Result<Vec<_>>>()?;
        series.push_row(t, row);
    }
    Ok(series)
}
