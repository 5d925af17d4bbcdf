//! Sparse operators on Fock bases and labeled qubit registers.
//!
//! Ladder operators carry Jordan-Wigner signs over the single global mode
//! order of [`FockBasis`]: acting on mode `p` picks up `(-1)^n` where `n`
//! counts occupied modes strictly before `p`. Money and debt operators
//! therefore anticommute with each other as well as within a species.

use std::collections::HashMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{FockBasis, ModeId, OccupationState, Species};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Identity of the space an operator or state lives on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasisTag {
    Fock {
        money: usize,
        debt: usize,
        sector: Option<i64>,
    },
    Qubits(Vec<String>),
}

/// Named qubits, qubit 0 being the most significant bit; `↑` is bit 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QubitRegister {
    labels: Vec<String>,
}

impl QubitRegister {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidRegister("no qubits".into()));
        }
        if labels.len() > 12 {
            return Err(Error::InvalidRegister("more than 12 qubits".into()));
        }
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_owned()).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidRegister(format!("duplicate label `{l}`")));
            }
        }
        Ok(QubitRegister { labels })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n_qubits(&self) -> usize {
        self.labels.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.labels.len()
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Bit mask of a qubit inside a basis index.
    pub fn mask(&self, position: usize) -> usize {
        1 << (self.labels.len() - 1 - position)
    }

    pub fn tag(&self) -> BasisTag {
        BasisTag::Qubits(self.labels.clone())
    }
}

/// Complex sparse matrix in canonical (row, col)-sorted triplet form.
///
/// Square operators have equal row and column tags; the sector-mapping
/// ladder operators are rectangular.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseOperator {
    rows: usize,
    cols: usize,
    row_tag: BasisTag,
    col_tag: BasisTag,
    entries: Vec<(usize, usize, Complex64)>,
}

impl SparseOperator {
    /// Builds a square operator from triplets, merging duplicates.
    pub fn from_triplets(
        tag: BasisTag,
        dim: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Complex64)>,
    ) -> Self {
        Self::rectangular(tag.clone(), dim, tag, dim, triplets)
    }

    pub fn rectangular(
        row_tag: BasisTag,
        rows: usize,
        col_tag: BasisTag,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Complex64)>,
    ) -> Self {
        let mut merged: HashMap<(usize, usize), Complex64> = HashMap::new();
        for (r, c, v) in triplets {
            assert!(
                r < rows && c < cols,
                "entry ({r}, {c}) outside {rows}x{cols}"
            );
            *merged.entry((r, c)).or_insert(ZERO) += v;
        }
        let mut entries: Vec<_> = merged
            .into_iter()
            .filter(|(_, v)| *v != ZERO)
            .map(|((r, c), v)| (r, c, v))
            .collect();
        entries.sort_by_key(|&(r, c, _)| (r, c));
        SparseOperator {
            rows,
            cols,
            row_tag,
            col_tag,
            entries,
        }
    }

    pub fn zero(tag: BasisTag, dim: usize) -> Self {
        Self::from_triplets(tag, dim, std::iter::empty())
    }

    pub fn identity(tag: BasisTag, dim: usize) -> Self {
        Self::from_triplets(tag, dim, (0..dim).map(|i| (i, i, ONE)))
    }

    pub fn diagonal(tag: BasisTag, values: &[f64]) -> Self {
        Self::from_triplets(
            tag,
            values.len(),
            values
                .iter()
                .enumerate()
                .map(|(i, &v)| (i, i, Complex64::new(v, 0.0))),
        )
    }

    /// Dimension of a square operator (the row count otherwise).
    pub fn dim(&self) -> usize {
        self.rows
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn tag(&self) -> &BasisTag {
        &self.row_tag
    }

    pub fn col_tag(&self) -> &BasisTag {
        &self.col_tag
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols && self.row_tag == self.col_tag
    }

    pub fn entries(&self) -> &[(usize, usize, Complex64)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries
            .binary_search_by_key(&(row, col), |&(r, c, _)| (r, c))
            .map(|i| self.entries[i].2)
            .unwrap_or(ZERO)
    }

    /// True when every entry is real and lies on the diagonal.
    pub fn is_real_diagonal(&self) -> bool {
        self.is_square() && self.entries.iter().all(|&(r, c, v)| r == c && v.im == 0.0)
    }

    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::BasisMismatch);
        }
        let mut out = vec![ZERO; self.rows];
        for &(r, c, a) in &self.entries {
            out[r] += a * v[c];
        }
        Ok(out)
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.rows, self.cols);
        for &(r, c, v) in &self.entries {
            m[(r, c)] = v;
        }
        m
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape()
            || self.row_tag != other.row_tag
            || self.col_tag != other.col_tag
        {
            return Err(Error::BasisMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        Ok(Self::rectangular(
            self.row_tag.clone(),
            self.rows,
            self.col_tag.clone(),
            self.cols,
            self.entries.iter().chain(other.entries.iter()).copied(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::rectangular(
            self.row_tag.clone(),
            self.rows,
            self.col_tag.clone(),
            self.cols,
            self.entries.iter().map(|&(r, col, v)| (r, col, c * v)),
        )
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    /// Matrix product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows || self.col_tag != other.row_tag {
            return Err(Error::BasisMismatch);
        }
        let mut by_row: Vec<Vec<(usize, Complex64)>> = vec![Vec::new(); other.rows];
        for &(r, c, v) in &other.entries {
            by_row[r].push((c, v));
        }
        let mut triplets = Vec::new();
        for &(r, k, a) in &self.entries {
            for &(c, b) in &by_row[k] {
                triplets.push((r, c, a * b));
            }
        }
        Ok(Self::rectangular(
            self.row_tag.clone(),
            self.rows,
            other.col_tag.clone(),
            other.cols,
            triplets,
        ))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::rectangular(
            self.col_tag.clone(),
            self.cols,
            self.row_tag.clone(),
            self.rows,
            self.entries.iter().map(|&(r, c, v)| (c, r, v.conj())),
        )
    }

    /// `A B - B A`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    /// `A B + B A`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.multiply(other)?.add(&other.multiply(self)?)
    }

    /// Largest entry modulus; zero for the zero operator.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|e| e.2.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.2.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Entrywise check `A = A†` within `tol`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        self.entries
            .iter()
            .all(|&(r, c, v)| (v - self.get(c, r).conj()).norm() <= tol)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        match self.sub(other) {
            Ok(d) => d.max_abs() <= tol,
            Err(_) => false,
        }
    }
}

/// One factor of a fermionic operator string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Create(ModeId),
    Annihilate(ModeId),
}

/// Applies `factors` (rightmost first) to one occupation with JW signs.
fn apply_ladders(
    occ: OccupationState,
    factors: &[(usize, bool)],
) -> Option<(OccupationState, f64)> {
    let mut state = occ;
    let mut sign = 1.0;
    for &(pos, create) in factors.iter().rev() {
        if state.is_occupied(pos) == create {
            return None;
        }
        if state.occupied_before(pos) % 2 == 1 {
            sign = -sign;
        }
        state = state.flipped(pos);
    }
    Some((state, sign))
}

fn resolve(basis: &FockBasis, factors: &[Ladder]) -> Result<Vec<(usize, bool)>> {
    factors
        .iter()
        .map(|f| match *f {
            Ladder::Create(m) => basis.position(m).map(|p| (p, true)),
            Ladder::Annihilate(m) => basis.position(m).map(|p| (p, false)),
        })
        .collect()
}

/// Matrix of the product `factors[0] · factors[1] · …` on one basis.
///
/// Fails with `SectorMismatch` when the string maps a basis state outside a
/// charge-restricted basis.
pub fn fermion_string(basis: &FockBasis, factors: &[Ladder]) -> Result<SparseOperator> {
    let resolved = resolve(basis, factors)?;
    let mut triplets = Vec::new();
    for (col, &occ) in basis.states().iter().enumerate() {
        if let Some((out, sign)) = apply_ladders(occ, &resolved) {
            let row = basis.lookup(&out).ok_or(Error::SectorMismatch)?;
            triplets.push((row, col, Complex64::new(sign, 0.0)));
        }
    }
    Ok(SparseOperator::from_triplets(
        basis.tag(),
        basis.dim(),
        triplets,
    ))
}

/// `ĉ†` (money) or `d̂†` (debt) on an unrestricted basis.
pub fn creation(basis: &FockBasis, mode: ModeId) -> Result<SparseOperator> {
    basis.position(mode)?;
    if basis.sector().is_some() {
        return Err(Error::SectorMismatch);
    }
    fermion_string(basis, &[Ladder::Create(mode)])
}

pub fn annihilation(basis: &FockBasis, mode: ModeId) -> Result<SparseOperator> {
    creation(basis, mode).map(|c| c.adjoint())
}

fn charge_step(mode: ModeId) -> i64 {
    match mode.species {
        Species::Money => 1,
        Species::Debt => -1,
    }
}

/// Creation operator mapping the `source` sector basis into `target`.
///
/// Creating money raises the charge by one, creating debt lowers it by one;
/// `target` must be the matching sector of the same mode layout.
pub fn creation_between(
    source: &FockBasis,
    target: &FockBasis,
    mode: ModeId,
) -> Result<SparseOperator> {
    let pos = source.position(mode)?;
    if source.m_money() != target.m_money() || source.n_debt() != target.n_debt() {
        return Err(Error::BasisMismatch);
    }
    let expected = source.sector().map(|q| q + charge_step(mode));
    if expected != target.sector() {
        return Err(Error::SectorMismatch);
    }
    let mut triplets = Vec::new();
    for (col, &occ) in source.states().iter().enumerate() {
        if let Some((out, sign)) = apply_ladders(occ, &[(pos, true)]) {
            let row = target.lookup(&out).ok_or(Error::SectorMismatch)?;
            triplets.push((row, col, Complex64::new(sign, 0.0)));
        }
    }
    Ok(SparseOperator::rectangular(
        target.tag(),
        target.dim(),
        source.tag(),
        source.dim(),
        triplets,
    ))
}

/// Annihilation from `source` into `target`: the adjoint of
/// `creation_between(target, source, mode)`.
pub fn annihilation_between(
    source: &FockBasis,
    target: &FockBasis,
    mode: ModeId,
) -> Result<SparseOperator> {
    creation_between(target, source, mode).map(|c| c.adjoint())
}

/// Occupation number `n̂` of one mode.
pub fn number(basis: &FockBasis, mode: ModeId) -> Result<SparseOperator> {
    let pos = basis.position(mode)?;
    let diag: Vec<f64> = basis
        .states()
        .iter()
        .map(|s| if s.is_occupied(pos) { 1.0 } else { 0.0 })
        .collect();
    Ok(SparseOperator::diagonal(basis.tag(), &diag))
}

/// Total occupation of one species.
pub fn species_number(basis: &FockBasis, species: Species) -> SparseOperator {
    let diag: Vec<f64> = basis
        .states()
        .iter()
        .map(|s| match species {
            Species::Money => basis.n_money_of(s) as f64,
            Species::Debt => basis.n_debt_of(s) as f64,
        })
        .collect();
    SparseOperator::diagonal(basis.tag(), &diag)
}

/// `Q̂ = N̂_money - N̂_debt`.
pub fn charge_operator(basis: &FockBasis) -> SparseOperator {
    let diag: Vec<f64> = basis
        .states()
        .iter()
        .map(|s| basis.charge_of(s) as f64)
        .collect();
    SparseOperator::diagonal(basis.tag(), &diag)
}

/// `ĉ†_k d̂†_q`: issues one unit of money together with one unit of debt.
pub fn pair_creation(basis: &FockBasis, k: usize, q: usize) -> Result<SparseOperator> {
    fermion_string(
        basis,
        &[
            Ladder::Create(ModeId::money(k)),
            Ladder::Create(ModeId::debt(q)),
        ],
    )
}

/// Fermionic swap of the occupancies of modes `i` and `j`:
/// `1 - n_i - n_j + c†_i c_j + c†_j c_i`.
///
/// A single particle moving across an empty interval keeps sign +1; a doubly
/// occupied pair picks up -1. The result is an involution.
pub fn exchange(basis: &FockBasis, i: ModeId, j: ModeId) -> Result<SparseOperator> {
    basis.position(i)?;
    basis.position(j)?;
    if i == j {
        return Err(Error::SameMode(i.to_string()));
    }
    let id = SparseOperator::identity(basis.tag(), basis.dim());
    let hop_ij = fermion_string(basis, &[Ladder::Create(i), Ladder::Annihilate(j)])?;
    let hop_ji = fermion_string(basis, &[Ladder::Create(j), Ladder::Annihilate(i)])?;
    id.sub(&number(basis, i)?)?
        .sub(&number(basis, j)?)?
        .add(&hop_ij)?
        .add(&hop_ji)
}

/// Pauli-X on one qubit of a register.
pub fn sigma_x(register: &QubitRegister, target: &str) -> Result<SparseOperator> {
    let mask = register.mask(register.position(target)?);
    Ok(SparseOperator::from_triplets(
        register.tag(),
        register.dim(),
        (0..register.dim()).map(|i| (i ^ mask, i, ONE)),
    ))
}

/// Pauli-Z on one qubit (`↑` = +1).
pub fn sigma_z(register: &QubitRegister, target: &str) -> Result<SparseOperator> {
    let mask = register.mask(register.position(target)?);
    let diag: Vec<f64> = (0..register.dim())
        .map(|i| if i & mask == 0 { 1.0 } else { -1.0 })
        .collect();
    Ok(SparseOperator::diagonal(register.tag(), &diag))
}

/// Projector onto `↑` (`up = true`) or `↓` of one qubit.
pub fn qubit_projector(register: &QubitRegister, target: &str, up: bool) -> Result<SparseOperator> {
    let mask = register.mask(register.position(target)?);
    let diag: Vec<f64> = (0..register.dim())
        .map(|i| if (i & mask == 0) == up { 1.0 } else { 0.0 })
        .collect();
    Ok(SparseOperator::diagonal(register.tag(), &diag))
}
