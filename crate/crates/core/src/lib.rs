//! Fermionic Fock-space simulation of money-debt pair dynamics.
//!
//! Money and debt are modeled as particle and hole excitations of an
//! economic vacuum. Credit issuance creates a pair `ĉ†d̂†`, repayment
//! recombines it, and profit and interest schedules perturb the two species
//! asymmetrically over time.
//!
//! * [`fock`]: occupation basis and global mode order
//! * [`ops`]: ladder, number, pair, exchange and Pauli operators
//! * [`hamiltonian`] and [`schedule`]: model Hamiltonians and time dependence
//! * [`states`]: canonical states and seeded measurement
//! * [`evolve`]: unitary time evolution
//! * [`observe`]: expectations, entanglement, charge, pair counts
//! * [`exciton1d`]: 1-D bound-pair eigenproblem on a grid
//! * [`scenario`]: declarative runs, presets and exports

pub mod error;
pub mod evolve;
pub mod exciton1d;
pub mod fock;
pub mod hamiltonian;
pub mod linalg;
pub mod observe;
pub mod ops;
pub mod scenario;
pub mod schedule;
pub mod selftest;
pub mod states;

pub use error::{Error, Result};
pub use fock::{FockBasis, ModeId, OccupationState, Species};
pub use ops::{QubitRegister, SparseOperator};
pub use states::StateVector;
