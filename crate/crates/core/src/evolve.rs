//! Unitary Schrödinger evolution (ħ = 1) under static and scheduled
//! Hamiltonians.
//!
//! Scheduled evolution uses the exponential midpoint rule
//! `ψ_{n+1} = exp(−i H(t_n + dt/2) dt) ψ_n`, which is unitary for Hermitian
//! `H` and second order in `dt`. States are never renormalized while
//! stepping; the drift is reported instead.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::HermitianEigen;
use crate::observe::{Observable, TimeSeries};
use crate::ops::SparseOperator;
use crate::states::StateVector;

/// Per-step norm change that aborts a run.
pub const STEP_DRIFT_LIMIT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t_start: f64,
    t_end: f64,
    n_steps: usize,
}

impl TimeGrid {
    pub fn new(t_start: f64, t_end: f64, n_steps: usize) -> Result<Self> {
        if !(t_start.is_finite() && t_end.is_finite()) {
            return Err(Error::InvalidGrid("bounds must be finite".into()));
        }
        if t_end <= t_start {
            return Err(Error::InvalidGrid("t_end must exceed t_start".into()));
        }
        if n_steps == 0 {
            return Err(Error::InvalidGrid("n_steps must be at least 1".into()));
        }
        Ok(TimeGrid {
            t_start,
            t_end,
            n_steps,
        })
    }

    pub fn t_start(&self) -> f64 {
        self.t_start
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    pub fn dt(&self) -> f64 {
        (self.t_end - self.t_start) / self.n_steps as f64
    }

    /// Time of grid point `i`; the last point is exactly `t_end`.
    pub fn time(&self, i: usize) -> f64 {
        if i == self.n_steps {
            self.t_end
        } else {
            self.t_start + i as f64 * self.dt()
        }
    }

    /// Grid index of `t`, if `t` lies on the grid within `tol · dt`.
    pub fn index_of(&self, t: f64, tol: f64) -> Option<usize> {
        let x = (t - self.t_start) / self.dt();
        let i = x.round();
        if (x - i).abs() <= tol && i >= 0.0 && i <= self.n_steps as f64 {
            Some(i as usize)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone)]
pub struct EvolutionReport {
    pub final_state: StateVector,
    /// `max |‖ψ(t_n)‖ − 1|` over all grid points.
    pub norm_drift: f64,
    /// Observables sampled at every grid point, when any were requested.
    pub series: Option<TimeSeries>,
}

fn check_operator(h: &SparseOperator, psi: &StateVector) -> Result<()> {
    if !h.is_square() || *h.tag() != psi.tag() {
        return Err(Error::BasisMismatch);
    }
    Ok(())
}

fn matvec(u: &nalgebra::DMatrix<Complex64>, psi: &StateVector) -> Vec<Complex64> {
    let v = DVector::from_column_slice(psi.amplitudes());
    (u * v).iter().copied().collect()
}

/// `exp(−iHt) ψ0` by dense eigendecomposition.
pub fn evolve_static(h: &SparseOperator, psi0: &StateVector, t: f64) -> Result<StateVector> {
    check_operator(h, psi0)?;
    let eig = HermitianEigen::new(h)?;
    if t == 0.0 {
        return Ok(psi0.clone());
    }
    let mut out = psi0.clone();
    out.replace_amplitudes(matvec(&eig.propagator(t), psi0));
    Ok(out)
}

/// Builds the time-dependent part `V(t)` of a Hamiltonian.
pub type PerturbationFn<'a> = dyn Fn(f64) -> Result<SparseOperator> + 'a;

/// Midpoint-exponential evolution of `H(t) = static + perturbation(t)`.
pub fn evolve_scheduled(
    static_h: &SparseOperator,
    perturbation: Option<&PerturbationFn<'_>>,
    psi0: &StateVector,
    grid: &TimeGrid,
    observables: &[(String, Observable)],
) -> Result<EvolutionReport> {
    evolve_with_hook(
        static_h,
        perturbation,
        psi0,
        grid,
        observables,
        &mut |_, _, _| Ok(()),
    )
}

/// Like [`evolve_scheduled`], calling `hook(step, t, state)` at every grid
/// point before observables are sampled there. Hooks may modify the state
/// (instantaneous events such as repayment or measurement).
pub fn evolve_with_hook(
    static_h: &SparseOperator,
    perturbation: Option<&PerturbationFn<'_>>,
    psi0: &StateVector,
    grid: &TimeGrid,
    observables: &[(String, Observable)],
    hook: &mut dyn FnMut(usize, f64, &mut StateVector) -> Result<()>,
) -> Result<EvolutionReport> {
    check_operator(static_h, psi0)?;
    let dt = grid.dt();
    // a static Hamiltonian needs one propagator for the whole run
    let fixed = match perturbation {
        None => Some(HermitianEigen::new(static_h)?.propagator(dt)),
        Some(_) => None,
    };
    let mut series = (!observables.is_empty())
        .then(|| TimeSeries::new(observables.iter().map(|o| o.0.clone()).collect()));
    let mut psi = psi0.clone();
    let mut norm_drift: f64 = 0.0;

    for step in 0..=grid.n_steps() {
        let t = grid.time(step);
        hook(step, t, &mut psi)?;
        let norm = psi.norm();
        norm_drift = norm_drift.max((norm - 1.0).abs());
        if let Some(series) = series.as_mut() {
            let row = observables
                .iter()
                .map(|(_, o)| o.evaluate(t, &psi))
                .collect::<Result<Vec<_>>>()?;
            series.push_row(t, row);
        }
        if step == grid.n_steps() {
            break;
        }
        let next = match (&fixed, perturbation) {
            (Some(u), _) => matvec(u, &psi),
            (None, Some(pert)) => {
                let v = pert(t + 0.5 * dt)?;
                let h = static_h.add(&v)?;
                matvec(&HermitianEigen::new(&h)?.propagator(dt), &psi)
            }
            (None, None) => unreachable!(),
        };
        psi.replace_amplitudes(next);
        let step_drift = (psi.norm() - norm).abs();
        if step_drift > STEP_DRIFT_LIMIT {
            return Err(Error::StepNormDrift(step_drift));
        }
    }
    Ok(EvolutionReport {
        final_state: psi,
        norm_drift,
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{FockBasis, ModeId, OccupationState};
    use crate::hamiltonian::{h_free, h_qe, v_perturb, ModeEnergies, Perturbation};
    use crate::observe::{self, expectation_real};
    use crate::ops;
    use crate::schedule::Schedule;
    use crate::states;
    use std::f64::consts::PI;

    fn b11() -> FockBasis {
        FockBasis::new(1, 1, None).unwrap()
    }

    #[test]
    fn grid_validation_and_times() {
        assert!(TimeGrid::new(1.0, 1.0, 3).is_err());
        assert!(TimeGrid::new(0.0, 1.0, 0).is_err());
        let g = TimeGrid::new(0.0, 2.0, 4).unwrap();
        assert_eq!(g.dt(), 0.5);
        assert_eq!(g.time(4), 2.0);
        assert_eq!(g.index_of(1.5, 1e-9), Some(3));
        assert_eq!(g.index_of(1.2, 1e-9), None);
    }

    #[test]
    fn single_mode_phase() {
        let b = FockBasis::new(1, 0, None).unwrap();
        let h = h_free(&b, &ModeEnergies::new(vec![1.0], vec![])).unwrap();
        let occ = states::occupation(&b, &OccupationState::parse("1").unwrap()).unwrap();
        let out = evolve_static(&h, &occ, PI).unwrap();
        assert!((out.amplitude(1) - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert_eq!(evolve_static(&h, &occ, 0.0).unwrap(), occ);
    }

    #[test]
    fn qe_rabi_half_period() {
        let b = b11();
        let h = h_qe(&b, 1.0, &[(0, 0)]).unwrap();
        let out = evolve_static(&h, &states::vacuum(&b).unwrap(), PI / 2.0).unwrap();
        let n = ops::number(&b, ModeId::money(0)).unwrap();
        assert!((expectation_real(&n, &out).unwrap() - 1.0).abs() < 1e-12);
        assert!((out.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian_and_mismatched() {
        let b = b11();
        let p = ops::pair_creation(&b, 0, 0).unwrap();
        let vac = states::vacuum(&b).unwrap();
        assert_eq!(
            evolve_static(&p, &vac, 1.0).unwrap_err(),
            Error::NonHermitian
        );
        let other = states::vacuum(&FockBasis::new(2, 0, None).unwrap()).unwrap();
        let h = h_qe(&b, 1.0, &[(0, 0)]).unwrap();
        assert_eq!(
            evolve_static(&h, &other, 1.0).unwrap_err(),
            Error::BasisMismatch
        );
    }

    #[test]
    fn zero_perturbation_matches_static() {
        let b = FockBasis::new(2, 2, Some(0)).unwrap();
        let e = ModeEnergies::new(vec![0.3, 1.1], vec![-0.5, 0.2]);
        let h = h_free(&b, &e)
            .unwrap()
            .add(&h_qe(&b, 0.8, &[(0, 0), (1, 1)]).unwrap())
            .unwrap();
        let psi0 = states::vacuum(&b).unwrap();
        let grid = TimeGrid::new(0.0, 3.0, 300).unwrap();
        let zero = Perturbation::none(&b);
        let pert = |t: f64| v_perturb(&b, &zero, t);
        let stepped = evolve_scheduled(&h, Some(&pert), &psi0, &grid, &[]).unwrap();
        let exact = evolve_static(&h, &psi0, 3.0).unwrap();
        let diff: f64 = stepped
            .final_state
            .amplitudes()
            .iter()
            .zip(exact.amplitudes())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(diff < 1e-9);
        assert!(stepped.norm_drift < 1e-9);
    }

    #[test]
    fn linear_schedule_phase_on_pair() {
        // ∫_0^2 (0.1 t + 0.2 t) dt = 0.15 · 4 = 0.6
        let b = b11();
        let pert = Perturbation::broadcast(
            &b,
            Schedule::LinearRamp { slope: 0.1 },
            Schedule::LinearRamp { slope: 0.2 },
        );
        let h0 = SparseOperator::zero(b.tag(), b.dim());
        let psi0 = states::qe_pair(&b, 0, 0).unwrap();
        let grid = TimeGrid::new(0.0, 2.0, 10_000).unwrap();
        let f = |t: f64| v_perturb(&b, &pert, t);
        let q = ("charge".to_string(), Observable::state(observe::charge));
        let report = evolve_scheduled(&h0, Some(&f), &psi0, &grid, &[q]).unwrap();
        let amp = report.final_state.amplitude(3);
        let expected = Complex64::from_polar(1.0, -0.6);
        assert!((amp - expected).norm() < 1e-6);
        let series = report.series.unwrap();
        assert!(series.drift("charge").unwrap() < 1e-12);
        assert_eq!(series.len(), 10_001);
    }

    #[test]
    fn hook_sees_every_grid_point() {
        let b = b11();
        let h = h_qe(&b, 1.0, &[(0, 0)]).unwrap();
        let grid = TimeGrid::new(0.0, 1.0, 5).unwrap();
        let mut seen = Vec::new();
        evolve_with_hook(
            &h,
            None,
            &states::vacuum(&b).unwrap(),
            &grid,
            &[],
            &mut |i, t, _| {
                seen.push((i, t));
                Ok(())
            },
        )
        .unwrap();
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[5], (5, 1.0));
    }
}
