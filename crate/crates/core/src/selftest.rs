//! Fast invariant battery behind `creditfock selftest`.

use std::f64::consts::LN_2;

use crate::error::Result;
use crate::fock::{FockBasis, ModeId, Species};
use crate::hamiltonian::{self, ModeEnergies, Perturbation};
use crate::observe::{self, Partition};
use crate::ops::{self, QubitRegister, SparseOperator};
use crate::scenario::{self, presets};
use crate::schedule::Schedule;
use crate::states;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn modes(b: &FockBasis) -> Vec<ModeId> {
    (0..b.m_money())
        .map(ModeId::money)
        .chain((0..b.n_debt()).map(ModeId::debt))
        .collect()
}

/// Largest entrywise violation of the canonical anticommutators.
fn car_error(m: usize, d: usize) -> Result<f64> {
    let b = FockBasis::new(m, d, None)?;
    let id = SparseOperator::identity(b.tag(), b.dim());
    let all = modes(&b);
    let mut worst: f64 = 0.0;
    for &p in &all {
        let cp = ops::creation(&b, p)?;
        let ap = ops::annihilation(&b, p)?;
        for &q in &all {
            let cq = ops::creation(&b, q)?;
            let aq = ops::annihilation(&b, q)?;
            let delta = if p == q {
                id.clone()
            } else {
                SparseOperator::zero(b.tag(), b.dim())
            };
            worst = worst
                .max(ap.anticommutator(&cq)?.sub(&delta)?.max_abs())
                .max(ap.anticommutator(&aq)?.max_abs())
                .max(cp.anticommutator(&cq)?.max_abs());
        }
    }
    Ok(worst)
}

fn involution_error(b: &FockBasis) -> Result<f64> {
    let id = SparseOperator::identity(b.tag(), b.dim());
    let all = modes(b);
    let mut worst: f64 = 0.0;
    for (i, &p) in all.iter().enumerate() {
        for &q in &all[i + 1..] {
            let x = ops::exchange(b, p, q)?;
            worst = worst.max(x.multiply(&x)?.sub(&id)?.max_abs());
        }
    }
    Ok(worst)
}

fn check(name: &'static str, outcome: Result<(bool, String)>) -> Check {
    match outcome {
        Ok((passed, detail)) => Check {
            name,
            passed,
            detail,
        },
        Err(e) => Check {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

pub fn run() -> Vec<Check> {
    let mut out = Vec::new();

    out.push(check(
        "anticommutation",
        (|| {
            let mut worst: f64 = 0.0;
            for n in 1..=4 {
                for m in 0..=n {
                    worst = worst.max(car_error(m, n - m)?);
                }
            }
            Ok((worst <= 1e-12, format!("max error {worst:e} for M+D <= 4")))
        })(),
    ));

    out.push(check(
        "exchange and sigma_x involutions",
        (|| {
            let b = FockBasis::new(2, 2, None)?;
            let ex = involution_error(&b)?;
            let reg = QubitRegister::new(&["a", "b"])?;
            let x = ops::sigma_x(&reg, "b")?;
            let sx = x
                .multiply(&x)?
                .sub(&SparseOperator::identity(reg.tag(), 4))?
                .max_abs();
            Ok((
                ex <= 1e-12 && sx <= 1e-12,
                format!("exchange {ex:e}, sigma_x {sx:e}"),
            ))
        })(),
    ));

    out.push(check(
        "number operator",
        (|| {
            let b = FockBasis::new(2, 1, None)?;
            let mut worst: f64 = 0.0;
            for p in modes(&b) {
                let n = ops::number(&b, p)?;
                let cc = ops::creation(&b, p)?.multiply(&ops::annihilation(&b, p)?)?;
                worst = worst.max(n.sub(&cc)?.max_abs());
            }
            let total = ops::species_number(&b, Species::Money)
                .add(&ops::species_number(&b, Species::Debt))?;
            let q = ops::charge_operator(&b);
            let ok = worst <= 1e-12 && total.is_hermitian(0.0) && q.is_hermitian(0.0);
            Ok((ok, format!("max error {worst:e}")))
        })(),
    ));

    out.push(check(
        "particle-hole symmetry",
        (|| {
            let b = FockBasis::new(2, 2, None)?;
            let h = hamiltonian::h_free(&b, &ModeEnergies::mirrored(&[0.4, 1.3]))?;
            let spec = crate::linalg::spectrum(&h)?;
            let worst = spec
                .iter()
                .zip(spec.iter().rev())
                .map(|(a, b)| (a + b).abs())
                .fold(0.0, f64::max);
            Ok((worst <= 1e-10, format!("max |E_i + E_(n-1-i)| = {worst:e}")))
        })(),
    ));

    out.push(check(
        "pair Rabi oscillation",
        (|| {
            let cfg = presets::load("qe_pair_rabi")
                .map_err(|e| crate::Error::UnknownLabel(e.to_string()))?;
            let res = scenario::run_scenario(&cfg)?;
            let n = res.series.column("N_money").unwrap_or(&[]);
            let worst = res
                .series
                .times
                .iter()
                .zip(n)
                .map(|(t, v)| (v - t.sin().powi(2)).abs())
                .fold(0.0, f64::max);
            Ok((
                worst <= 1e-6,
                format!("max |N_money - sin^2 t| = {worst:e}"),
            ))
        })(),
    ));

    out.push(check(
        "Bell entanglement",
        (|| {
            let psi = states::bell_qe();
            let reg = psi
                .register()
                .cloned()
                .ok_or(crate::Error::WrongBasisKind)?;
            let part = Partition::qubits(&reg, &[states::VALUATION_QUBITS[0]])?;
            let s = observe::entropy(&observe::reduced_density(&psi, &part)?)?;
            let mi = observe::mutual_information(&psi, &part)?;
            let gap = observe::separability_gap(&psi, &part)?;
            let ok = (s - LN_2).abs() < 1e-9
                && (mi - 2.0 * LN_2).abs() < 1e-9
                && (gap - 3f64.sqrt() / 2.0).abs() < 1e-9;
            Ok((ok, format!("S = {s:.12}, I = {mi:.12}, gap = {gap:.12}")))
        })(),
    ));

    out.push(check(
        "perturbation vanishes at t = 0",
        (|| {
            let b = FockBasis::new(2, 2, Some(0))?;
            let p = Perturbation::broadcast(
                &b,
                Schedule::LinearRamp { slope: 0.3 },
                Schedule::Exponential {
                    scale: 0.1,
                    rate: 0.5,
                },
            );
            let v = hamiltonian::v_perturb(&b, &p, 0.0)?;
            Ok((v.is_zero(), format!("{} nonzero entries", v.nnz())))
        })(),
    ));

    out.push(check(
        "presets conserve charge",
        (|| {
            let mut worst: f64 = 0.0;
            for cfg in presets::all() {
                let res = scenario::run_scenario(&cfg)?;
                worst = worst
                    .max(res.metadata.charge_drift.unwrap_or(0.0))
                    .max(res.metadata.norm_drift);
            }
            Ok((worst < 1e-9, format!("max charge/norm drift {worst:e}")))
        })(),
    ));

    out
}
