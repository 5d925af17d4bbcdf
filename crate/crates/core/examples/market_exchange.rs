// An asset moving along a chain of money modes by exchange.

use creditfock::evolve::{evolve_scheduled, TimeGrid};
use creditfock::fock::{FockBasis, ModeId, OccupationState};
use creditfock::observe::{expectation_real, Observable};
use creditfock::ops;
use creditfock::states;

/// Occupations of the three modes at the end, and the largest drift of
/// the total money number.
pub fn run_example() -> creditfock::Result<([f64; 3], f64)> {
    let b = FockBasis::new(3, 0, None)?;
    let m = |k| ModeId::money(k);
    let h = ops::exchange(&b, m(0), m(1))?.add(&ops::exchange(&b, m(1), m(2))?)?;
    let psi0 = states::occupation(&b, &OccupationState::parse("100").unwrap())?;
    let total = (
        "N".to_string(),
        Observable::state(creditfock::observe::n_money),
    );
    let grid = TimeGrid::new(0.0, 2.0, 400)?;
    let report = evolve_scheduled(&h, None, &psi0, &grid, &[total])?;
    let mut occ = [0.0; 3];
    for (k, slot) in occ.iter_mut().enumerate() {
        *slot = expectation_real(&ops::number(&b, m(k))?, &report.final_state)?;
    }
    Ok((occ, report.series.unwrap().drift("N").unwrap()))
}

fn main() -> creditfock::Result<()> {
    let (occ, drift) = run_example()?;
    println!("occupations at t = 2: {occ:?}");
    println!("money number drift: {drift:.1e}");
    Ok(())
}
