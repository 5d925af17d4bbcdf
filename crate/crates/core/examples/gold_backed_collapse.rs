// Repeated seeded measurement of a money/gold superposition.

use creditfock::states::{self, SuperpositionSpec, ASSET_QUBIT};

/// Frequency of the `Money` outcome over `trials` seeds.
pub fn run_example(trials: u64) -> creditfock::Result<f64> {
    let psi = states::asset_superposition(SuperpositionSpec::real(0.3f64.sqrt(), 0.7f64.sqrt()))?;
    let mut money = 0u64;
    for seed in 0..trials {
        let (up, collapsed) = states::measure_qubit(&psi, ASSET_QUBIT, seed)?;
        // a second look always agrees with the first
        let (again, _) = states::measure_qubit(&collapsed, ASSET_QUBIT, seed + trials)?;
        assert_eq!(up, again);
        money += u64::from(up);
    }
    Ok(money as f64 / trials as f64)
}

fn main() -> creditfock::Result<()> {
    let freq = run_example(10_000)?;
    println!("Money outcome frequency: {freq:.4} (expected 0.3)");
    Ok(())
}
