// Pair creation from the vacuum: `⟨N_money⟩(t) = sin²(g t)`.

use creditfock::scenario::{self, presets};

/// Largest deviation of the recorded money number from `sin²(t)`.
pub fn run_example() -> creditfock::Result<f64> {
    let config = presets::load("qe_pair_rabi").expect("shipped preset");
    let result = scenario::run_scenario(&config)?;
    let n = result.series.column("N_money").expect("requested");
    Ok(result
        .series
        .times
        .iter()
        .zip(n)
        .map(|(t, v)| (v - t.sin().powi(2)).abs())
        .fold(0.0, f64::max))
}

fn main() -> creditfock::Result<()> {
    let err = run_example()?;
    println!("max |N_money(t) - sin^2 t| = {err:.3e}");
    Ok(())
}
