// A bound loan pair oscillating under pair binding, then repaid.

use creditfock::scenario::{self, presets, run::EventRecord};

/// Final exciton count, charge drift and the repayment record.
pub fn run_example() -> creditfock::Result<(f64, f64, EventRecord)> {
    let config = presets::load("microloan").expect("shipped preset");
    let result = scenario::run_scenario(&config)?;
    let pairs = *result
        .series
        .column("exciton_count")
        .expect("requested")
        .last()
        .unwrap();
    let drift = result.series.drift("charge").expect("requested");
    Ok((pairs, drift, result.events[0].clone()))
}

fn main() -> creditfock::Result<()> {
    let (pairs, drift, event) = run_example()?;
    println!("t = {}: {}", event.t, event.outcome);
    println!("pairs at t = 10: {pairs:.6}, charge drift {drift:.1e}");
    Ok(())
}
