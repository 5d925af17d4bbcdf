// Pair-state energy of the informal-lending model across poor-rich gaps.

use creditfock::scenario::presets;

pub fn run_example() -> creditfock::Result<Vec<(f64, f64)>> {
    let config = presets::load("informal_lending").expect("shipped preset");
    presets::delta_pr_sweep(&config, &[0.0, 0.5, 1.0, 2.0, 4.0])
}

fn main() -> creditfock::Result<()> {
    println!("delta_pr,pair_energy");
    for (d, e) in run_example()? {
        println!("{d},{e}");
    }
    Ok(())
}
