// Parse an inline scenario, run it and export CSV and JSON lines.

use creditfock::scenario::{self, OutputFormat};

const CONFIG: &str = r#"
schema_version = 1
name = "pair_with_interest"
seed = 9
observables = ["N_money", "charge", "energy"]
outputs = ["csv", "jsonl"]

[basis]
money = 1
debt = 1

[energies]
money = [0.5]
particle_hole_symmetric = true

[[terms]]
free = {}

[[terms]]
qe = { amplitude = 0.8, pairs = [[0, 0]] }

[[terms]]
perturb = { profit = { kind = "linear_ramp", slope = 0.05 }, interest = { kind = "constant", value = 0.0 } }

[initial_state]
kind = "vacuum"

[grid]
t_end = 4.0
n_steps = 4
"#;

pub fn run_example() -> creditfock::Result<(String, String)> {
    let config = scenario::parse_scenario(CONFIG).expect("valid config");
    let result = scenario::run_scenario(&config)?;
    Ok((
        scenario::export_series(&result, OutputFormat::Csv),
        scenario::export_series(&result, OutputFormat::Jsonl),
    ))
}

fn main() -> creditfock::Result<()> {
    let (csv, jsonl) = run_example()?;
    print!("{csv}");
    println!();
    print!("{jsonl}");
    Ok(())
}
