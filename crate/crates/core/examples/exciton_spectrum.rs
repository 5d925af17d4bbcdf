// Bound-pair levels in a harmonic confinement and a finite well.

use creditfock::exciton1d::{solve_eigen, GridSpec, PotentialSpec};

pub fn run_example() -> creditfock::Result<(Vec<f64>, Vec<f64>)> {
    let grid = GridSpec::new(-10.0, 10.0, 2000)?;
    let harmonic = solve_eigen(&grid, &PotentialSpec::Harmonic { omega: 1.0 }, 1.0, 6)?;
    let well = PotentialSpec::SquareWell {
        depth: 5.0,
        width: 2.0,
    };
    let bound = solve_eigen(&grid, &well, 1.0, 3)?;
    Ok((harmonic.energies, bound.energies))
}

fn main() -> creditfock::Result<()> {
    let (harmonic, well) = run_example()?;
    for (n, e) in harmonic.iter().enumerate() {
        println!("harmonic E_{n} = {e:.6}");
    }
    for (n, e) in well.iter().enumerate() {
        println!("well     E_{n} = {e:.6}");
    }
    Ok(())
}
