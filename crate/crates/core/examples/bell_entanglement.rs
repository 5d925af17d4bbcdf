// Entanglement measures of the money/bond valuation Bell state versus a
// bare occupation pair.

use creditfock::fock::FockBasis;
use creditfock::observe::{self, Partition};
use creditfock::states::{self, VALUATION_QUBITS};

/// `(entropy, mutual information, separability gap)` for the Bell state
/// and for the bare pair `ĉ†d̂†|vac⟩`.
pub fn run_example() -> creditfock::Result<[(f64, f64, f64); 2]> {
    let bell = states::bell_qe();
    let reg = bell.register().expect("qubit state").clone();
    let part = Partition::qubits(&reg, &[VALUATION_QUBITS[0]])?;
    let measures =
        |psi: &creditfock::StateVector, part: &Partition| -> creditfock::Result<(f64, f64, f64)> {
            Ok((
                observe::entropy(&observe::reduced_density(psi, part)?)?,
                observe::mutual_information(psi, part)?,
                observe::separability_gap(psi, part)?,
            ))
        };
    let b = FockBasis::new(1, 1, None)?;
    let pair = states::qe_pair(&b, 0, 0)?;
    Ok([
        measures(&bell, &part)?,
        measures(&pair, &Partition::money_debt(&b)?)?,
    ])
}

fn main() -> creditfock::Result<()> {
    let [bell, pair] = run_example()?;
    println!(
        "bell_qe:  S = {:.6}  I = {:.6}  gap = {:.6}",
        bell.0, bell.1, bell.2
    );
    println!(
        "qe_pair:  S = {:.6}  I = {:.6}  gap = {:.6}",
        pair.0, pair.1, pair.2
    );
    Ok(())
}
