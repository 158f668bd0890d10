// Multiplies a few two-qubit Pauli operators with exact phases and prints the
// commutation table of the fifteen operators attached to C1..C15.

use ringline::pauli::{commutation_table, standard_labeling};
use ringline::PhasedPauli;

fn main() -> ringline::Result<()> {
    for (a, b) in [("+X1", "+Z1"), ("+XY", "+YX"), ("+ZX", "+ZX")] {
        let a: PhasedPauli = a.parse()?;
        let b: PhasedPauli = b.parse()?;
        println!("({a}) ({b}) = {}", a * b);
    }

    let labeling = standard_labeling();
    let table = commutation_table(&labeling);
    for (i, op) in labeling.ops().iter().enumerate() {
        println!("C{:<3} {op}  {}", i + 1, table.row_string(i));
    }
    Ok(())
}
