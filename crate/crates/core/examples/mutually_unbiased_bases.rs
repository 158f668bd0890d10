// Each spread of GQ(2,2) partitions the fifteen operators into five commuting
// triples; their joint eigenbases are mutually unbiased.

use ringline::correspondence::{spread_operators, TwoQubitModel};
use ringline::pauli::mub_spread_report;
use ringline::quadrangle::enumerate_spreads;

fn main() -> ringline::Result<()> {
    let model = TwoQubitModel::build()?;
    for spread in enumerate_spreads(&model.gq) {
        let ops = spread_operators(&model, &spread);
        let report = mub_spread_report(&ops)?;
        let triples: Vec<String> = ops
            .iter()
            .map(|t| format!("{{{} {} {}}}", t[0], t[1], t[2]))
            .collect();
        println!(
            "{}: {} pairs, unbiased {}",
            triples.join(" "),
            report.pairs_checked,
            report.passed()
        );
    }
    Ok(())
}
