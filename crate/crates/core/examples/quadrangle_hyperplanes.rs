// Builds GQ(2,2) from the neighbor graph of the fifteen points and lists its
// ovoids, perp-sets, grids and spreads.

use ringline::correspondence::TwoQubitModel;
use ringline::quadrangle::{enumerate_hyperplanes, enumerate_spreads, validate_gq_axioms};
use ringline::HyperplaneKind;

fn main() -> ringline::Result<()> {
    let model = TwoQubitModel::build()?;
    let gq = &model.gq;
    println!("axioms hold: {}", validate_gq_axioms(gq).is_valid());

    let catalog = enumerate_hyperplanes(gq)?;
    for h in catalog
        .ovoids
        .iter()
        .chain(&catalog.perp_sets)
        .chain(&catalog.grids)
    {
        let kind = match h.kind {
            HyperplaneKind::Ovoid => "ovoid".to_string(),
            HyperplaneKind::PerpSet { center } => format!("perp({})", gq.label(center)),
            HyperplaneKind::Grid => "grid".to_string(),
        };
        println!("{kind:<10} {}", gq.names(&h.points).join(" "));
    }
    let spreads = enumerate_spreads(gq);
    println!("{} spreads", spreads.len());
    Ok(())
}
