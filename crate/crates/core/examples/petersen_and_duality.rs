// Removes an ovoid and checks the remaining ten points form a Petersen graph;
// then finds an isomorphism between the quadrangle and its dual.

use ringline::correspondence::TwoQubitModel;
use ringline::quadrangle::{
    complement_graph_of_ovoid, dual, enumerate_ovoids, find_incidence_isomorphism,
    petersen_isomorphism,
};

fn main() -> ringline::Result<()> {
    let model = TwoQubitModel::build()?;
    let gq = &model.gq;
    for o in enumerate_ovoids(gq) {
        let (g, verts) = complement_graph_of_ovoid(gq, &o.points);
        let found = petersen_isomorphism(&g).is_some();
        println!(
            "without {}: {} vertices, Petersen {found}",
            gq.names(&o.points).join(","),
            verts.len()
        );
    }
    match find_incidence_isomorphism(gq, &dual(gq)) {
        Some(map) => {
            let pairs: Vec<String> = map
                .iter()
                .enumerate()
                .map(|(p, l)| format!("C{}->L{}", p + 1, l + 1))
                .collect();
            println!("self-dual: {}", pairs.join(" "));
        }
        None => println!("no duality found"),
    }
    Ok(())
}
