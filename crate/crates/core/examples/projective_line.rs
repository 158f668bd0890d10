// Enumerates the projective line over each small ring and prints point
// counts and how many pairs of points are neighbors.

use ringline::projline::{enumerate_line, format_pair};
use ringline::ring::ring_by_name;
use ringline::Relation;

fn main() -> ringline::Result<()> {
    for name in ringline::ring::RING_NAMES {
        let line = enumerate_line(&ring_by_name(name)?);
        let neighbors = line.relation_matrix().pair_count(Relation::Neighbor);
        println!(
            "P1({name}): {} points, {neighbors} neighbor pairs",
            line.len()
        );
    }

    let line = enumerate_line(&ring_by_name("m2f2")?);
    println!("first five points of P1(m2f2):");
    for p in &line.points()[..5] {
        let orbit: Vec<String> = p.members().iter().map(|&q| format_pair(q)).collect();
        println!("  {}: {}", format_pair(p.canonical()), orbit.join(" "));
    }
    Ok(())
}
