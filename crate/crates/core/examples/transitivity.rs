// GL(2, M2(GF(2))) acts transitively on triples of pairwise distant points.
// Samples a few triples and prints a matrix carrying the standard triple there.

use ringline::projline::{
    enumerate_line, format_pair, gl2_transitivity_witness, sample_distant_triples,
};
use ringline::ring::build_m2f2;

fn main() -> ringline::Result<()> {
    let line = enumerate_line(&build_m2f2());
    println!("|GL(2,R)| = {}", line.general_linear_group().len());
    let std = line.standard_triple();
    for t in sample_distant_triples(&line, 5, 7) {
        let g = gl2_transitivity_witness(&line, std, t)?;
        let pts: Vec<String> = t
            .iter()
            .map(|&p| format_pair(line.point(p).canonical()))
            .collect();
        println!(
            "{} <- [[{}, {}], [{}, {}]]",
            pts.join(" "),
            g.a.index(),
            g.b.index(),
            g.c.index(),
            g.d.index()
        );
    }
    Ok(())
}
