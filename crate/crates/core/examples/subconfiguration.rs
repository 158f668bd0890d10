// Picks U = (1,0), V = (0,1) on the line over M2(GF(2)) and extracts the
// fifteen points that are distant from both or neighbor to both.

use ringline::projline::{enumerate_line, format_pair, simultaneous_subconfig};
use ringline::relation::c_labels;
use ringline::ring::build_m2f2;

fn main() -> ringline::Result<()> {
    let line = enumerate_line(&build_m2f2());
    let u = line.point_of_labels(1, 0)?;
    let v = line.point_of_labels(0, 1)?;
    let sub = simultaneous_subconfig(&line, u, v)?;

    let labels = c_labels(15);
    for (label, &p) in labels.iter().zip(&sub.points()) {
        let family = if sub.distant.contains(&p) {
            "distant"
        } else {
            "neighbor"
        };
        println!(
            "{label:>4} {:<8} {family}",
            format_pair(line.point(p).canonical())
        );
    }
    print!("{}", sub.relation(&line).to_csv(&labels));
    Ok(())
}
