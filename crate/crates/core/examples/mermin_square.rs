// The nine operators neighbor to both U and V, laid out in rows of three,
// form a Mermin square: every row and column commutes, and the six products
// multiply to -1.

use ringline::pauli::{mermin_square_check, standard_labeling};

fn main() -> ringline::Result<()> {
    let l = standard_labeling();
    let grid = [[6, 7, 8], [9, 10, 11], [12, 13, 14]].map(|row| row.map(|c| l.get(c)));
    let report = mermin_square_check(&grid)?;
    for (row, sign) in grid.iter().zip(report.row_signs) {
        println!("{} {} {}   {sign}", row[0], row[1], row[2]);
    }
    println!("{}", report.col_signs.map(|s| s.to_string()).join(" "));
    println!("no noncontextual assignment: {}", report.magic);
    Ok(())
}
