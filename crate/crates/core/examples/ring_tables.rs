// Builds M2(GF(2)) from its 2x2 bit-matrix representation, prints the
// multiplication table and splits the ring into units and zero-divisors.

use ringline::ring::{build_m2f2, build_small_rings, units, validate_ring, zero_divisors};

fn main() -> ringline::Result<()> {
    let r = build_m2f2();
    print!("   *|");
    for y in r.elements() {
        print!("{:>3}", y.index());
    }
    println!();
    for x in r.elements() {
        print!("{:>4}|", x.index());
        for y in r.elements() {
            print!("{:>3}", r.mul(x, y).index());
        }
        println!();
    }
    let idx = |v: Vec<ringline::RingElement>| {
        v.iter()
            .map(|e| e.index().to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("units:         {}", idx(units(&r)));
    println!("zero-divisors: {}", idx(zero_divisors(&r)));
    println!("commutative: {}", r.is_commutative());

    let small = build_small_rings();
    for s in [&small.gf2, &small.gf4, &small.gf2xgf2, &small.gf2_dual] {
        let report = validate_ring(s);
        println!(
            "{:>9}: order {}, {} units, valid {}",
            s.name(),
            s.order(),
            units(s).len(),
            report.is_valid()
        );
    }
    Ok(())
}
