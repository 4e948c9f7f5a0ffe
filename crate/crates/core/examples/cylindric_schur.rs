//! Monomial expansions of cylindric Schur functions.

use cylschur::{cylindric_schur, schur_to_monomial, CylProfile, Partition, SkewShape};

fn main() -> cylschur::Result<()> {
    let shape = SkewShape::new("3,2".parse()?, "1".parse()?)?;
    for level in 1..=3 {
        let p = CylProfile::new(2, level)?;
        println!("s^cyl{shape} at {p}:");
        for (alpha, c) in cylindric_schur(p, &shape)?.iter() {
            println!("  {c:>3} m{alpha}");
        }
    }

    let lam: Partition = "2,2".parse()?;
    let classical = schur_to_monomial(&lam);
    let cyl = cylindric_schur(CylProfile::new(2, 2)?, &SkewShape::straight(lam.clone()))?;
    println!("s{lam} equals its cylindric version at (2,2): {}", classical == cyl);
    Ok(())
}
