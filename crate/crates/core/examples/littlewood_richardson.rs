//! Littlewood–Richardson coefficients and Schur products.

use cylschur::schur::skew_schur;
use cylschur::{h_to_schur, lr_coefficient, schur_product, Partition, SkewShape, Weight};

fn main() -> cylschur::Result<()> {
    let lam: Partition = "4,3,2,1".parse()?;
    let mu: Partition = "3,2,1".parse()?;
    let nu: Partition = "2,1,1".parse()?;
    println!("c^{lam}_{mu},{nu} = {}", lr_coefficient(&lam, &mu, &nu));

    let a: Partition = "2,1".parse()?;
    println!("s{a} · s{a}:");
    for (kappa, c) in schur_product(&a, &a, 6).iter() {
        println!("  {c} s{kappa}");
    }

    let shape = SkewShape::new("3,2,1".parse()?, "2,1".parse()?)?;
    println!("s{shape} = {}", render(skew_schur(&shape).iter()));
    println!("h(2,1) = {}", render(h_to_schur(&"2,1".parse::<Weight>()?, 3).iter()));
    Ok(())
}

fn render<'a>(terms: impl Iterator<Item = (&'a Partition, &'a num_bigint::BigInt)>) -> String {
    terms.map(|(p, c)| format!("{c}·s{p}")).collect::<Vec<_>>().join(" + ")
}
