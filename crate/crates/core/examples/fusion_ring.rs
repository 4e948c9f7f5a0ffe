//! The fusion ring: quotients, reduction and structure constants.

use cylschur::{degree_quotient, fusion_coefficient, fusion_product, ideal_generators, reduce_schur, CylProfile};

fn main() -> cylschur::Result<()> {
    let p = CylProfile::new(3, 2)?;
    for n in 0..=6 {
        let q = degree_quotient(p, n);
        println!(
            "{p} degree {n}: ambient {}, ideal {}, quotient {}",
            q.ambient_rank(),
            q.ideal_rank(),
            q.quotient_rank()
        );
    }
    let gens: Vec<String> = ideal_generators(p, 5).iter().map(ToString::to_string).collect();
    println!("generators in degree 5: {}", gens.join(" "));

    let adj = "2,1".parse()?;
    println!("S(2,1) · S(2,1) = {}", fusion_product(p, &adj, &adj)?);
    println!("d^(3,2,1)_(2,1),(2,1) = {}", fusion_coefficient(p, &"3,2,1".parse()?, &adj, &adj)?);

    // Reduction of Schur functions outside the (N,L) range can be negative.
    let small = CylProfile::new(2, 1)?;
    println!("s(4) in {small}: {}", reduce_schur(small, &"4".parse()?)?);
    Ok(())
}
