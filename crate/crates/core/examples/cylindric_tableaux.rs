//! Counting and listing cylindric tableaux.

use cylschur::{classical_kostka, count_cyl_tableaux, enumerate_cyl_tableaux, CylProfile, Partition, SkewShape, Weight};

fn main() -> cylschur::Result<()> {
    let p = CylProfile::new(3, 2)?;
    let shape = SkewShape::new("3,2,1".parse()?, "1".parse()?)?;
    let alpha: Weight = "2,1,1,1".parse()?;

    let count = count_cyl_tableaux(p, &shape, &alpha)?;
    println!("K^cyl at {p} for {shape}, weight {alpha}: {count}");
    for chain in enumerate_cyl_tableaux(p, &shape, &alpha)? {
        let steps: Vec<String> = chain.partitions().iter().map(ToString::to_string).collect();
        println!("  {}", steps.join(" ⊂ "));
    }

    // Entries above the level force zero.
    println!("weight 3,1,1: {}", count_cyl_tableaux(p, &shape, &"3,1,1".parse()?)?);

    // Wide enough profiles give the ordinary Kostka numbers.
    let lam: Partition = "4,2".parse()?;
    let ones = Weight::new(vec![1; 6]);
    println!("K_(4,2),1^6 = {}", classical_kostka(&lam, &ones));
    println!("at (2,3): {}", count_cyl_tableaux(CylProfile::new(2, 3)?, &SkewShape::straight(lam), &ones)?);
    Ok(())
}
