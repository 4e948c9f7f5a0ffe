//! Partitions, strips and the (N,L) predicates.

use cylschur::{enumerate_nl_partitions, horizontal_strip_extensions, is_horizontal_strip, CylProfile, Partition};

fn main() -> cylschur::Result<()> {
    let p = CylProfile::new(3, 2)?;
    let lam: Partition = "4,3,2".parse()?;
    let mu: Partition = "3,2".parse()?;

    println!("{lam}: size {}, conjugate {}", lam.size(), lam.conjugate());
    println!("{lam}/{mu} horizontal strip: {}", is_horizontal_strip(&lam, &mu));
    println!("{lam}/{mu} is a {p}-strip: {}", p.is_nl_horizontal_strip(&lam, &mu));

    for n in 0..=5 {
        let parts: Vec<String> = enumerate_nl_partitions(p, n).iter().map(ToString::to_string).collect();
        println!("{p}-partitions of {n}: {}", parts.join(" "));
    }

    let eta: Partition = "2,1".parse()?;
    for k in 0..=p.level() {
        let ext: Vec<String> = horizontal_strip_extensions(p, &eta, k).iter().map(ToString::to_string).collect();
        println!("strips of size {k} on {eta}: {}", ext.join(" "));
    }
    Ok(())
}
