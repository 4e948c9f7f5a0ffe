//! The fusion Pieri rule, computed two ways.

use cylschur::fusion::pieri_sides;
use cylschur::{fusion_h_expansion, CylProfile, Weight};

fn main() -> cylschur::Result<()> {
    let p = CylProfile::new(3, 2)?;
    let eta = "2,1".parse()?;
    for k in 0..=p.level() {
        let (reduced, strips) = pieri_sides(p, &eta, k)?;
        println!("S{eta} · H{k}: reduced {reduced}");
        println!("{:>w$} strips  {strips}", "", w = 8 + eta.to_string().len());
    }

    let alpha: Weight = "2,1,1".parse()?;
    println!("H{alpha} = {}", fusion_h_expansion(p, &alpha)?);
    Ok(())
}
