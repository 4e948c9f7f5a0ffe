//! Single-instance checks with their JSON records.

use cylschur::verify::verify_pieri_report;
use cylschur::{verify_proposition1, verify_theorem1, CylProfile, SkewShape};

fn main() -> cylschur::Result<()> {
    let p = CylProfile::new(2, 2)?;
    let shape = SkewShape::new("4,3".parse()?, "1".parse()?)?;

    let reports = [
        verify_theorem1(p, &shape)?,
        verify_proposition1(p, shape.outer(), shape.inner(), &"3,1,1,1".parse()?)?,
        verify_pieri_report(p, &"2,1".parse()?, 2)?,
    ];
    for r in &reports {
        println!("{}", serde_json::to_string(&r.record(true))?);
    }
    Ok(())
}
