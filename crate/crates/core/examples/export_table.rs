//! Structure constants as JSON lines.

use cylschur::verify::{fusion_table, write_fusion_table};
use cylschur::CylProfile;

fn main() -> cylschur::Result<()> {
    let p = CylProfile::new(2, 2)?;
    let summary = write_fusion_table(p, 3, std::io::stdout().lock())?;
    eprintln!("{} records from {} pairs", summary.records, summary.pairs);

    let larger = fusion_table(CylProfile::new(3, 3)?, 6)?;
    if let Some(max) = larger.iter().map(|r| &r.d).max() {
        println!("(3,3) up to degree 6: {} records, largest coefficient {max}", larger.len());
    }
    Ok(())
}
