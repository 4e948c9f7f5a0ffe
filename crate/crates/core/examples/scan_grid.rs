//! A small grid scan with a per-check summary.

use cylschur::verify::{Check, ScanSummary};
use cylschur::{scan, ScanConfig};

fn main() -> cylschur::Result<()> {
    let config = ScanConfig::new(2, 2, 5);
    let reports = scan(&config)?;
    for check in [Check::Theorem1, Check::Prop1, Check::Pieri] {
        let n = reports.iter().filter(|r| r.check == check).count();
        println!("{:<9} {n}", check.as_str());
    }
    let summary = ScanSummary::of(&reports);
    println!("{} reports, {} failed", summary.total, summary.failed);
    Ok(())
}
