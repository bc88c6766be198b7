//! Runs every registered claim against brute-force oracles.

use matchpoly::bpm::verify::{claim_ids, claim_summary, verify_all};

fn main() -> matchpoly::Result<()> {
    for id in claim_ids() {
        println!("{id:>16}  {}", claim_summary(id).unwrap_or(""));
    }
    for n in 1..=4 {
        let reports = verify_all(n)?;
        let failed = reports.iter().filter(|r| !r.passed()).count();
        println!("n = {n}: {} claims checked, {failed} failed", reports.len());
        for r in reports.iter().filter(|r| !r.passed()) {
            println!("  {r}");
        }
    }
    Ok(())
}
