//! Exact counts: matching-covered graphs, totally ordered graphs via
//! Stirling numbers, Hall violators, and the probability of a perfect
//! matching in a uniformly random subgraph.

use matchpoly::bpm::{classify_all, enumerate_hall_violators, fubini, pm_probability, totally_ordered_count};
use matchpoly::matchcov::count_mc;

fn main() -> matchpoly::Result<()> {
    println!("{:>2} {:>6} {:>14} {:>10} {:>8} {:>20}", "n", "|MC_n|", "tot. ordered", "strict", "HV", "Pr[PM]");
    for n in 1..=4 {
        let (to, strict) = classify_all(n)?;
        assert_eq!(totally_ordered_count(n), to.into());
        let hv = if n >= 2 { enumerate_hall_violators(n)?.len().to_string() } else { "-".into() };
        let p = pm_probability(n)?;
        println!("{n:>2} {:>6} {to:>14} {strict:>10} {hv:>8} {:>20}", count_mc(n)?, format!("{p} ~ {:.4}", p.to_f64()));
    }
    println!("fubini numbers: {:?}", (0..6).map(|m| fubini(m).to_string()).collect::<Vec<_>>());
    println!("totally ordered graphs at n = 8: {}", totally_ordered_count(8));
    Ok(())
}
