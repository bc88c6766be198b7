//! The dual polynomial, where monomials test edge absence. At n = 3 it is
//! compared term for term with the reference listing shipped in the crate.

use matchpoly::bpm::{bpm_star_3_reference, coefficient_summary, dual_coefficient, dual_polynomial};
use matchpoly::BipartiteGraph;

fn main() -> matchpoly::Result<()> {
    let p3 = dual_polynomial(3)?;
    assert_eq!(p3, bpm_star_3_reference());
    println!("BPM*_3 matches the reference listing ({} terms)", p3.len());
    for line in p3.to_text().lines().take(6) {
        println!("  {line}");
    }
    println!("  ...");

    // Single coefficients without building the polynomial.
    let k33 = BipartiteGraph::complete(3)?;
    let diag = BipartiteGraph::parse(3, "1-1,2-2,3-3")?;
    println!("a*(K33) = {}, a*(diagonal) = {}", dual_coefficient(&k33)?, dual_coefficient(&diag)?);

    println!("\nBPM*_4 grouped by coefficient:");
    println!("{:>6} {:>10} {:>8}", "coeff", "monomials", "classes");
    for g in coefficient_summary(&dual_polynomial(4)?) {
        println!("{:>6} {:>10} {:>8}", g.coeff, g.monomials, g.classes);
    }
    Ok(())
}
