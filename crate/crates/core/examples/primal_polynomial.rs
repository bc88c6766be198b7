//! The {0,1}-basis polynomial of BPM_n, built from matching-covered graphs
//! and checked against the truth table on every input.
//!
//!     cargo run --example primal_polynomial -- 3

use matchpoly::bpm::{bpm_truth, primal_polynomial};
use matchpoly::polyalg::{interpolate, truth_of};

fn main() -> matchpoly::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let p = primal_polynomial(n)?;
    println!("BPM_{n}: {} monomials", p.len());
    if n <= 2 {
        print!("{}", p.to_text());
    }

    // Interpolating the raw truth table must land on the same coefficients.
    let t = bpm_truth(n)?;
    assert_eq!(interpolate(&t)?, p);
    assert_eq!(truth_of(&p)?.count_ones(), t.count_ones());
    println!("{} of {} graphs have a perfect matching", t.count_ones(), t.len());

    let mut signs = [0usize; 2];
    for &(_, c) in p.terms() {
        signs[usize::from(c < 0)] += 1;
    }
    println!("coefficients: {} are +1, {} are -1", signs[0], signs[1]);
    Ok(())
}
