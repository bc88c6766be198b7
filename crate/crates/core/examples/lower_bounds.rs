//! Decision-tree lower bounds derived from the exact polynomials.

use matchpoly::bpm::{bounds_report, round12};

fn main() -> matchpoly::Result<()> {
    for n in 1..=5 {
        let r = bounds_report(n)?;
        let show = |x: Option<f64>| x.map_or("-".to_string(), |v| round12(v).to_string());
        println!(
            "n = {n}: deg2 {:?}, AND >= {}, OR >= {} (monomials) / {} (factorial), rank bound {}",
            r.deg2_value,
            show(r.and_lb),
            show(r.or_lb_mon),
            show(Some(r.or_lb_factorial)),
            r.comm_rank_bound
        );
    }
    Ok(())
}
