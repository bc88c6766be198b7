//! Umbrellas, wildcard and surplus edges, and the link between incomplete
//! umbrellas and nonzero dual coefficients.

use matchpoly::bpm::{classify_total_order, dual_coefficient};
use matchpoly::mclattice::{has_incomplete_umbrella, is_surplus_edge, is_wildcard_edge, umbrella};
use matchpoly::BipartiteGraph;

fn main() -> matchpoly::Result<()> {
    let g = BipartiteGraph::parse(3, "1-1,1-2,2-2,2-3,3-3,3-1")?;
    println!("G = {g}");
    for h in umbrella(&g)? {
        println!("  umbrella member {h}");
    }
    println!("incomplete umbrella: {}", has_incomplete_umbrella(&g)?);
    println!("class {}, a* = {}", classify_total_order(&g), dual_coefficient(&g)?);

    for a in 0..3 {
        for b in 0..3 {
            if g.has_edge(a, b) {
                continue;
            }
            let w = is_wildcard_edge(&g, a, b)?;
            let s = is_surplus_edge(&g, a, b)?;
            println!("edge a{}-b{}: wildcard {w}, surplus {s}", a + 1, b + 1);
        }
    }

    // An incomplete umbrella forces a zero dual coefficient.
    let mut incomplete = 0;
    for m in 1u64..1 << 9 {
        let h = BipartiteGraph::new(3, m)?;
        if has_incomplete_umbrella(&h)? {
            assert_eq!(dual_coefficient(&h)?, 0);
            incomplete += 1;
        }
    }
    println!("{incomplete} graphs on n = 3 have an incomplete umbrella, all with a* = 0");
    Ok(())
}
