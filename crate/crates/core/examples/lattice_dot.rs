//! Builds the lattice of matching-covered subgraphs of K_{n,n} and writes
//! its Hasse diagram in DOT.
//!
//!     cargo run --example lattice_dot -- 3 | dot -Tsvg > mc3.svg

use matchpoly::mclattice::{build_lattice, join, meet};

fn main() -> matchpoly::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let lat = build_lattice(n)?;
    eprintln!("{} nodes, {} cover edges", lat.len(), lat.cover_edges().len());

    let mut by_rank = std::collections::BTreeMap::new();
    for k in 0..lat.len() {
        let e = by_rank.entry(lat.rank(k)).or_insert((0usize, lat.mobius(k)));
        e.0 += 1;
    }
    for (r, (count, mu)) in &by_rank {
        eprintln!("  rank {r}: {count} nodes, mobius {mu}");
    }

    if lat.len() > 2 {
        let (a, b) = (&lat.nodes()[1], &lat.nodes()[2]);
        eprintln!("join({a:?}, {b:?}) = {:?}", join(a, b)?);
        eprintln!("meet({a:?}, {b:?}) = {:?}", meet(a, b)?);
    }
    print!("{}", lat.to_dot());
    Ok(())
}
