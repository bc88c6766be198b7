//! Exact polynomial representations of the bipartite perfect matching
//! function `BPM_n` on the `n²` edge variables of `K_{n,n}`.
//!
//! Graphs are `u64` edge masks ([`BipartiteGraph`]); edge `(i, j)` is bit
//! `i·n + j`. The primal polynomial comes from a closed form over
//! matching-covered graphs ([`bpm::primal_polynomial`]), the dual and
//! Fourier expansions from exact basis changes in [`polyalg`], and the
//! lattice of matching-covered graphs lives in [`mclattice`].
//!
//! Everything is exact integer or dyadic arithmetic. Sizes are bounded by
//! the caps in [`limits`]; `n ≤ 4` is instant, `n = 5` is opt-in.
//!
//! ```
//! use matchpoly::bpm::primal_polynomial;
//!
//! let p = primal_polynomial(2).unwrap();
//! assert_eq!(p.len(), 3);
//! assert_eq!(p.coeff(0xF), -1);
//! ```

pub mod bitgraph;
pub mod bpm;
pub mod cli;
pub mod error;
pub mod limits;
pub mod matchcov;
pub mod mclattice;
pub mod polyalg;

pub use bitgraph::{BipartiteGraph, Vertex};
pub use error::{Error, Result};
pub use mclattice::{build_lattice, McLattice};
pub use polyalg::{Basis, Dyadic, DyadicPoly, MultilinearPoly, TruthTable};
