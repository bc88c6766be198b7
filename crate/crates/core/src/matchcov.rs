//! Matching-covered and elementary graphs.
//!
//! A graph is matching-covered when its edge set is a union of perfect
//! matchings; elementary graphs are the connected ones. Recognition uses
//! "has a perfect matching and every edge is allowed", which needs one
//! reachability table per graph instead of enumerating matchings.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::bitgraph::{
    self, allowed_edges, bits, connected_components, edge_bit, full_mask, has_perfect_matching,
    is_connected, matchable_after_removal, BipartiteGraph, Vertex,
};
use crate::error::{Error, Result};
use crate::limits;

/// Edge set equals the union of the graph's perfect matchings.
/// The empty graph is not matching-covered (it is the lattice bottom).
pub fn is_matching_covered(g: &BipartiteGraph) -> bool {
    !g.is_empty() && is_mc_mask(g.n(), g.mask())
}

#[inline]
pub(crate) fn is_mc_mask(n: usize, mask: u64) -> bool {
    let g = BipartiteGraph::from_raw(n, mask);
    mask != 0 && has_perfect_matching(&g) && allowed_edges(&g) == mask
}

/// Connected and matching-covered. K_{1,1} counts as elementary.
pub fn is_elementary(g: &BipartiteGraph) -> bool {
    is_matching_covered(g) && is_connected(g)
}

/// The five equivalent conditions of Hetyei's theorem, each evaluated on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HetyeiReport {
    /// Connected and matching-covered.
    pub elementary: bool,
    /// Exactly two minimum vertex covers, namely A and B.
    pub two_min_covers: bool,
    /// |N(X)| ≥ |X| + 1 for every ∅ ≠ X ⊊ A.
    pub hall_surplus: bool,
    /// G = K₂, or n ≥ 2 and G − a − b has a perfect matching for all a, b.
    pub deletion_matchable: bool,
    /// Connected and every edge allowed.
    pub connected_all_allowed: bool,
}

impl HetyeiReport {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.elementary,
            self.two_min_covers,
            self.hall_surplus,
            self.deletion_matchable,
            self.connected_all_allowed,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&b| b == a[0])
    }
}

pub fn hetyei_check(g: &BipartiteGraph) -> HetyeiReport {
    let n = g.n();
    let side = (1u32 << n) - 1;

    // vertex covers by brute force over (left part, right part)
    let mut min_size = u32::MAX;
    let mut min_covers = Vec::new();
    for l in 0..=side {
        for r in 0..=side {
            let covers = g.edges().all(|(i, j)| l & (1 << i) != 0 || r & (1 << j) != 0);
            if !covers {
                continue;
            }
            let size = l.count_ones() + r.count_ones();
            if size < min_size {
                min_size = size;
                min_covers.clear();
            }
            if size == min_size {
                min_covers.push((l, r));
            }
        }
    }
    let two_min_covers = min_covers.len() == 2
        && min_covers.contains(&(side, 0))
        && min_covers.contains(&(0, side));

    let hall_surplus = (1..side).all(|x| g.neighborhood(x).count_ones() > x.count_ones());

    let deletion_matchable = if n == 1 {
        g.mask() == 1
    } else {
        matchable_after_removal(g) == full_mask(n)
    };

    let connected_all_allowed = is_connected(g) && allowed_edges(g) == g.mask();

    HetyeiReport {
        elementary: is_elementary(g),
        two_min_covers,
        hall_surplus,
        deletion_matchable,
        connected_all_allowed,
    }
}

// ---------------------------------------------------------------------------
// Ear decompositions
// ---------------------------------------------------------------------------

/// `G = e + P₁ + … + P_k`: a starting edge followed by odd alternating paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    /// The starting edge (left, right), 0-based.
    pub edge: (usize, usize),
    /// Each ear as its vertex sequence, endpoints included.
    pub ears: Vec<Vec<Vertex>>,
}

impl EarDecomposition {
    /// Total edges across all ears (excluding the starting edge).
    pub fn ear_edge_count(&self) -> usize {
        self.ears.iter().map(|p| p.len().saturating_sub(1)).sum()
    }
}

fn vbit(n: usize, v: Vertex) -> u32 {
    1 << v.id(n)
}

fn edge_between(n: usize, u: Vertex, v: Vertex) -> Option<u64> {
    match (u, v) {
        (Vertex::Left(i), Vertex::Right(j)) | (Vertex::Right(j), Vertex::Left(i)) => {
            if (i as usize) < n && (j as usize) < n {
                Some(edge_bit(n, i as usize, j as usize))
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Perfect-matching test on the subgraph induced by the vertex set `vs`
/// (dense ids, left vertices first).
fn induced_has_pm(g: &BipartiteGraph, vs: u32) -> bool {
    let n = g.n();
    let left = vs & ((1 << n) - 1);
    let right = vs >> n;
    let k = left.count_ones();
    if k != right.count_ones() {
        return false;
    }
    if k == 0 {
        return true;
    }
    let ls: Vec<usize> = bits(left).collect();
    let rs: Vec<usize> = bits(right).collect();
    let k = k as usize;
    let mut mask = 0;
    for (a, &i) in ls.iter().enumerate() {
        for (b, &j) in rs.iter().enumerate() {
            if g.has_edge(i, j) {
                mask |= edge_bit(k, a, b);
            }
        }
    }
    has_perfect_matching(&BipartiteGraph::from_raw(k, mask))
}

fn neighbors(g: &BipartiteGraph, v: Vertex) -> Vec<Vertex> {
    match v {
        Vertex::Left(i) => bits(g.row(i as usize)).map(|j| Vertex::Right(j as u8)).collect(),
        Vertex::Right(j) => bits(g.col(j as usize)).map(|i| Vertex::Left(i as u8)).collect(),
    }
}

/// Finds an ear decomposition when `g` is elementary, `None` otherwise.
///
/// Grows a subgraph H from one edge, keeping G − V(H) perfectly matchable,
/// by adding either a chord of H or an odd path through fresh vertices.
/// The search is exponential in the worst case, which is fine for n ≤ 5.
pub fn ear_decomposition(g: &BipartiteGraph) -> Option<EarDecomposition> {
    if !is_elementary(g) {
        return None;
    }
    let n = g.n();
    let all_vertices: u32 = (1u32 << (2 * n)) - 1;
    let (i0, j0) = g.edges().next()?;
    let mut built_v = vbit(n, Vertex::Left(i0 as u8)) | vbit(n, Vertex::Right(j0 as u8));
    let mut built_e = edge_bit(n, i0, j0);
    let mut ears = Vec::new();

    while built_e != g.mask() {
        // chords first: they never change the vertex set
        let chord = g.edges().find(|&(i, j)| {
            built_e & edge_bit(n, i, j) == 0
                && built_v & vbit(n, Vertex::Left(i as u8)) != 0
                && built_v & vbit(n, Vertex::Right(j as u8)) != 0
        });
        if let Some((i, j)) = chord {
            ears.push(vec![Vertex::Left(i as u8), Vertex::Right(j as u8)]);
            built_e |= edge_bit(n, i, j);
            continue;
        }

        let path = find_open_ear(g, built_v, all_vertices)?;
        for w in path.windows(2) {
            built_e |= edge_between(n, w[0], w[1])?;
        }
        for &v in &path {
            built_v |= vbit(n, v);
        }
        ears.push(path);
    }
    if built_v != all_vertices {
        return None;
    }
    Some(EarDecomposition { edge: (i0, j0), ears })
}

/// An odd path u … w with u, w ∈ V(H), at least one fresh interior vertex,
/// and G − V(H ∪ path) perfectly matchable.
fn find_open_ear(g: &BipartiteGraph, built_v: u32, all_vertices: u32) -> Option<Vec<Vertex>> {
    let n = g.n();
    fn extend(
        g: &BipartiteGraph,
        built_v: u32,
        all_vertices: u32,
        path: &mut Vec<Vertex>,
        on_path: u32,
    ) -> bool {
        let n = g.n();
        let last = *path.last().unwrap();
        for next in neighbors(g, last) {
            let b = vbit(n, next);
            if built_v & b != 0 {
                // closing the ear needs a fresh interior and a distinct endpoint
                if path.len() >= 2 && next != path[0] {
                    let rest = all_vertices & !(built_v | on_path);
                    if induced_has_pm(g, rest) {
                        path.push(next);
                        return true;
                    }
                }
                continue;
            }
            if on_path & b != 0 {
                continue;
            }
            path.push(next);
            if extend(g, built_v, all_vertices, path, on_path | b) {
                return true;
            }
            path.pop();
        }
        false
    }
    for start_id in 0..2 * n {
        if built_v & (1 << start_id) == 0 {
            continue;
        }
        let start = if start_id < n {
            Vertex::Left(start_id as u8)
        } else {
            Vertex::Right((start_id - n) as u8)
        };
        let mut path = vec![start];
        if extend(g, built_v, all_vertices, &mut path, 0) {
            return Some(path);
        }
    }
    None
}

/// Accepts iff `dec` is a bipartite ear decomposition whose union is exactly `g`
/// (all 2n vertices included).
pub fn check_ear_decomposition(g: &BipartiteGraph, dec: &EarDecomposition) -> bool {
    let n = g.n();
    let (i0, j0) = dec.edge;
    if i0 >= n || j0 >= n || !g.has_edge(i0, j0) {
        return false;
    }
    let mut built_v = vbit(n, Vertex::Left(i0 as u8)) | vbit(n, Vertex::Right(j0 as u8));
    let mut built_e = edge_bit(n, i0, j0);

    for ear in &dec.ears {
        if ear.len() < 2 || ear.len() % 2 != 0 {
            // even vertex count ⇔ odd edge count
            return false;
        }
        if ear.iter().any(|v| match *v {
            Vertex::Left(i) | Vertex::Right(i) => i as usize >= n,
        }) {
            return false;
        }
        let (first, last) = (ear[0], ear[ear.len() - 1]);
        if first == last || built_v & vbit(n, first) == 0 || built_v & vbit(n, last) == 0 {
            return false;
        }
        let mut interior = 0u32;
        for &v in &ear[1..ear.len() - 1] {
            let b = vbit(n, v);
            if built_v & b != 0 || interior & b != 0 {
                return false;
            }
            interior |= b;
        }
        for w in ear.windows(2) {
            if w[0].is_left() == w[1].is_left() {
                return false;
            }
            let Some(e) = edge_between(n, w[0], w[1]) else {
                return false;
            };
            if g.mask() & e == 0 || built_e & e != 0 {
                return false;
            }
            built_e |= e;
        }
        built_v |= interior;
    }
    built_e == g.mask() && built_v == (1u32 << (2 * n)) - 1
}

// ---------------------------------------------------------------------------
// Enumeration of MC_n
// ---------------------------------------------------------------------------

/// Streams MC_n (nonempty matching-covered graphs) in increasing mask order.
pub fn enumerate_mc(n: usize) -> Result<impl Iterator<Item = BipartiteGraph>> {
    check_n(n)?;
    Ok((1..=full_mask(n))
        .filter(move |&m| is_mc_mask(n, m))
        .map(move |m| BipartiteGraph::from_raw(n, m)))
}

/// Masks of MC_n in increasing order, computed in parallel by mask range.
pub fn mc_masks(n: usize) -> Result<Vec<u64>> {
    check_n(n)?;
    Ok((1..=full_mask(n))
        .into_par_iter()
        .filter(|&m| is_mc_mask(n, m))
        .collect())
}

/// |MC_n| without materializing the graphs.
pub fn count_mc(n: usize) -> Result<u64> {
    check_n(n)?;
    Ok((1..=full_mask(n))
        .into_par_iter()
        .filter(|&m| is_mc_mask(n, m))
        .count() as u64)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    limits::check("enumerate_mc", n)
}

/// Dense membership bitmap for MC_n, n ≤ 4, computed once per n.
pub struct McTable {
    n: usize,
    words: Vec<u64>,
}

impl McTable {
    #[inline]
    pub fn contains(&self, mask: u64) -> bool {
        let idx = mask as usize;
        self.words[idx >> 6] >> (idx & 63) & 1 != 0
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

const TABLE_MAX_N: usize = 4;

/// Cached MC_n bitmap. Errors beyond n = 4, where callers should stream.
pub fn mc_table(n: usize) -> Result<&'static McTable> {
    static TABLES: [OnceLock<McTable>; TABLE_MAX_N] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    if n == 0 || n > TABLE_MAX_N {
        return Err(Error::ResourceCap { op: "mc_table", n, max: TABLE_MAX_N });
    }
    Ok(TABLES[n - 1].get_or_init(|| {
        let len = 1usize << (n * n);
        let mut words = vec![0u64; len.div_ceil(64)];
        for m in (1..len as u64).filter(|&m| is_mc_mask(n, m)) {
            words[m as usize >> 6] |= 1 << (m & 63);
        }
        McTable { n, words }
    }))
}

/// MC membership that uses the cached table when available and the direct
/// test otherwise (n = 5 streams without a table).
#[inline]
pub(crate) fn mc_lookup(n: usize) -> impl Fn(u64) -> bool + Sync {
    let table = mc_table(n).ok();
    move |m| match table {
        Some(t) => t.contains(m),
        None => is_mc_mask(n, m),
    }
}

/// Matching-covered subgraphs of `g`, MC(G), in increasing mask order.
pub fn mc_subgraphs(g: &BipartiteGraph) -> Vec<BipartiteGraph> {
    let n = g.n();
    bitgraph::subsets(g.mask())
        .filter(|&m| is_mc_mask(n, m))
        .map(|m| BipartiteGraph::from_raw(n, m))
        .collect()
}

/// Every component of an MC graph, as its own edge mask.
pub fn component_masks(g: &BipartiteGraph) -> Vec<u64> {
    connected_components(g)
        .into_iter()
        .map(|c| g.edges().filter(|&(i, _)| c.left & (1 << i) != 0).fold(0, |m, (i, j)| m | edge_bit(g.n(), i, j)))
        .collect()
}
