//! The lattice of matching-covered graphs ordered by inclusion, with the
//! empty graph as bottom and K_{n,n} as top.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitgraph::{
    cyclomatic_number, edge_bit, full_mask, subsets, supersets, union_of_perfect_matchings,
    BipartiteGraph,
};
use crate::error::{Error, Result};
use crate::limits;
use crate::matchcov::{is_mc_mask, mc_lookup, mc_masks};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct McLattice {
    n: usize,
    nodes: Vec<BipartiteGraph>,
    rank: Vec<u32>,
    mobius: Vec<i64>,
    /// Covering pairs (lower, upper) as node indices, sorted.
    hasse: Vec<(usize, usize)>,
    /// Node index per mask, `NONE` for masks outside the lattice.
    index: Vec<u32>,
}

impl McLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Nodes in increasing mask order; index 0 is the bottom.
    pub fn nodes(&self) -> &[BipartiteGraph] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn rank(&self, k: usize) -> u32 {
        self.rank[k]
    }

    pub fn mobius(&self, k: usize) -> i64 {
        self.mobius[k]
    }

    pub fn cover_edges(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn index_of(&self, g: &BipartiteGraph) -> Option<usize> {
        if g.n() != self.n {
            return None;
        }
        match self.index[g.mask() as usize] {
            NONE => None,
            k => Some(k as usize),
        }
    }

    fn node_index(&self, mask: u64) -> Option<usize> {
        match self.index[mask as usize] {
            NONE => None,
            k => Some(k as usize),
        }
    }

    /// Ranks recomputed as longest-chain length from the bottom in the
    /// containment order, without using χ.
    pub fn longest_chain_ranks(&self) -> Vec<u32> {
        let mut lc = vec![0u32; self.len()];
        for k in 1..self.len() {
            let m = self.nodes[k].mask();
            lc[k] = subsets(m)
                .filter(|&s| s != m)
                .filter_map(|s| self.node_index(s))
                .map(|j| lc[j] + 1)
                .max()
                .unwrap_or(0);
        }
        lc
    }

    /// Covering pairs computed directly: y ⊊ x with no node strictly between.
    /// Quadratic in the node count; meant for n ≤ 3.
    pub fn direct_cover_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, gx) in self.nodes.iter().enumerate() {
            let below: Vec<usize> = (0..x)
                .filter(|&y| self.nodes[y].mask() & !gx.mask() == 0)
                .collect();
            for &y in &below {
                let my = self.nodes[y].mask();
                let between = below
                    .iter()
                    .any(|&z| z != y && my & !self.nodes[z].mask() == 0);
                if !between {
                    out.push((y, x));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph mc_lattice {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
        let max_rank = self.rank.iter().copied().max().unwrap_or(0);
        for r in 0..=max_rank {
            out.push_str("  { rank=same;");
            for k in (0..self.len()).filter(|&k| self.rank[k] == r) {
                out.push_str(&format!(
                    " n{k} [label=\"0x{:X}\\nrank {r}\"];",
                    self.nodes[k].mask()
                ));
            }
            out.push_str(" }\n");
        }
        for &(a, b) in &self.hasse {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Node {
            mask: String,
            rank: u32,
            mobius: i64,
        }
        #[derive(Serialize)]
        struct Doc {
            n: usize,
            nodes: Vec<Node>,
            cover_edges: Vec<[usize; 2]>,
        }
        let doc = Doc {
            n: self.n,
            nodes: (0..self.len())
                .map(|k| Node {
                    mask: format!("0x{:X}", self.nodes[k].mask()),
                    rank: self.rank[k],
                    mobius: self.mobius[k],
                })
                .collect(),
            cover_edges: self.hasse.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }
}

/// Builds MC_n ∪ {0̂} with ranks χ + 1, Möbius numbers from the defining
/// recursion, and covering pairs (containment with rank gap 1).
///
/// Errors with [`Error::Invariant`] if some Möbius number differs from
/// (−1)^rank.
pub fn build_lattice(n: usize) -> Result<McLattice> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    limits::check("build_lattice", n)?;
    let mut masks = vec![0u64];
    masks.extend(mc_masks(n)?);
    let mut index = vec![NONE; 1 << (n * n)];
    for (k, &m) in masks.iter().enumerate() {
        index[m as usize] = k as u32;
    }
    let nodes: Vec<BipartiteGraph> = masks.iter().map(|&m| BipartiteGraph::new(n, m)).collect::<Result<_>>()?;
    let rank: Vec<u32> = nodes
        .iter()
        .map(|g| if g.is_empty() { 0 } else { (cyclomatic_number(g) + 1) as u32 })
        .collect();

    // Möbius recursion, one edge-count layer at a time (proper subsets have fewer edges)
    let mut mobius = vec![0i64; masks.len()];
    mobius[0] = 1;
    let mut hasse = Vec::new();
    for e in 1..=(n * n) as u32 {
        let layer: Vec<usize> = (1..masks.len()).filter(|&k| masks[k].count_ones() == e).collect();
        // (node, mobius, covers found below it)
        type LayerResult = (usize, i64, Vec<(usize, usize)>);
        let results: Vec<LayerResult> = layer
            .par_iter()
            .map(|&k| {
                let m = masks[k];
                let mut sum = 0i64;
                let mut covers = Vec::new();
                for s in subsets(m).filter(|&s| s != m) {
                    let j = index[s as usize];
                    if j == NONE {
                        continue;
                    }
                    let j = j as usize;
                    sum += mobius[j];
                    if rank[j] + 1 == rank[k] {
                        covers.push((j, k));
                    }
                }
                (k, -sum, covers)
            })
            .collect();
        for (k, mu, covers) in results {
            mobius[k] = mu;
            hasse.extend(covers);
        }
    }
    hasse.sort_unstable();

    for k in 0..masks.len() {
        let expected = if rank[k] % 2 == 0 { 1 } else { -1 };
        if mobius[k] != expected {
            return Err(Error::Invariant {
                what: format!("mobius {} but rank {}", mobius[k], rank[k]),
                mask: masks[k],
            });
        }
    }
    Ok(McLattice { n, nodes, rank, mobius, hasse, index })
}

fn lattice_node(g: &BipartiteGraph) -> Result<()> {
    if g.is_empty() || is_mc_mask(g.n(), g.mask()) {
        Ok(())
    } else {
        Err(Error::domain(format!("{g:?} is not a node of the matching-covered lattice")))
    }
}

fn same_n(g1: &BipartiteGraph, g2: &BipartiteGraph) -> Result<()> {
    if g1.n() != g2.n() {
        return Err(Error::domain("graphs have different side sizes"));
    }
    Ok(())
}

/// Least upper bound: the edge-set union.
pub fn join(g1: &BipartiteGraph, g2: &BipartiteGraph) -> Result<BipartiteGraph> {
    same_n(g1, g2)?;
    lattice_node(g1)?;
    lattice_node(g2)?;
    BipartiteGraph::new(g1.n(), g1.mask() | g2.mask())
}

/// Greatest lower bound: the union of perfect matchings common to both.
pub fn meet(g1: &BipartiteGraph, g2: &BipartiteGraph) -> Result<BipartiteGraph> {
    same_n(g1, g2)?;
    lattice_node(g1)?;
    lattice_node(g2)?;
    let common = BipartiteGraph::new(g1.n(), g1.mask() & g2.mask())?;
    Ok(union_of_perfect_matchings(&common))
}

/// Σ μ(0̂, h) over lattice nodes h ⊇ g.
pub fn interval_mobius_sum(lat: &McLattice, g: &BipartiteGraph) -> Result<i64> {
    lat.index_of(g)
        .ok_or_else(|| Error::domain(format!("{g:?} is not a node of the lattice")))?;
    Ok(supersets(g.mask(), full_mask(lat.n))
        .filter_map(|m| lat.node_index(m))
        .map(|k| lat.mobius[k])
        .sum())
}

fn umbrella_precheck(g: &BipartiteGraph) -> Result<()> {
    if g.is_empty() {
        return Err(Error::domain("umbrella of the empty graph is undefined"));
    }
    limits::check("umbrella", g.n())
}

/// Minimal matching-covered supergraphs of `g`, in increasing mask order.
pub fn umbrella(g: &BipartiteGraph) -> Result<Vec<BipartiteGraph>> {
    umbrella_precheck(g)?;
    umbrella_masks(g)
        .into_iter()
        .map(|m| BipartiteGraph::new(g.n(), m))
        .collect()
}

pub(crate) fn umbrella_masks(g: &BipartiteGraph) -> Vec<u64> {
    let n = g.n();
    let is_mc = mc_lookup(n);
    let mut minimal: Vec<u64> = Vec::new();
    // a proper subset has a smaller mask, so ascending order sees it first
    for h in supersets(g.mask(), full_mask(n)).filter(|&h| is_mc(h)) {
        if !minimal.iter().any(|&m| m & !h == 0) {
            minimal.push(h);
        }
    }
    minimal
}

/// The umbrella's edge union misses some edge of K_{n,n}. An empty
/// umbrella counts as incomplete.
pub fn has_incomplete_umbrella(g: &BipartiteGraph) -> Result<bool> {
    umbrella_precheck(g)?;
    let union = umbrella_masks(g).iter().fold(0, |a, m| a | m);
    Ok(union != full_mask(g.n()))
}

fn non_edge(g: &BipartiteGraph, a: usize, b: usize) -> Result<u64> {
    let n = g.n();
    if a >= n || b >= n {
        return Err(Error::domain(format!("vertex index out of range for n = {n}")));
    }
    if g.has_edge(a, b) {
        return Err(Error::domain(format!("({}, {}) is already an edge", a + 1, b + 1)));
    }
    Ok(edge_bit(n, a, b))
}

/// Every MC supergraph of g + (a, b) stays MC after deleting (a, b).
/// True when no such supergraph exists. Vertices are 0-based.
pub fn is_wildcard_edge(g: &BipartiteGraph, a: usize, b: usize) -> Result<bool> {
    let e = non_edge(g, a, b)?;
    limits::check("umbrella", g.n())?;
    let n = g.n();
    let is_mc = mc_lookup(n);
    Ok(supersets(g.mask() | e, full_mask(n))
        .filter(|&h| is_mc(h))
        .all(|h| is_mc(h & !e)))
}

/// For every X ⊊ A with a ∈ X and b ∉ N(X): |N(X)| > |X|. Vertices are 0-based.
pub fn is_surplus_edge(g: &BipartiteGraph, a: usize, b: usize) -> Result<bool> {
    non_edge(g, a, b)?;
    let n = g.n();
    let all = (1u32 << n) - 1;
    let others = all & !(1 << a);
    Ok(subsets(others as u64)
        .map(|x| x as u32 | 1 << a)
        .filter(|&x| x != all)
        .all(|x| {
            let nx = g.neighborhood(x);
            nx & (1 << b) != 0 || nx.count_ones() > x.count_ones()
        }))
}
