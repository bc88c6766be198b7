//! Balanced bipartite graphs on K_{n,n} packed into a single `u64`.
//!
//! Edge (i, j), with left vertex a_i and right vertex b_j, lives at bit
//! `i * n + j` (0-based; bit 0 is edge (1,1) in the 1-based text syntax).
//! The vertex set is always all 2n vertices, so isolated vertices count as
//! their own components.
//!
//! Rust APIs take 0-based vertex indices. Text syntax is 1-based:
//! `1-1,2-2` or a hex mask `0x9`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest side size representable in one 64-bit mask.
pub const MAX_N: usize = 8;

#[inline]
pub fn edge_bit(n: usize, i: usize, j: usize) -> u64 {
    1u64 << (i * n + j)
}

#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n * n == 64 {
        u64::MAX
    } else {
        (1u64 << (n * n)) - 1
    }
}

/// A spanning subgraph of K_{n,n}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BipartiteGraph {
    n: u8,
    mask: u64,
}

/// A vertex of K_{n,n}, 0-based on each side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Left(u8),
    Right(u8),
}

impl Vertex {
    pub fn is_left(self) -> bool {
        matches!(self, Vertex::Left(_))
    }

    /// Dense id in `0..2n`: left vertices first.
    pub fn id(self, n: usize) -> usize {
        match self {
            Vertex::Left(i) => i as usize,
            Vertex::Right(j) => n + j as usize,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Left(i) => write!(f, "a{}", i + 1),
            Vertex::Right(j) => write!(f, "b{}", j + 1),
        }
    }
}

/// A connected component, as left and right vertex bitsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Component {
    pub left: u32,
    pub right: u32,
}

impl Component {
    pub fn vertex_count(&self) -> u32 {
        self.left.count_ones() + self.right.count_ones()
    }
}

/// A perfect matching of K_{n,n}, stored as the permutation i ↦ `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    perm: Vec<u8>,
}

impl Matching {
    pub fn from_permutation(perm: Vec<u8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = 0u32;
        for &j in &perm {
            if j as usize >= n || seen & (1 << j) != 0 {
                return Err(Error::domain(format!("{perm:?} is not a permutation")));
            }
            seen |= 1 << j;
        }
        Ok(Matching { perm })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> &[u8] {
        &self.perm
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.perm.iter().enumerate().map(|(i, &j)| (i, j as usize))
    }

    pub fn mask(&self) -> u64 {
        let n = self.n();
        self.pairs().fold(0, |m, (i, j)| m | edge_bit(n, i, j))
    }

    pub fn to_graph(&self) -> BipartiteGraph {
        BipartiteGraph { n: self.n() as u8, mask: self.mask() }
    }
}

impl BipartiteGraph {
    pub fn new(n: usize, mask: u64) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::domain(format!("side size n = {n} outside 1..={MAX_N}")));
        }
        if mask & !full_mask(n) != 0 {
            return Err(Error::domain(format!("mask 0x{mask:X} has bits beyond n^2 = {}", n * n)));
        }
        Ok(BipartiteGraph { n: n as u8, mask })
    }

    /// Caller guarantees `1 <= n <= 8` and `mask` fits in n² bits.
    #[inline]
    pub(crate) fn from_raw(n: usize, mask: u64) -> Self {
        debug_assert!((1..=MAX_N).contains(&n) && mask & !full_mask(n) == 0);
        BipartiteGraph { n: n as u8, mask }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::empty(n).map(|g| Self::from_raw(n, full_mask(g.n())))
    }

    /// Builds a graph from 0-based `(left, right)` pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut mask = 0;
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::domain(format!("edge ({i},{j}) outside K_{{{n},{n}}}")));
            }
            mask |= edge_bit(n, i, j);
        }
        Self::new(n, mask)
    }

    /// Complete bipartite graph between left set `xs` and right set `ys` (bitsets).
    pub fn biclique(n: usize, xs: u32, ys: u32) -> Result<Self> {
        let mut mask = 0;
        for i in bits(xs) {
            for j in bits(ys) {
                if i >= n || j >= n {
                    return Err(Error::domain("biclique vertex outside K_{n,n}"));
                }
                mask |= edge_bit(n, i, j);
            }
        }
        Self::new(n, mask)
    }

    /// Parses `1-1,2-2` (1-based edge list) or `0x…` (hex mask).
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
            let mask = u64::from_str_radix(hex, 16)
                .map_err(|e| Error::Parse(format!("bad hex mask `{text}`: {e}")))?;
            return Self::new(n, mask).map_err(|e| Error::Parse(e.to_string()));
        }
        let mut edges = Vec::new();
        if !text.is_empty() {
            for item in text.split(',') {
                let item = item.trim();
                let (a, b) = item
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("expected `i-j`, got `{item}`")))?;
                let parse_side = |s: &str| -> Result<usize> {
                    let v: usize = s
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad vertex index in `{item}`")))?;
                    if v == 0 || v > n {
                        return Err(Error::Parse(format!("vertex index in `{item}` outside 1..={n}")));
                    }
                    Ok(v - 1)
                };
                edges.push((parse_side(a)?, parse_side(b)?));
            }
        }
        Self::from_edges(n, &edges).map_err(|e| Error::Parse(e.to_string()))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn edge_count(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.mask & edge_bit(self.n(), i, j) != 0
    }

    pub fn with_edge(&self, i: usize, j: usize) -> Self {
        Self::from_raw(self.n(), self.mask | edge_bit(self.n(), i, j))
    }

    pub fn without_edge(&self, i: usize, j: usize) -> Self {
        Self::from_raw(self.n(), self.mask & !edge_bit(self.n(), i, j))
    }

    pub fn is_subgraph_of(&self, other: &Self) -> bool {
        self.n == other.n && self.mask & !other.mask == 0
    }

    /// 0-based edges in bit order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        bits64(self.mask).map(move |b| (b / n, b % n))
    }

    /// Right neighborhood N(a_i) as a bitset.
    #[inline]
    pub fn row(&self, i: usize) -> u32 {
        let n = self.n();
        ((self.mask >> (i * n)) & ((1u64 << n) - 1)) as u32
    }

    /// Left neighborhood N(b_j) as a bitset.
    pub fn col(&self, j: usize) -> u32 {
        (0..self.n()).filter(|&i| self.has_edge(i, j)).fold(0, |c, i| c | 1 << i)
    }

    pub fn rows(&self) -> [u32; MAX_N] {
        let mut r = [0u32; MAX_N];
        for (i, slot) in r.iter_mut().enumerate().take(self.n()) {
            *slot = self.row(i);
        }
        r
    }

    /// N(X) for a set X of left vertices.
    pub fn neighborhood(&self, left_set: u32) -> u32 {
        bits(left_set).fold(0, |acc, i| acc | self.row(i))
    }

    /// Relabels left vertex i as `row_perm[i]` and right vertex j as `col_perm[j]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let n = self.n();
        let mask = self
            .edges()
            .fold(0, |m, (i, j)| m | edge_bit(n, row_perm[i], col_perm[j]));
        Self::from_raw(n, mask)
    }

    /// Removes left vertex `i` and right vertex `j`, giving a graph on n − 1.
    pub fn minus_pair(&self, i: usize, j: usize) -> Option<Self> {
        let n = self.n();
        if n == 1 {
            return None;
        }
        let mut mask = 0;
        for (a, b) in self.edges() {
            if a != i && b != j {
                let a2 = if a > i { a - 1 } else { a };
                let b2 = if b > j { b - 1 } else { b };
                mask |= edge_bit(n - 1, a2, b2);
            }
        }
        Some(Self::from_raw(n - 1, mask))
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipartiteGraph(n={}, 0x{:X})", self.n, self.mask)
    }
}

/// 1-based edge list, `1-1,2-2`. The empty graph prints as an empty string.
impl fmt::Display for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j) in self.edges() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{}-{}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

/// Set bit positions of a 32-bit set, ascending.
pub fn bits(mut s: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let b = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(b)
        }
    })
}

pub fn bits64(mut s: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let b = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(b)
        }
    })
}

/// All supersets of `base` inside `full`, in increasing mask order.
pub fn supersets(base: u64, full: u64) -> impl Iterator<Item = u64> {
    let free = full & !base;
    let mut sub = Some(0u64);
    std::iter::from_fn(move || {
        let s = sub?;
        sub = if s == free { None } else { Some(s.wrapping_sub(free) & free) };
        Some(base | s)
    })
}

/// All subsets of `mask`, in increasing order.
pub fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    supersets(0, mask)
}

// ---------------------------------------------------------------------------
// Perfect matchings by subset reachability.
//
// forward[S]:  rows 0..|S| can be matched bijectively onto the right set S.
// backward[T]: rows n-|T|..n can be matched bijectively onto T.
// Both are O(2^n · n); n ≤ 8 keeps the tables at 256 entries.
// ---------------------------------------------------------------------------

struct Reach {
    forward: [bool; 1 << MAX_N],
    backward: [bool; 1 << MAX_N],
}

fn reach_tables(g: &BipartiteGraph) -> Reach {
    let n = g.n();
    let rows = g.rows();
    let mut forward = [false; 1 << MAX_N];
    let mut backward = [false; 1 << MAX_N];
    forward[0] = true;
    backward[0] = true;
    for s in 1usize..(1 << n) {
        let k = s.count_ones() as usize;
        let s32 = s as u32;
        let fwd_row = rows[k - 1] & s32;
        forward[s] = bits(fwd_row).any(|j| forward[s & !(1 << j)]);
        let bwd_row = rows[n - k] & s32;
        backward[s] = bits(bwd_row).any(|j| backward[s & !(1 << j)]);
    }
    Reach { forward, backward }
}

fn forward_full(g: &BipartiteGraph) -> bool {
    let n = g.n();
    let rows = g.rows();
    let mut forward = [false; 1 << MAX_N];
    forward[0] = true;
    for s in 1usize..(1 << n) {
        let k = s.count_ones() as usize;
        forward[s] = bits(rows[k - 1] & s as u32).any(|j| forward[s & !(1 << j)]);
    }
    forward[(1 << n) - 1]
}

/// True iff `g` has a perfect matching.
pub fn has_perfect_matching(g: &BipartiteGraph) -> bool {
    forward_full(g)
}

/// Bitmask over all n² pairs (i, j), edges or not, such that g − a_i − b_j
/// has a perfect matching. For n = 1 the one pair leaves the empty graph,
/// which counts as matchable.
pub fn matchable_after_removal(g: &BipartiteGraph) -> u64 {
    let n = g.n();
    let full = (1usize << n) - 1;
    let reach = reach_tables(g);
    let mut out = 0u64;
    for s in 0..(1usize << n) {
        if !reach.forward[s] {
            continue;
        }
        let i = s.count_ones() as usize;
        if i == n {
            continue;
        }
        for j in bits((full & !s) as u32) {
            if reach.backward[full & !s & !(1 << j)] {
                out |= edge_bit(n, i, j);
            }
        }
    }
    out
}

/// Edges of `g` that lie in at least one perfect matching of `g`.
pub fn allowed_edges(g: &BipartiteGraph) -> u64 {
    matchable_after_removal(g) & g.mask()
}

/// Union of all perfect matchings of `g` (the empty graph if there are none).
pub fn union_of_perfect_matchings(g: &BipartiteGraph) -> BipartiteGraph {
    BipartiteGraph::from_raw(g.n(), allowed_edges(g))
}

/// All perfect matchings, lexicographic in the permutation.
pub fn enumerate_perfect_matchings(g: &BipartiteGraph) -> Vec<Matching> {
    fn go(g: &BipartiteGraph, row: usize, used: u32, perm: &mut Vec<u8>, out: &mut Vec<Matching>) {
        if row == g.n() {
            out.push(Matching { perm: perm.clone() });
            return;
        }
        for j in bits(g.row(row) & !used) {
            perm.push(j as u8);
            go(g, row + 1, used | 1 << j, perm, out);
            perm.pop();
        }
    }
    let mut out = Vec::new();
    go(g, 0, 0, &mut Vec::with_capacity(g.n()), &mut out);
    out
}

/// Connected components over all 2n vertices, ordered by their lowest vertex
/// (left vertices before right ones).
pub fn connected_components(g: &BipartiteGraph) -> Vec<Component> {
    let n = g.n();
    let cols: Vec<u32> = (0..n).map(|j| g.col(j)).collect();
    let all = (1u32 << n) - 1;
    let mut left_open = all;
    let mut right_open = all;
    let mut out = Vec::new();
    while left_open | right_open != 0 {
        let (mut left, mut right) = if left_open != 0 {
            (1u32 << left_open.trailing_zeros(), 0)
        } else {
            (0, 1u32 << right_open.trailing_zeros())
        };
        loop {
            let right2 = right | g.neighborhood(left);
            let left2 = left | bits(right2).fold(0, |acc, j| acc | cols[j]);
            if left2 == left && right2 == right {
                break;
            }
            left = left2;
            right = right2;
        }
        left_open &= !left;
        right_open &= !right;
        out.push(Component { left, right });
    }
    out
}

/// χ(G) = |E| − |V| + |C| with |V| = 2n.
pub fn cyclomatic_number(g: &BipartiteGraph) -> i64 {
    g.edge_count() as i64 - 2 * g.n() as i64 + connected_components(g).len() as i64
}

/// True iff all 2n vertices lie in one component.
pub fn is_connected(g: &BipartiteGraph) -> bool {
    connected_components(g).len() == 1
}
