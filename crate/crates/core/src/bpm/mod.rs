//! The bipartite perfect matching function BPM_n and its polynomials.
//!
//! Primal coefficients come straight from MC_n: a_G = (−1)^χ(G) on
//! matching-covered graphs and zero elsewhere. Dual coefficients are
//! computed by transform or, one at a time, by summing over MC supergraphs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bitgraph::{
    bits, bits64, connected_components, cyclomatic_number, edge_bit, full_mask,
    has_perfect_matching, supersets, union_of_perfect_matchings, BipartiteGraph,
};
use crate::error::{Error, Result};
use crate::limits;
use crate::matchcov::{is_mc_mask, mc_lookup};
use crate::mclattice::umbrella_masks;
use crate::polyalg::{dualize, interpolate, Dyadic, MultilinearPoly, TruthTable};

pub mod verify;

pub use verify::{verify_all, verify_theorem, Status, VerificationReport};

#[inline]
fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

fn check(op: &'static str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    limits::check(op, n)
}

/// χ of the graph with the given mask.
#[inline]
fn chi(n: usize, mask: u64) -> i64 {
    cyclomatic_number(&BipartiteGraph::from_raw(n, mask))
}

// ---------------------------------------------------------------------------
// Truth table and polynomials
// ---------------------------------------------------------------------------

pub fn bpm_truth(n: usize) -> Result<TruthTable> {
    check("truth_table", n)?;
    TruthTable::from_fn(n, |m| has_perfect_matching(&BipartiteGraph::from_raw(n, m)))
}

/// Primal polynomial from the closed form, without interpolation.
pub fn primal_polynomial(n: usize) -> Result<MultilinearPoly> {
    check("primal_polynomial", n)?;
    let terms: Vec<(u64, i64)> = (1..=full_mask(n))
        .into_par_iter()
        .filter(|&m| is_mc_mask(n, m))
        .map(|m| (m, sign(chi(n, m) & 1 == 1)))
        .collect();
    MultilinearPoly::from_terms(n, terms)
}

/// Dual polynomial, by dualizing the primal one.
pub fn dual_polynomial(n: usize) -> Result<MultilinearPoly> {
    check("dual_polynomial", n)?;
    dualize(&primal_polynomial(n)?)
}

/// Dual polynomial by interpolating the dual truth table; an independent
/// second route to [`dual_polynomial`].
pub fn dual_polynomial_by_interpolation(n: usize) -> Result<MultilinearPoly> {
    check("dual_polynomial", n)?;
    interpolate(&bpm_truth(n)?.dual())
}

/// Sum of `f` over every mask between `base` and `full`, parallel over the
/// highest free bits.
fn sum_over_supersets(base: u64, full: u64, f: impl Fn(u64) -> i64 + Sync) -> i64 {
    let free: Vec<usize> = bits64(full & !base).collect();
    let split = free.len().saturating_sub(12).min(10);
    if split == 0 {
        return supersets(base, full).map(&f).sum();
    }
    let hi = &free[free.len() - split..];
    let hi_mask = hi.iter().fold(0u64, |a, &b| a | 1 << b);
    let lo_full = full & !hi_mask;
    (0u64..1 << split)
        .into_par_iter()
        .map(|k| {
            let pick = hi
                .iter()
                .enumerate()
                .filter(|(t, _)| k >> t & 1 == 1)
                .fold(0u64, |a, (_, &b)| a | 1 << b);
            supersets(base | pick, lo_full | pick).map(&f).sum::<i64>()
        })
        .sum()
}

/// a*_G = (−1)^{|E|+1} Σ_{H ⊇ G, H ∈ MC_n} (−1)^χ(H), streamed over supergraphs.
pub fn dual_coefficient(g: &BipartiteGraph) -> Result<i64> {
    let n = g.n();
    check("dual_coefficient", n)?;
    if g.is_empty() {
        return Err(Error::domain("the dual coefficient is defined here for nonempty graphs"));
    }
    let is_mc = mc_lookup(n);
    let s = sum_over_supersets(g.mask(), full_mask(n), |h| {
        if is_mc(h) {
            sign(chi(n, h) & 1 == 1)
        } else {
            0
        }
    });
    Ok(sign(g.edge_count() % 2 == 0) * s)
}

/// a*_G from the umbrella: (−1)^{n+|E|} Σ over nonempty S ⊆ U(G) whose union
/// is K_{n,n} of (−1)^{|S|+1}. Limited to n ≤ 4.
pub fn umbrella_inclusion_exclusion(g: &BipartiteGraph) -> Result<i64> {
    let n = g.n();
    if g.is_empty() {
        return Err(Error::domain("umbrella of the empty graph is undefined"));
    }
    limits::check("umbrella", n)?;
    let u = umbrella_masks(g);
    // f[m] = Σ (−1)^{|S|} over subfamilies S with union m
    let mut f: BTreeMap<u64, i64> = BTreeMap::from([(0, 1)]);
    for &h in &u {
        let cur: Vec<(u64, i64)> = f.iter().map(|(&m, &c)| (m, c)).collect();
        for (m, c) in cur {
            *f.entry(m | h).or_insert(0) -= c;
        }
    }
    let full = full_mask(n);
    let s = -f.get(&full).copied().unwrap_or(0);
    Ok(sign((n as u32 + g.edge_count()) % 2 == 1) * s)
}

// ---------------------------------------------------------------------------
// Total orders
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TotalOrderClass {
    NotTotallyOrdered,
    StrictlyTotallyOrdered,
    TotallyOrderedNonStrict,
}

impl TotalOrderClass {
    pub fn is_totally_ordered(self) -> bool {
        self != TotalOrderClass::NotTotallyOrdered
    }
}

impl fmt::Display for TotalOrderClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Left neighborhoods sorted by degree must form a chain under inclusion;
/// strict when every inclusion is proper and the smallest set is nonempty.
pub fn classify_total_order(g: &BipartiteGraph) -> TotalOrderClass {
    let n = g.n();
    let mut rows: Vec<u32> = (0..n).map(|i| g.row(i)).collect();
    rows.sort_by_key(|r| std::cmp::Reverse(r.count_ones()));
    let chain = rows.windows(2).all(|w| w[1] & !w[0] == 0);
    if !chain {
        return TotalOrderClass::NotTotallyOrdered;
    }
    let strict = rows.windows(2).all(|w| w[0] != w[1]) && rows[n - 1] != 0;
    if strict {
        TotalOrderClass::StrictlyTotallyOrdered
    } else {
        TotalOrderClass::TotallyOrderedNonStrict
    }
}

// ---------------------------------------------------------------------------
// Hall violators
// ---------------------------------------------------------------------------

/// All K_{X,Y} with |X| + |Y| = n + 1, in increasing mask order.
pub fn enumerate_hall_violators(n: usize) -> Result<Vec<BipartiteGraph>> {
    if !(2..=crate::bitgraph::MAX_N).contains(&n) {
        return Err(Error::domain(format!("Hall violators need 2 <= n <= 8, got {n}")));
    }
    let side = (1u32 << n) - 1;
    let mut out = Vec::new();
    for x in 1..=side {
        for y in 1..=side {
            if (x.count_ones() + y.count_ones()) as usize == n + 1 {
                out.push(BipartiteGraph::biclique(n, x, y)?);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Every edge lies in some Hall violator contained in `g`. The empty graph
/// is the empty union and counts as covered.
pub fn is_hvc(g: &BipartiteGraph) -> bool {
    let n = g.n();
    let rows = g.rows();
    g.edges().all(|(a, b)| {
        let others = rows[a] & !(1 << b);
        crate::bitgraph::subsets(others as u64).any(|y| {
            let y = y as u32 | 1 << b;
            let x = (0..n).filter(|&u| y & !rows[u] == 0).count();
            x + y.count_ones() as usize > n
        })
    })
}

/// The graph (X × B) ∪ (Y × U) with X the first n/2 left vertices and U the
/// first n/2 − 1 right vertices, whose every supergraph is Hall-violator
/// covered. Checks both properties before returning (the supergraph check
/// only while the family has at most 2^12 members).
pub fn hvc_lower_bound_witness(n: usize) -> Result<BipartiteGraph> {
    if n < 2 || n % 2 == 1 || n > crate::bitgraph::MAX_N {
        return Err(Error::domain(format!("the witness is built for even n in 2..=8, got {n}")));
    }
    let k = n / 2;
    let x = (1u32 << k) - 1;
    let y = ((1u32 << n) - 1) & !x;
    let u = (1u32 << (k - 1)) - 1;
    let all = (1u32 << n) - 1;
    let w = BipartiteGraph::new(
        n,
        BipartiteGraph::biclique(n, x, all)?.mask() | BipartiteGraph::biclique(n, y, u)?.mask(),
    )?;
    let free = full_mask(n) & !w.mask();
    if free.count_ones() <= 12 {
        if let Some(bad) = supersets(w.mask(), full_mask(n)).find(|&m| !is_hvc(&BipartiteGraph::from_raw(n, m))) {
            return Err(Error::Invariant { what: "supergraph of the witness is not covered".into(), mask: bad });
        }
    } else if !is_hvc(&w) {
        return Err(Error::Invariant { what: "witness is not covered".into(), mask: w.mask() });
    }
    Ok(w)
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

/// Stirling number of the second kind, S(m, k).
pub fn stirling2(m: usize, k: usize) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for i in 1..=m {
        for j in (1..=k.min(i)).rev() {
            row[j] = &row[j] * BigUint::from(j) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

fn factorial(m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |a, k| a * BigUint::from(k))
}

/// Ordered set partitions of an m-set: Σ_k k!·S(m, k).
pub fn fubini(m: usize) -> BigUint {
    (0..=m).map(|k| factorial(k) * stirling2(m, k)).sum()
}

/// Number of totally ordered graphs on K_{n,n}: Σ_{k=1}^{n+1} ((k−1)!·S(n+1, k))².
pub fn totally_ordered_count(n: usize) -> BigUint {
    (1..=n + 1)
        .map(|k| {
            let t = factorial(k - 1) * stirling2(n + 1, k);
            &t * &t
        })
        .sum()
}

/// Counts of (totally ordered, strictly totally ordered) graphs by exhaustive
/// classification.
pub fn classify_all(n: usize) -> Result<(u64, u64)> {
    check("truth_table", n)?;
    Ok((0..=full_mask(n))
        .into_par_iter()
        .map(|m| match classify_total_order(&BipartiteGraph::from_raw(n, m)) {
            TotalOrderClass::NotTotallyOrdered => (0, 0),
            TotalOrderClass::StrictlyTotallyOrdered => (1, 1),
            TotalOrderClass::TotallyOrderedNonStrict => (1, 0),
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1)))
}

/// Probability that a uniformly random subgraph of K_{n,n} has a perfect
/// matching, as Σ_{G ∈ MC_n} (−1)^χ(G) / 2^{|E(G)|}.
pub fn pm_probability(n: usize) -> Result<Dyadic> {
    check("pm_probability", n)?;
    let nv = (n * n) as u32;
    let num: i128 = (1..=full_mask(n))
        .into_par_iter()
        .filter(|&m| is_mc_mask(n, m))
        .map(|m| sign(chi(n, m) & 1 == 1) as i128 * (1i128 << (nv - m.count_ones())))
        .sum();
    Ok(Dyadic::new(num, nv))
}

// ---------------------------------------------------------------------------
// Decision-tree bounds
// ---------------------------------------------------------------------------

/// Largest n whose count-based bounds are computed.
pub const BOUNDS_COUNT_MAX_N: usize = 4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    /// Degree over GF(2) of the primal polynomial.
    pub deg2_value: Option<u32>,
    /// XOR decision-tree lower bound, equal to `deg2_value`.
    pub xor_lb: Option<u32>,
    pub primal_monomials: Option<u64>,
    pub dual_monomials: Option<u64>,
    /// log₃ of the primal monomial count.
    pub and_lb: Option<f64>,
    pub and_lb_ceil: Option<u64>,
    /// log₃ of the dual monomial count.
    pub or_lb_mon: Option<f64>,
    pub or_lb_mon_ceil: Option<u64>,
    /// 2·log₃(n!).
    pub or_lb_factorial: f64,
    pub or_lb_factorial_ceil: u64,
    /// (n + 2)^(2n + 2), the ceiling on the dual monomial count.
    pub comm_rank_bound: String,
    /// Dual monomial count is below `comm_rank_bound`.
    pub comm_rank_ok: Option<bool>,
}

/// Rounds to 12 significant digits, the precision reports are printed at.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

pub fn log3(x: f64) -> f64 {
    x.ln() / 3f64.ln()
}

/// Smallest integer ≥ x, treating values within 1e−12 of an integer as that integer.
fn ceil_tol(x: f64) -> u64 {
    let r = x.round();
    if (x - r).abs() < 1e-12 {
        r as u64
    } else {
        x.ceil() as u64
    }
}

pub fn bounds_report(n: usize) -> Result<BoundsReport> {
    if n == 0 || n > crate::bitgraph::MAX_N {
        return Err(Error::domain(format!("n must be in 1..=8, got {n}")));
    }
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    let or_f = 2.0 * log3(fact);
    let ceiling = BigUint::from(n + 2).pow(2 * n as u32 + 2);
    let mut r = BoundsReport {
        n,
        deg2_value: None,
        xor_lb: None,
        primal_monomials: None,
        dual_monomials: None,
        and_lb: None,
        and_lb_ceil: None,
        or_lb_mon: None,
        or_lb_mon_ceil: None,
        or_lb_factorial: or_f,
        or_lb_factorial_ceil: ceil_tol(or_f),
        comm_rank_bound: ceiling.to_string(),
        comm_rank_ok: None,
    };
    if n <= BOUNDS_COUNT_MAX_N {
        let p = primal_polynomial(n)?;
        let d = dualize(&p)?;
        let (pc, dc) = (p.len() as u64, d.len() as u64);
        let d2 = crate::polyalg::deg2(&p);
        r.deg2_value = d2;
        r.xor_lb = d2;
        r.primal_monomials = Some(pc);
        r.dual_monomials = Some(dc);
        r.and_lb = Some(log3(pc as f64));
        r.and_lb_ceil = Some(ceil_tol(log3(pc as f64)));
        r.or_lb_mon = Some(log3(dc as f64));
        r.or_lb_mon_ceil = Some(ceil_tol(log3(dc as f64)));
        r.comm_rank_ok = Some(BigUint::from(dc) < ceiling);
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// Zero tests from the structure of the union of perfect matchings
// ---------------------------------------------------------------------------

/// Sufficient condition for a*_G = 0 when G has a perfect matching but is
/// not matching-covered. With G′ the union of G's perfect matchings, true iff
/// some component of G′ is not complete bipartite, or all are and some
/// ordered pair of components (C₁, C₂) has (A₁ × B₂) ∩ E(G) nonempty and
/// proper.
pub fn pm_union_zero_test(g: &BipartiteGraph) -> Result<bool> {
    let n = g.n();
    if !has_perfect_matching(g) {
        return Err(Error::domain(format!("{g:?} has no perfect matching")));
    }
    if is_mc_mask(n, g.mask()) {
        return Err(Error::domain(format!("{g:?} is matching-covered")));
    }
    let u = union_of_perfect_matchings(g);
    let comps = connected_components(&u);
    let block = |l: u32, r: u32| -> u64 {
        bits(l).fold(0u64, |acc, i| bits(r).fold(acc, |a, j| a | edge_bit(n, i, j)))
    };
    if comps.iter().any(|c| u.mask() & block(c.left, c.right) != block(c.left, c.right)) {
        return Ok(true);
    }
    for c1 in &comps {
        for c2 in &comps {
            if c1 == c2 {
                continue;
            }
            let slice = block(c1.left, c2.right);
            let hit = g.mask() & slice;
            if hit != 0 && hit != slice {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

// ---------------------------------------------------------------------------
// Coefficient summaries
// ---------------------------------------------------------------------------

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Smallest mask over all row and column permutations.
pub fn canonical_mask(g: &BipartiteGraph) -> u64 {
    let perms = permutations(g.n());
    perms
        .iter()
        .flat_map(|r| perms.iter().map(move |c| g.permuted(r, c).mask()))
        .min()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoeffGroup {
    pub coeff: i64,
    pub monomials: usize,
    /// Classes under independent row and column permutations.
    pub classes: usize,
}

/// Monomials grouped by coefficient value, with isomorphism-class counts.
pub fn coefficient_summary(p: &MultilinearPoly) -> Vec<CoeffGroup> {
    let n = p.n();
    let mut groups: BTreeMap<i64, (usize, std::collections::BTreeSet<u64>)> = BTreeMap::new();
    let canon: Vec<(i64, u64)> = p
        .terms()
        .par_iter()
        .map(|&(m, c)| (c, canonical_mask(&BipartiteGraph::from_raw(n, m))))
        .collect();
    for (c, k) in canon {
        let e = groups.entry(c).or_default();
        e.0 += 1;
        e.1.insert(k);
    }
    groups
        .into_iter()
        .map(|(coeff, (monomials, cls))| CoeffGroup { coeff, monomials, classes: cls.len() })
        .collect()
}

// ---------------------------------------------------------------------------
// Golden data
// ---------------------------------------------------------------------------

/// The published listing of the n = 3 dual polynomial, as LaTeX source.
pub const BPM_STAR_3_LISTING: &str = include_str!("../../data/bpm_star_3.tex");

/// [`BPM_STAR_3_LISTING`] parsed into a polynomial.
pub fn bpm_star_3_reference() -> MultilinearPoly {
    MultilinearPoly::parse_text(3, BPM_STAR_3_LISTING).expect("bundled listing parses")
}
