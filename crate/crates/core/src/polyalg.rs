//! Exact multilinear polynomials over the n² edge variables.
//!
//! Dense transforms work on 2^(n²) buffers, one in-place pass per variable.
//! Results are kept sparse, as `(mask, coefficient)` pairs sorted by mask.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitgraph::{bits64, BipartiteGraph, MAX_N};
use crate::error::{Error, Result};
use crate::limits;

#[inline]
fn odd(m: u64) -> bool {
    m.count_ones() & 1 == 1
}

fn check_n(op: &'static str, n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::domain(format!("side size must be in 1..={MAX_N}, got {n}")));
    }
    limits::check(op, n)
}

// ---------------------------------------------------------------------------
// Subset transforms
// ---------------------------------------------------------------------------

/// Buffers up to this length are transformed on the calling thread.
const SERIAL_LEN: usize = 1 << 12;

/// One butterfly pass over variable `bit`; `f(lo, hi)` sees the pair of
/// entries differing only in that bit.
fn pass<T: Send>(buf: &mut [T], bit: usize, f: impl Fn(&mut T, &mut T) + Sync) {
    let h = 1usize << bit;
    if buf.len() <= SERIAL_LEN {
        for c in buf.chunks_mut(2 * h) {
            let (lo, hi) = c.split_at_mut(h);
            lo.iter_mut().zip(hi).for_each(|(l, u)| f(l, u));
        }
    } else if buf.len() / (2 * h) >= 64 {
        buf.par_chunks_mut(2 * h).for_each(|c| {
            let (lo, hi) = c.split_at_mut(h);
            lo.iter_mut().zip(hi).for_each(|(l, u)| f(l, u));
        });
    } else {
        for c in buf.chunks_mut(2 * h) {
            let (lo, hi) = c.split_at_mut(h);
            lo.par_iter_mut().zip(hi.par_iter_mut()).for_each(|(l, u)| f(l, u));
        }
    }
}

fn vars(buf_len: usize) -> usize {
    buf_len.trailing_zeros() as usize
}

/// `buf[S] ← Σ_{T ⊆ S} buf[T]`, i.e. coefficients to values.
pub fn subset_zeta<T>(buf: &mut [T])
where
    T: Copy + Send + Sync + Add<Output = T>,
{
    for b in 0..vars(buf.len()) {
        pass(buf, b, |lo, hi| *hi = *hi + *lo);
    }
}

/// Inverse of [`subset_zeta`]: values to coefficients.
pub fn subset_mobius<T>(buf: &mut [T])
where
    T: Copy + Send + Sync + Sub<Output = T>,
{
    for b in 0..vars(buf.len()) {
        pass(buf, b, |lo, hi| *hi = *hi - *lo);
    }
}

/// `buf[S] ← Σ_{T ⊇ S} buf[T]`.
pub fn superset_zeta<T>(buf: &mut [T])
where
    T: Copy + Send + Sync + Add<Output = T>,
{
    for b in 0..vars(buf.len()) {
        pass(buf, b, |lo, hi| *lo = *lo + *hi);
    }
}

// ---------------------------------------------------------------------------
// Truth tables
// ---------------------------------------------------------------------------

/// 2^(n²) Boolean outputs indexed by edge mask.
#[derive(Clone, PartialEq, Eq)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, ones={})", self.n, self.count_ones())
    }
}

impl TruthTable {
    /// Fills the table in parallel, 64 inputs per task.
    pub fn from_fn(n: usize, f: impl Fn(u64) -> bool + Sync) -> Result<Self> {
        check_n("truth_table", n)?;
        let len = 1u64 << (n * n);
        let word = |w: u64| {
            let base = w * 64;
            let top = (len - base).min(64);
            (0..top).fold(0u64, |acc, k| acc | (f(base + k) as u64) << k)
        };
        let words = if len <= SERIAL_LEN as u64 {
            (0..len.div_ceil(64)).map(word).collect()
        } else {
            (0..len.div_ceil(64)).into_par_iter().map(word).collect()
        };
        Ok(TruthTable { n, words })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> u64 {
        1 << (self.n * self.n)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, mask: u64) -> bool {
        self.words[(mask >> 6) as usize] >> (mask & 63) & 1 == 1
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// The table of x ↦ 1 − f(1 − x).
    pub fn dual(&self) -> TruthTable {
        let full = self.len() - 1;
        TruthTable::from_fn(self.n, |m| !self.get(full ^ m)).expect("same n as an existing table")
    }
}

// ---------------------------------------------------------------------------
// Integer polynomials
// ---------------------------------------------------------------------------

/// Sparse multilinear polynomial with integer coefficients, no zero terms,
/// terms sorted by mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultilinearPoly {
    n: usize,
    terms: Vec<(u64, i64)>,
}

impl fmt::Debug for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultilinearPoly(n={}, {} terms)", self.n, self.terms.len())
    }
}

impl MultilinearPoly {
    pub fn zero(n: usize) -> Self {
        MultilinearPoly { n, terms: Vec::new() }
    }

    /// Builds a polynomial from arbitrary terms; duplicates are summed and zeros dropped.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (u64, i64)>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::domain(format!("side size must be in 1..={MAX_N}, got {n}")));
        }
        let limit = n * n;
        let mut v: Vec<(u64, i64)> = terms.into_iter().collect();
        if let Some(&(m, _)) = v.iter().find(|(m, _)| limit < 64 && m >> limit != 0) {
            return Err(Error::domain(format!("monomial 0x{m:X} uses a variable beyond n = {n}")));
        }
        v.sort_unstable_by_key(|t| t.0);
        let mut out: Vec<(u64, i64)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Ok(MultilinearPoly { n, terms: out })
    }


    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(u64, i64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u64) -> i64 {
        self.terms
            .binary_search_by_key(&mask, |t| t.0)
            .map_or(0, |k| self.terms[k].1)
    }

    /// Σ_{S ⊆ E(g)} a_S.
    pub fn evaluate(&self, g: &BipartiteGraph) -> i64 {
        self.evaluate_mask(g.mask())
    }

    pub fn evaluate_mask(&self, x: u64) -> i64 {
        self.terms
            .iter()
            .filter(|&&(m, _)| m & !x == 0)
            .map(|&(_, c)| c)
            .sum()
    }

    /// Dense coefficient vector of length 2^(n²).
    pub fn to_dense(&self) -> Vec<i64> {
        let mut buf = vec![0i64; 1 << (self.n * self.n)];
        for &(m, c) in &self.terms {
            buf[m as usize] = c;
        }
        buf
    }

    fn from_dense(n: usize, buf: &[i64]) -> Self {
        let terms = buf
            .par_iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(m, &c)| (m as u64, c))
            .collect();
        MultilinearPoly { n, terms }
    }

    /// Text listing, one term per line, ordered by (degree, mask).
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0\n".to_string();
        }
        let mut order: Vec<&(u64, i64)> = self.terms.iter().collect();
        order.sort_by_key(|&&(m, _)| (m.count_ones(), m));
        let mut out = String::new();
        for &&(m, c) in &order {
            out.push_str(if c < 0 { "- " } else { "+ " });
            let a = c.unsigned_abs();
            if a != 1 || m == 0 {
                out.push_str(&a.to_string());
            }
            out.push_str(&monomial_text(self.n, m));
            out.push('\n');
        }
        out
    }

    /// Parses the text listing. Also accepts multi-term lines and LaTeX
    /// alignment residue (`&`, `\\`, a leading `name(x) =`).
    pub fn parse_text(n: usize, text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        if text.trim() == "0" {
            return Self::from_terms(n, terms);
        }
        for line in text.lines() {
            let body = line.rsplit_once('=').map_or(line, |(_, r)| r);
            let body = body.replace("\\\\", " ").replace('&', " ");
            parse_terms(n, &body, &mut terms)?;
        }
        Self::from_terms(n, terms)
    }

    pub fn to_json(&self, basis: Basis) -> String {
        let doc = PolyDoc {
            n: self.n,
            basis,
            shared_exponent: None,
            terms: self
                .terms
                .iter()
                .map(|&(m, c)| TermDoc::new(self.n, m, serde_json::Value::from(c)))
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<(Basis, Self)> {
        let doc: PolyDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in &doc.terms {
            let hex = t.mask.trim_start_matches("0x").trim_start_matches("0X");
            let m = u64::from_str_radix(hex, 16)
                .map_err(|e| Error::Parse(format!("mask `{}`: {e}", t.mask)))?;
            let c = t
                .coeff
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("coefficient `{}` is not an integer", t.coeff)))?;
            terms.push((m, c));
        }
        Ok((doc.basis, Self::from_terms(doc.n, terms)?))
    }
}

fn monomial_text(n: usize, m: u64) -> String {
    bits64(m)
        .map(|b| format!("x_{{{}, {}}}", b / n + 1, b % n + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_terms(n: usize, s: &str, out: &mut Vec<(u64, i64)>) -> Result<()> {
    let err = |msg: &str| Error::Parse(format!("{msg} in `{}`", s.trim()));
    let b = s.as_bytes();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < b.len() && b[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let read_num = |i: &mut usize| -> Option<u64> {
        let start = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        s[start..*i].parse().ok()
    };
    loop {
        skip_ws(&mut i);
        if i >= b.len() {
            return Ok(());
        }
        let mut sign = 1i64;
        if b[i] == b'+' || b[i] == b'-' {
            if b[i] == b'-' {
                sign = -1;
            }
            i += 1;
            skip_ws(&mut i);
        } else if !out.is_empty() && i != 0 {
            return Err(err("missing sign between terms"));
        }
        let coeff = read_num(&mut i);
        let mut mask = 0u64;
        loop {
            skip_ws(&mut i);
            if !s[i..].starts_with("x_{") {
                break;
            }
            i += 3;
            skip_ws(&mut i);
            let r = read_num(&mut i).ok_or_else(|| err("bad row index"))?;
            skip_ws(&mut i);
            if i >= b.len() || b[i] != b',' {
                return Err(err("expected `,`"));
            }
            i += 1;
            skip_ws(&mut i);
            let c = read_num(&mut i).ok_or_else(|| err("bad column index"))?;
            skip_ws(&mut i);
            if i >= b.len() || b[i] != b'}' {
                return Err(err("expected `}`"));
            }
            i += 1;
            let (r, c) = (r as usize, c as usize);
            if r == 0 || c == 0 || r > n || c > n {
                return Err(err("variable index out of range"));
            }
            mask |= 1 << ((r - 1) * n + (c - 1));
        }
        if coeff.is_none() && mask == 0 {
            return Err(err("expected a coefficient or monomial"));
        }
        let c = coeff.unwrap_or(1) as i64;
        out.push((mask, sign * c));
    }
}

/// Multilinear representation of a truth table, by Möbius inversion over subsets.
pub fn interpolate(t: &TruthTable) -> Result<MultilinearPoly> {
    check_n("interpolate", t.n())?;
    let mut buf: Vec<i64> = (0..t.len()).map(|m| t.get(m) as i64).collect();
    subset_mobius(&mut buf);
    Ok(MultilinearPoly::from_dense(t.n(), &buf))
}

pub fn evaluate(p: &MultilinearPoly, g: &BipartiteGraph) -> i64 {
    p.evaluate(g)
}

/// Truth table of a 0/1-valued polynomial; errors at the first input with
/// a value outside {0, 1}.
pub fn truth_of(p: &MultilinearPoly) -> Result<TruthTable> {
    check_n("truth_table", p.n())?;
    let mut buf = p.to_dense();
    subset_zeta(&mut buf);
    if let Some(m) = buf.par_iter().position_first(|&v| v != 0 && v != 1) {
        return Err(Error::domain(format!(
            "polynomial takes value {} at input 0x{m:X}, not Boolean",
            buf[m]
        )));
    }
    TruthTable::from_fn(p.n(), |m| buf[m as usize] == 1)
}

fn check_boolean(p: &MultilinearPoly) -> Result<()> {
    let mut buf = p.to_dense();
    subset_zeta(&mut buf);
    match buf.par_iter().position_first(|&v| v != 0 && v != 1) {
        Some(m) => Err(Error::domain(format!(
            "polynomial takes value {} at input 0x{m:X}, not Boolean",
            buf[m]
        ))),
        None => Ok(()),
    }
}

/// Polynomial of f*(x) = 1 − f(1 − x). Verifies that `p` is 0/1-valued on
/// every input first.
pub fn dualize(p: &MultilinearPoly) -> Result<MultilinearPoly> {
    check_n("dualize", p.n())?;
    check_boolean(p)?;
    dualize_trusted(p)
}

/// [`dualize`] without the Boolean check, for callers that know `p` is Boolean.
pub fn dualize_trusted(p: &MultilinearPoly) -> Result<MultilinearPoly> {
    check_n("dualize", p.n())?;
    let mut buf = p.to_dense();
    superset_zeta(&mut buf);
    buf.par_iter_mut().enumerate().for_each(|(s, v)| {
        if !odd(s as u64) {
            *v = -*v;
        }
    });
    buf[0] += 1;
    Ok(MultilinearPoly::from_dense(p.n(), &buf))
}

// ---------------------------------------------------------------------------
// Dyadic rationals and Fourier coefficients
// ---------------------------------------------------------------------------

/// `num / 2^exp`, normalized so `num` is odd or `exp` is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i128,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: i128, exp: u32) -> Self {
        let shift = if num == 0 { exp } else { num.trailing_zeros().min(exp) };
        Dyadic { num: num >> shift, exp: exp - shift }
    }

    pub fn from_int(v: i128) -> Self {
        Dyadic { num: v, exp: 0 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / 2f64.powi(self.exp as i32)
    }

    fn aligned(self, other: Self) -> (i128, i128, u32) {
        let e = self.exp.max(other.exp);
        (self.num << (e - self.exp), other.num << (e - other.exp), e)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Self) -> Self {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Self {
        Dyadic { num: -self.num, exp: self.exp }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Self) -> Self {
        Dyadic::new(self.num * rhs.num, self.exp + rhs.exp)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

/// Fourier expansion with coefficients `numerator / 2^shared_exponent`.
/// Convention: True ↦ −1, False ↦ +1, inputs x_i ∈ {1, −1}.
#[derive(Clone, PartialEq, Eq)]
pub struct DyadicPoly {
    n: usize,
    shared_exponent: u32,
    numerators: Vec<(u64, i128)>,
}

impl fmt::Debug for DyadicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DyadicPoly(n={}, 2^-{}, {} terms)",
            self.n,
            self.shared_exponent,
            self.numerators.len()
        )
    }
}

impl DyadicPoly {
    fn normalized(n: usize, mut exp: u32, mut nums: Vec<(u64, i128)>) -> Self {
        nums.retain(|t| t.1 != 0);
        let tz = nums.iter().map(|t| t.1.trailing_zeros()).min().unwrap_or(exp);
        let shift = tz.min(exp);
        for t in &mut nums {
            t.1 >>= shift;
        }
        exp -= shift;
        DyadicPoly { n, shared_exponent: exp, numerators: nums }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shared_exponent(&self) -> u32 {
        self.shared_exponent
    }

    pub fn numerators(&self) -> &[(u64, i128)] {
        &self.numerators
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn coeff(&self, mask: u64) -> Dyadic {
        let num = self
            .numerators
            .binary_search_by_key(&mask, |t| t.0)
            .map_or(0, |k| self.numerators[k].1);
        Dyadic::new(num, self.shared_exponent)
    }

    /// Value at x ∈ {1, −1}^(n²), where bit i of `negated` means x_i = −1.
    pub fn evaluate_signs(&self, negated: u64) -> Dyadic {
        let s: i128 = self
            .numerators
            .iter()
            .map(|&(m, c)| if odd(m & negated) { -c } else { c })
            .sum();
        Dyadic::new(s, self.shared_exponent)
    }

    /// Σ_S f̂_S².
    pub fn squared_norm(&self) -> Dyadic {
        let s: i128 = self.numerators.iter().map(|t| t.1 * t.1).sum();
        Dyadic::new(s, 2 * self.shared_exponent)
    }

    pub fn to_text(&self) -> String {
        if self.numerators.is_empty() {
            return "0\n".to_string();
        }
        let mut order: Vec<&(u64, i128)> = self.numerators.iter().collect();
        order.sort_by_key(|&&(m, _)| (m.count_ones(), m));
        let mut out = String::new();
        for &&(m, c) in &order {
            let d = Dyadic::new(c.abs(), self.shared_exponent);
            out.push_str(if c < 0 { "- " } else { "+ " });
            out.push_str(&d.to_string());
            if m != 0 {
                out.push(' ');
                out.push_str(&monomial_text(self.n, m));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = PolyDoc {
            n: self.n,
            basis: Basis::Fourier,
            shared_exponent: Some(self.shared_exponent),
            terms: self
                .numerators
                .iter()
                .map(|&(m, c)| {
                    let v = i64::try_from(c)
                        .map(serde_json::Value::from)
                        .unwrap_or_else(|_| serde_json::Value::from(c.to_string()));
                    TermDoc::new(self.n, m, v)
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }
}

/// Fourier expansion of the 0/1 function represented by `p`:
/// f̂_S = (−1)^{|S|−1} Σ_{T ⊇ S} a_T / 2^{|T|−1}, plus 1 on the empty set.
pub fn to_fourier(p: &MultilinearPoly) -> Result<DyadicPoly> {
    check_n("to_fourier", p.n())?;
    check_boolean(p)?;
    let nv = (p.n() * p.n()) as u32;
    let mut buf = vec![0i128; 1 << nv];
    for &(m, c) in p.terms() {
        buf[m as usize] = (c as i128) << (nv - m.count_ones());
    }
    superset_zeta(&mut buf);
    buf.par_iter_mut().enumerate().for_each(|(s, v)| {
        if !odd(s as u64) {
            *v = -*v;
        }
    });
    // scale 2^(nv-1): the additive 1 and the division by 2^(|T|-1)
    buf[0] += 1i128 << (nv - 1);
    let nums = buf
        .par_iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(m, &c)| (m as u64, c))
        .collect();
    Ok(DyadicPoly::normalized(p.n(), nv - 1, nums))
}

// ---------------------------------------------------------------------------
// Degrees and norms
// ---------------------------------------------------------------------------

/// Largest monomial size; `None` for the zero polynomial.
pub fn deg(p: &MultilinearPoly) -> Option<u32> {
    p.terms().iter().map(|t| t.0.count_ones()).max()
}

/// Degree over GF(2): largest monomial with an odd coefficient.
pub fn deg2(p: &MultilinearPoly) -> Option<u32> {
    p.terms()
        .iter()
        .filter(|t| t.1 & 1 != 0)
        .map(|t| t.0.count_ones())
        .max()
}

pub fn monomial_count(p: &MultilinearPoly) -> usize {
    p.len()
}

pub fn l1_norm(p: &MultilinearPoly) -> u64 {
    p.terms().iter().map(|t| t.1.unsigned_abs()).sum()
}

// ---------------------------------------------------------------------------
// JSON documents
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Primal,
    Dual,
    Fourier,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Primal => "primal",
            Basis::Dual => "dual",
            Basis::Fourier => "fourier",
        })
    }
}

#[derive(Serialize, Deserialize)]
struct PolyDoc {
    n: usize,
    basis: Basis,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    shared_exponent: Option<u32>,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    mask: String,
    /// 1-based (row, column) pairs.
    edges: Vec<[usize; 2]>,
    coeff: serde_json::Value,
}

impl TermDoc {
    fn new(n: usize, m: u64, coeff: serde_json::Value) -> Self {
        TermDoc {
            mask: format!("0x{m:X}"),
            edges: bits64(m).map(|b| [b / n + 1, b % n + 1]).collect(),
            coeff,
        }
    }
}
