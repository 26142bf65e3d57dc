//! Young diagrams, Gel'fand–Tsetlin patterns, Schur polynomials and the
//! Schur–Weyl distribution.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{QpaError, Result};
use crate::scalar::Scalar;
use crate::spectrum::Spectrum;

/// Weakly decreasing row lengths with explicit trailing zeros up to `d`.
///
/// Sector labels have nonnegative rows. Environment labels are dominant
/// weights and may go negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct YoungDiagram {
    rows: Vec<i64>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<i64>) -> Result<Self> {
        if rows.is_empty() {
            return Err(QpaError::InvalidShape("a diagram needs at least one row".into()));
        }
        if let Some(i) = rows.windows(2).position(|w| w[0] < w[1]) {
            return Err(QpaError::InvalidShape(format!(
                "rows must be weakly decreasing, got {} < {} at row {}",
                rows[i],
                rows[i + 1],
                i + 1
            )));
        }
        Ok(YoungDiagram { rows })
    }

    /// Like [`YoungDiagram::new`] but additionally rejects negative rows.
    pub fn partition(rows: Vec<i64>) -> Result<Self> {
        let y = Self::new(rows)?;
        if !y.is_partition() {
            return Err(QpaError::InvalidShape(format!("{y} has a negative row")));
        }
        Ok(y)
    }

    /// Pads `rows` with zeros to length `d`.
    pub fn padded(rows: &[i64], d: usize) -> Result<Self> {
        if rows.len() > d {
            return Err(QpaError::InvalidShape(format!("{} rows do not fit in d={d}", rows.len())));
        }
        let mut v = rows.to_vec();
        v.resize(d, 0);
        Self::new(v)
    }

    pub fn empty(d: usize) -> Self {
        YoungDiagram { rows: vec![0; d] }
    }

    pub fn rows(&self) -> &[i64] {
        &self.rows
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    /// Total number of boxes (row sum).
    pub fn n(&self) -> i64 {
        self.rows.iter().sum()
    }

    /// Row `i`, 1-based.
    pub fn row(&self, i: usize) -> i64 {
        self.rows[i - 1]
    }

    /// `Δ_{i,j} = ς_i − ς_j`, 1-based; `j = d+1` is not representable and
    /// callers treat it as infinite.
    pub fn gap(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1] - self.rows[j - 1]
    }

    pub fn is_partition(&self) -> bool {
        self.rows.last().is_none_or(|&r| r >= 0)
    }

    /// Adds `c` to every row.
    pub fn shifted(&self, c: i64) -> Self {
        YoungDiagram { rows: self.rows.iter().map(|r| r + c).collect() }
    }

    /// Containment of diagrams: every row of `self` fits in `other`.
    pub fn is_contained_in(&self, other: &YoungDiagram) -> bool {
        self.d() == other.d() && self.rows.iter().zip(&other.rows).all(|(a, b)| a <= b)
    }
}

impl TryFrom<Vec<i64>> for YoungDiagram {
    type Error = QpaError;

    fn try_from(rows: Vec<i64>) -> Result<Self> {
        YoungDiagram::new(rows)
    }
}

impl From<YoungDiagram> for Vec<i64> {
    fn from(y: YoungDiagram) -> Vec<i64> {
        y.rows
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = QpaError;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut column = 1;
        for item in s.split(',') {
            let v: i64 = item.trim().parse().map_err(|_| QpaError::Parse {
                column,
                message: format!("expected an integer row length, got {:?}", item.trim()),
            })?;
            rows.push(v);
            column += item.len() + 1;
        }
        YoungDiagram::new(rows)
    }
}

/// All partitions of `n` into at most `d` parts, in reverse-lexicographic order.
pub fn enumerate_diagrams(n: i64, d: usize) -> Vec<YoungDiagram> {
    fn rec(remaining: i64, max: i64, slots: usize, prefix: &mut Vec<i64>, d: usize, out: &mut Vec<YoungDiagram>) {
        if remaining == 0 {
            let mut rows = prefix.clone();
            rows.resize(d, 0);
            out.push(YoungDiagram { rows });
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = remaining.min(max);
        // The remaining slots must be able to absorb what is left.
        let lo = (remaining + slots as i64 - 1) / slots as i64;
        for first in (lo..=hi).rev() {
            prefix.push(first);
            rec(remaining - first, first, slots - 1, prefix, d, out);
            prefix.pop();
        }
    }
    assert!(d >= 1, "d must be at least 1");
    let mut out = Vec::new();
    if n >= 0 {
        rec(n, n, d, &mut Vec::new(), d, &mut out);
    }
    out
}

/// Number of standard Young tableaux, via the hook length formula.
pub fn specht_dim(shape: &YoungDiagram) -> Result<BigUint> {
    if !shape.is_partition() {
        return Err(QpaError::InvalidShape(format!("{shape} has a negative row; no Specht module")));
    }
    let rows = shape.rows();
    let n = shape.n() as u64;
    let mut hooks = BigUint::one();
    for (i, &len) in rows.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = rows[i + 1..].iter().take_while(|&&r| r > j).count() as i64;
            hooks *= BigUint::from((arm + leg + 1) as u64);
        }
    }
    let fact: BigUint = (1..=n).map(BigUint::from).product();
    Ok(fact / hooks)
}

/// Weyl dimension formula `Π_{i<j} (ς_i − ς_j + j − i)/(j − i)`.
///
/// Shift invariant, so dominant weights with negative rows are fine.
pub fn weyl_dim(shape: &YoungDiagram) -> BigUint {
    let rows = shape.rows();
    let d = rows.len();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..d {
        for j in i + 1..d {
            num *= BigUint::from((rows[i] - rows[j] + (j - i) as i64) as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    num / den
}

/// Interlacing array `w_{i,b}`, `1 ≤ i ≤ b ≤ d`; level `d` is the top row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GtPattern {
    // levels[b-1] holds w_{1,b}..w_{b,b}
    levels: Vec<Vec<i64>>,
}

impl GtPattern {
    pub fn new(levels: Vec<Vec<i64>>) -> Result<Self> {
        for (b, level) in levels.iter().enumerate() {
            if level.len() != b + 1 {
                return Err(QpaError::Mismatch(format!("level {} has {} entries", b + 1, level.len())));
            }
        }
        for b in 1..levels.len() {
            let (upper, lower) = (&levels[b], &levels[b - 1]);
            for i in 0..lower.len() {
                if !(upper[i] >= lower[i] && lower[i] >= upper[i + 1]) {
                    return Err(QpaError::InvalidShape(format!(
                        "interlacing fails at w_{{{},{}}}={}",
                        i + 1,
                        b,
                        lower[i]
                    )));
                }
            }
        }
        Ok(GtPattern { levels })
    }

    pub fn d(&self) -> usize {
        self.levels.len()
    }

    pub fn top(&self) -> &[i64] {
        self.levels.last().map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Row of level `b` (1-based), i.e. `w_{1,b}..w_{b,b}`.
    pub fn level(&self, b: usize) -> &[i64] {
        &self.levels[b - 1]
    }

    /// `w_{i,b}`, 1-based.
    pub fn entry(&self, i: usize, b: usize) -> i64 {
        self.levels[b - 1][i - 1]
    }

    /// Occupancies `#_1..#_d`.
    pub fn occupancy(&self) -> Vec<i64> {
        let sums: Vec<i64> = self.levels.iter().map(|l| l.iter().sum()).collect();
        (0..sums.len()).map(|b| sums[b] - if b == 0 { 0 } else { sums[b - 1] }).collect()
    }

    /// `#_{b,ℓ}`: how many entries `b` sit in row `ℓ` of the tableau.
    pub fn row_occupancy(&self, b: usize, l: usize) -> i64 {
        let upper = self.entry(l, b);
        let lower = if l < b { self.entry(l, b - 1) } else { 0 };
        upper - lower
    }

    /// `Π q_b^{#_b}`.
    pub fn weight<S: Scalar>(&self, q: &[S]) -> S {
        self.occupancy().iter().zip(q).fold(S::one(), |acc, (&e, qb)| acc * qb.powi(e))
    }
}

/// Rows `μ` of length `d − 1` interlacing `top`, lexicographic, low to high.
pub fn interlacing_rows(top: &[i64]) -> Vec<Vec<i64>> {
    let len = top.len().saturating_sub(1);
    let mut out = Vec::new();
    let mut cur: Vec<i64> = (0..len).map(|i| top[i + 1]).collect();
    loop {
        out.push(cur.clone());
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < top[pos] {
                cur[pos] += 1;
                for (i, c) in cur.iter_mut().enumerate().skip(pos + 1) {
                    *c = top[i + 1];
                }
                break;
            }
        }
    }
}

/// Streams all GT patterns with the given top row.
///
/// Order: lexicographic on level `d−1`, then level `d−2`, and so on, each
/// entry running from low to high.
pub fn enumerate_gt_patterns(top: &YoungDiagram) -> GtPatterns {
    GtPatterns::new(top.rows().to_vec())
}

pub struct GtPatterns {
    // flattened entries of levels d-1, d-2, ..., 1, each left to right
    slots: Vec<(usize, usize)>,
    levels: Vec<Vec<i64>>,
    done: bool,
    fresh: bool,
}

impl GtPatterns {
    fn new(top: Vec<i64>) -> Self {
        let d = top.len();
        let mut levels: Vec<Vec<i64>> = (1..=d).map(|b| vec![0; b]).collect();
        levels[d - 1] = top;
        let mut slots = Vec::new();
        for b in (1..d).rev() {
            for i in 0..b {
                slots.push((i, b - 1));
            }
        }
        let mut it = GtPatterns { slots, levels, done: false, fresh: true };
        it.reset_from(0);
        it
    }

    fn bounds(&self, slot: usize) -> (i64, i64) {
        let (i, lvl) = self.slots[slot];
        let upper = &self.levels[lvl + 1];
        (upper[i + 1], upper[i])
    }

    fn reset_from(&mut self, start: usize) {
        for s in start..self.slots.len() {
            let (lo, _) = self.bounds(s);
            let (i, lvl) = self.slots[s];
            self.levels[lvl][i] = lo;
        }
    }

    fn advance(&mut self) -> bool {
        for s in (0..self.slots.len()).rev() {
            let (_, hi) = self.bounds(s);
            let (i, lvl) = self.slots[s];
            if self.levels[lvl][i] < hi {
                self.levels[lvl][i] += 1;
                self.reset_from(s + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for GtPatterns {
    type Item = GtPattern;

    fn next(&mut self) -> Option<GtPattern> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(GtPattern { levels: self.levels.clone() })
    }
}

/// Schur polynomial `s_ς(q)` as the GT sum, grouped level by level.
///
/// Each level contributes `q_b^{|level b| − |level b−1|}`, so the sum over
/// patterns factorises through the branching rule; subresults are memoised.
pub fn schur_polynomial<S: Scalar>(shape: &YoungDiagram, q: &[S]) -> S {
    assert_eq!(shape.d(), q.len(), "one variable per row");
    let mut memo = HashMap::new();
    schur_rows(shape.rows(), q, &mut memo)
}

pub(crate) fn schur_rows<S: Scalar>(rows: &[i64], q: &[S], memo: &mut HashMap<Vec<i64>, S>) -> S {
    let d = rows.len();
    match d {
        0 => return S::one(),
        1 => return q[0].powi(rows[0]),
        _ => {}
    }
    if let Some(v) = memo.get(rows) {
        return v.clone();
    }
    let total: i64 = rows.iter().sum();
    let mut acc = S::zero();
    for mu in interlacing_rows(rows) {
        let e = total - mu.iter().sum::<i64>();
        let inner = schur_rows(&mu, &q[..d - 1], memo);
        if !inner.is_zero() {
            acc = acc + q[d - 1].powi(e) * inner;
        }
    }
    memo.insert(rows.to_vec(), acc.clone());
    acc
}

/// Complete homogeneous symmetric polynomials `h_0..h_max` in `q`.
pub fn complete_homogeneous(max: usize, q: &[BigRational]) -> Vec<BigRational> {
    let mut h = vec![BigRational::zero(); max + 1];
    h[0] = BigRational::one();
    for qj in q {
        for k in 1..=max {
            let add = qj * &h[k - 1];
            h[k] += add;
        }
    }
    h
}

/// Schur polynomial by the Jacobi–Trudi determinant `det[h_{ς_i − i + j}]`.
///
/// An independent evaluation route kept as a cross-check of
/// [`schur_polynomial`].
pub fn schur_jacobi_trudi(shape: &YoungDiagram, q: &[BigRational]) -> BigRational {
    let d = shape.d();
    assert_eq!(d, q.len(), "one variable per row");
    let low = *shape.rows().last().unwrap();
    let (shape, prefactor) = if low < 0 {
        let prod: BigRational = q.iter().product();
        (shape.shifted(-low), prod.powi(low))
    } else {
        (shape.clone(), BigRational::one())
    };
    let rows = shape.rows();
    let max = (rows[0] + d as i64).max(0) as usize;
    let h = complete_homogeneous(max, q);
    let h_at = |k: i64| if k < 0 { BigRational::zero() } else { h[k as usize].clone() };
    let matrix: Vec<Vec<BigRational>> =
        (0..d).map(|i| (0..d).map(|j| h_at(rows[i] - i as i64 + j as i64)).collect()).collect();
    prefactor * determinant(matrix)
}

/// Exact determinant by Gaussian elimination.
pub fn determinant(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            let (top, rest) = a.split_at_mut(r);
            for (x, y) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// Schur–Weyl mass `g^ς s_ς(p)`.
pub fn sw_mass<S: Scalar>(shape: &YoungDiagram, p: &[S]) -> Result<S> {
    let g = specht_dim(shape)?;
    Ok(S::from_int(&BigInt::from(g)) * schur_polynomial(shape, p))
}

/// Full Schur–Weyl distribution over `ς ⊢_d n`, in [`enumerate_diagrams`] order.
pub fn sw_distribution<S: Scalar>(n: i64, p: &[S]) -> Vec<(YoungDiagram, S)> {
    let d = p.len();
    let mut memo = HashMap::new();
    enumerate_diagrams(n, d)
        .into_iter()
        .map(|shape| {
            let g = specht_dim(&shape).expect("partitions have Specht modules");
            let s = schur_rows(shape.rows(), p, &mut memo);
            let mass = S::from_int(&BigInt::from(g)) * s;
            (shape, mass)
        })
        .collect()
}

/// Shape of the RSK insertion tableau of `word` (letters in `1..=d`).
///
/// Row insertion with the semistandard convention: a letter bumps the
/// leftmost entry strictly greater than itself.
pub fn rsk_shape(word: &[usize], d: usize) -> Result<YoungDiagram> {
    if let Some(&bad) = word.iter().find(|&&x| x == 0 || x > d) {
        return Err(QpaError::Precondition(format!("letter {bad} outside 1..={d}")));
    }
    let mut rows = RskRows::new(d);
    for &x in word {
        rows.insert(x - 1);
    }
    Ok(rows.shape())
}

/// Insertion tableau stored as per-row letter counts; rows are sorted, so
/// counts carry the whole state.
struct RskRows {
    counts: Vec<Vec<u32>>,
}

impl RskRows {
    fn new(d: usize) -> Self {
        RskRows { counts: vec![vec![0; d]; d] }
    }

    fn insert(&mut self, mut x: usize) {
        for row in self.counts.iter_mut() {
            match (x + 1..row.len()).find(|&y| row[y] > 0) {
                Some(y) => {
                    row[y] -= 1;
                    row[x] += 1;
                    x = y;
                }
                None => {
                    row[x] += 1;
                    return;
                }
            }
        }
        unreachable!("letters in 1..=d never need more than d rows");
    }

    fn shape(&self) -> YoungDiagram {
        let rows = self.counts.iter().map(|r| r.iter().map(|&c| c as i64).sum()).collect();
        YoungDiagram { rows }
    }
}

/// Seeded sampler of Schur–Weyl shapes via RSK on i.i.d. letters.
pub struct SwSampler {
    rng: ChaCha8Rng,
    dist: WeightedIndex<f64>,
    d: usize,
}

impl SwSampler {
    pub fn new(p: &Spectrum, seed: u64) -> Self {
        let weights = p.to_f64();
        SwSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            dist: WeightedIndex::new(&weights).expect("spectrum has positive mass"),
            d: p.d(),
        }
    }

    pub fn sample(&mut self, n: usize) -> YoungDiagram {
        let mut rows = RskRows::new(self.d);
        for _ in 0..n {
            let x = self.dist.sample(&mut self.rng);
            rows.insert(x);
        }
        rows.shape()
    }
}

/// One Schur–Weyl sample of `n` letters; deterministic in `seed`.
pub fn sample_sw(n: usize, p: &Spectrum, seed: u64) -> YoungDiagram {
    SwSampler::new(p, seed).sample(n)
}
