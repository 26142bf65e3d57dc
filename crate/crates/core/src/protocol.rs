//! Target reindexing, the overhang removal rule and valid environments.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{QpaError, Result};
use crate::spectrum::Spectrum;
use crate::tableaux::YoungDiagram;

/// Target eigenvalue index `k` (1-based) and output copy count `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetSpec {
    pub k: usize,
    pub m: i64,
}

impl TargetSpec {
    pub fn new(k: usize, m: i64, p: &Spectrum) -> Result<Self> {
        if k == 0 || k > p.d() {
            return Err(QpaError::TargetOutOfRange { k, d: p.d() });
        }
        if m < 1 {
            return Err(QpaError::Precondition(format!("m must be at least 1, got {m}")));
        }
        if !p.is_nondegenerate_at(k) {
            return Err(QpaError::DegenerateTarget { k });
        }
        Ok(TargetSpec { k, m })
    }
}

/// Per-row removal counts `m_1..m_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RemovalVector(pub Vec<i64>);

impl RemovalVector {
    pub fn new(counts: Vec<i64>) -> Self {
        RemovalVector(counts)
    }

    /// All `m` boxes taken from row `i` (1-based).
    pub fn unit(d: usize, i: usize, m: i64) -> Self {
        let mut v = vec![0; d];
        v[i - 1] = m;
        RemovalVector(v)
    }

    pub fn counts(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Checks nonnegativity and the horizontal-strip condition against `sigma`.
    pub fn validate(&self, sigma: &YoungDiagram) -> Result<()> {
        let d = sigma.d();
        if self.0.len() != d {
            return Err(QpaError::Mismatch(format!("removal has {} rows, diagram has {d}", self.0.len())));
        }
        for (i, &mi) in self.0.iter().enumerate() {
            if mi < 0 {
                return Err(QpaError::InvalidRemoval(format!("m_{} = {mi} is negative", i + 1)));
            }
            if i + 1 < d && mi > sigma.gap(i + 1, i + 2) {
                return Err(QpaError::InvalidRemoval(format!(
                    "m_{} = {mi} exceeds the row gap {} of {sigma}",
                    i + 1,
                    sigma.gap(i + 1, i + 2)
                )));
            }
        }
        Ok(())
    }

    pub fn is_valid_for(&self, sigma: &YoungDiagram) -> bool {
        self.validate(sigma).is_ok()
    }

    /// Environment `μ = ς − m`.
    pub fn environment(&self, sigma: &YoungDiagram) -> Result<YoungDiagram> {
        self.validate(sigma)?;
        let rows = sigma.rows().iter().zip(&self.0).map(|(s, m)| s - m).collect();
        YoungDiagram::new(rows)
    }

    /// Inverse of [`RemovalVector::environment`].
    pub fn from_environment(sigma: &YoungDiagram, mu: &YoungDiagram) -> Result<Self> {
        if sigma.d() != mu.d() {
            return Err(QpaError::Mismatch(format!("{sigma} and {mu} differ in d")));
        }
        let r = RemovalVector(sigma.rows().iter().zip(mu.rows()).map(|(s, m)| s - m).collect());
        r.validate(sigma)?;
        Ok(r)
    }
}

impl fmt::Display for RemovalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Spectrum with the target moved to the last slot.
#[derive(Debug, Clone, PartialEq)]
pub struct Reindexed {
    pub q: Vec<BigRational>,
    /// `sigma[i-1] = σ(i)`, 1-based.
    pub sigma: Vec<usize>,
}

impl Reindexed {
    /// Recovers `p` from `q`.
    pub fn restore(&self) -> Vec<BigRational> {
        self.sigma.iter().map(|&s| self.q[s - 1].clone()).collect()
    }
}

/// `σ(i)=i` for `i<k`, `σ(k)=d`, `σ(i)=i−1` for `i>k`; `q_{σ(i)} = p_i`.
pub fn reindex_spectrum(p: &Spectrum, k: usize) -> Result<Reindexed> {
    let d = p.d();
    if k == 0 || k > d {
        return Err(QpaError::TargetOutOfRange { k, d });
    }
    if !p.is_nondegenerate_at(k) {
        return Err(QpaError::DegenerateTarget { k });
    }
    Ok(reindex_unchecked(p.probs(), k))
}

fn reindex_unchecked(p: &[BigRational], k: usize) -> Reindexed {
    let sigma = target_permutation(p.len(), k);
    Reindexed { q: reindex_vec(p, k), sigma }
}

/// `σ` as a 1-based lookup table.
pub fn target_permutation(d: usize, k: usize) -> Vec<usize> {
    (1..=d)
        .map(|i| match i.cmp(&k) {
            std::cmp::Ordering::Less => i,
            std::cmp::Ordering::Equal => d,
            std::cmp::Ordering::Greater => i - 1,
        })
        .collect()
}

/// Moves entry `k` (1-based) to the end; works for any element type.
pub fn reindex_vec<T: Clone>(p: &[T], k: usize) -> Vec<T> {
    let mut q: Vec<T> = p.iter().enumerate().filter(|&(i, _)| i + 1 != k).map(|(_, x)| x.clone()).collect();
    q.push(p[k - 1].clone());
    q
}

/// Smallest `i ≥ k` with `Δ_{k,i+1} ≥ m`, where `Δ_{k,d+1} = ∞`.
///
/// `gaps[j]` holds `Δ_{k,k+1+j}`, so `gaps` has `d − k` entries.
pub fn terminal_index(gaps: &[i64], k: usize, m: i64) -> usize {
    k + gaps.iter().position(|&g| g >= m).unwrap_or(gaps.len())
}

/// Macroscopic terminal index `I* = min{i ≥ k : D_{k,i+1} ≥ R}`.
///
/// `gaps[j]` holds `D_{k,k+1+j}`.
pub fn terminal_index_macro(gaps: &[f64], k: usize, rate: f64) -> usize {
    k + gaps.iter().position(|&g| g >= rate).unwrap_or(gaps.len())
}

/// The terminal index of the overhang rule for a concrete diagram.
pub fn overhang_terminal(sigma: &YoungDiagram, k: usize, m: i64) -> usize {
    let gaps: Vec<i64> = (k + 1..=sigma.d()).map(|j| sigma.gap(k, j)).collect();
    terminal_index(&gaps, k, m)
}

/// The overhang removal: saturate rows `k..i*−1`, then take the rest from `i*`.
pub fn overhang_removal(sigma: &YoungDiagram, k: usize, m: i64) -> Result<RemovalVector> {
    let d = sigma.d();
    if k == 0 || k > d {
        return Err(QpaError::TargetOutOfRange { k, d });
    }
    if m < 0 {
        return Err(QpaError::Precondition(format!("m must be nonnegative, got {m}")));
    }
    let istar = overhang_terminal(sigma, k, m);
    let rows = sigma.rows();
    let mu: Vec<i64> = (1..=d)
        .map(|i| {
            if i < k || i > istar {
                rows[i - 1]
            } else if i < istar {
                rows[i]
            } else {
                rows[k - 1] - m
            }
        })
        .collect();
    let removal = RemovalVector(rows.iter().zip(&mu).map(|(s, u)| s - u).collect());
    debug_assert!(removal.is_valid_for(sigma));
    Ok(removal)
}

/// All valid removal vectors of `m` boxes, in lexicographically descending
/// order of the removal (removals from the top rows come first).
pub fn enumerate_environments(sigma: &YoungDiagram, m: i64) -> Vec<RemovalVector> {
    fn rec(sigma: &YoungDiagram, row: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<RemovalVector>) {
        let d = sigma.d();
        if row == d {
            cur.push(left);
            out.push(RemovalVector(cur.clone()));
            cur.pop();
            return;
        }
        let cap = sigma.gap(row, row + 1).min(left);
        for take in (0..=cap).rev() {
            cur.push(take);
            rec(sigma, row + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m >= 0 {
        rec(sigma, 1, m, &mut Vec::new(), &mut out);
    }
    out
}
