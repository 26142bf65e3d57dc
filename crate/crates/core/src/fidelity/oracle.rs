//! Brute-force fidelity oracle built from permutation operators on
//! `(C^d)^{⊗N}`.
//!
//! A covariant channel `ς → ρ ⊗ μ` has sector fidelity
//! `Tr[A Q P ρ^{⊗N}] / Tr[Q P ρ^{⊗N}]`, where `Q` is a symmetrizer onto
//! `ρ ⊗ ν` (with `ν = μ + c` shifted to a polynomial weight), `P` is the
//! central idempotent of `ς + c` and `A` projects the output sites onto the
//! target. Every operator is an element of the symmetric group algebra, so
//! the traces reduce to sums over cycle types. Nothing here touches GT
//! patterns or Clebsch–Gordan formulas.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{QpaError, Result};
use crate::tableaux::YoungDiagram;

/// Largest tensor power the oracle accepts.
const MAX_SITES: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleOutput {
    pub all_site: BigRational,
    pub one_site: BigRational,
}

type Perm = Vec<u8>;

fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn all_perms_of(items: &[u8]) -> Vec<Vec<u8>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in all_perms_of(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn parity(p: &Perm) -> i64 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Permutations of `n` points that only move points inside `block`.
fn block_perms(n: usize, block: &[u8]) -> Vec<Perm> {
    all_perms_of(block)
        .into_iter()
        .map(|img| {
            let mut p = identity(n);
            for (src, dst) in block.iter().zip(img) {
                p[*src as usize] = dst;
            }
            p
        })
        .collect()
}

/// Product of the full permutation groups of disjoint blocks.
fn block_group(n: usize, blocks: &[Vec<u8>]) -> Vec<Perm> {
    let mut group = vec![identity(n)];
    for b in blocks.iter().filter(|b| b.len() > 1) {
        let gens = block_perms(n, b);
        group = group.iter().flat_map(|g| gens.iter().map(move |h| compose(g, h))).collect();
    }
    group
}

type Element = HashMap<Perm, BigInt>;

fn mul(a: &Element, b: &Element) -> Element {
    let mut out = Element::new();
    for (g, x) in a {
        for (h, y) in b {
            *out.entry(compose(g, h)).or_insert_with(BigInt::zero) += x * y;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Young symmetrizer `Σ_r Σ_c sgn(c) r c` of shape `nu` placed on points
/// `offset..offset+|nu|`.
fn young_symmetrizer(n: usize, nu: &[i64], offset: usize) -> Element {
    let mut rows = Vec::new();
    let mut next = offset as u8;
    let mut cell = Vec::new();
    for &len in nu.iter().filter(|&&l| l > 0) {
        let row: Vec<u8> = (0..len).map(|j| next + j as u8).collect();
        next += len as u8;
        cell.push(row.clone());
        rows.push(row);
    }
    let width = nu.first().copied().unwrap_or(0).max(0) as usize;
    let cols: Vec<Vec<u8>> = (0..width).map(|j| cell.iter().filter(|r| r.len() > j).map(|r| r[j]).collect()).collect();
    let row_sum: Element = block_group(n, &rows).into_iter().map(|g| (g, BigInt::one())).collect();
    let col_sum: Element = block_group(n, &cols).into_iter().map(|g| (g.clone(), BigInt::from(parity(&g)))).collect();
    mul(&row_sum, &col_sum)
}

/// Multiplies by the class sum of transpositions minus `shift`.
fn times_jucys_shifted(x: &Element, n: usize, shift: i64) -> Element {
    let mut out = Element::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut t = identity(n);
            t.swap(a, b);
            for (g, v) in x {
                *out.entry(compose(g, &t)).or_insert_with(BigInt::zero) += v;
            }
        }
    }
    for (g, v) in x {
        *out.entry(g.clone()).or_insert_with(BigInt::zero) -= v * shift;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn content(shape: &[i64]) -> i64 {
    shape.iter().enumerate().map(|(i, &len)| (0..len).map(|j| j - i as i64).sum::<i64>()).sum()
}

/// Partitions obtained from `nu` by adding `m` boxes, no two in the same
/// column (`horizontal`) or row (otherwise), with at most `d` rows.
fn strip_extensions(nu: &[i64], m: i64, d: usize, horizontal: bool) -> Vec<Vec<i64>> {
    fn rec(nu: &[i64], row: usize, left: i64, horizontal: bool, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if row == nu.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if horizontal {
            if row == 0 {
                left
            } else {
                nu[row - 1] - nu[row]
            }
        } else {
            1
        };
        for add in 0..=cap.min(left) {
            let new = nu[row] + add;
            if row > 0 && new > cur[row - 1] {
                continue;
            }
            cur.push(new);
            rec(nu, row + 1, left - add, horizontal, cur, out);
            cur.pop();
        }
    }
    let mut padded = nu.to_vec();
    padded.resize(d, 0);
    let mut out = Vec::new();
    rec(&padded, 0, m, horizontal, &mut Vec::new(), &mut out);
    out
}

fn cycles(g: &Perm) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.len()];
    let mut out = Vec::new();
    for s in 0..g.len() {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            c.push(x);
            x = g[x] as usize;
        }
        out.push(c);
    }
    out
}

/// Fidelities of the covariant channel from sector `sigma` onto output
/// `output ⊗ environment`, target `k` (1-based in the sorted spectrum `p`).
///
/// `output` must be a single row (symmetric output) or a single column.
pub fn permutation_oracle(
    sigma: &YoungDiagram,
    output: &YoungDiagram,
    environment: &YoungDiagram,
    k: usize,
    p: &[BigRational],
) -> Result<OracleOutput> {
    let d = sigma.d();
    if output.d() != d || environment.d() != d || p.len() != d {
        return Err(QpaError::Mismatch("sector, output, environment and spectrum must share d".into()));
    }
    if k == 0 || k > d {
        return Err(QpaError::TargetOutOfRange { k, d });
    }
    if !output.is_partition() {
        return Err(QpaError::InvalidShape(format!("output {output} has a negative row")));
    }
    let m = output.n();
    if m < 1 || sigma.n() != m + environment.n() {
        return Err(QpaError::Mismatch(format!("|{sigma}| ≠ |{output}| + |{environment}|")));
    }
    let rows_used = output.rows().iter().filter(|&&r| r > 0).count();
    let horizontal = rows_used == 1;
    if !horizontal && output.rows().iter().any(|&r| r > 1) {
        return Err(QpaError::Unsupported(format!("output {output} is neither a row nor a column")));
    }
    let c = (-environment.rows()[d - 1]).max(0);
    let nu: Vec<i64> = environment.rows().iter().map(|r| r + c).collect();
    let lambda: Vec<i64> = sigma.rows().iter().map(|r| r + c).collect();
    let sites = (sigma.n() + c * d as i64) as usize;
    if sites > MAX_SITES {
        return Err(QpaError::Unsupported(format!("{sites} tensor factors exceed the oracle limit {MAX_SITES}")));
    }

    // Q: (anti)symmetrizer on the output sites times a Young symmetrizer on the rest.
    let out_block: Vec<u8> = (0..m as u8).collect();
    let out_elem: Element = block_perms(sites, &out_block)
        .into_iter()
        .map(|g| {
            let s = if horizontal { 1 } else { parity(&g) };
            (g, BigInt::from(s))
        })
        .collect();
    let mut x = mul(&out_elem, &young_symmetrizer(sites, &nu, m as usize));

    let components = strip_extensions(&nu, m, d, horizontal);
    if !components.contains(&lambda) {
        return Err(QpaError::InvalidRemoval(format!("{sigma} does not occur in {output} ⊗ {environment}")));
    }
    let target = content(&lambda);
    for other in components.iter().filter(|c| *c != &lambda) {
        let c_other = content(other);
        if c_other == target {
            return Err(QpaError::Unsupported("components share a content sum".into()));
        }
        x = times_jucys_shifted(&x, sites, c_other);
    }

    // power sums of p, and of p_k alone
    let power = |base: &BigRational, e: usize| -> BigRational {
        let mut acc = BigRational::one();
        for _ in 0..e {
            acc *= base;
        }
        acc
    };
    let pk = &p[k - 1];
    let free: Vec<BigRational> = (0..=sites).map(|e| p.iter().map(|pi| power(pi, e)).sum()).collect();
    let pinned: Vec<BigRational> = (0..=sites).map(|e| power(pk, e)).collect();

    let trace = |targets: usize| -> BigRational {
        let mut acc = BigRational::zero();
        for (g, coeff) in &x {
            let mut w = BigRational::from_integer(coeff.clone());
            for cyc in cycles(g) {
                let hit = cyc.iter().any(|&s| s < targets);
                w *= if hit { &pinned[cyc.len()] } else { &free[cyc.len()] };
            }
            acc += w;
        }
        acc
    };
    let norm = trace(0);
    if norm.is_zero() {
        return Err(QpaError::UndefinedSector(format!("sector {sigma} has zero weight")));
    }
    Ok(OracleOutput { all_site: trace(m as usize) / &norm, one_site: trace(1) / &norm })
}

/// The oracle restricted to two input copies.
pub fn dense_two_copy_oracle(
    sigma: &YoungDiagram,
    output: &YoungDiagram,
    environment: &YoungDiagram,
    k: usize,
    p: &[BigRational],
) -> Result<OracleOutput> {
    if sigma.n() != 2 {
        return Err(QpaError::Unsupported(format!("the two-copy oracle needs n = 2, got {}", sigma.n())));
    }
    permutation_oracle(sigma, output, environment, k, p)
}
