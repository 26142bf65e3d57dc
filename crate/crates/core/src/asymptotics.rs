//! Asymptotic fidelity laws, nonasymptotic bounds, optimality thresholds and
//! phase-diagram tables.
//!
//! Spectra are plain `f64` slices here, sorted nonincreasingly. Gaps are
//! `D_{k,i} = p_k − p_i` (negative for `i < k`). Exact sector-wise bounds
//! near the bottom of the file take a rational [`Spectrum`] instead.

use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{QpaError, Result};
use crate::fidelity::Objective;
use crate::protocol::{overhang_terminal, terminal_index_macro, RemovalVector};
use crate::rational::{falling_q, int, rising_q};
use crate::spectrum::Spectrum;
use crate::tableaux::YoungDiagram;

/// Constant `c` in the tail parameter `α = c·sqrt(ln n / n)`.
pub const TAIL_CONSTANT: f64 = 12.0;

const SUM_TOLERANCE: f64 = 1e-9;

fn check(p: &[f64], k: usize) -> Result<()> {
    let d = p.len();
    if d < 2 {
        return Err(QpaError::InvalidSpectrum("need at least two eigenvalues".into()));
    }
    if k == 0 || k > d {
        return Err(QpaError::TargetOutOfRange { k, d });
    }
    if p.iter().any(|x| !x.is_finite() || *x < 0.0) {
        return Err(QpaError::InvalidSpectrum("entries must be finite and nonnegative".into()));
    }
    if p.windows(2).any(|w| w[0] < w[1]) {
        return Err(QpaError::InvalidSpectrum("entries must be nonincreasing".into()));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > SUM_TOLERANCE {
        return Err(QpaError::InvalidSpectrum(format!("entries sum to {total}, not 1")));
    }
    if p.iter().enumerate().any(|(i, x)| i + 1 != k && *x == p[k - 1]) {
        return Err(QpaError::DegenerateTarget { k });
    }
    Ok(())
}

fn gap(p: &[f64], k: usize, i: usize) -> f64 {
    p[k - 1] - p[i - 1]
}

/// `min_{i≠k} |D_{k,i}|`.
pub fn min_gap(p: &[f64], k: usize) -> f64 {
    (1..=p.len()).filter(|&i| i != k).map(|i| gap(p, k, i).abs()).fold(f64::INFINITY, f64::min)
}

/// `Σ_{i≠k} p_i / D_{k,i}²`.
fn curvature(p: &[f64], k: usize) -> f64 {
    (1..=p.len()).filter(|&i| i != k).map(|i| p[i - 1] / gap(p, k, i).powi(2)).sum()
}

/// Macroscopic terminal index `I* = min{i ≥ k : D_{k,i+1} ≥ R}`, with `D_{k,d+1} = ∞`.
pub fn macro_terminal(p: &[f64], k: usize, rate: f64) -> usize {
    let gaps: Vec<f64> = (k + 1..=p.len()).map(|i| gap(p, k, i)).collect();
    terminal_index_macro(&gaps, k, rate)
}

/// Leading all-site risk for a fixed number of outputs `m`.
pub fn intensive_risk(p: &[f64], k: usize, m: f64, n: f64) -> Result<f64> {
    check(p, k)?;
    Ok(m / n * curvature(p, k))
}

/// Limiting all-site fidelity at output rate `R = m/n`.
pub fn extensive_fidelity(p: &[f64], k: usize, rate: f64) -> Result<f64> {
    check(p, k)?;
    if rate < 0.0 || rate.is_nan() {
        return Err(QpaError::Precondition(format!("rate must be nonnegative, got {rate}")));
    }
    if rate == 0.0 {
        return Ok(1.0);
    }
    let d = p.len();
    let istar = macro_terminal(p, k, rate);
    let pk = p[k - 1];
    let mut f = 1.0;
    for i in k..istar {
        f *= gap(p, k, i + 1).powi(2) / (pk * rate);
    }
    for i in (1..=d).filter(|&i| i < k || i > istar) {
        let g2 = gap(p, k, i).powi(2);
        f *= g2 / (g2 + p[i - 1] * rate);
    }
    Ok(f)
}

/// `n` times the leading one-site risk at rate `R`.
pub fn one_site_risk_coefficient(p: &[f64], k: usize, rate: f64) -> Result<f64> {
    check(p, k)?;
    if rate <= 0.0 || rate.is_nan() {
        return Err(QpaError::Precondition(format!("rate must be positive, got {rate}")));
    }
    let istar = macro_terminal(p, k, rate);
    let tail: f64 = (k + 1..=istar).map(|i| 1.0 / gap(p, k, i) - 1.0 / rate).sum();
    Ok(curvature(p, k) + tail)
}

/// Leading one-site risk at rate `R` with `n` inputs.
pub fn one_site_risk_asymptotic(p: &[f64], k: usize, rate: f64, n: f64) -> Result<f64> {
    Ok(one_site_risk_coefficient(p, k, rate)? / n)
}

/// `m = Rn` independent marginal copies: `F_one^m → exp(−R·n·L_one)`.
pub fn one_site_fidelity_power(p: &[f64], k: usize, rate: f64) -> Result<f64> {
    if rate == 0.0 {
        check(p, k)?;
        return Ok(1.0);
    }
    Ok((-rate * one_site_risk_coefficient(p, k, rate)?).exp())
}

/// A nonasymptotic risk bound together with the sample size it needs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RiskBound {
    pub bound: f64,
    pub valid: bool,
    /// Smallest `n` for which the concentration argument applies.
    pub n0: f64,
}

/// `N0 = 16c²/D² · ln(16c²/D²)`.
pub fn sample_threshold(d_min: f64) -> f64 {
    let a = 16.0 * TAIL_CONSTANT * TAIL_CONSTANT / (d_min * d_min);
    a * a.ln()
}

fn leading_bound(p: &[f64], k: usize) -> f64 {
    let dmin = min_gap(p, k);
    (1..=p.len()).filter(|&i| i != k).map(|i| p[i - 1] / (gap(p, k, i).abs() * dmin)).sum()
}

/// Remainder `R_all`.
pub fn remainder_all(p: &[f64], k: usize, m: f64, n: f64) -> Result<f64> {
    check(p, k)?;
    let dmin = min_gap(p, k);
    let s: f64 = (1..=p.len()).filter(|&i| i != k).map(|i| 6.0 * p[i - 1] / (gap(p, k, i).abs() * dmin * dmin)).sum();
    Ok(m / n * 4.0 * n.ln().sqrt() / n.sqrt() * (1.0 + s))
}

pub fn nonasymptotic_all_bound(p: &[f64], k: usize, m: f64, n: f64) -> Result<RiskBound> {
    check(p, k)?;
    let n0 = sample_threshold(min_gap(p, k));
    let bound = m / n * leading_bound(p, k) + remainder_all(p, k, m, n)?;
    Ok(RiskBound { bound, valid: n >= n0, n0 })
}

/// One-site version; also needs `n ≥ 2m/D_{k,k+1}` when `k < d`.
pub fn nonasymptotic_one_bound(p: &[f64], k: usize, m: f64, n: f64) -> Result<RiskBound> {
    check(p, k)?;
    let n0 = sample_threshold(min_gap(p, k));
    let bound = leading_bound(p, k) / n + remainder_all(p, k, m, n)? / m;
    let gap_ok = k == p.len() || n >= 2.0 * m / gap(p, k, k + 1);
    Ok(RiskBound { bound, valid: n >= n0 && gap_ok, n0 })
}

/// Sector gap threshold from the smallest spectral gap alone.
pub fn optimality_threshold(m: f64, d_min: f64, objective: Objective) -> f64 {
    match objective {
        Objective::All => 2.0 * m * m * (2.0 * m - 1.0 + 1.0 / d_min),
        Objective::One => m.max(2.0 / d_min),
    }
}

/// Separate thresholds for `Δ_{k−1,k}` (`above`) and `Δ_{k,k+1}` (`below`).
/// `None` marks a gap that does not exist (`k = 1` or `k = d`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapThresholds {
    pub above: Option<f64>,
    pub below: Option<f64>,
}

impl GapThresholds {
    /// Strictly exceeds both thresholds.
    pub fn admits(&self, sigma: &YoungDiagram, k: usize) -> bool {
        let ok = |t: Option<f64>, g: Option<i64>| match (t, g) {
            (Some(t), Some(g)) => g as f64 > t,
            _ => true,
        };
        let above = (k > 1).then(|| sigma.gap(k - 1, k));
        let below = (k < sigma.d()).then(|| sigma.gap(k, k + 1));
        ok(self.above, above) && ok(self.below, below)
    }
}

pub fn gap_thresholds(p: &[f64], k: usize, m: f64, objective: Objective) -> Result<GapThresholds> {
    check(p, k)?;
    let d = p.len();
    let up: f64 = (1..k).map(|i| p[i - 1] / gap(p, i, k)).sum();
    let down: f64 = (k + 1..=d).map(|i| p[i - 1] / gap(p, k, i)).sum();
    let (above, below) = match objective {
        Objective::All => (2.0 * m * m * (m - 1.0 + up), 2.0 * m * m * (2.0 * m - 1.0 + down)),
        Objective::One => (2.0 * up, m.max(2.0 * down)),
    };
    Ok(GapThresholds { above: (k > 1).then_some(above), below: (k < d).then_some(below) })
}

/// Exact version of [`gap_thresholds`] for rational spectra.
pub fn gap_thresholds_exact(p: &Spectrum, k: usize, m: i64, objective: Objective) -> Result<(Option<BigRational>, Option<BigRational>)> {
    let d = p.d();
    if k == 0 || k > d {
        return Err(QpaError::TargetOutOfRange { k, d });
    }
    if !p.is_nondegenerate_at(k) {
        return Err(QpaError::DegenerateTarget { k });
    }
    let (up, down) = off_target_sums(p, k);
    let two_m2 = int(2 * m * m);
    let (above, below) = match objective {
        Objective::All => (&two_m2 * (int(m - 1) + up), &two_m2 * (int(2 * m - 1) + down)),
        Objective::One => {
            let b = int(2) * down;
            (int(2) * up, if b > int(m) { b } else { int(m) })
        }
    };
    Ok(((k > 1).then_some(above), (k < d).then_some(below)))
}

/// Tail bound on one normalized row difference.
pub fn concentration_bound(n: f64, alpha: f64) -> Result<f64> {
    let s = n.sqrt() * alpha;
    if s <= 4.0 {
        return Err(QpaError::Precondition(format!("alpha must exceed 4/sqrt(n) = {}", 4.0 / n.sqrt())));
    }
    Ok(2.0 * (-(s - 4.0).powi(2) / 32.0).exp())
}

/// Tail bound for two neighbouring row differences at once.
pub fn joint_concentration_bound(n: f64, alpha: f64) -> Result<f64> {
    Ok(2.0 * concentration_bound(n, alpha)?)
}

/// Depolarized family in the limit `d → ∞` (target `k = 1`).
///
/// All gaps equal `1 − η`, so the removal stays in the first overhang for
/// `R ≤ 1 − η` and the fidelity vanishes beyond it. Both objectives share
/// the limit `exp(−ηR/(1−η)²)`.
pub fn depolarized_limit(eta: f64, rate: f64) -> (f64, usize) {
    let gap = 1.0 - eta;
    if rate <= gap {
        ((-eta * rate / (gap * gap)).exp(), 0)
    } else {
        (0.0, 1)
    }
}

/// Spectrum families for phase diagrams.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `(1 − λ(d−1)/d, λ/d, …, λ/d)`.
    Depolarized { d: usize },
    /// The depolarized family as `d → ∞`.
    DepolarizedLimit,
    /// `(1 − λ)·from + λ·to`.
    Linear { from: Vec<f64>, to: Vec<f64> },
}

impl Family {
    pub fn spectrum(&self, lambda: f64) -> Vec<f64> {
        match self {
            Family::Depolarized { d } => {
                let dd = *d as f64;
                let mut p = vec![lambda / dd; *d];
                p[0] = 1.0 - lambda * (dd - 1.0) / dd;
                p
            }
            Family::DepolarizedLimit => vec![1.0 - lambda],
            Family::Linear { from, to } => from.iter().zip(to).map(|(a, b)| (1.0 - lambda) * a + lambda * b).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseRow {
    pub lambda: f64,
    #[serde(rename = "R")]
    pub rate: f64,
    pub fidelity: f64,
    /// `I* − k`: how many overhangs below the target the removal exhausts.
    pub phase: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseTable {
    pub rows: Vec<PhaseRow>,
    /// One diagnostic per λ that was skipped.
    pub skipped: Vec<String>,
}

/// Evaluates the extensive all-site law or the one-site law on a
/// `λ × R` grid. Rows come out λ-major in grid order.
pub fn phase_diagram(family: &Family, k: usize, lambdas: &[f64], rates: &[f64], objective: Objective) -> PhaseTable {
    let per_lambda: Vec<std::result::Result<Vec<PhaseRow>, String>> = lambdas
        .par_iter()
        .map(|&lambda| {
            if *family == Family::DepolarizedLimit {
                if k != 1 {
                    return Err(format!("lambda={lambda}: the d→∞ limit is defined for k=1 only"));
                }
                if !(0.0..1.0).contains(&lambda) {
                    return Err(format!("lambda={lambda}: need 0 ≤ λ < 1"));
                }
                return Ok(rates
                    .iter()
                    .map(|&rate| {
                        let (fidelity, phase) = depolarized_limit(lambda, rate);
                        PhaseRow { lambda, rate, fidelity, phase }
                    })
                    .collect());
            }
            let p = family.spectrum(lambda);
            check(&p, k).map_err(|e| format!("lambda={lambda}: {e}"))?;
            rates
                .iter()
                .map(|&rate| {
                    let fidelity = match objective {
                        Objective::All => extensive_fidelity(&p, k, rate),
                        Objective::One => one_site_fidelity_power(&p, k, rate),
                    }
                    .map_err(|e| format!("lambda={lambda}, R={rate}: {e}"))?;
                    Ok(PhaseRow { lambda, rate, fidelity, phase: macro_terminal(&p, k, rate) - k })
                })
                .collect()
        })
        .collect();
    let mut table = PhaseTable { rows: Vec::new(), skipped: Vec::new() };
    for r in per_lambda {
        match r {
            Ok(rows) => table.rows.extend(rows),
            Err(msg) => table.skipped.push(msg),
        }
    }
    table
}

/// `n` evenly spaced points `lo, …, hi`.
pub fn grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..points).map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64).collect(),
    }
}

// Exact sector-wise bounds on the all-site utility.

fn off_target_sums(p: &Spectrum, k: usize) -> (BigRational, BigRational) {
    let pk = p.p(k);
    let above = (1..k).map(|i| p.p(i) / (p.p(i) - pk)).sum();
    let below = (k + 1..=p.d()).map(|i| p.p(i) / (pk - p.p(i))).sum();
    (above, below)
}

fn check_exact(sigma: &YoungDiagram, k: usize, p: &Spectrum) -> Result<()> {
    if sigma.d() != p.d() {
        return Err(QpaError::Mismatch(format!("{sigma} and spectrum differ in d")));
    }
    if k == 0 || k > p.d() {
        return Err(QpaError::TargetOutOfRange { k, d: p.d() });
    }
    if !p.is_nondegenerate_at(k) {
        return Err(QpaError::DegenerateTarget { k });
    }
    Ok(())
}

/// Lower bound on the all-site utility of removing all `m` boxes from row
/// `k`. `None` when `m > Δ_{k,k+1}` or a bracket turns negative.
pub fn sector_lower_bound(sigma: &YoungDiagram, k: usize, m: i64, p: &Spectrum) -> Result<Option<BigRational>> {
    check_exact(sigma, k, p)?;
    let d = sigma.d();
    if k < d && m > sigma.gap(k, k + 1) {
        return Ok(None);
    }
    let (above, below) = off_target_sums(p, k);
    let mut bound = BigRational::one();
    if k > 1 {
        let top = int(sigma.gap(k - 1, k) + 2);
        let num = &top - &above;
        if num.is_negative() {
            return Ok(None);
        }
        bound *= rising_q(&num, m) / rising_q(&top, m);
    }
    if k < d {
        let top = int(sigma.gap(k, k + 1));
        let num = &top - &below;
        if num.is_negative() {
            return Ok(None);
        }
        bound *= falling_q(&num, m) / falling_q(&top, m);
    }
    Ok(Some(bound))
}

/// Simplified lower bound `1 − m/(Δ_{k−1,k}+m+1)·C_< − m/Δ_{k,k+1}·C_≥`,
/// for `1 ≤ m ≤ Δ_{k,k+1}`.
pub fn sector_lower_bound_simplified(sigma: &YoungDiagram, k: usize, m: i64, p: &Spectrum) -> Result<Option<BigRational>> {
    check_exact(sigma, k, p)?;
    let d = sigma.d();
    if m < 1 || (k < d && m > sigma.gap(k, k + 1)) {
        return Ok(None);
    }
    let (above, below) = off_target_sums(p, k);
    let mut bound = BigRational::one();
    if k > 1 {
        bound -= int(m) / int(sigma.gap(k - 1, k) + m + 1) * above;
    }
    if k < d {
        bound -= int(m) / int(sigma.gap(k, k + 1)) * below;
    }
    Ok(Some(bound))
}

/// Upper bound on the all-site utility of an off-target removal
/// (`m_k < m`). `None` when the bound is unbounded.
pub fn sector_upper_bound(sigma: &YoungDiagram, k: usize, removal: &RemovalVector, p: &Spectrum) -> Result<Option<BigRational>> {
    check_exact(sigma, k, p)?;
    removal.validate(sigma)?;
    let m = removal.total();
    let c = removal.counts();
    if c[k - 1] >= m {
        return Err(QpaError::Precondition("upper bound needs an off-target removal (m_k < m)".into()));
    }
    let (above, below) = off_target_sums(p, k);
    let m_above: i64 = c[..k - 1].iter().sum();
    let m_below: i64 = c[k..].iter().sum();
    let mut bound = BigRational::one();
    if m_above > 0 {
        let gap = sigma.gap(k - 1, k);
        if gap == 0 {
            return Ok(None);
        }
        let base = int(m * m_above) * (int(m_above - 1) + &above) / int(gap);
        bound *= num_traits::pow(base, m_above as usize);
    }
    if m_below > 0 {
        let base = int(m * m_below) * (int(2 * m_below - 1) + &below) / int(sigma.gap(k, k + 1) + 1 + m_below);
        bound *= num_traits::pow(base, m_below as usize);
    }
    Ok(Some(bound))
}

/// Lower bound on the one-site utility of the overhang channel. `None` when
/// `Δ_{k,k+1} = 0`.
pub fn sector_one_site_lower_bound(sigma: &YoungDiagram, k: usize, m: i64, p: &Spectrum) -> Result<Option<BigRational>> {
    check_exact(sigma, k, p)?;
    let d = sigma.d();
    let (above, below) = off_target_sums(p, k);
    let mut bound = BigRational::one();
    if k > 1 {
        bound -= above / int(sigma.gap(k - 1, k) + 1);
    }
    if k < d {
        let gap = sigma.gap(k, k + 1);
        if gap == 0 {
            return Ok(None);
        }
        bound -= below / int(gap);
        let steps = (overhang_terminal(sigma, k, m) - k) as i64;
        if steps > 0 {
            bound -= int(steps * (m - gap)) / int(m * (gap + steps));
        }
    }
    Ok(Some(bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    #[test]
    fn intensive_examples() {
        let p = [0.75, 0.25];
        assert!((intensive_risk(&p, 1, 1.0, 100.0).unwrap() - 0.01).abs() < TOL);
        assert_eq!(intensive_risk(&[1.0, 0.0, 0.0], 1, 3.0, 10.0).unwrap(), 0.0);
        let r1 = intensive_risk(&[0.5, 0.3, 0.2], 2, 1.0, 50.0).unwrap();
        let r2 = intensive_risk(&[0.5, 0.3, 0.2], 2, 2.0, 50.0).unwrap();
        assert!((r2 - 2.0 * r1).abs() < TOL);
        assert!(matches!(intensive_risk(&[0.5, 0.25, 0.25], 2, 1.0, 1.0), Err(QpaError::DegenerateTarget { k: 2 })));
    }

    #[test]
    fn extensive_examples() {
        let p = [0.75, 0.25];
        assert!((extensive_fidelity(&p, 1, 0.25).unwrap() - 0.8).abs() < TOL);
        assert!((extensive_fidelity(&p, 1, 1e-12).unwrap() - 1.0).abs() < 1e-9);
        let q = [0.5, 0.3, 0.15, 0.05];
        for k in 1..=4 {
            for i in k + 1..=4 {
                let r = q[k - 1] - q[i - 1];
                let left = extensive_fidelity(&q, k, r - 1e-13).unwrap();
                let right = extensive_fidelity(&q, k, r + 1e-13).unwrap();
                let at = extensive_fidelity(&q, k, r).unwrap();
                assert!((left - right).abs() < 1e-11 && (left - at).abs() < 1e-11, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn one_site_examples() {
        let p = [0.75, 0.25];
        assert!((one_site_risk_asymptotic(&p, 1, 0.1, 100.0).unwrap() - 0.01).abs() < TOL);
        let a = one_site_risk_asymptotic(&p, 1, 0.7, 100.0).unwrap();
        let b = one_site_risk_asymptotic(&p, 1, 0.7, 200.0).unwrap();
        assert!((a - 2.0 * b).abs() < TOL);
        let q = [0.5, 0.3, 0.2];
        let low = one_site_risk_asymptotic(&q, 1, 0.1, 1.0).unwrap();
        assert!((low - intensive_risk(&q, 1, 1.0, 1.0).unwrap()).abs() < TOL);
    }

    #[test]
    fn nonasymptotic_examples() {
        let p = [0.75, 0.25];
        let b = nonasymptotic_all_bound(&p, 1, 1.0, 1e4).unwrap();
        let lead = 1e-4 * (0.25 / (0.5 * 0.5));
        assert!((b.bound - remainder_all(&p, 1, 1.0, 1e4).unwrap() - lead).abs() < TOL);
        assert!(!b.valid);
        assert!(nonasymptotic_all_bound(&p, 1, 1.0, 2e5).unwrap().valid);
        let one = nonasymptotic_one_bound(&p, 1, 3.0, 1e4).unwrap();
        let r_all = remainder_all(&p, 1, 3.0, 1e4).unwrap();
        assert!((one.bound - 1e-4 - r_all / 3.0).abs() < TOL);
        let all1 = nonasymptotic_all_bound(&p, 1, 1.0, 500.0).unwrap();
        let one1 = nonasymptotic_one_bound(&p, 1, 1.0, 500.0).unwrap();
        assert!((all1.bound - one1.bound).abs() < TOL);
        assert!(!nonasymptotic_one_bound(&p, 1, 1e5, 2e5).unwrap().valid);
    }

    #[test]
    fn thresholds() {
        assert!((optimality_threshold(1.0, 0.5, Objective::All) - 6.0).abs() < TOL);
        assert!((optimality_threshold(5.0, 0.5, Objective::One) - 5.0).abs() < TOL);
        let t = gap_thresholds(&[0.7, 0.2, 0.1], 1, 1.0, Objective::All).unwrap();
        assert_eq!(t.above, None);
        assert!((t.below.unwrap() - 2.0 * (1.0 + 0.2 / 0.5 + 0.1 / 0.6)).abs() < TOL);
    }

    #[test]
    fn concentration() {
        let b = concentration_bound(400.0, 1.0).unwrap();
        assert!((b - 2.0 * (-8.0f64).exp()).abs() < TOL);
        assert!((b - 6.709e-4).abs() < 1e-6);
        assert!(concentration_bound(100.0, 0.4).is_err());
        assert!((joint_concentration_bound(400.0, 1.0).unwrap() - 2.0 * b).abs() < TOL);
    }

    #[test]
    fn phase_table() {
        let rates = [0.0, 0.2, 0.5, 0.9];
        let t = phase_diagram(&Family::Depolarized { d: 3 }, 1, &[0.3, 0.6], &rates, Objective::All);
        assert!(t.skipped.is_empty());
        assert_eq!(t.rows.len(), 8);
        assert!(t.rows.iter().filter(|r| r.rate == 0.0).all(|r| r.fidelity == 1.0));
        let bad = phase_diagram(&Family::Linear { from: vec![1.0, 0.0], to: vec![0.0, 1.0] }, 1, &[0.2, 0.7], &rates, Objective::One);
        assert_eq!(bad.rows.len(), 4);
        assert_eq!(bad.skipped.len(), 1);
        let lim = phase_diagram(&Family::DepolarizedLimit, 1, &[0.5], &[0.25, 0.75], Objective::All);
        assert!((lim.rows[0].fidelity - (-0.5f64).exp()).abs() < TOL);
        assert_eq!((lim.rows[1].fidelity, lim.rows[1].phase), (0.0, 1));
    }

    #[test]
    fn depolarized_limit_matches_large_d() {
        let (eta, rate) = (0.4, 0.3);
        let big = extensive_fidelity(&Family::Depolarized { d: 200_000 }.spectrum(eta), 1, rate).unwrap();
        assert!((big - depolarized_limit(eta, rate).0).abs() < 1e-5);
        let one = one_site_fidelity_power(&Family::Depolarized { d: 200_000 }.spectrum(eta), 1, rate).unwrap();
        assert!((one - depolarized_limit(eta, rate).0).abs() < 1e-5);
    }
}
