//! Seeded verification suites for the combinatorial and analytic claims.
//!
//! Each suite returns a [`SuiteReport`]; a suite passes when it finds no
//! violation. The smallest counterexample found is kept for the report.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::asymptotics::{concentration_bound, gap_thresholds_exact, joint_concentration_bound};
use crate::error::{QpaError, Result};
use crate::fidelity::{
    f_symbol_sq, optimal_sector_channel, overall_fidelity, permutation_oracle, sector_fidelity_all, sector_fidelity_one,
    Objective, Rule,
};
use crate::gyd::{
    constrained_weyl_average, enumerate_gwt, skew_schur, ConstraintMap, GeneralizedDiagram, MonotoneFn,
};
use crate::protocol::{enumerate_environments, overhang_removal, RemovalVector};
use crate::rational::{int, ratio, to_f64};
use crate::spectrum::Spectrum;
use crate::tableaux::{
    enumerate_diagrams, enumerate_gt_patterns, schur_jacobi_trudi, schur_polynomial, specht_dim, sw_distribution,
    weyl_dim, GtPattern, SwSampler, YoungDiagram,
};

pub const DEFAULT_SEED: u64 = 20240917;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Normalization,
    FSymbols,
    Majorization,
    Monotonicity,
    Occupancy,
    LogConvexity,
    Splitting,
    Concentration,
    Optimality,
    OracleConsistency,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Normalization,
        Suite::FSymbols,
        Suite::Majorization,
        Suite::Monotonicity,
        Suite::Occupancy,
        Suite::LogConvexity,
        Suite::Splitting,
        Suite::Concentration,
        Suite::Optimality,
        Suite::OracleConsistency,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Normalization => "normalization",
            Suite::FSymbols => "f-symbols",
            Suite::Majorization => "majorization",
            Suite::Monotonicity => "monotonicity",
            Suite::Occupancy => "occupancy",
            Suite::LogConvexity => "log-convexity",
            Suite::Splitting => "splitting",
            Suite::Concentration => "concentration",
            Suite::Optimality => "optimality",
            Suite::OracleConsistency => "oracle-consistency",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = QpaError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            QpaError::Parse { column: 1, message: format!("unknown suite '{s}'; expected one of {}", names.join(", ")) }
        })
    }
}

/// Knobs shared by all suites; `None` picks the suite's default.
/// For oracle-consistency `max_n` caps the oracle's tensor factors instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: Option<usize>,
    pub max_n: Option<i64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: DEFAULT_SEED, cases: None, max_n: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub violations: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Default)]
struct Tally {
    cases: usize,
    violations: usize,
    worst: Option<(usize, String)>,
}

impl Tally {
    fn check(&mut self, ok: bool, size: usize, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.worst.as_ref().is_none_or(|(s, _)| size < *s) {
                self.worst = Some((size, describe()));
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.violations += other.violations;
        if let Some((size, text)) = other.worst {
            if self.worst.as_ref().is_none_or(|(s, _)| size < *s) {
                self.worst = Some((size, text));
            }
        }
    }

    fn report(self, suite: Suite, seed: u64) -> SuiteReport {
        SuiteReport {
            suite: suite.name().into(),
            seed,
            cases: self.cases,
            violations: self.violations,
            passed: self.violations == 0,
            counterexample: self.worst.map(|(_, s)| s),
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let tally = match suite {
        Suite::Normalization => normalization(&mut rng, cfg.max_n.unwrap_or(6), cfg.cases.unwrap_or(200)),
        Suite::FSymbols => f_symbols(cfg.max_n.unwrap_or(7)),
        Suite::Majorization => majorization(cfg.max_n.unwrap_or(7)),
        Suite::Monotonicity => monotonicity(&mut rng, cfg.cases.unwrap_or(1000)),
        Suite::Occupancy => occupancy(&mut rng, cfg.max_n.unwrap_or(6)),
        Suite::LogConvexity => log_convexity(&mut rng, cfg.cases.unwrap_or(500)),
        Suite::Splitting => splitting(&mut rng, cfg.cases.unwrap_or(500)),
        Suite::Concentration => concentration(cfg.seed, cfg.cases.unwrap_or(10_000), cfg.max_n.unwrap_or(400))?,
        Suite::Optimality => optimality(&mut rng, cfg.max_n.unwrap_or(12))?,
        Suite::OracleConsistency => oracle_consistency(&mut rng, cfg.cases.unwrap_or(200), cfg.max_n.unwrap_or(7))?,
    };
    Ok(tally.report(suite, cfg.seed))
}

/// Strictly positive spectrum with small denominators.
pub fn random_spectrum<R: Rng>(rng: &mut R, d: usize, sorted: bool) -> Vec<BigRational> {
    let mut w: Vec<i64> = (0..d).map(|_| rng.gen_range(1..=20)).collect();
    if sorted {
        w.sort_unstable_by(|a, b| b.cmp(a));
    }
    let total: i64 = w.iter().sum();
    w.into_iter().map(|x| ratio(x, total)).collect()
}

fn random_partition<R: Rng>(rng: &mut R, d: usize, max_n: i64) -> YoungDiagram {
    let n = rng.gen_range(0..=max_n);
    let shapes = enumerate_diagrams(n, d);
    shapes[rng.gen_range(0..shapes.len())].clone()
}

fn show(q: &[BigRational]) -> String {
    q.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Weyl average over the GT patterns of `shape`; zero if the weight vanishes.
pub fn gt_average(shape: &YoungDiagram, q: &[BigRational], f: impl Fn(&GtPattern) -> BigRational) -> BigRational {
    let mut num = BigRational::zero();
    let mut norm = BigRational::zero();
    for w in enumerate_gt_patterns(shape) {
        let weight = w.weight(q);
        num += f(&w) * &weight;
        norm += weight;
    }
    if norm.is_zero() {
        norm
    } else {
        num / norm
    }
}

fn normalization(rng: &mut ChaCha8Rng, max_n: i64, spectra: usize) -> Tally {
    let mut t = Tally::default();
    for d in 1..=4usize {
        for n in 0..=max_n {
            let shapes = enumerate_diagrams(n, d);
            let total: num_bigint::BigUint =
                shapes.iter().map(|s| specht_dim(s).unwrap_or_default() * weyl_dim(s)).sum();
            t.check(total == num_bigint::BigUint::from(d).pow(n as u32), n as usize, || format!("Σ g·dim ≠ d^n at n={n}, d={d}"));
            for s in &shapes {
                let count = enumerate_gt_patterns(s).count();
                t.check(num_bigint::BigUint::from(count) == weyl_dim(s), n as usize, || format!("GT count of {s} ≠ Weyl dimension"));
            }
        }
    }
    for _ in 0..spectra {
        let d = rng.gen_range(1..=4);
        let sorted = rng.gen_bool(0.5);
        let q = random_spectrum(rng, d, sorted);
        let n = rng.gen_range(0..=max_n);
        let mass: BigRational = sw_distribution(n, &q).into_iter().map(|(_, x)| x).sum();
        t.check(mass.is_one(), n as usize, || format!("SW masses sum to {mass} at n={n}, p=({})", show(&q)));
        let s = random_partition(rng, d, max_n);
        let (a, b) = (schur_polynomial(&s, &q), schur_jacobi_trudi(&s, &q));
        t.check(a == b, s.n() as usize, || format!("s_{s}({}) by GT {a} vs Jacobi–Trudi {b}", show(&q)));
    }
    t
}

fn f_symbols(max_n: i64) -> Tally {
    let mut t = Tally::default();
    for d in 1..=3usize {
        for n in 1..=max_n {
            for sigma in enumerate_diagrams(n, d) {
                for m in 1..=n {
                    for r in enumerate_environments(&sigma, m) {
                        let lambda = r.environment(&sigma).expect("enumerated removals are valid");
                        let f: Vec<BigRational> = (1..=d).map(|i| f_symbol_sq(&sigma, &lambda, i, m).unwrap_or_else(|_| int(-1))).collect();
                        let sum: BigRational = f.iter().sum();
                        let ok = sum.is_one() && f.iter().all(|x| *x >= BigRational::zero());
                        t.check(ok, n as usize, || format!("F² over ς={sigma}, λ={lambda}: {:?} sums to {sum}", show(&f)));
                    }
                }
            }
        }
    }
    t
}

fn majorization(max_n: i64) -> Tally {
    let mut t = Tally::default();
    for d in 1..=3usize {
        for n in 1..=max_n {
            for sigma in enumerate_diagrams(n, d) {
                for m in 1..=n {
                    for k in 1..=d {
                        if k < d && sigma.gap(k, k + 1) < 1 {
                            continue;
                        }
                        let mu = overhang_removal(&sigma, k, m).and_then(|r| r.environment(&sigma)).expect("overhang is valid");
                        let squares = |lam: &YoungDiagram| -> Vec<BigRational> {
                            (1..=d).map(|i| f_symbol_sq(&sigma, lam, i, m).unwrap_or_else(|_| int(-1))).collect()
                        };
                        let best = squares(&mu);
                        for r in enumerate_environments(&sigma, m) {
                            let lambda = r.environment(&sigma).expect("enumerated removals are valid");
                            if lambda == mu {
                                continue;
                            }
                            let f = squares(&lambda);
                            let (mut a, mut b) = (BigRational::zero(), BigRational::zero());
                            let mut ok = f[k - 1] < best[k - 1];
                            for j in k..=d {
                                a += &f[j - 1];
                                b += &best[j - 1];
                                ok &= a <= b;
                            }
                            t.check(ok, n as usize, || format!("ς={sigma}, k={k}, m={m}: λ={lambda} not dominated by μ={mu}"));
                        }
                    }
                }
            }
        }
    }
    t
}

fn random_gyd<R: Rng>(rng: &mut R, max_cells: usize) -> GeneralizedDiagram {
    let size = rng.gen_range(1..=max_cells);
    let mut cells = Vec::new();
    while cells.len() < size {
        let c = (rng.gen_range(0..3), rng.gen_range(0..4));
        if !cells.contains(&c) {
            cells.push(c);
        }
    }
    GeneralizedDiagram::new(cells)
}

fn monotonicity(rng: &mut ChaCha8Rng, cases: usize) -> Tally {
    let mut t = Tally::default();
    let mut made = 0;
    while made < cases {
        let d = rng.gen_range(2..=4);
        let g = random_gyd(rng, 6);
        let q = random_spectrum(rng, d, false);
        let mut x = ConstraintMap::trivial(&g, d);
        let mut y = ConstraintMap::trivial(&g, d);
        for &c in g.cells() {
            let lo = rng.gen_range(1..=d);
            let hi = rng.gen_range(lo..=d);
            let lo2 = rng.gen_range(lo..=d);
            let hi2 = rng.gen_range(hi.max(lo2)..=d);
            x.set(c, lo, hi).expect("ordered bounds");
            y.set(c, lo2, hi2).expect("ordered bounds");
        }
        if enumerate_gwt(&g, &x).is_empty() || enumerate_gwt(&g, &y).is_empty() {
            continue;
        }
        made += 1;
        let f = MonotoneFn::random(rng, g.len(), 1, d as i64, true);
        let a = constrained_weyl_average(&g, &x, &q, |w| f.eval_letters(w));
        let b = constrained_weyl_average(&g, &y, &q, |w| f.eval_letters(w));
        t.check(a <= b, g.len(), || format!("gYD {g}, d={d}, q=({}): ⟨F⟩_x = {a} > ⟨F⟩_x' = {b}", show(&q)));
    }
    t
}

fn occupancy(rng: &mut ChaCha8Rng, max_n: i64) -> Tally {
    let mut t = Tally::default();
    for d in 1..=3usize {
        let shapes: Vec<YoungDiagram> = (0..=max_n).flat_map(|n| enumerate_diagrams(n, d)).collect();
        for small in &shapes {
            for big in shapes.iter().filter(|b| small.is_contained_in(b)) {
                let q = random_spectrum(rng, d, false);
                let f = MonotoneFn::random(rng, 1, 0, max_n, true);
                for k in 1..=d {
                    let a = gt_average(small, &q, |w| f.eval(&[w.occupancy()[k - 1]]));
                    let b = gt_average(big, &q, |w| f.eval(&[w.occupancy()[k - 1]]));
                    t.check(a <= b, big.n() as usize, || format!("⟨F(#_{k})⟩: {small} gives {a} > {big} gives {b}, q=({})", show(&q)));
                }
            }
        }
    }
    t
}

fn log_convexity(rng: &mut ChaCha8Rng, cases: usize) -> Tally {
    let mut t = Tally::default();
    for _ in 0..cases {
        let d = rng.gen_range(1..=3);
        let q = random_spectrum(rng, d, false);
        let l1 = random_partition(rng, d, 6);
        let l2 = random_partition(rng, d, 6);
        let sub = |rng: &mut ChaCha8Rng, l: &YoungDiagram| -> Vec<i64> {
            let mut nu: Vec<i64> = Vec::with_capacity(d);
            for i in 0..d {
                let cap = if i == 0 { l.rows()[0] } else { l.rows()[i].min(nu[i - 1]) };
                nu.push(rng.gen_range(0..=cap.max(0)));
            }
            nu
        };
        let n1 = sub(rng, &l1);
        let n2 = sub(rng, &l2);
        let pick = |a: &[i64], b: &[i64], f: fn(i64, i64) -> i64| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| f(*x, *y)).collect() };
        let (lmax, lmin) = (pick(l1.rows(), l2.rows(), i64::max), pick(l1.rows(), l2.rows(), i64::min));
        let (nmax, nmin) = (pick(&n1, &n2, i64::max), pick(&n1, &n2, i64::min));
        let s = |outer: &[i64], inner: &[i64]| skew_schur(outer, inner, &q).expect("inner fits inside outer");
        let lhs = s(&lmax, &nmax) * s(&lmin, &nmin);
        let rhs = s(l1.rows(), &n1) * s(l2.rows(), &n2);
        let size = (l1.n() + l2.n()) as usize;
        t.check(lhs >= rhs, size, || {
            format!("λ1={l1}, ν1={n1:?}, λ2={l2}, ν2={n2:?}, q=({}): {lhs} < {rhs}", show(&q))
        });
    }
    t
}

/// `#_{b,ℓ}` for rows `ℓ` in `rows`.
fn row_counts(w: &GtPattern, letter: usize, rows: std::ops::RangeInclusive<usize>) -> Vec<i64> {
    rows.map(|l| w.row_occupancy(letter, l)).collect()
}

fn splitting(rng: &mut ChaCha8Rng, cases: usize) -> Tally {
    let mut t = Tally::default();
    for _ in 0..cases {
        let d = rng.gen_range(2..=3);
        let k = rng.gen_range(1..=d);
        let sigma = random_partition(rng, d, 6);
        let p = random_spectrum(rng, d, true);
        let s = sigma.rows();
        let top: Vec<i64> = (1..=k).map(|i| s[i - 1] - s[k - 1]).collect();
        let top_shape = YoungDiagram::new(top).expect("row gaps form a partition");
        let mut top_q: Vec<BigRational> = p[..k - 1].to_vec();
        top_q.push(p[d - 1].clone());
        let tail = YoungDiagram::new(s[k - 1..].to_vec()).expect("tail of a partition");
        let tail_q = p[k - 1..].to_vec();
        let tail_letters = d - k + 1;
        for lower in [true, false] {
            // lower: decreasing on rows above k, increasing below; upper: the reverse
            let head = MonotoneFn::random(rng, k - 1, 0, 6, !lower);
            let body = MonotoneFn::random(rng, tail_letters, 0, 6, lower);
            let full = gt_average(&sigma, &p, |w| head.eval(&row_counts(w, d, 1..=k - 1)) * body.eval(&row_counts(w, d, k..=d)));
            let a = gt_average(&top_shape, &top_q, |w| head.eval(&row_counts(w, k, 1..=k - 1)));
            let b = gt_average(&tail, &tail_q, |w| body.eval(&row_counts(w, tail_letters, 1..=tail_letters)));
            let bound = a * b;
            let ok = if lower { full >= bound } else { full <= bound };
            t.check(ok, sigma.n() as usize, || {
                format!("ς={sigma}, k={k}, p=({}), {} bound: average {full} vs product {bound}", show(&p), if lower { "lower" } else { "upper" })
            });
        }
    }
    t
}

/// Empirical row-difference tails from RSK samples against the analytic bound.
fn concentration(seed: u64, samples: usize, n: i64) -> Result<Tally> {
    let p: Spectrum = "1/2,3/10,1/5".parse()?;
    let d = p.d();
    let n_f = n as f64;
    let gaps: Vec<f64> = (1..d).map(|i| to_f64(&p.gap(i, i + 1))).collect();
    let mut sampler = SwSampler::new(&p, seed);
    let deviations: Vec<Vec<f64>> = (0..samples)
        .map(|_| {
            let s = sampler.sample(n as usize);
            (1..d).map(|i| (s.gap(i, i + 1) as f64 / n_f - gaps[i - 1]).abs()).collect()
        })
        .collect();
    let floor = 4.0 / n_f.sqrt();
    let mut t = Tally::default();
    for step in 1..=8 {
        let alpha = floor * (1.0 + 0.25 * step as f64);
        let sigma_of = |b: f64| (b.min(1.0) * (1.0 - b.min(1.0)) / samples as f64).sqrt();
        for i in 0..d - 1 {
            let hits = deviations.iter().filter(|v| v[i] >= alpha).count() as f64 / samples as f64;
            let bound = concentration_bound(n_f, alpha)?;
            t.check(hits <= bound + 3.0 * sigma_of(bound), n as usize, || {
                format!("row gap {}: P(|Δ̄−D| ≥ {alpha}) = {hits} exceeds bound {bound}", i + 1)
            });
        }
        let both = deviations.iter().filter(|v| v.iter().any(|x| *x >= alpha)).count() as f64 / samples as f64;
        let bound = joint_concentration_bound(n_f, alpha)?;
        t.check(both <= bound + 3.0 * sigma_of(bound), n as usize, || format!("joint tail at α={alpha}: {both} exceeds {bound}"));
    }
    Ok(t)
}

fn admits(sigma: &YoungDiagram, k: usize, bounds: &(Option<BigRational>, Option<BigRational>)) -> bool {
    let above = bounds.0.as_ref().is_none_or(|b| int(sigma.gap(k - 1, k)) > *b);
    let below = bounds.1.as_ref().is_none_or(|b| int(sigma.gap(k, k + 1)) > *b);
    above && below
}

/// Overhang is the unique argmax: strictly above every other environment.
fn overhang_strictly_best(sigma: &YoungDiagram, k: usize, m: i64, p: &[BigRational], objective: Objective) -> Result<Option<String>> {
    let choice = optimal_sector_channel(sigma, k, m, p, objective)?;
    let overhang = overhang_removal(sigma, k, m)?;
    let (top, value) = &choice.ranking[0];
    if *top != overhang {
        return Ok(Some(format!("best removal {top} (value {value}) differs from overhang {overhang}")));
    }
    if let Some((runner, v)) = choice.ranking.get(1) {
        if v == value {
            return Ok(Some(format!("tie between overhang {overhang} and {runner} at {value}")));
        }
    }
    Ok(None)
}

fn optimality(rng: &mut ChaCha8Rng, max_n: i64) -> Result<Tally> {
    let mut t = threshold_optimality(rng, max_n)?;
    t.merge(depolarized_optimality()?);
    Ok(t)
}

/// Overhang is the strict argmax in every sector whose gaps clear the thresholds.
pub fn optimality_thresholds(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok(threshold_optimality(&mut rng, cfg.max_n.unwrap_or(12))?.report(Suite::Optimality, cfg.seed))
}

/// Overhang is one-site optimal for depolarized inputs at k = 1.
pub fn optimality_depolarized(cfg: &SuiteConfig) -> Result<SuiteReport> {
    Ok(depolarized_optimality()?.report(Suite::Optimality, cfg.seed))
}

fn threshold_optimality(rng: &mut ChaCha8Rng, max_n: i64) -> Result<Tally> {
    let mut t = Tally::default();
    let mut spectra: Vec<Spectrum> =
        ["3/4,1/4", "9/10,1/10", "7/10,1/5,1/10", "5/6,1/9,1/18", "1/2,3/10,1/5"].iter().map(|s| s.parse()).collect::<Result<_>>()?;
    for _ in 0..6 {
        let d = rng.gen_range(2..=3);
        let q = random_spectrum(rng, d, true);
        if let Ok(s) = Spectrum::new(q) {
            spectra.push(s);
        }
    }
    // thresholds exceeding the sector gaps
    for p in &spectra {
        let d = p.d();
        for k in (1..=d).filter(|&k| p.is_nondegenerate_at(k)) {
            for objective in [Objective::All, Objective::One] {
                for m in 1..=max_n {
                    let bounds = gap_thresholds_exact(p, k, m, objective)?;
                    for n in 1..=max_n {
                        for sigma in enumerate_diagrams(n, d).into_iter().filter(|s| admits(s, k, &bounds)) {
                            let bad = overhang_strictly_best(&sigma, k, m, p.probs(), objective)?;
                            t.check(bad.is_none(), n as usize, || {
                                format!("ς={sigma}, p=({p}), k={k}, m={m}, {objective}: {}", bad.clone().unwrap_or_default())
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(t)
}

fn depolarized_optimality() -> Result<Tally> {
    let mut t = Tally::default();
    for eta in [ratio(1, 4), ratio(1, 2), ratio(3, 4)] {
        for d in 2..=3usize {
            let p = Spectrum::depolarized(d, &eta)?;
            for n in 1..=6 {
                for sigma in enumerate_diagrams(n, d) {
                    for m in 1..=3 {
                        let mu = overhang_removal(&sigma, 1, m)?.environment(&sigma)?;
                        let best = sector_fidelity_one(&sigma, 1, &mu, p.probs())?;
                        for r in enumerate_environments(&sigma, m) {
                            let lambda = r.environment(&sigma)?;
                            if lambda == mu {
                                continue;
                            }
                            let v = sector_fidelity_one(&sigma, 1, &lambda, p.probs())?;
                            t.check(v < best, n as usize, || {
                                format!("depolarized η={eta}, d={d}, ς={sigma}, m={m}: λ={lambda} gives {v} ≥ overhang {best}")
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(t)
}

/// Tensor factors the permutation oracle needs for an environment.
fn oracle_sites(sigma: &YoungDiagram, lambda: &YoungDiagram) -> i64 {
    let rows = lambda.rows();
    sigma.n() + (-rows[rows.len() - 1]).max(0) * rows.len() as i64
}

/// `max_sites` caps the size of the symmetric-group computations.
fn oracle_consistency(rng: &mut ChaCha8Rng, schur_cases: usize, max_sites: i64) -> Result<Tally> {
    let mut t = Tally::default();
    let mut spectra: Vec<Spectrum> = ["3/4,1/4", "2/3,1/3", "1/2,3/10,1/5", "3/5,1/4,3/20"].iter().map(|s| s.parse()).collect::<Result<_>>()?;
    for d in 2..=3 {
        spectra.push(Spectrum::new(random_spectrum(rng, d, true))?);
    }
    for p in spectra.iter().filter(|p| p.is_nondegenerate()) {
        let d = p.d();
        for k in 1..=d {
            for m in 1..=3i64 {
                let output = YoungDiagram::padded(&[m], d)?;
                for sigma in enumerate_diagrams(2, d) {
                    for r in enumerate_environments(&sigma, m) {
                        let lambda = r.environment(&sigma)?;
                        if oracle_sites(&sigma, &lambda) > max_sites {
                            continue;
                        }
                        let oracle = match permutation_oracle(&sigma, &output, &lambda, k, p.probs()) {
                            Ok(o) => o,
                            Err(QpaError::Unsupported(_)) => continue,
                            Err(e) => return Err(e),
                        };
                        let all = sector_fidelity_all(&sigma, k, &r, p.probs())?;
                        let one = sector_fidelity_one(&sigma, k, &lambda, p.probs())?;
                        t.check(all == oracle.all_site && one == oracle.one_site, 2, || {
                            format!("ς={sigma}, λ={lambda}, k={k}, p=({p}): formulas ({all}, {one}) vs oracle ({}, {})", oracle.all_site, oracle.one_site)
                        });
                    }
                }
                for objective in [Objective::All, Objective::One] {
                    if objective == Objective::All && m > 2 {
                        continue;
                    }
                    let (overall, _) = overall_fidelity(2, k, m, p, objective, &Rule::Overhang)?;
                    let mut expect = BigRational::zero();
                    let mut covered = true;
                    for (sigma, mass) in sw_distribution(2, p.probs()) {
                        let r = chosen_removal(&sigma, k, m, p, objective)?;
                        let lambda = r.environment(&sigma)?;
                        if oracle_sites(&sigma, &lambda) > max_sites {
                            covered = false;
                            continue;
                        }
                        match permutation_oracle(&sigma, &output, &lambda, k, p.probs()) {
                            Ok(o) => expect += mass * if objective == Objective::All { o.all_site } else { o.one_site },
                            Err(QpaError::Unsupported(_)) => covered = false,
                            Err(e) => return Err(e),
                        }
                    }
                    if !covered {
                        continue;
                    }
                    t.check(overall == expect, 2, || format!("overall n=2, k={k}, m={m}, {objective}, p=({p}): {overall} vs oracle {expect}"));
                }
            }
        }
    }
    for _ in 0..schur_cases {
        let d = rng.gen_range(1..=4);
        let q = random_spectrum(rng, d, false);
        let s = random_partition(rng, d, 7);
        let (a, b) = (schur_polynomial(&s, &q), schur_jacobi_trudi(&s, &q));
        t.check(a == b, s.n() as usize, || format!("s_{s}({}): GT {a} vs Jacobi–Trudi {b}", show(&q)));
    }
    Ok(t)
}

/// Removal the overhang rule uses in a sector, including its fallback.
fn chosen_removal(sigma: &YoungDiagram, k: usize, m: i64, p: &Spectrum, objective: Objective) -> Result<RemovalVector> {
    if sigma.row(k) >= m {
        overhang_removal(sigma, k, m)
    } else {
        Ok(optimal_sector_channel(sigma, k, m, p.probs(), objective)?.removal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let cfg = SuiteConfig { seed: 1, cases: Some(20), max_n: Some(4) };
        for s in [Suite::Normalization, Suite::FSymbols, Suite::Majorization, Suite::Monotonicity, Suite::LogConvexity, Suite::Splitting] {
            let r = run_suite(s, &cfg).unwrap();
            assert!(r.passed, "{r:?}");
            assert!(r.cases > 0);
        }
    }
}
