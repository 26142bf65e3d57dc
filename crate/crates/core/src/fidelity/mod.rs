//! Exact sector-wise and overall fidelities of covariant purification channels.
//!
//! A channel on the sector `ς` is labelled by its environment `μ = ς − m`.
//! All sector formulas work in the reindexed spectrum `q` where the target
//! eigenvalue sits in the last slot.

mod oracle;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{QpaError, Result};
use crate::protocol::{enumerate_environments, overhang_removal, reindex_vec, RemovalVector, TargetSpec};
use crate::rational::{multinomial, rising};
use crate::scalar::Scalar;
use crate::spectrum::Spectrum;
use crate::tableaux::{enumerate_diagrams, interlacing_rows, schur_rows, specht_dim, GtPattern, YoungDiagram};

pub use oracle::{dense_two_copy_oracle, permutation_oracle, OracleOutput};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    All,
    One,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::All => "all",
            Objective::One => "one",
        })
    }
}

/// Chooses a removal for a sector; `None` means "no preference".
pub type RemovalChoice = Arc<dyn Fn(&YoungDiagram) -> Option<RemovalVector> + Send + Sync>;

/// How the overall protocol picks an environment in each sector.
#[derive(Clone)]
pub enum Rule {
    Overhang,
    OptimalPerSector,
    Explicit(RemovalChoice),
}

impl Rule {
    pub fn tag(&self) -> &'static str {
        match self {
            Rule::Overhang => "overhang",
            Rule::OptimalPerSector => "optimal-per-sector",
            Rule::Explicit(_) => "explicit",
        }
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Utility component for the level-`d−1` row `below` of a pattern with top
/// row `top`, when `m_i` boxes are removed from row `i`.
///
/// Only the two top levels of a GT pattern enter.
pub fn utility_from_levels(top: &[i64], below: &[i64], removal: &[i64]) -> BigRational {
    let d = top.len();
    let wd: Vec<i64> = (0..d).map(|i| top[i] - i as i64 - 1).collect();
    let wb: Vec<i64> = (0..below.len()).map(|j| below[j] - j as i64 - 1).collect();
    let mut num = multinomial(removal);
    let mut den = BigInt::one();
    for i in 0..d {
        let mi = removal[i];
        if mi == 0 {
            continue;
        }
        for &b in &wb {
            num *= rising(b - wd[i], mi);
        }
        for j in (0..d).filter(|&j| j != i) {
            den *= rising(wd[j] - wd[i] + 1, mi);
        }
        if num.is_zero() {
            return BigRational::zero();
        }
    }
    BigRational::new(num, den)
}

/// Fidelity of the output with `|d⟩^{⊗m}` on the GT basis state `w`, for the
/// channel with removal `removal`.
pub fn utility_component(sigma: &YoungDiagram, removal: &RemovalVector, w: &GtPattern) -> Result<BigRational> {
    if w.top() != sigma.rows() {
        return Err(QpaError::Mismatch(format!("pattern top row does not match {sigma}")));
    }
    removal.validate(sigma)?;
    if sigma.d() == 1 {
        return Ok(BigRational::one());
    }
    Ok(utility_from_levels(sigma.rows(), w.level(sigma.d() - 1), removal.counts()))
}

/// Weyl averages over one sector in a fixed reindexed spectrum, with the
/// Schur polynomials of the `d−1` leading variables memoised.
pub struct WeylAverager<S: Scalar> {
    q: Vec<S>,
    memo: HashMap<Vec<i64>, S>,
    top_memo: HashMap<Vec<i64>, S>,
}

impl<S: Scalar> WeylAverager<S> {
    /// `q` is the reindexed spectrum (target last).
    pub fn new(q: Vec<S>) -> Self {
        WeylAverager { q, memo: HashMap::new(), top_memo: HashMap::new() }
    }

    pub fn from_spectrum(p: &[S], k: usize) -> Self {
        Self::new(reindex_vec(p, k))
    }

    pub fn schur(&mut self, sigma: &YoungDiagram) -> S {
        if let Some(v) = self.top_memo.get(sigma.rows()) {
            return v.clone();
        }
        let v = crate::tableaux::schur_polynomial(sigma, &self.q);
        self.top_memo.insert(sigma.rows().to_vec(), v.clone());
        v
    }

    /// `Σ_w f(w) q^{#(w)}`, the unnormalised average.
    pub fn weighted_sum(&mut self, sigma: &YoungDiagram, removal: &[i64]) -> S {
        let d = sigma.d();
        let rows = sigma.rows();
        if d == 1 {
            return self.q[0].powi(rows[0]);
        }
        let total: i64 = rows.iter().sum();
        let lead = &self.q[..d - 1];
        let mut acc = S::zero();
        for below in interlacing_rows(rows) {
            let f = utility_from_levels(rows, &below, removal);
            if f.is_zero() {
                continue;
            }
            let s = schur_rows(&below, lead, &mut self.memo);
            if s.is_zero() {
                continue;
            }
            let e = total - below.iter().sum::<i64>();
            acc = acc + S::from_rational(&f) * self.q[d - 1].powi(e) * s;
        }
        acc
    }

    /// Normalised Weyl average, `None` when the sector has zero weight.
    pub fn average(&mut self, sigma: &YoungDiagram, removal: &[i64]) -> Option<S> {
        let s = self.schur(sigma);
        if s.is_zero() {
            return None;
        }
        Some(self.weighted_sum(sigma, removal) / s)
    }

    /// One-site average for environment `lambda`, via the F-symbol decomposition.
    pub fn one_site(&mut self, sigma: &YoungDiagram, lambda: &YoungDiagram) -> Result<Option<S>> {
        let m = sigma.n() - lambda.n();
        let d = sigma.d();
        let s = self.schur(sigma);
        if s.is_zero() {
            return Ok(None);
        }
        let mut acc = S::zero();
        for i in 1..=d {
            let f2 = f_symbol_sq(sigma, lambda, i, m)?;
            if f2.is_zero() {
                continue;
            }
            let mut unit = vec![0; d];
            unit[i - 1] = 1;
            acc = acc + S::from_rational(&f2) * self.weighted_sum(sigma, &unit);
        }
        Ok(Some(acc / s))
    }
}

fn undefined(sigma: &YoungDiagram) -> QpaError {
    QpaError::UndefinedSector(format!("sector {sigma} has zero Schur weight for this spectrum"))
}

/// All-site sector fidelity `^k f^ς_all` for the given removal.
///
/// `p` is the sorted spectrum; it is reindexed internally.
pub fn sector_fidelity_all<S: Scalar>(sigma: &YoungDiagram, k: usize, removal: &RemovalVector, p: &[S]) -> Result<S> {
    check_target(k, sigma.d(), p.len())?;
    removal.validate(sigma)?;
    WeylAverager::from_spectrum(p, k).average(sigma, removal.counts()).ok_or_else(|| undefined(sigma))
}

/// Squared F-symbol coupling environment `lambda` to `ς − e_i`.
pub fn f_symbol_sq(sigma: &YoungDiagram, lambda: &YoungDiagram, i: usize, m: i64) -> Result<BigRational> {
    let d = sigma.d();
    if lambda.d() != d {
        return Err(QpaError::Mismatch(format!("{sigma} and {lambda} differ in d")));
    }
    if sigma.n() - lambda.n() != m {
        return Err(QpaError::Mismatch(format!("|{sigma}| − |{lambda}| is not {m}")));
    }
    if m < 1 {
        return Err(QpaError::Precondition("F-symbols need m ≥ 1".into()));
    }
    if i == 0 || i > d {
        return Err(QpaError::TargetOutOfRange { k: i, d });
    }
    if i < d && sigma.row(i) == sigma.row(i + 1) {
        return Ok(BigRational::zero());
    }
    let s = sigma.rows();
    let l = lambda.rows();
    let iz = i - 1;
    let mut num = BigInt::one();
    for (j, lj) in l.iter().enumerate() {
        num *= BigInt::from(s[iz] - lj + j as i64 - iz as i64);
    }
    let mut den = BigInt::from(m);
    for (j, sj) in s.iter().enumerate().filter(|&(j, _)| j != iz) {
        den *= BigInt::from(s[iz] - sj + j as i64 - iz as i64);
    }
    Ok(BigRational::new(num, den))
}

/// One-site sector fidelity `^k f^ς_one` for environment `lambda`, with the
/// output restricted to the totally symmetric subspace.
pub fn sector_fidelity_one<S: Scalar>(sigma: &YoungDiagram, k: usize, lambda: &YoungDiagram, p: &[S]) -> Result<S> {
    check_target(k, sigma.d(), p.len())?;
    RemovalVector::from_environment(sigma, lambda)?;
    WeylAverager::from_spectrum(p, k).one_site(sigma, lambda)?.ok_or_else(|| undefined(sigma))
}

fn check_target(k: usize, d: usize, len: usize) -> Result<()> {
    if len != d {
        return Err(QpaError::Mismatch(format!("spectrum has {len} entries, diagram has {d} rows")));
    }
    if k == 0 || k > d {
        return Err(QpaError::TargetOutOfRange { k, d });
    }
    Ok(())
}

/// Argmax of a sector objective over all valid environments.
#[derive(Debug, Clone)]
pub struct SectorChoice<S> {
    pub removal: RemovalVector,
    pub environment: YoungDiagram,
    pub value: S,
    /// Every candidate, best first.
    pub ranking: Vec<(RemovalVector, S)>,
}

/// Exhaustive search for the best removal of `m` boxes in sector `ς`.
///
/// Ties go to the lexicographically largest environment.
pub fn optimal_sector_channel<S: Scalar>(
    sigma: &YoungDiagram,
    k: usize,
    m: i64,
    p: &[S],
    objective: Objective,
) -> Result<SectorChoice<S>> {
    check_target(k, sigma.d(), p.len())?;
    let mut avg = WeylAverager::from_spectrum(p, k);
    if avg.schur(sigma).is_zero() {
        return Err(undefined(sigma));
    }
    best_in_sector(&mut avg, sigma, m, objective)
}

fn sector_value<S: Scalar>(
    avg: &mut WeylAverager<S>,
    sigma: &YoungDiagram,
    removal: &RemovalVector,
    objective: Objective,
) -> Result<Option<S>> {
    match objective {
        Objective::All => Ok(avg.average(sigma, removal.counts())),
        Objective::One => {
            let lambda = removal.environment(sigma)?;
            avg.one_site(sigma, &lambda)
        }
    }
}

fn best_in_sector<S: Scalar>(
    avg: &mut WeylAverager<S>,
    sigma: &YoungDiagram,
    m: i64,
    objective: Objective,
) -> Result<SectorChoice<S>> {
    let mut ranking = Vec::new();
    for removal in enumerate_environments(sigma, m) {
        let v = sector_value(avg, sigma, &removal, objective)?.ok_or_else(|| undefined(sigma))?;
        ranking.push((removal, v));
    }
    // best value first; among equals the smallest removal, i.e. the largest μ
    ranking.sort_by(|(ra, va), (rb, vb)| vb.partial_cmp(va).unwrap_or(std::cmp::Ordering::Equal).then_with(|| ra.cmp(rb)));
    let (removal, value) = ranking[0].clone();
    let environment = removal.environment(sigma)?;
    Ok(SectorChoice { removal, environment, value, ranking })
}

/// One row of an overall evaluation.
#[derive(Debug, Clone)]
pub struct SectorOutcome<S> {
    pub sigma: YoungDiagram,
    pub mass: S,
    pub removal: RemovalVector,
    pub environment: YoungDiagram,
    /// `None` for sectors of zero weight.
    pub fidelity: Option<S>,
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct OverallOutcome<S> {
    pub sectors: Vec<SectorOutcome<S>>,
    pub overall: S,
}

/// Schur–Weyl average of sector fidelities, in any scalar type.
///
/// Sectors are evaluated in parallel; the sum is taken in enumeration order.
pub fn overall_fidelity_in<S: Scalar>(
    n: i64,
    k: usize,
    m: i64,
    p: &[S],
    objective: Objective,
    rule: &Rule,
) -> Result<OverallOutcome<S>> {
    let d = p.len();
    if d == 0 {
        return Err(QpaError::InvalidSpectrum("empty spectrum".into()));
    }
    if k == 0 || k > d {
        return Err(QpaError::TargetOutOfRange { k, d });
    }
    if m < 1 {
        return Err(QpaError::Precondition(format!("m must be at least 1, got {m}")));
    }
    if n < 0 {
        return Err(QpaError::Precondition(format!("n must be nonnegative, got {n}")));
    }
    if objective == Objective::All && m > n {
        return Err(QpaError::Precondition(format!("all-site objective needs m ≤ n, got m={m}, n={n}")));
    }
    let q = reindex_vec(p, k);
    let sectors: Vec<YoungDiagram> = enumerate_diagrams(n, d);
    let rows: Vec<Result<SectorOutcome<S>>> = sectors
        .par_iter()
        .map(|sigma| {
            let mut avg = WeylAverager::new(q.clone());
            evaluate_sector(&mut avg, sigma, k, m, objective, rule)
        })
        .collect();
    let sectors = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let mut overall = S::zero();
    for row in &sectors {
        if let Some(f) = &row.fidelity {
            overall = overall + row.mass.clone() * f.clone();
        }
    }
    Ok(OverallOutcome { sectors, overall })
}

fn evaluate_sector<S: Scalar>(
    avg: &mut WeylAverager<S>,
    sigma: &YoungDiagram,
    k: usize,
    m: i64,
    objective: Objective,
    rule: &Rule,
) -> Result<SectorOutcome<S>> {
    let g = specht_dim(sigma)?;
    let s = avg.schur(sigma);
    let mass = S::from_int(&BigInt::from(g)) * s.clone();
    let overhang = overhang_removal(sigma, k, m)?;
    if s.is_zero() {
        let environment = overhang.environment(sigma)?;
        return Ok(SectorOutcome {
            sigma: sigma.clone(),
            mass,
            removal: overhang,
            environment,
            fidelity: None,
            note: Some("zero weight".into()),
        });
    }
    let (removal, note) = match rule {
        Rule::Overhang if sigma.row(k) >= m => (overhang, None),
        Rule::Overhang => (best_in_sector(avg, sigma, m, objective)?.removal, Some("fallback: row k shorter than m".into())),
        Rule::OptimalPerSector => (best_in_sector(avg, sigma, m, objective)?.removal, None),
        Rule::Explicit(choose) => match choose(sigma).filter(|r| r.total() == m && r.is_valid_for(sigma)) {
            Some(r) => (r, None),
            None => (best_in_sector(avg, sigma, m, objective)?.removal, Some("fallback to best environment".into())),
        },
    };
    let fidelity = sector_value(avg, sigma, &removal, objective)?;
    let environment = removal.environment(sigma)?;
    Ok(SectorOutcome { sigma: sigma.clone(), mass, removal, environment, fidelity, note })
}

/// Losses that are monotone functions of the fidelity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Losses {
    pub infidelity: f64,
    pub purified: f64,
    pub bures: f64,
    pub trace: f64,
    #[serde(serialize_with = "serialize_extended")]
    pub cross_entropy: f64,
}

fn serialize_extended<Ser: Serializer>(v: &f64, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    if v.is_infinite() {
        s.serialize_str(if *v > 0.0 { "inf" } else { "-inf" })
    } else {
        s.serialize_f64(*v)
    }
}

/// Loss transforms of a fidelity, as monotone maps of `L = 1 − F`.
///
/// The cross-entropy term `−ln(1−F)` is `+∞` at `F = 1`.
pub fn loss_transforms(f: f64) -> Losses {
    let l = (1.0 - f).max(0.0);
    Losses {
        infidelity: l,
        purified: 1.0 - l.sqrt(),
        bures: 1.0 - (1.0 - (1.0 - l).sqrt()).sqrt(),
        trace: l,
        cross_entropy: -(1.0 - f).ln(),
    }
}

/// Serializable summary of an overall evaluation.
#[derive(Debug, Clone, Serialize)]
pub struct FidelityReport {
    pub n: i64,
    pub d: usize,
    pub k: usize,
    pub m: i64,
    pub spectrum: String,
    pub objective: Objective,
    pub rule: String,
    pub overall: String,
    pub sectors: Vec<SectorRow>,
    pub losses: Losses,
}

#[derive(Debug, Clone, Serialize)]
pub struct SectorRow {
    pub sigma: String,
    pub mass: String,
    pub mu: String,
    pub removal: Vec<i64>,
    pub fidelity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl FidelityReport {
    pub fn from_outcome<S: Scalar>(
        n: i64,
        k: usize,
        m: i64,
        spectrum: String,
        objective: Objective,
        rule: &Rule,
        outcome: &OverallOutcome<S>,
    ) -> Self {
        let sectors = outcome
            .sectors
            .iter()
            .map(|row| SectorRow {
                sigma: row.sigma.to_string(),
                mass: row.mass.render(),
                mu: row.environment.to_string(),
                removal: row.removal.counts().to_vec(),
                fidelity: row.fidelity.as_ref().map(|f| f.render()),
                note: row.note.clone(),
            })
            .collect();
        FidelityReport {
            n,
            d: outcome.sectors.first().map_or(0, |r| r.sigma.d()),
            k,
            m,
            spectrum,
            objective,
            rule: rule.tag().to_string(),
            overall: outcome.overall.render(),
            sectors,
            losses: loss_transforms(outcome.overall.to_f64()),
        }
    }
}

/// Exact overall fidelity with the target checked for degeneracy.
pub fn overall_fidelity(
    n: i64,
    k: usize,
    m: i64,
    p: &Spectrum,
    objective: Objective,
    rule: &Rule,
) -> Result<(BigRational, FidelityReport)> {
    TargetSpec::new(k, m, p)?;
    let outcome = overall_fidelity_in(n, k, m, p.probs(), objective, rule)?;
    let report = FidelityReport::from_outcome(n, k, m, p.to_string(), objective, rule, &outcome);
    Ok((outcome.overall, report))
}

/// Float-mode counterpart of [`overall_fidelity`].
pub fn overall_fidelity_f64(
    n: i64,
    k: usize,
    m: i64,
    p: &Spectrum,
    objective: Objective,
    rule: &Rule,
) -> Result<(f64, FidelityReport)> {
    TargetSpec::new(k, m, p)?;
    let outcome = overall_fidelity_in(n, k, m, &p.to_f64(), objective, rule)?;
    let report = FidelityReport::from_outcome(n, k, m, p.to_string(), objective, rule, &outcome);
    Ok((outcome.overall, report))
}

/// Checks `0 ≤ v ≤ 1`.
pub fn in_unit_interval(v: &BigRational) -> bool {
    !v.is_negative() && v <= &BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::tableaux::enumerate_gt_patterns;

    fn yd(rows: &[i64]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn probs(text: &str) -> Vec<BigRational> {
        text.parse::<Spectrum>().unwrap().probs().to_vec()
    }

    #[test]
    fn utility_component_examples() {
        let s = yd(&[2, 0]);
        let r = RemovalVector::new(vec![2, 0]);
        let pats: Vec<_> = enumerate_gt_patterns(&s).collect();
        assert_eq!(utility_component(&s, &r, &pats[0]).unwrap(), ratio(1, 1));
        assert_eq!(utility_component(&s, &r, &pats[1]).unwrap(), ratio(0, 1));
        let s = yd(&[1, 1]);
        let w = enumerate_gt_patterns(&s).next().unwrap();
        assert_eq!(utility_component(&s, &RemovalVector::new(vec![0, 1]), &w).unwrap(), ratio(1, 2));
    }

    #[test]
    fn sector_all_examples() {
        let s = yd(&[2, 0]);
        let r = RemovalVector::new(vec![2, 0]);
        assert_eq!(sector_fidelity_all(&s, 1, &r, &probs("3/4,1/4")).unwrap(), ratio(9, 13));
        assert_eq!(sector_fidelity_all(&s, 1, &r, &probs("1,0")).unwrap(), ratio(1, 1));
        let s = yd(&[1, 1]);
        let r = RemovalVector::new(vec![0, 1]);
        assert_eq!(sector_fidelity_all(&s, 1, &r, &probs("3/4,1/4")).unwrap(), ratio(1, 2));
        assert_eq!(sector_fidelity_all(&s, 1, &r, &probs("3/5,2/5")).unwrap(), ratio(1, 2));
        assert!(matches!(sector_fidelity_all(&s, 1, &r, &probs("1,0")), Err(QpaError::UndefinedSector(_))));
    }

    #[test]
    fn f_symbol_examples() {
        let s = yd(&[2, 1, 0]);
        let l = yd(&[1, 1, 0]);
        let got: Vec<_> = (1..=3).map(|i| f_symbol_sq(&s, &l, i, 1).unwrap()).collect();
        assert_eq!(got, [ratio(1, 1), ratio(0, 1), ratio(0, 1)]);
        assert_eq!(f_symbol_sq(&yd(&[2, 0]), &yd(&[0, 0]), 1, 2).unwrap(), ratio(1, 1));
        let s = yd(&[1, 1, 0]);
        let l = yd(&[1, 0, -1]);
        let got: Vec<_> = (1..=3).map(|i| f_symbol_sq(&s, &l, i, 2).unwrap()).collect();
        assert_eq!(got, [ratio(0, 1), ratio(3, 4), ratio(1, 4)]);
        assert!(f_symbol_sq(&s, &l, 1, 1).is_err());
    }

    #[test]
    fn sector_one_example() {
        let v = sector_fidelity_one(&yd(&[2, 0]), 1, &yd(&[1, 0]), &probs("3/4,1/4")).unwrap();
        assert_eq!(v, ratio(21, 26));
    }

    #[test]
    fn optimal_channel_example() {
        let c = optimal_sector_channel(&yd(&[2, 0]), 1, 1, &probs("3/4,1/4"), Objective::All).unwrap();
        assert_eq!(c.removal.counts(), [1, 0]);
        assert_eq!(c.value, ratio(21, 26));
        assert_eq!(c.ranking[1], (RemovalVector::new(vec![0, 1]), ratio(9, 26)));
    }

    #[test]
    fn overall_examples() {
        let p: Spectrum = "3/4,1/4".parse().unwrap();
        let (f, report) = overall_fidelity(2, 1, 1, &p, Objective::All, &Rule::Overhang).unwrap();
        assert_eq!(f, ratio(3, 4));
        assert_eq!(report.overall, "3/4");
        assert_eq!(report.sectors.len(), 2);
        let p: Spectrum = "1/2,3/10,1/5".parse().unwrap();
        let identity: Rule = Rule::Explicit(Arc::new(|s: &YoungDiagram| RemovalVector::from_environment(s, &YoungDiagram::empty(s.d())).ok()));
        for k in 1..=3 {
            for obj in [Objective::All, Objective::One] {
                let (f, _) = overall_fidelity(1, k, 1, &p, obj, &identity).unwrap();
                assert_eq!(&f, p.p(k));
            }
        }
        // a single copy of a middle eigenvector is better served by a depolarizing channel
        let (f, report) = overall_fidelity(1, 2, 1, &p, Objective::All, &Rule::Overhang).unwrap();
        assert_eq!(f, ratio(27, 80));
        assert_eq!(report.sectors[0].mu, "1,0,-1");
        assert_eq!(overall_fidelity(1, 1, 1, &p, Objective::All, &Rule::Overhang).unwrap().0, ratio(1, 2));
        assert!(overall_fidelity(2, 1, 3, &p, Objective::All, &Rule::Overhang).is_err());
    }

    #[test]
    fn losses() {
        let l = loss_transforms(1.0);
        assert_eq!((l.infidelity, l.trace), (0.0, 0.0));
        assert!(l.cross_entropy.is_infinite());
        assert_eq!(loss_transforms(0.0).infidelity, 1.0);
        assert_eq!(loss_transforms(0.75).trace, 0.25);
    }
}
