use qpa_core::asymptotics::{
    extensive_fidelity, gap_thresholds_exact, grid, intensive_risk, macro_terminal, min_gap, nonasymptotic_all_bound,
    nonasymptotic_one_bound, one_site_fidelity_power, one_site_risk_coefficient, phase_diagram as table, Family, RiskBound,
};
use qpa_core::fidelity::{
    overall_fidelity, overall_fidelity_f64, sector_fidelity_all, sector_fidelity_one, Objective, Rule,
};
use qpa_core::protocol::{overhang_removal, RemovalVector};
use qpa_core::rational::format_rational;
use qpa_core::verify::{run_suite, Suite, SuiteConfig};
use qpa_core::{QpaError, Spectrum};
use serde::Serialize;
use serde_json::Value;

use crate::{AsymptoteArgs, CliError, FamilyArg, Format, OverallArgs, PhaseArgs, RuleArg, SectorArgs, VerifyArgs};

type Output = Result<String, CliError>;

fn json<T: Serialize>(value: &T) -> Output {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_dims(what: &str, got: usize, spectrum: &Spectrum) -> Result<(), CliError> {
    if got != spectrum.d() {
        return Err(usage(format!("{what} has {got} entries but the spectrum has d={}", spectrum.d())));
    }
    Ok(())
}

#[derive(Serialize)]
struct SectorOutput {
    shape: String,
    k: usize,
    m: i64,
    spectrum: String,
    objective: Objective,
    environment: String,
    removal: Vec<i64>,
    fidelity: Value,
}

pub fn sector(a: &SectorArgs) -> Output {
    let sigma = &a.shape;
    check_dims("shape", sigma.d(), &a.spectrum)?;
    let removal = match (&a.environment, a.m) {
        (Some(mu), m) => {
            check_dims("environment", mu.d(), &a.spectrum)?;
            let r = RemovalVector::from_environment(sigma, mu)?;
            if let Some(m) = m.filter(|&m| m != r.total()) {
                return Err(usage(format!("environment {mu} removes {} boxes from {sigma}, not m={m}", r.total())));
            }
            r
        }
        (None, Some(m)) => overhang_removal(sigma, a.k, m)?,
        (None, None) => return Err(usage("give --m or --environment")),
    };
    let mu = removal.environment(sigma)?;
    let objective = Objective::from(a.objective);
    let fidelity = if a.float {
        let p = a.spectrum.to_f64();
        let f = match objective {
            Objective::All => sector_fidelity_all(sigma, a.k, &removal, &p)?,
            Objective::One => sector_fidelity_one(sigma, a.k, &mu, &p)?,
        };
        Value::from(f)
    } else {
        let p = a.spectrum.probs();
        let f = match objective {
            Objective::All => sector_fidelity_all(sigma, a.k, &removal, p)?,
            Objective::One => sector_fidelity_one(sigma, a.k, &mu, p)?,
        };
        Value::from(format_rational(&f))
    };
    json(&SectorOutput {
        shape: sigma.to_string(),
        k: a.k,
        m: removal.total(),
        spectrum: a.spectrum.to_string(),
        objective,
        environment: mu.to_string(),
        removal: removal.counts().to_vec(),
        fidelity,
    })
}

pub fn overall(a: &OverallArgs) -> Output {
    if let Some(d) = a.d {
        check_dims("--d", d, &a.spectrum)?;
    }
    let rule = match a.rule {
        RuleArg::Overhang => Rule::Overhang,
        RuleArg::Optimal => Rule::OptimalPerSector,
    };
    let objective = Objective::from(a.objective);
    let report = if a.float {
        overall_fidelity_f64(a.n, a.k, a.m, &a.spectrum, objective, &rule)?.1
    } else {
        overall_fidelity(a.n, a.k, a.m, &a.spectrum, objective, &rule)?.1
    };
    json(&report)
}

#[derive(Serialize)]
struct Thresholds {
    above: Option<String>,
    below: Option<String>,
}

#[derive(Serialize)]
struct AsymptoteOutput {
    spectrum: String,
    k: usize,
    min_gap: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    intensive_risk: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_site_bound: Option<RiskBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    one_site_bound: Option<RiskBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    thresholds: Option<Thresholds>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "R")]
    rate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    extensive_fidelity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    one_site_coefficient: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    one_site_fidelity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    phase: Option<usize>,
}

pub fn asymptote(a: &AsymptoteArgs) -> Output {
    let p = a.spectrum.to_f64();
    let k = a.k;
    if k == 0 || k > p.len() {
        return Err(QpaError::TargetOutOfRange { k, d: p.len() }.into());
    }
    if !a.spectrum.is_nondegenerate_at(k) {
        return Err(QpaError::DegenerateTarget { k }.into());
    }
    if let Some(m) = a.m.filter(|&m| m < 1) {
        return Err(usage(format!("m must be at least 1, got {m}")));
    }
    if let Some(n) = a.n.filter(|&n| n < 1) {
        return Err(usage(format!("n must be at least 1, got {n}")));
    }
    let mut out = AsymptoteOutput {
        spectrum: a.spectrum.to_string(),
        k,
        min_gap: min_gap(&p, k),
        intensive_risk: None,
        all_site_bound: None,
        one_site_bound: None,
        thresholds: None,
        rate: a.rate,
        extensive_fidelity: None,
        one_site_coefficient: None,
        one_site_fidelity: None,
        phase: None,
    };
    if let (Some(m), Some(n)) = (a.m, a.n) {
        let (m, n) = (m as f64, n as f64);
        out.intensive_risk = Some(intensive_risk(&p, k, m, n)?);
        out.all_site_bound = Some(nonasymptotic_all_bound(&p, k, m, n)?);
        out.one_site_bound = Some(nonasymptotic_one_bound(&p, k, m, n)?);
    }
    if let Some(m) = a.m {
        let (above, below) = gap_thresholds_exact(&a.spectrum, k, m, Objective::from(a.objective))?;
        out.thresholds = Some(Thresholds { above: above.as_ref().map(format_rational), below: below.as_ref().map(format_rational) });
    }
    if let Some(rate) = a.rate {
        out.extensive_fidelity = Some(extensive_fidelity(&p, k, rate)?);
        out.one_site_fidelity = Some(one_site_fidelity_power(&p, k, rate)?);
        if rate > 0.0 {
            out.one_site_coefficient = Some(one_site_risk_coefficient(&p, k, rate)?);
        }
        out.phase = Some(macro_terminal(&p, k, rate) - k);
    }
    json(&out)
}

pub fn phase_diagram(a: &PhaseArgs) -> Output {
    let family = match a.family {
        FamilyArg::Depolarized => {
            if a.d < 2 {
                return Err(usage(format!("the depolarized family needs d ≥ 2, got {}", a.d)));
            }
            Family::Depolarized { d: a.d }
        }
        FamilyArg::DepolarizedLimit => Family::DepolarizedLimit,
        FamilyArg::Linear => match (&a.from, &a.to) {
            (Some(from), Some(to)) => {
                check_dims("--to", to.d(), from)?;
                Family::Linear { from: from.to_f64(), to: to.to_f64() }
            }
            _ => return Err(usage("the linear family needs --from and --to")),
        },
    };
    if a.rate_min < 0.0 || a.rate_max < a.rate_min || a.lambda_max < a.lambda_min {
        return Err(usage("grid bounds must satisfy 0 ≤ rate-min ≤ rate-max and lambda-min ≤ lambda-max"));
    }
    let lambdas = grid(a.lambda_min, a.lambda_max, a.lambda_points);
    let rates = grid(a.rate_min, a.rate_max, a.rate_points);
    let result = table(&family, a.k, &lambdas, &rates, Objective::from(a.objective));
    if result.rows.is_empty() && !lambdas.is_empty() {
        return Err(usage(format!("no valid grid point: {}", result.skipped.join("; "))));
    }
    for msg in &result.skipped {
        eprintln!("skipped {msg}");
    }
    match a.format {
        Format::Json => json(&result),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &result.rows {
                w.serialize(row).map_err(|e| usage(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| usage(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| usage(e.to_string()))
        }
    }
}

pub fn verify(a: &VerifyArgs) -> Output {
    let suites: Vec<Suite> = if a.suite == "all" { Suite::ALL.to_vec() } else { vec![a.suite.parse()?] };
    let cfg = SuiteConfig { seed: a.seed, cases: a.cases, max_n: a.max_n };
    let reports = suites.iter().map(|s| run_suite(*s, &cfg)).collect::<Result<Vec<_>, _>>()?;
    for r in reports.iter().filter(|r| !r.passed) {
        eprintln!("{}: {} violations; counterexample: {}", r.suite, r.violations, r.counterexample.as_deref().unwrap_or("-"));
    }
    let text = if reports.len() == 1 { json(&reports[0])? } else { json(&reports)? };
    if reports.iter().all(|r| r.passed) {
        Ok(text)
    } else {
        Err(CliError::Failed(text))
    }
}
