use assert_cmd::Command;
use serde_json::Value;

fn qpa() -> Command {
    Command::cargo_bin("qpa").unwrap()
}

fn run_json(args: &[&str]) -> Value {
    let out = qpa().args(args).assert().success().get_output().stdout.clone();
    serde_json::from_slice(&out).unwrap()
}

#[test]
fn sector_examples() {
    let v = run_json(&["sector", "--shape", "2,0", "--k", "1", "--m", "2", "--spectrum", "3/4,1/4"]);
    assert_eq!(v["fidelity"], "9/13");
    assert_eq!(v["environment"], "0,0");
    let v = run_json(&["sector", "--shape", "1,1", "--k", "1", "--m", "1", "--spectrum", "1/2,1/2"]);
    assert_eq!(v["fidelity"], "1/2");
}

#[test]
fn sector_with_explicit_environment_and_float() {
    let args = ["sector", "--shape", "1,1,0", "--k", "1", "--environment", "1,0,-1", "--spectrum", "1/2,1/4,1/4", "--objective", "one"];
    let v = run_json(&args);
    assert_eq!(v["fidelity"], "3/8");
    assert_eq!(v["m"], 2);
    let mut float = args.to_vec();
    float.push("--float");
    let v = run_json(&float);
    assert!((v["fidelity"].as_f64().unwrap() - 0.375).abs() < 1e-12);
}

#[test]
fn usage_errors_exit_with_two() {
    qpa().args(["sector", "--shape", "2,0", "--k", "1", "--m", "2"]).assert().code(2);
    let out = qpa().args(["sector", "--shape", "2,0", "--k", "1", "--m", "2", "--spectrum", "3/4,1/x"]).assert().code(2);
    let err = String::from_utf8(out.get_output().stderr.clone()).unwrap();
    assert!(err.contains("column 5"), "{err}");
    // spectrum must be sorted and normalized
    qpa().args(["overall", "--n", "2", "--k", "1", "--m", "1", "--spectrum", "1/4,3/4"]).assert().code(2);
    qpa().args(["overall", "--n", "2", "--k", "3", "--m", "1", "--spectrum", "3/4,1/4"]).assert().code(2);
    qpa().args(["overall", "--n", "2", "--d", "3", "--k", "1", "--m", "1", "--spectrum", "3/4,1/4"]).assert().code(2);
    qpa().args(["verify", "--suite", "nope"]).assert().code(2);
}

#[test]
fn overall_examples() {
    let v = run_json(&["overall", "--n", "2", "--k", "1", "--m", "1", "--spectrum", "3/4,1/4"]);
    assert_eq!(v["overall"], "3/4");
    let v = run_json(&["overall", "--n", "1", "--k", "1", "--m", "1", "--spectrum", "0.6,0.4"]);
    assert_eq!(v["overall"], "3/5");
    for objective in ["all", "one"] {
        let v = run_json(&["overall", "--n", "4", "--d", "3", "--k", "1", "--m", "2", "--spectrum", "1,0,0", "--objective", objective]);
        assert_eq!(v["overall"], "1");
    }
    let v = run_json(&["overall", "--n", "3", "--k", "1", "--m", "1", "--spectrum", "3/4,1/4", "--rule", "optimal"]);
    assert_eq!(v["rule"], "optimal-per-sector");
    assert_eq!(v["sectors"].as_array().unwrap().len(), 2);
}

#[test]
fn asymptote_reports_laws() {
    let v = run_json(&["asymptote", "--spectrum", "3/4,1/4", "--k", "1", "--m", "1", "--n", "100", "--rate", "0.25"]);
    assert!((v["intensive_risk"].as_f64().unwrap() - 0.01).abs() < 1e-12);
    assert!((v["extensive_fidelity"].as_f64().unwrap() - 0.8).abs() < 1e-12);
    assert_eq!(v["all_site_bound"]["valid"], false);
    assert_eq!(v["phase"], 0);
    qpa().args(["asymptote", "--spectrum", "1/2,1/4,1/4", "--k", "2"]).assert().code(2);
}

#[test]
fn phase_diagram_csv_schema() {
    let out = qpa().args(["phase-diagram", "--family", "depolarized", "--d", "3", "--k", "1"]).assert().success();
    let text = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda,R,fidelity,phase"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 20 * 21);
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 4);
        let f: f64 = cols[2].parse().unwrap();
        assert!((0.0..=1.0).contains(&f));
    }
}

#[test]
fn phase_diagram_is_independent_of_worker_count() {
    let args = ["phase-diagram", "--family", "linear", "--from", "1/2,3/10,1/5", "--to", "9/10,1/20,1/20", "--k", "1", "--format", "json"];
    let one = qpa().env("QPA_WORKERS", "1").args(args).assert().success().get_output().stdout.clone();
    let many = qpa().env("QPA_WORKERS", "4").args(args).assert().success().get_output().stdout.clone();
    assert_eq!(one, many);
}

#[test]
fn verify_runs_and_is_deterministic() {
    let v = run_json(&["verify", "--suite", "f-symbols", "--max-n", "7"]);
    assert_eq!(v["passed"], true);
    let args = ["verify", "--suite", "monotonicity", "--cases", "200", "--seed", "7"];
    let a = qpa().args(args).assert().success().get_output().stdout.clone();
    let b = qpa().args(args).assert().success().get_output().stdout.clone();
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["cases"], 200);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sector.json");
    qpa()
        .args(["sector", "--shape", "2,0", "--k", "1", "--m", "2", "--spectrum", "3/4,1/4", "--output"])
        .arg(&path)
        .assert()
        .success()
        .stdout("");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["fidelity"], "9/13");
}
