use std::path::Path;
use std::process::{Command, Output};

fn pappus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pappus")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn out_flag(dir: &Path) -> String {
    dir.to_string_lossy().into_owned()
}

#[test]
fn invariants_match_closed_forms() {
    let o = pappus(&["invariants", "--a", "1", "--b", "1", "--c", "1/2", "--d", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.starts_with("tau(r1 r2^2)") && l.ends_with("256/3")));

    let o = pappus(&["invariants", "--json", "--a", "1", "--b", "2", "--c", "0", "--d", "0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["trace_r1_r2m"], "-121/16");
    assert_eq!(v["in_theta"], true);

    for (c, d) in [("1/3", "-2/7"), ("0.5", "0.25")] {
        let o = pappus(&["invariants", "--json", "--a", "1", "--b", "1", "--c", c, "--d", d]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["psi"], "0");
    }
}

#[test]
fn parameter_errors_are_usage_errors() {
    assert_eq!(pappus(&["invariants", "--a", "1", "--b", "1", "--c", "1", "--d", "0"]).status.code(), Some(2));
    assert_eq!(pappus(&["invariants", "--a", "x", "--b", "1", "--c", "0", "--d", "0"]).status.code(), Some(2));
    assert_eq!(pappus(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pappus(&["--depth", "9", "orbit", "--a", "1", "--b", "2", "--c", "0", "--d", "0"]).status.code(), Some(2));
    assert_eq!(pappus(&["--tol", "0", "region"]).status.code(), Some(2));
}

#[test]
fn verify_filters_by_id() {
    let dir = tempfile::tempdir().unwrap();
    let o = pappus(&["verify", "--only", "specialp", "--out", &out_flag(dir.path())]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let bundle: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("certificates.json")).unwrap()).unwrap();
    assert_eq!(bundle.as_array().unwrap().len(), 1);
    assert_eq!(bundle[0]["id"], "specialp");

    let o = pappus(&["verify", "--only", "nosuch", "--out", &out_flag(dir.path())]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_full_suite() {
    let dir = tempfile::tempdir().unwrap();
    let o = pappus(&["verify", "--out", &out_flag(dir.path())]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let bundle: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("certificates.json")).unwrap()).unwrap();
    let certs = bundle.as_array().unwrap();
    assert!(certs.len() >= 7);
    assert!(certs.iter().all(|c| c["passed"] == true));
}

#[test]
fn orbit_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = out_flag(dir.path());
    let o = pappus(&["--depth", "3", "--out", &out, "orbit", "--a", "1", "--b", "2", "--c", "0", "--d", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("nesting certificate: true"));
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("orbit.json")).unwrap()).unwrap();
    assert_eq!(j["certificate"], true);
    assert!(std::fs::read_to_string(dir.path().join("orbit.svg")).unwrap().starts_with("<svg"));

    let o = pappus(&["--out", &out, "orbit", "--a", "6", "--b", "2", "--c", "0", "--d", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("good region"));
}

#[test]
fn curve_outputs_are_exact_and_bounded() {
    let dir = tempfile::tempdir().unwrap();
    let out = out_flag(dir.path());
    let o = pappus(&["--out", &out, "--format", "csv,svg", "curve", "--c", "1/4", "--d", "1/2", "--steps", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("curve.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    for row in rows {
        let a: f64 = row.split(',').nth(3).unwrap().parse().unwrap();
        assert!((1.0..=2.0).contains(&a));
        assert!(!row.split(',').nth(1).unwrap().contains('.'));
    }
    assert!(!dir.path().join("curve.json").exists());
    assert!(dir.path().join("curve.svg").exists());

    let o = pappus(&["--out", &out, "--format", "csv", "curve", "--c", "1/2", "--d", "1/4", "--steps", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("curve.csv")).unwrap();
    for row in csv.lines().skip(1) {
        let a: f64 = row.split(',').nth(3).unwrap().parse().unwrap();
        assert!((0.5..=1.0).contains(&a));
    }
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    let out = dir.path().join("from_config");
    std::fs::write(&cfg, format!("depth = 2\nformat = [\"json\"]\nout = {:?}\n", out.to_string_lossy())).unwrap();
    let o = pappus(&["--config", &cfg.to_string_lossy(), "orbit", "--a", "1", "--b", "2", "--c", "0", "--d", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out.join("orbit.json")).unwrap()).unwrap();
    assert_eq!(j["depth"], 2);
    assert!(!out.join("orbit.svg").exists());

    let o = pappus(&["--config", &cfg.to_string_lossy(), "--depth", "1", "orbit", "--a", "1", "--b", "2", "--c", "0", "--d", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out.join("orbit.json")).unwrap()).unwrap();
    assert_eq!(j["depth"], 1);

    std::fs::write(&cfg, "colour = 3\n").unwrap();
    let o = pappus(&["--config", &cfg.to_string_lossy(), "region"]);
    assert_eq!(o.status.code(), Some(2));
}
