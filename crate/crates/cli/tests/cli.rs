use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistcheck")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn rmatrix_n3_matches_snapshot() {
    let o = run(&["export", "rmatrix", "--n", "3", "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), include_str!("snapshots/rmatrix-n3.json"));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["data"]["dim"], 9);
    let rows = v["data"]["entries"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 9));
}

#[test]
fn classical_r_n4_latex_has_seven_wedges() {
    for (a, snap) in [("1", include_str!("snapshots/r-classical-n4.tex")), ("1/3", include_str!("snapshots/r-classical-n4-a1_3.tex"))] {
        let o = run(&["export", "r-classical", "--n", "4", "--a", a, "--format", "latex"]);
        assert!(o.status.success());
        let s = stdout(&o);
        assert_eq!(s, snap);
        assert_eq!(s.matches("\\wedge").count(), 7);
    }
}

#[test]
fn exports_are_reproducible() {
    let args = ["export", "twist", "--n", "4", "--a", "2", "--order", "2", "--format", "json"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_of_catalog_export_is_rejected() {
    let o = run(&["export", "rmatrix", "--n", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown object"));
    assert!(o.stdout.is_empty());
}

#[test]
fn unknown_check_is_a_config_error() {
    let o = run(&["verify", "--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn order_override_on_exact_check_is_rejected() {
    let o = run(&["verify", "--suite", "qybe", "--order", "qybe:n=4=3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--suite", "prop2", "--order", "nothing=3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn single_check_report_schema() {
    let o = run(&["verify", "--suite", "qybe:n=4"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let line = &v.as_array().unwrap()[0];
    assert_eq!(line["check_id"], "qybe:n=4");
    assert_eq!(line["status"], "pass");
    assert!(line["zeta_order"].is_null());
    assert_eq!(line["residual_term_count"], 0);
    assert!(line["millis"].is_u64());
}

#[test]
fn order_override_is_reported() {
    let o = run(&["verify", "--suite", "cocycle:F2bar", "--order", "cocycle:F2bar=3", "--no-timing"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["zeta_order"], 3);
    assert!(v[0]["millis"].is_null());
}

#[test]
fn output_directory_from_environment() {
    let dir = std::env::temp_dir().join(format!("twistcheck-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_twistcheck"))
        .args(["export", "r-classical", "--n", "3", "--format", "text"])
        .env("TWISTCHECK_OUT", &dir)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(dir.join("r-classical-n3.txt")).unwrap();
    assert!(written.contains("E13"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn help_lists_check_ids() {
    let o = run(&["verify", "--help"]);
    let s = stdout(&o);
    for id in ["identities", "prop1", "prop2", "cocycle:Fp4:a=1/3", "matrix-cocycle:n=3", "iota:n=4:a=-1", "qybe:n=4", "frobenius:n=4", "confluence"] {
        assert!(s.contains(id), "{id} missing from help");
    }
}

#[test]
fn errata_json_lists_every_entry() {
    let o = run(&["errata", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 8);
    assert!(entries.iter().all(|e| !e["check"].as_str().unwrap().is_empty()));
}
