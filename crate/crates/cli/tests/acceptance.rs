//! One line per acceptance criterion, driven through the release binary.

use serde_json::Value;
use std::process::Command;
use std::time::{Duration, Instant};

fn twistcheck(args: &[&str]) -> (bool, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_twistcheck")).args(args).output().expect("binary runs");
    let elapsed = start.elapsed();
    if !out.stderr.is_empty() {
        eprintln!("{}", String::from_utf8_lossy(&out.stderr));
    }
    (out.status.success(), String::from_utf8(out.stdout).expect("utf-8 report"), elapsed)
}

struct Line {
    id: String,
    passed: bool,
}

fn parse(report: &str) -> Vec<Line> {
    let v: Value = serde_json::from_str(report).expect("json report");
    v.as_array()
        .expect("array report")
        .iter()
        .map(|l| Line { id: l["check_id"].as_str().unwrap().to_string(), passed: l["status"] == "pass" })
        .collect()
}

/// All checks whose id starts with one of `prefixes` passed, and there is at least one.
fn group(lines: &[Line], prefixes: &[&str]) -> bool {
    let hits: Vec<&Line> = lines.iter().filter(|l| prefixes.iter().any(|p| l.id.starts_with(p))).collect();
    !hits.is_empty() && hits.iter().all(|l| l.passed)
}

fn timed(suite: &str, limit: Duration) -> bool {
    let (ok, _, t) = twistcheck(&["verify", "--suite", suite, "--no-timing"]);
    if t > limit {
        eprintln!("{suite}: {t:?} exceeds {limit:?}");
    }
    ok && t <= limit
}

fn main() {
    let (_, first, _) = twistcheck(&["verify", "--suite", "all", "--no-timing", "--workers", "1"]);
    let (_, second, _) = twistcheck(&["verify", "--suite", "all", "--no-timing", "--workers", "3"]);
    let lines = parse(&first);
    let s = Duration::from_secs;

    let criteria: Vec<(&str, bool)> = vec![
        ("q-calculus identities", group(&lines, &["identities"]) && timed("identities", s(10))),
        ("first factorization", group(&lines, &["prop1"]) && timed("prop1", s(60))),
        ("second factorization", group(&lines, &["prop2"]) && timed("prop2", s(600))),
        ("cocycle residuals", group(&lines, &["cocycle:"]) && lines.iter().filter(|l| l.id.starts_with("cocycle:")).count() == 11),
        ("matrix-level cocycle", group(&lines, &["matrix-cocycle:"])),
        ("specialization at q=1", group(&lines, &["specialization:n=2", "specialization:n=3"])),
        ("iota homomorphisms", group(&lines, &["iota:n=3", "iota:n=4:"]) && lines.iter().filter(|l| l.id.starts_with("iota:")).count() == 5),
        ("quantum Yang-Baxter", group(&lines, &["qybe:n=3", "qybe:n=4"]) && timed("qybe", s(60))),
        ("classical limit", group(&lines, &["classical-limit:"])),
        ("CYBE and Frobenius", group(&lines, &["cybe:", "frobenius:"])),
        ("confluence", group(&lines, &["confluence"])),
        ("determinism across worker counts", !first.is_empty() && first == second),
    ];

    for (i, (name, ok)) in criteria.iter().enumerate() {
        println!("criterion {:2} {:34} {}", i + 1, name, if *ok { "PASS" } else { "FAIL" });
    }
    let failed: Vec<usize> = criteria.iter().enumerate().filter(|(_, c)| !c.1).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
