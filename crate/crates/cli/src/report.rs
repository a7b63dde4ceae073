use crate::catalog::Check;
use serde::Serialize;
use std::time::Instant;
use twistcheck::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportLine {
    pub check_id: String,
    pub status: Status,
    pub zeta_order: Option<usize>,
    pub residual_term_count: usize,
    pub millis: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub workers: usize,
    pub seed: u64,
    pub timing: bool,
}

/// Run the checks on a pool of `workers` threads; lines come back in input order.
pub fn run_suite(checks: &[Check], opts: RunOptions) -> Vec<ReportLine> {
    par::with_workers(opts.workers, || {
        par::map(checks, |c| {
            let start = Instant::now();
            let res = c.run(opts.seed);
            let millis = opts.timing.then(|| start.elapsed().as_millis() as u64);
            let (status, residual_term_count, error) = match res {
                Ok(o) if o.residual_terms == 0 => (Status::Pass, 0, None),
                Ok(o) => (Status::Fail, o.residual_terms, None),
                Err(e) => (Status::Error, 0, Some(format!("{e:#}"))),
            };
            ReportLine { check_id: c.id.clone(), status, zeta_order: c.order, residual_term_count, millis, error }
        })
    })
}

pub fn all_passed(lines: &[ReportLine]) -> bool {
    lines.iter().all(|l| l.status == Status::Pass)
}

pub fn render_json(lines: &[ReportLine]) -> String {
    let mut s = serde_json::to_string_pretty(lines).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_text(lines: &[ReportLine]) -> String {
    let width = lines.iter().map(|l| l.check_id.len()).max().unwrap_or(0);
    let mut s = String::new();
    for l in lines {
        let status = match l.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        let order = l.zeta_order.map_or("exact".to_string(), |o| format!("order {o}"));
        s += &format!("{:width$}  {status:5}  {order:8}  residual {}", l.check_id, l.residual_term_count);
        if let Some(ms) = l.millis {
            s += &format!("  {ms} ms");
        }
        if let Some(e) = &l.error {
            s += &format!("  ({e})");
        }
        s.push('\n');
    }
    s
}
