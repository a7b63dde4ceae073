use anyhow::{bail, Context, Result};
use clap::{CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use twistcheck::qcalc::identity_suite;
use twistcheck::twists::errata;
use twistcheck_cli::catalog::{catalog, parse_rat, select};
use twistcheck_cli::export::{export, file_stem, Format, Object};
use twistcheck_cli::report::{all_passed, render_json, render_text, run_suite, RunOptions};
use twistcheck_cli::OUT_DIR_ENV;

#[derive(Parser)]
#[command(name = "twistcheck", version, about = "Exact verification of semi-classical twists for sl3/sl4 boundary r-matrices")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification checks and report one line per check.
    Verify {
        /// Comma-separated check ids or id prefixes, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Override the ζ-order of matching checks, e.g. `--order cocycle:F3bar=5`.
        #[arg(long = "order", value_name = "ID=N")]
        orders: Vec<String>,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Seed for randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Report `millis` as null so reports are byte-reproducible.
        #[arg(long)]
        no_timing: bool,
        /// Print the check ids with their default orders and exit.
        #[arg(long)]
        list: bool,
    },
    /// Export an r-matrix, twist expansion or classical r-matrix.
    Export {
        #[arg(value_enum)]
        object: Object,
        #[arg(long)]
        n: usize,
        /// Family parameter, rational `p/q`; ignored for n = 3.
        #[arg(long, default_value = "1")]
        a: String,
        #[arg(long, default_value_t = 4)]
        order: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the q-exponential identity suite.
    Identities {
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, default_value_t = 6)]
        five_order: usize,
    },
    /// List corrections to the printed formulas, each tied to the check that detects it.
    Errata {
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
}

fn check_list() -> String {
    let mut s = String::from("Check ids:\n");
    for c in catalog() {
        let order = c.order.map_or("exact".to_string(), |o| format!("order {o}"));
        s += &format!("  {:32} {order}\n", c.id);
    }
    s
}

fn parse_orders(raw: &[String]) -> Result<BTreeMap<String, usize>> {
    let mut out = BTreeMap::new();
    for item in raw {
        let (k, v) = item.split_once('=').with_context(|| format!("--order expects ID=N, got `{item}`"))?;
        let v: usize = v.trim().parse().with_context(|| format!("bad order in `{item}`"))?;
        if v == 0 {
            bail!("order must be positive in `{item}`");
        }
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

fn emit(text: &str, output: Option<PathBuf>, default_name: &str) -> Result<()> {
    let path = output.or_else(|| std::env::var_os(OUT_DIR_ENV).map(|d| PathBuf::from(d).join(default_name)));
    match path {
        Some(p) => std::fs::write(&p, text).with_context(|| format!("writing {}", p.display())),
        None => stdout(text),
    }
}

/// Write to stdout; a reader closing the pipe early is not an error.
fn stdout(text: &str) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Verify { suite, orders, workers, seed, format, output, no_timing, list } => {
            if list {
                stdout(&check_list())?;
                return Ok(true);
            }
            let checks = select(&suite, &parse_orders(&orders)?)?;
            let lines = run_suite(&checks, RunOptions { workers, seed, timing: !no_timing });
            for l in &lines {
                if let Some(e) = &l.error {
                    eprintln!("{}: {e}", l.check_id);
                }
            }
            let (text, name) = match format {
                ReportFormat::Json => (render_json(&lines), "report.json"),
                ReportFormat::Text => (render_text(&lines), "report.txt"),
            };
            emit(&text, output, name)?;
            Ok(all_passed(&lines))
        }
        Cmd::Export { object, n, a, order, format, output } => {
            let a = parse_rat(&a)?;
            let text = export(object, n, &a, order, format)?;
            emit(&text, output, &format!("{}.{}", file_stem(object, n, &a), format.extension()))?;
            Ok(true)
        }
        Cmd::Identities { order, five_order } => {
            let res = identity_suite(order, five_order)?;
            let mut text = String::new();
            for r in &res {
                let status = if r.residual_terms == 0 { "PASS" } else { "FAIL" };
                text += &format!("{:24} {status}  order {}  residual {}\n", r.name, r.order, r.residual_terms);
            }
            stdout(&text)?;
            Ok(res.iter().all(|r| r.residual_terms == 0))
        }
        Cmd::Errata { format } => {
            let text = match format {
                ReportFormat::Json => format!("{}\n", twistcheck::twists::errata_json()),
                ReportFormat::Text => errata()
                    .iter()
                    .map(|e| format!("{}\n  printed:   {}\n  corrected: {}\n  check:     {}\n", e.location, e.printed, e.corrected, e.check))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            stdout(&text)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cmd = Cli::command().mut_subcommand("verify", |c| c.after_help(check_list()));
    let cli = match Cli::from_arg_matches(&cmd.get_matches()) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
