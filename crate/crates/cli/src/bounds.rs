use std::fmt::Write as _;

use clap::{Subcommand, ValueEnum};
use permorder::bounds::{verify, BoundsReport, BoundsRow, KPolicy, Statistic, VerifyConfig};
use serde::Serialize;

use crate::output::{count_str, csv_field, Rational, Rendered};
use crate::{Context, Failure, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatArg {
    Xi,
    Epsilon,
    Beth,
    Multilinear,
}

impl From<StatArg> for Statistic {
    fn from(s: StatArg) -> Self {
        match s {
            StatArg::Xi => Statistic::Xi,
            StatArg::Epsilon => Statistic::Epsilon,
            StatArg::Beth => Statistic::Beth,
            StatArg::Multilinear => Statistic::Multilinear,
        }
    }
}

#[derive(Subcommand)]
pub enum BoundsCommand {
    /// Tabulate exact counts against their upper bounds; exits 1 if any row fails.
    Verify {
        /// Largest n (and, for multilinear rows, largest alphabet).
        #[arg(long)]
        max_n: usize,
        /// Only this k; every 1 <= k <= n otherwise.
        #[arg(long)]
        k: Option<usize>,
        /// Statistics to include, comma separated; all by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        stats: Vec<StatArg>,
    },
}

#[derive(Serialize)]
struct Row {
    statistic: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    alphabet: Option<usize>,
    n: usize,
    k: usize,
    exact: String,
    bound: Rational,
    ratio: Rational,
    pass: bool,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_at_most: Option<String>,
}

#[derive(Serialize)]
struct Report {
    all_pass: bool,
    failures: usize,
    rows: Vec<Row>,
}

/// Statistic column: multilinear rows carry their alphabet size.
fn statistic_label(row: &BoundsRow) -> String {
    match row.alphabet {
        Some(l) => format!("{}(l={l})", row.statistic.name()),
        None => row.statistic.name().to_string(),
    }
}

fn csv(report: &BoundsReport) -> String {
    let mut out = String::from("statistic,n,k,exact,bound_num,bound_den,ratio,pass\n");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            csv_field(&statistic_label(r)),
            r.n,
            r.k,
            r.exact,
            r.bound.numer(),
            r.bound.denom(),
            r.ratio,
            r.pass
        );
    }
    out
}

fn text(report: &BoundsReport) -> String {
    let mut out = format!("{:<16} {:>3} {:>3} {:>24} {:>12}  {}\n", "statistic", "n", "k", "exact", "ratio", "pass");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{:<16} {:>3} {:>3} {:>24} {:>12}  {}",
            statistic_label(r),
            r.n,
            r.k,
            r.exact,
            format!("{:.4e}", r.ratio.to_f64()),
            if r.pass { "ok" } else { "FAIL" }
        );
    }
    let failures = report.rows.iter().filter(|r| !r.pass).count();
    let _ = writeln!(out, "{} rows, {failures} failing", report.rows.len());
    out
}

pub fn run(cmd: BoundsCommand, ctx: &Context) -> Outcome {
    let BoundsCommand::Verify { max_n, k, stats } = cmd;
    if k == Some(0) {
        return Err(Failure::Usage("--k must be at least 1".into()));
    }
    let mut config = VerifyConfig::new(max_n);
    config.guards = ctx.guards;
    config.k_policy = k.map_or(KPolicy::All, KPolicy::Only);
    if !stats.is_empty() {
        config.statistics = stats.into_iter().map(Statistic::from).collect();
    }
    let report = verify(&config)?;
    let rows: Vec<Row> = report
        .rows
        .iter()
        .map(|r| Row {
            statistic: r.statistic.name(),
            alphabet: r.alphabet,
            n: r.n,
            k: r.k,
            exact: count_str(&r.exact),
            bound: Rational::from(&r.bound),
            ratio: Rational::from(&r.ratio),
            pass: r.pass,
            method: r.method,
            exact_at_most: r.exact_at_most.as_ref().map(count_str),
        })
        .collect();
    let failures = rows.iter().filter(|r| !r.pass).count();
    let result = Report {
        all_pass: report.all_pass,
        failures,
        rows,
    };
    Ok(Rendered::new(&result, csv(&report), text(&report)).failed(!report.all_pass))
}
