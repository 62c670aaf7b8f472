use std::fmt::Write as _;

use clap::{Subcommand, ValueEnum};
use permorder::genfunc::syt_count_schur;
use permorder::stats::{hook_lengths, syt_count_hook, syt_enumerate};
use permorder::{Count, Partition};
use serde::Serialize;

use crate::output::{count_str, join, key_value_csv, rows_text, Rendered};
use crate::{Context, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    /// n! over the product of hook lengths.
    Hook,
    /// List every tableau.
    Enumerate,
    /// Squarefree coefficient of the Schur polynomial.
    Schur,
}

impl CountMethod {
    fn name(self) -> &'static str {
        match self {
            CountMethod::Hook => "hook",
            CountMethod::Enumerate => "enumerate",
            CountMethod::Schur => "schur",
        }
    }
}

#[derive(Subcommand)]
pub enum TableauxCommand {
    /// Every standard tableau of a shape.
    Enumerate {
        /// Row lengths, e.g. 3,2.
        #[arg(long, value_delimiter = ',')]
        shape: Vec<usize>,
    },
    /// Number of standard tableaux of a shape.
    HookCount {
        #[arg(long, value_delimiter = ',')]
        shape: Vec<usize>,
        #[arg(long, value_enum, default_value_t = CountMethod::Hook)]
        method: CountMethod,
    },
    /// Hook length of every cell.
    Hooks {
        #[arg(long, value_delimiter = ',')]
        shape: Vec<usize>,
    },
}

#[derive(Serialize)]
struct Enumerated<'a> {
    shape: &'a [usize],
    count: usize,
    tableaux: Vec<&'a [Vec<usize>]>,
}

#[derive(Serialize)]
struct Value {
    value: String,
    method: &'static str,
}

#[derive(Serialize)]
struct Hooks<'a> {
    shape: &'a [usize],
    hooks: Vec<Vec<usize>>,
    product: String,
}

/// Splits a row-major list into rows of the shape.
fn by_rows(shape: &Partition, flat: &[usize]) -> Vec<Vec<usize>> {
    let mut rest = flat;
    shape
        .parts()
        .iter()
        .map(|&len| {
            let (row, tail) = rest.split_at(len);
            rest = tail;
            row.to_vec()
        })
        .collect()
}

pub fn run(cmd: TableauxCommand, ctx: &Context) -> Outcome {
    match cmd {
        TableauxCommand::Enumerate { shape } => {
            let shape = Partition::new(shape)?;
            let all = syt_enumerate(&shape, &ctx.guards)?;
            let mut csv = String::from("tableau,row,entries\n");
            let mut text = String::new();
            for (i, t) in all.iter().enumerate() {
                for (r, row) in t.rows().iter().enumerate() {
                    let _ = writeln!(csv, "{},{},{}", i + 1, r + 1, join(row, " "));
                }
                let _ = writeln!(text, "{}\n", rows_text(t.rows()));
            }
            let result = Enumerated {
                shape: shape.parts(),
                count: all.len(),
                tableaux: all.iter().map(|t| t.rows()).collect(),
            };
            Ok(Rendered::new(&result, csv, text))
        }
        TableauxCommand::HookCount { shape, method } => {
            let shape = Partition::new(shape)?;
            let c = match method {
                CountMethod::Hook => syt_count_hook(&shape)?,
                CountMethod::Enumerate => Count::from(syt_enumerate(&shape, &ctx.guards)?.len()),
                CountMethod::Schur => syt_count_schur(&shape, &ctx.guards)?,
            };
            let v = count_str(&c);
            let csv = key_value_csv(("method", "value"), [(method.name(), &v)]);
            let text = format!("{v}\n");
            Ok(Rendered::new(&Value { value: v.clone(), method: method.name() }, csv, text))
        }
        TableauxCommand::Hooks { shape } => {
            let shape = Partition::new(shape)?;
            let flat = hook_lengths(&shape);
            let product: Count = flat.iter().copied().map(Count::from).product();
            let hooks = by_rows(&shape, &flat);
            let mut csv = String::from("row,hooks\n");
            for (r, row) in hooks.iter().enumerate() {
                let _ = writeln!(csv, "{},{}", r + 1, join(row, " "));
            }
            let text = format!("{}\nproduct {product}\n", rows_text(&hooks));
            let result = Hooks {
                shape: shape.parts(),
                hooks,
                product: count_str(&product),
            };
            Ok(Rendered::new(&result, csv, text))
        }
    }
}
