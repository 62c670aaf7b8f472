//! `permorder`: exact counts, bijections and bound checks for permutations,
//! Young tableaux and dimension-two posets.

mod bounds;
mod count;
mod output;
mod posets;
mod rsk;
mod series;
mod tableaux;

use std::io::Write as _;
use std::process::ExitCode;

use clap::{ArgMatches, CommandFactory, FromArgMatches, Parser, Subcommand};
use permorder::{Error, Guards};

use output::{Format, Rendered};

#[derive(Parser)]
#[command(name = "permorder", version, about = "Exact combinatorics of permutationally ordered sets")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Raise (or lower) every size guard on the exhaustive oracles to N.
    #[arg(long, global = true, value_name = "N")]
    guard: Option<usize>,
    /// Worker threads for the parallel sweeps.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Seed for randomized self-checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schensted correspondence between permutations and tableau pairs.
    Rsk(rsk::RskArgs),
    /// Knuth correspondence, two-line arrays and multiplicity matrices.
    #[command(subcommand)]
    Knuth(rsk::KnuthCommand),
    /// Exact counts.
    #[command(subcommand)]
    Count(count::CountCommand),
    /// Bound verification reports.
    #[command(subcommand)]
    Bounds(bounds::BoundsCommand),
    /// Truncated power series b_i and U_k.
    #[command(subcommand)]
    Series(series::SeriesCommand),
    /// Standard Young tableaux.
    #[command(subcommand)]
    Tableaux(tableaux::TableauxCommand),
    /// Posets of dimension two.
    #[command(subcommand)]
    Posets(posets::PosetsCommand),
}

pub struct Context {
    pub guards: Guards,
    pub seed: u64,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Lib(Error::GuardExceeded { .. }) => 3,
            Failure::Lib(Error::Internal(_) | Error::NonIntegerResult(_)) => 4,
            Failure::Lib(_) => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self.exit_code() {
            3 => "guard",
            4 => "internal",
            _ => "usage",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Lib(e @ Error::GuardExceeded { .. }) => format!("{e}; rerun with --guard to raise the limit"),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

pub type Outcome = Result<Rendered, Failure>;

pub fn parse_json<T: serde::de::DeserializeOwned>(flag: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn dispatch(command: Command, ctx: &Context) -> Outcome {
    match command {
        Command::Rsk(args) => rsk::run_rsk(args),
        Command::Knuth(cmd) => rsk::run_knuth(cmd, ctx),
        Command::Count(cmd) => count::run(cmd, ctx),
        Command::Bounds(cmd) => bounds::run(cmd, ctx),
        Command::Series(cmd) => series::run(cmd),
        Command::Tableaux(cmd) => tableaux::run(cmd, ctx),
        Command::Posets(cmd) => posets::run(cmd, ctx),
    }
}

/// Space-joined subcommand path, e.g. `count xi`.
fn command_name(matches: &ArgMatches) -> String {
    let mut parts = Vec::new();
    let mut current = matches;
    while let Some((name, sub)) = current.subcommand() {
        parts.push(name);
        current = sub;
    }
    parts.join(" ")
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let command = command_name(&matches);
    let cli = Cli::from_arg_matches(&matches).unwrap_or_else(|e| e.exit());
    let mut guards = Guards::default();
    if let Some(limit) = cli.guard {
        eprintln!("warning: all size guards set to {limit}; exhaustive methods may take factorial time");
        guards = Guards::uniform(limit);
    }
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let ctx = Context { guards, seed: cli.seed };
    match dispatch(cli.command, &ctx) {
        Ok(rendered) => {
            let text = output::write(cli.format, &command, &rendered);
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(4);
            }
            if rendered.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(failure) => {
            eprintln!("{}", output::error_message(cli.format, &command, failure.kind(), &failure.message()));
            ExitCode::from(failure.exit_code())
        }
    }
}
