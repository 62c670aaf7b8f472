use std::fmt::Write as _;

use clap::{Args, Subcommand};
use permorder::rsk::{knuth_forward, knuth_inverse, rsk_forward, rsk_inverse};
use permorder::stats::lds_length;
use permorder::{
    array_to_matrix, matrix_to_array, GeneralizedTableau, MultiplicityMatrix, Permutation, StandardTableau, TwoLineArray,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::output::{join, key_value_csv, rows_text, Rendered};
use crate::{parse_json, Context, Failure, Outcome};

#[derive(Args)]
pub struct RskArgs {
    /// One-line notation, e.g. 2,3,1.
    #[arg(long, value_delimiter = ',', required_unless_present = "inverse", conflicts_with = "inverse")]
    perm: Option<Vec<usize>>,
    /// Recover the permutation from --p and --q.
    #[arg(long, requires_all = ["p", "q"])]
    inverse: bool,
    /// Insertion tableau as JSON rows, e.g. [[1,3],[2]].
    #[arg(long = "p", requires = "inverse")]
    p: Option<String>,
    /// Recording tableau as JSON rows.
    #[arg(long = "q", requires = "inverse")]
    q: Option<String>,
}

#[derive(Subcommand)]
pub enum KnuthCommand {
    /// Insert a two-line array.
    Forward {
        /// Pairs `u:v` in lexicographic order, e.g. 1:2,1:3,2:1.
        #[arg(long, value_delimiter = ',')]
        pairs: Vec<String>,
    },
    /// Recover the two-line array from a tableau pair.
    Inverse {
        #[arg(long = "p")]
        p: String,
        #[arg(long = "q")]
        q: String,
    },
    /// Multiplicity matrix of a two-line array.
    ToMatrix {
        #[arg(long, value_delimiter = ',')]
        pairs: Vec<String>,
        /// Defaults to the largest top entry.
        #[arg(long)]
        rows: Option<usize>,
        /// Defaults to the largest bottom entry.
        #[arg(long)]
        cols: Option<usize>,
    },
    /// Two-line array of a multiplicity matrix given as JSON rows.
    FromMatrix {
        #[arg(long)]
        matrix: String,
    },
    /// Round-trip random arrays through the correspondence.
    Selfcheck {
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        /// Longest array generated.
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        /// Largest entry on either line.
        #[arg(long, default_value_t = 5)]
        alphabet: usize,
    },
}

#[derive(Serialize)]
struct RskForward<'a> {
    #[serde(rename = "P")]
    p: &'a [Vec<usize>],
    #[serde(rename = "Q")]
    q: &'a [Vec<usize>],
    shape: &'a [usize],
    lds: usize,
}

#[derive(Serialize)]
struct PermResult<'a> {
    perm: &'a [usize],
}

fn tableau_pair_text(p: &[Vec<usize>], q: &[Vec<usize>]) -> String {
    format!("P:\n{}\nQ:\n{}\n", rows_text(p), rows_text(q))
}

fn tableau_pair_csv(p: &[Vec<usize>], q: &[Vec<usize>]) -> String {
    let mut out = String::from("tableau,row,entries\n");
    for (name, t) in [("P", p), ("Q", q)] {
        for (i, row) in t.iter().enumerate() {
            let _ = writeln!(out, "{name},{},{}", i + 1, join(row, " "));
        }
    }
    out
}

pub fn run_rsk(args: RskArgs) -> Outcome {
    if args.inverse {
        let p: Vec<Vec<usize>> = parse_json("p", args.p.as_deref().unwrap_or_default())?;
        let q: Vec<Vec<usize>> = parse_json("q", args.q.as_deref().unwrap_or_default())?;
        let perm = rsk_inverse(&StandardTableau::new(p)?, &StandardTableau::new(q)?)?;
        let word = perm.word();
        return Ok(Rendered::new(
            &PermResult { perm: word },
            key_value_csv(("position", "value"), word.iter().enumerate().map(|(i, v)| (i + 1, v))),
            format!("{perm}\n"),
        ));
    }
    let perm = Permutation::new(args.perm.unwrap_or_default())?;
    let (p, q) = rsk_forward(&perm);
    let lds = lds_length(perm.word());
    let result = RskForward {
        p: p.rows(),
        q: q.rows(),
        shape: p.shape().parts(),
        lds,
    };
    let text = format!("{}shape: {}\nlds: {lds}\n", tableau_pair_text(p.rows(), q.rows()), p.shape());
    Ok(Rendered::new(&result, tableau_pair_csv(p.rows(), q.rows()), text))
}

fn parse_pairs(pairs: &[String]) -> Result<TwoLineArray, Failure> {
    let parsed = pairs
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (u, v) = s
                .split_once(':')
                .ok_or_else(|| Failure::Usage(format!("--pairs: expected u:v, got {s:?}")))?;
            let num = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Failure::Usage(format!("--pairs: {x:?}: {e}")))
            };
            Ok((num(u)?, num(v)?))
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    Ok(TwoLineArray::new(parsed)?)
}

#[derive(Serialize)]
struct KnuthForward<'a> {
    #[serde(rename = "P")]
    p: &'a [Vec<usize>],
    #[serde(rename = "Q")]
    q: &'a [Vec<usize>],
    shape: &'a [usize],
}

#[derive(Serialize)]
struct PairsResult {
    pairs: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct MatrixResult {
    rows: usize,
    cols: usize,
    matrix: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct SelfcheckResult {
    seed: u64,
    trials: usize,
    failures: usize,
    first_failure: Option<Vec<[usize; 2]>>,
}

fn pairs_rendered(array: &TwoLineArray) -> Rendered {
    let pairs: Vec<[usize; 2]> = array.pairs().iter().map(|&(u, v)| [u, v]).collect();
    let text = format!(
        "top:    {}\nbottom: {}\n",
        join(&array.top_line().collect::<Vec<_>>(), " "),
        join(&array.bottom_line().collect::<Vec<_>>(), " ")
    );
    let csv = key_value_csv(("u", "v"), array.pairs().iter().copied());
    Rendered::new(&PairsResult { pairs }, csv, text)
}

fn matrix_rendered(m: &MultiplicityMatrix) -> Rendered {
    let (rows, cols) = m.dims();
    let matrix = m.to_rows();
    let csv: String = matrix.iter().map(|r| join(r, ",") + "\n").collect();
    let text = rows_text(&matrix) + "\n";
    Rendered::new(&MatrixResult { rows, cols, matrix }, csv, text)
}

fn random_array(rng: &mut ChaCha8Rng, max_len: usize, alphabet: usize) -> TwoLineArray {
    let len = rng.random_range(0..=max_len);
    let mut pairs: Vec<(usize, usize)> = (0..len)
        .map(|_| (rng.random_range(1..=alphabet), rng.random_range(1..=alphabet)))
        .collect();
    pairs.sort_unstable();
    TwoLineArray::new(pairs).expect("sorted positive pairs")
}

fn round_trips(array: &TwoLineArray, alphabet: usize) -> bool {
    let (p, q) = knuth_forward(array);
    let back = knuth_inverse(&p, &q).ok();
    let matrix = array_to_matrix(array, alphabet, alphabet).ok();
    back.as_ref() == Some(array) && matrix.is_some_and(|m| matrix_to_array(&m) == *array)
}

pub fn run_knuth(cmd: KnuthCommand, ctx: &Context) -> Outcome {
    match cmd {
        KnuthCommand::Forward { pairs } => {
            let array = parse_pairs(&pairs)?;
            let (p, q) = knuth_forward(&array);
            let result = KnuthForward {
                p: p.rows(),
                q: q.rows(),
                shape: p.shape().parts(),
            };
            let text = format!("{}shape: {}\n", tableau_pair_text(p.rows(), q.rows()), p.shape());
            Ok(Rendered::new(&result, tableau_pair_csv(p.rows(), q.rows()), text))
        }
        KnuthCommand::Inverse { p, q } => {
            let p = GeneralizedTableau::new(parse_json("p", &p)?)?;
            let q = GeneralizedTableau::new(parse_json("q", &q)?)?;
            Ok(pairs_rendered(&knuth_inverse(&p, &q)?))
        }
        KnuthCommand::ToMatrix { pairs, rows, cols } => {
            let array = parse_pairs(&pairs)?;
            let (min_rows, min_cols) = array.min_dims();
            let m = array_to_matrix(&array, rows.unwrap_or(min_rows), cols.unwrap_or(min_cols))?;
            Ok(matrix_rendered(&m))
        }
        KnuthCommand::FromMatrix { matrix } => {
            let m = MultiplicityMatrix::from_rows(parse_json("matrix", &matrix)?)?;
            Ok(pairs_rendered(&matrix_to_array(&m)))
        }
        KnuthCommand::Selfcheck {
            trials,
            max_len,
            alphabet,
        } => {
            if alphabet == 0 {
                return Err(Failure::Usage("--alphabet must be at least 1".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let mut failures = 0;
            let mut first_failure = None;
            for _ in 0..trials {
                let array = random_array(&mut rng, max_len, alphabet);
                if !round_trips(&array, alphabet) {
                    failures += 1;
                    first_failure.get_or_insert_with(|| array.pairs().iter().map(|&(u, v)| [u, v]).collect());
                }
            }
            let result = SelfcheckResult {
                seed: ctx.seed,
                trials,
                failures,
                first_failure,
            };
            let csv = key_value_csv(
                ("key", "value"),
                [("seed", ctx.seed.to_string()), ("trials", trials.to_string()), ("failures", failures.to_string())],
            );
            let text = format!("seed {}: {failures} failures in {trials} round trips\n", ctx.seed);
            Ok(Rendered::new(&result, csv, text).failed(failures > 0))
        }
    }
}
