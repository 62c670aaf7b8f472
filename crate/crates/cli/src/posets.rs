use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::Subcommand;
use permorder::poset::{canonical_form, epsilon_exact, is_isomorphic, max_antichain, poset_from_permutation};
use permorder::{factorial, Count, Permutation};
use serde::Serialize;

use crate::output::{count_str, join, key_value_csv, Rendered};
use crate::{Context, Outcome};

#[derive(Subcommand)]
pub enum PosetsCommand {
    /// The poset a < b iff a < b and a precedes b in the permutation.
    FromPerm {
        #[arg(long, value_delimiter = ',')]
        perm: Vec<usize>,
        /// Also print the canonical form (hex), subject to the canonical-form guard.
        #[arg(long)]
        canonical: bool,
    },
    /// Isomorphism classes of n-element dimension-two posets by largest antichain.
    Census {
        #[arg(long)]
        n: usize,
    },
    /// Whether two permutations give isomorphic posets.
    Isomorphic {
        #[arg(long, value_delimiter = ',')]
        perm: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        other: Vec<usize>,
    },
}

#[derive(Serialize)]
struct Antichain<'a> {
    size: usize,
    witness: &'a [usize],
}

#[derive(Serialize)]
struct FromPerm<'a> {
    n: usize,
    relations: Vec<[usize; 2]>,
    max_antichain: Antichain<'a>,
    #[serde(skip_serializing_if = "Option::is_none")]
    canonical_form: Option<String>,
}

#[derive(Serialize)]
struct Census {
    n: usize,
    by_antichain: BTreeMap<usize, String>,
    total: String,
    permutations: String,
}

#[derive(Serialize)]
struct Isomorphic {
    isomorphic: bool,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

pub fn run(cmd: PosetsCommand, ctx: &Context) -> Outcome {
    match cmd {
        PosetsCommand::FromPerm { perm, canonical } => {
            let perm = Permutation::new(perm)?;
            let poset = poset_from_permutation(&perm);
            let antichain = max_antichain(&poset);
            let form = if canonical {
                Some(hex(canonical_form(&poset, &ctx.guards)?.as_bytes()))
            } else {
                None
            };
            let relations: Vec<[usize; 2]> = poset.relations().into_iter().map(|(a, b)| [a, b]).collect();
            let mut csv = String::from("below,above\n");
            for [a, b] in &relations {
                let _ = writeln!(csv, "{a},{b}");
            }
            let mut text = format!(
                "{} relations: {}\nlargest antichain ({}): {}\n",
                relations.len(),
                relations.iter().map(|[a, b]| format!("{a}<{b}")).collect::<Vec<_>>().join(" "),
                antichain.size,
                join(&antichain.witness, " ")
            );
            if let Some(f) = &form {
                let _ = writeln!(text, "canonical form: {f}");
            }
            let result = FromPerm {
                n: poset.size(),
                relations,
                max_antichain: Antichain {
                    size: antichain.size,
                    witness: &antichain.witness,
                },
                canonical_form: form,
            };
            Ok(Rendered::new(&result, csv, text))
        }
        PosetsCommand::Census { n } => {
            let census = epsilon_exact(n, &ctx.guards)?;
            let total: Count = census.values().sum();
            let by_antichain: BTreeMap<usize, String> = census.iter().map(|(k, c)| (*k, count_str(c))).collect();
            let csv = key_value_csv(("k", "classes"), by_antichain.iter());
            let text = by_antichain.iter().map(|(k, c)| format!("{k:>4}  {c}\n")).collect::<String>()
                + &format!("total {total} classes from {} permutations\n", factorial(n));
            let result = Census {
                n,
                by_antichain,
                total: count_str(&total),
                permutations: count_str(&factorial(n)),
            };
            Ok(Rendered::new(&result, csv, text))
        }
        PosetsCommand::Isomorphic { perm, other } => {
            let a = poset_from_permutation(&Permutation::new(perm)?);
            let b = poset_from_permutation(&Permutation::new(other)?);
            let isomorphic = is_isomorphic(&a, &b, &ctx.guards)?;
            let csv = key_value_csv(("key", "value"), [("isomorphic", isomorphic)]);
            let text = format!("{isomorphic}\n");
            Ok(Rendered::new(&Isomorphic { isomorphic }, csv, text))
        }
    }
}
