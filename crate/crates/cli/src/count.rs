use std::collections::BTreeMap;

use clap::{Subcommand, ValueEnum};
use permorder::counting::{beth_exact, lds_distribution_brute, lds_distribution_shapes, xi3_closed, xi_brute, xi_shapes};
use permorder::genfunc::xi_from_series;
use permorder::poset::epsilon_exact;
use permorder::stats::{catalan, syt_enumerate};
use permorder::{partitions, Count};
use serde::Serialize;

use crate::output::{count_str, key_value_csv, Rendered};
use crate::{Context, Failure, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Exhaustive sweep (of S_n, or of tableaux).
    Brute,
    /// Sum over shapes with hook-length counts.
    Shapes,
    /// Coefficient of the Bessel determinant series.
    Series,
    /// Closed formula (ξ for k = 3 only).
    Closed,
    /// Isomorphism-class census of posets.
    Census,
    /// Direct formula.
    Formula,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Shapes => "shapes",
            Method::Series => "series",
            Method::Closed => "closed",
            Method::Census => "census",
            Method::Formula => "formula",
        }
    }
}

#[derive(Subcommand)]
pub enum CountCommand {
    /// Permutations of 1..n with longest decreasing subsequence at most k.
    Xi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// brute, shapes, series, or closed (k = 3).
        #[arg(long, value_enum, default_value_t = Method::Shapes)]
        method: Method,
    },
    /// Standard tableaux of order n with at most k rows.
    Beth {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// shapes or brute.
        #[arg(long, value_enum, default_value_t = Method::Shapes)]
        method: Method,
    },
    /// Dimension-two posets on n elements, up to isomorphism, by largest antichain.
    Epsilon {
        #[arg(long)]
        n: usize,
        /// Report only this antichain size.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Census)]
        method: Method,
    },
    /// Distribution of the longest decreasing subsequence over S_n.
    LdsDist {
        #[arg(long)]
        n: usize,
        /// brute or shapes.
        #[arg(long, value_enum, default_value_t = Method::Shapes)]
        method: Method,
    },
    /// Catalan number C_n.
    Catalan {
        #[arg(long)]
        n: usize,
        /// formula, brute, shapes, or series (all through ξ_2).
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
}

#[derive(Serialize)]
struct Value {
    value: String,
    method: &'static str,
}

#[derive(Serialize)]
struct Distribution {
    distribution: BTreeMap<usize, String>,
    total: String,
    method: &'static str,
}

fn unsupported(what: &str, method: Method, allowed: &[Method]) -> Failure {
    let names: Vec<&str> = allowed.iter().map(|m| m.name()).collect();
    Failure::Usage(format!(
        "{what} has no method {}; choose one of {}",
        method.name(),
        names.join(", ")
    ))
}

fn value(c: &Count, method: Method) -> Rendered {
    let v = count_str(c);
    let csv = key_value_csv(("method", "value"), [(method.name(), &v)]);
    let text = format!("{v}\n");
    Rendered::new(&Value { value: v.clone(), method: method.name() }, csv, text)
}

fn distribution(d: &BTreeMap<usize, Count>, method: Method) -> Rendered {
    let total: Count = d.values().sum();
    let strings: BTreeMap<usize, String> = d.iter().map(|(k, c)| (*k, count_str(c))).collect();
    let csv = key_value_csv(("k", "count"), strings.iter());
    let text: String = strings.iter().map(|(k, c)| format!("{k:>4}  {c}\n")).collect::<String>()
        + &format!("total {total}\n");
    let result = Distribution {
        distribution: strings,
        total: count_str(&total),
        method: method.name(),
    };
    Rendered::new(&result, csv, text)
}

fn beth_by_enumeration(n: usize, k: usize, ctx: &Context) -> Result<Count, Failure> {
    if n == 0 {
        return Ok(Count::one());
    }
    let mut total = Count::zero();
    for lambda in partitions(n, k) {
        total += Count::from(syt_enumerate(&lambda, &ctx.guards)?.len());
    }
    Ok(total)
}

fn series_k(k: usize) -> Result<usize, Failure> {
    if k == 0 {
        Err(Failure::Usage("the series method needs k >= 1".into()))
    } else {
        Ok(k)
    }
}

pub fn run(cmd: CountCommand, ctx: &Context) -> Outcome {
    match cmd {
        CountCommand::Xi { n, k, method } => {
            let c = match method {
                Method::Brute => xi_brute(n, k, &ctx.guards)?,
                Method::Shapes => xi_shapes(n, k)?,
                Method::Series => xi_from_series(series_k(k)?, n)?,
                Method::Closed if k == 3 => xi3_closed(n)?,
                Method::Closed => return Err(Failure::Usage("the closed form is for k = 3 only".into())),
                other => {
                    return Err(unsupported(
                        "count xi",
                        other,
                        &[Method::Brute, Method::Shapes, Method::Series, Method::Closed],
                    ))
                }
            };
            Ok(value(&c, method))
        }
        CountCommand::Beth { n, k, method } => {
            let c = match method {
                Method::Shapes => beth_exact(n, k)?,
                Method::Brute => beth_by_enumeration(n, k, ctx)?,
                other => return Err(unsupported("count beth", other, &[Method::Shapes, Method::Brute])),
            };
            Ok(value(&c, method))
        }
        CountCommand::Epsilon { n, k, method } => {
            if method != Method::Census {
                return Err(unsupported("count epsilon", method, &[Method::Census]));
            }
            let census = epsilon_exact(n, &ctx.guards)?;
            match k {
                Some(k) => Ok(value(&census.get(&k).cloned().unwrap_or_default(), method)),
                None => Ok(distribution(&census, method)),
            }
        }
        CountCommand::LdsDist { n, method } => {
            let d = match method {
                Method::Brute => lds_distribution_brute(n, &ctx.guards)?,
                Method::Shapes => lds_distribution_shapes(n)?,
                other => return Err(unsupported("count lds-dist", other, &[Method::Brute, Method::Shapes])),
            };
            Ok(distribution(&d, method))
        }
        CountCommand::Catalan { n, method } => {
            let c = match method {
                Method::Formula => catalan(n),
                Method::Brute => xi_brute(n, 2, &ctx.guards)?,
                Method::Shapes => xi_shapes(n, 2)?,
                Method::Series => xi_from_series(2, n)?,
                other => {
                    return Err(unsupported(
                        "count catalan",
                        other,
                        &[Method::Formula, Method::Brute, Method::Shapes, Method::Series],
                    ))
                }
            };
            Ok(value(&c, method))
        }
    }
}
