use std::fmt::Write as _;

use clap::Subcommand;
use permorder::genfunc::{bessel_b, gessel_u, xi_from_series, TruncatedSeries};
use serde::Serialize;

use crate::output::{count_str, key_value_csv, Rational, Rendered};
use crate::{Failure, Outcome};

#[derive(Subcommand)]
pub enum SeriesCommand {
    /// b_i = Σ x^(2n+i) / (n! (n+i)!).
    B {
        #[arg(long)]
        i: usize,
        /// Truncation degree.
        #[arg(long, default_value_t = 12)]
        degree: usize,
    },
    /// U_k = det(b_|i-j|), 1 <= i, j <= k.
    U {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 12)]
        degree: usize,
    },
    /// ξ_k(n) read off U_k as (n!)² [x^(2n)] U_k.
    Xi {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Serialize)]
struct Coefficients {
    degree: usize,
    coefficients: Vec<Rational>,
}

#[derive(Serialize)]
struct Value {
    value: String,
}

fn coefficients(s: &TruncatedSeries) -> Rendered {
    let coefficients: Vec<Rational> = s.coeffs().iter().map(Rational::from).collect();
    let mut csv = String::from("power,num,den\n");
    let mut text = String::new();
    for (i, c) in coefficients.iter().enumerate() {
        let _ = writeln!(csv, "{i},{},{}", c.num, c.den);
        if c.num != "0" {
            let _ = writeln!(text, "x^{i:<3} {}", s.coeff(i));
        }
    }
    let result = Coefficients {
        degree: s.degree(),
        coefficients,
    };
    Rendered::new(&result, csv, text)
}

pub fn run(cmd: SeriesCommand) -> Outcome {
    match cmd {
        SeriesCommand::B { i, degree } => Ok(coefficients(&bessel_b(i, degree))),
        SeriesCommand::U { k, degree } => {
            if k == 0 {
                return Err(Failure::Usage("--k must be at least 1".into()));
            }
            Ok(coefficients(&gessel_u(k, degree)?))
        }
        SeriesCommand::Xi { k, n } => {
            if k == 0 {
                return Err(Failure::Usage("--k must be at least 1".into()));
            }
            let v = count_str(&xi_from_series(k, n)?);
            let csv = key_value_csv(("key", "value"), [("value", &v)]);
            let text = format!("{v}\n");
            Ok(Rendered::new(&Value { value: v }, csv, text))
        }
    }
}
