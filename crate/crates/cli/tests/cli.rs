use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

/// Parses stdout as one JSON document and returns its `result`.
fn result(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).expect("stdout is one JSON document");
    assert_eq!(doc["tool"], "permorder");
    assert!(doc["version"].is_string());
    doc["result"].clone()
}

fn value(args: &[&str]) -> String {
    result(args)["value"].as_str().expect("value is a decimal string").to_string()
}

#[test]
fn rsk_example() {
    let r = result(&["rsk", "--perm", "2,3,1"]);
    assert_eq!(r, json!({"P": [[1, 3], [2]], "Q": [[1, 2], [3]], "shape": [2, 1], "lds": 2}));
    let back = result(&["rsk", "--inverse", "--p", "[[1,3],[2]]", "--q", "[[1,2],[3]]"]);
    assert_eq!(back, json!({"perm": [2, 3, 1]}));
}

#[test]
fn envelope_names_the_command() {
    let out = run(&["count", "xi", "--n", "4", "--k", "2", "--method", "shapes"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "count xi");
    assert_eq!(doc["result"], json!({"value": "14", "method": "shapes"}));
}

#[test]
fn xi_methods_agree() {
    for n in 1..=7 {
        for k in 1..=n {
            let (n, k) = (n.to_string(), k.to_string());
            let args = |m: &'static str| ["count", "xi", "--n", &n, "--k", &k, "--method", m].map(String::from);
            let get = |m| value(&args(m).iter().map(String::as_str).collect::<Vec<_>>());
            let shapes = get("shapes");
            assert_eq!(get("brute"), shapes, "n={n} k={k}");
            if k.parse::<usize>().unwrap() <= 4 {
                assert_eq!(get("series"), shapes, "n={n} k={k}");
            }
            if k == "3" {
                assert_eq!(get("closed"), shapes, "n={n}");
            }
        }
    }
}

#[test]
fn other_counts_agree_across_methods() {
    for n in ["1", "5", "8"] {
        let formula = value(&["count", "catalan", "--n", n]);
        for m in ["brute", "shapes", "series"] {
            assert_eq!(value(&["count", "catalan", "--n", n, "--method", m]), formula);
        }
        for k in ["1", "2", "4"] {
            assert_eq!(
                value(&["count", "beth", "--n", n, "--k", k, "--method", "brute"]),
                value(&["count", "beth", "--n", n, "--k", k])
            );
        }
        assert_eq!(
            result(&["count", "lds-dist", "--n", n, "--method", "brute"])["distribution"],
            result(&["count", "lds-dist", "--n", n])["distribution"]
        );
    }
    assert_eq!(value(&["count", "catalan", "--n", "5"]), "42");
    for shape in ["3,2", "2,2,1", "4,1,1"] {
        let hook = value(&["tableaux", "hook-count", "--shape", shape]);
        for m in ["enumerate", "schur"] {
            assert_eq!(value(&["tableaux", "hook-count", "--shape", shape, "--method", m]), hook);
        }
    }
}

#[test]
fn large_values_are_decimal_strings() {
    assert_eq!(
        value(&["count", "xi", "--n", "30", "--k", "30"]),
        "265252859812191058636308480000000"
    );
}

#[test]
fn posets() {
    let census = result(&["posets", "census", "--n", "3"]);
    assert_eq!(census["by_antichain"], json!({"1": "1", "2": "3", "3": "1"}));
    assert_eq!(census["total"], "5");
    assert_eq!(census["permutations"], "6");
    let iso = result(&["posets", "isomorphic", "--perm", "2,3,1", "--other", "3,1,2"]);
    assert_eq!(iso["isomorphic"], true);
    let iso = result(&["posets", "isomorphic", "--perm", "1,2,3", "--other", "3,2,1"]);
    assert_eq!(iso["isomorphic"], false);
    let p = result(&["posets", "from-perm", "--perm", "2,3,1"]);
    assert_eq!(p["relations"], json!([[2, 3]]));
    assert_eq!(p["max_antichain"]["size"], 2);
    assert_eq!(value(&["count", "epsilon", "--n", "3", "--k", "2"]), "3");
}

#[test]
fn knuth_round_trips() {
    let fwd = result(&["knuth", "forward", "--pairs", "1:2,1:3,2:1,2:2"]);
    let p = fwd["P"].to_string();
    let q = fwd["Q"].to_string();
    let back = result(&["knuth", "inverse", "--p", &p, "--q", &q]);
    assert_eq!(back["pairs"], json!([[1, 2], [1, 3], [2, 1], [2, 2]]));
    let m = result(&["knuth", "to-matrix", "--pairs", "1:2,1:2,2:1"]);
    assert_eq!(m["matrix"], json!([[0, 2], [1, 0]]));
    let a = result(&["knuth", "from-matrix", "--matrix", "[[0,2],[1,0]]"]);
    assert_eq!(a["pairs"], json!([[1, 2], [1, 2], [2, 1]]));
    let check = result(&["knuth", "selfcheck", "--trials", "2000", "--seed", "11"]);
    assert_eq!(check["failures"], 0);
}

#[test]
fn series_coefficients() {
    let u = result(&["series", "u", "--k", "2", "--degree", "4"]);
    let c = &u["coefficients"];
    assert_eq!(c[0], json!({"num": "1", "den": "1"}));
    assert_eq!(c[1], json!({"num": "0", "den": "1"}));
    assert_eq!(c[2], json!({"num": "1", "den": "1"}));
    assert_eq!(c[4], json!({"num": "1", "den": "2"}));
    assert_eq!(value(&["series", "xi", "--k", "2", "--n", "5"]), "42");
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["bounds", "verify", "--max-n", "5"][..],
        &["knuth", "selfcheck", "--trials", "500", "--seed", "9"],
        &["posets", "census", "--n", "5"],
        &["tableaux", "enumerate", "--shape", "3,2", "--format", "csv"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn bounds_report() {
    let r = result(&["bounds", "verify", "--max-n", "6"]);
    assert_eq!(r["all_pass"], true);
    let row = r["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|row| row["statistic"] == "xi" && row["n"] == 4 && row["k"] == 2)
        .unwrap();
    assert_eq!(row["exact"], "14");
    assert_eq!(row["bound"], json!({"num": "256", "den": "1"}));
    assert_eq!(row["ratio"], json!({"num": "7", "den": "128"}));

    let out = run(&["bounds", "verify", "--max-n", "4", "--stats", "xi", "--format", "csv"]);
    let csv = String::from_utf8(out.stdout).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("statistic,n,k,exact,bound_num,bound_den,ratio,pass"));
    assert!(csv.contains("\nxi,4,2,14,256,1,7/128,true\n"));
    assert_eq!(csv.lines().count(), 1 + 10);
}

#[test]
fn exit_codes() {
    // a failing bound row
    let out = run(&["bounds", "verify", "--max-n", "14", "--k", "14", "--stats", "beth"]);
    assert_eq!(code(&out), 1);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["all_pass"], false);

    // usage errors, from clap and from validation
    for args in [
        &["count", "xi", "--n", "4"][..],
        &["rsk", "--perm", "1,1,2"],
        &["count", "xi", "--n", "4", "--k", "2", "--method", "census"],
        &["count", "xi", "--n", "4", "--k", "2", "--method", "closed"],
        &["tableaux", "hooks", "--shape", "1,2"],
        &["knuth", "forward", "--pairs", "2:1,1:1"],
        &["rsk", "--inverse", "--p", "[[1,3],[2]]", "--q", "not json"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }

    // guard violations
    for args in [
        &["count", "xi", "--n", "10", "--k", "2", "--method", "brute"][..],
        &["count", "epsilon", "--n", "8"],
        &["tableaux", "hook-count", "--shape", "4,3", "--method", "schur"],
        &["bounds", "verify", "--max-n", "8"],
    ] {
        let out = run(args);
        assert_eq!(code(&out), 3, "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).expect("structured error");
        assert_eq!(err["error"]["kind"], "guard");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn guard_override_warns_and_runs() {
    let out = run(&["count", "xi", "--n", "10", "--k", "2", "--method", "brute", "--guard", "10"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["value"], "16796");
}

#[test]
fn threads_flag_does_not_change_results() {
    let one = run(&["count", "lds-dist", "--n", "8", "--method", "brute", "--threads", "1"]);
    let many = run(&["count", "lds-dist", "--n", "8", "--method", "brute", "--threads", "4"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn text_output() {
    let out = run(&["rsk", "--perm", "2,3,1", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "P:\n1 3\n2\nQ:\n1 2\n3\nshape: (2,1)\nlds: 2\n");
}
