use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bilogic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bilogic"))
        .args(args)
        .env_remove("BILOGIC_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const MODEL: &str = r#"{
  "mode": "bd4",
  "domain": ["a", "b"],
  "constants": {"c": "a"},
  "predicates": {
    "E!": {"arity": 1, "map": {"a": "T"}, "default": "F"},
    "P": {"arity": 1, "map": {"a": "B", "b": "N"}, "default": "F"}
  }
}"#;

#[test]
fn truth_table_of_conjunction() {
    let out = bilogic(&["--output", "json", "truthtable", "p & q"]);
    assert_eq!(code(&out), 0);
    let outputs: String = json(&out)["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["output"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(outputs, "TBNFBBFFNFNFFFFF");
}

#[test]
fn fuzzy_truth_table_on_a_grid() {
    let out = bilogic(&[
        "--mode",
        "lbd",
        "--grid",
        "2",
        "--output",
        "json",
        "truthtable",
        "%p",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["rows"].as_array().unwrap().len(), 9);
}

#[test]
fn grid_flag_is_rejected_for_the_four_valued_logic() {
    assert_eq!(code(&bilogic(&["--grid", "4", "truthtable", "p"])), 2);
}

#[test]
fn parse_errors_exit_with_two_and_point_at_the_column() {
    let out = bilogic(&["parse", "P(x) &"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains('^'));
    assert_eq!(
        code(&bilogic(&["parse", "p && q"])),
        2,
        "strong conjunction needs lbd"
    );
    assert_eq!(code(&bilogic(&["--no-free", "parse", "forall x. P(x)"])), 2);
}

#[test]
fn parse_shows_the_expansion() {
    let out = bilogic(&["parse", "forall x. P(x)"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("Pi x"));
}

#[test]
fn eval_reports_value_and_classification() {
    let dir = TempDir::new().unwrap();
    let model = write(&dir, "m.json", MODEL);
    let out = bilogic(&["--output", "json", "eval", &model, "P(c)"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["value"], "B");
    assert_eq!(v["designated"], true);
    assert_eq!(v["glutty"], true);

    let inner = json(&bilogic(&[
        "--output",
        "json",
        "eval",
        &model,
        "forall x. P(x)",
    ]));
    assert_eq!(inner["value"], "B", "only a is in the inner domain");
    let outer = json(&bilogic(&[
        "--output",
        "json",
        "eval",
        &model,
        "Pi x. P(x)",
    ]));
    assert_eq!(outer["value"], "F", "B meets N at F");

    let assigned = json(&bilogic(&[
        "--output", "json", "eval", &model, "P(x)", "--assign", "x=b",
    ]));
    assert_eq!(assigned["value"], "N");
    assert_eq!(
        code(&bilogic(&["eval", &model, "P(x)"])),
        2,
        "unassigned variable"
    );
    assert_eq!(
        code(&bilogic(&["eval", &model, "R(c)"])),
        3,
        "predicate missing from the model"
    );
}

#[test]
fn invalid_model_files_exit_with_three() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("malformed.json", "{not json"),
        (
            "empty.json",
            r#"{"mode": "bd4", "domain": [], "constants": {}, "predicates": {}}"#,
        ),
        (
            "outside.json",
            r#"{"mode": "bd4", "domain": ["a"], "constants": {"c": "z"}, "predicates": {}}"#,
        ),
        (
            "fuzzy.json",
            r#"{"mode": "bd4", "domain": ["a"], "constants": {}, "predicates": {"P": {"arity": 1, "map": {"a": [0.5, 0.5]}, "default": "F"}}}"#,
        ),
    ];
    for (name, text) in cases {
        let path = write(&dir, name, text);
        assert_eq!(code(&bilogic(&["eval", &path, "p"])), 3, "{name}");
    }
}

#[test]
fn theory_check_names_the_failing_schema() {
    let dir = TempDir::new().unwrap();
    let model = write(&dir, "m.json", MODEL);
    let out = bilogic(&["--output", "json", "check-theory", &model]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("normality"), "{text}");
    let ok = bilogic(&["--profile", "existence", "check-theory", &model]);
    assert_eq!(code(&ok), 0, "{}", stdout(&ok));
}

#[test]
fn entailment_examples() {
    let run = |premises: &[&str], conclusion: &str| {
        let mut args = vec!["entail"];
        for p in premises {
            args.extend(["--premise", p]);
        }
        args.extend(["--conclusion", conclusion]);
        code(&bilogic(&args))
    };
    assert_eq!(run(&["forall x. P(x)"], "P(c)"), 1);
    assert_eq!(run(&["E!(c)", "forall x. P(x)"], "P(c)"), 0);
    assert_eq!(run(&["P(c)"], "exists x. P(x)"), 1);
    assert_eq!(run(&["E!(c)", "P(c)"], "exists x. P(x)"), 0);
    assert_eq!(run(&[], "Sigma x.(P(x) | !P(x))"), 0);
    assert_eq!(run(&[], "exists x.(P(x) | !P(x))"), 1);
}

#[test]
fn premises_can_come_from_a_file() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "premises.txt", "# comment\nE!(c)\n\nforall x. P(x)\n");
    assert_eq!(
        code(&bilogic(&[
            "entail",
            "--premises-file",
            &file,
            "--conclusion",
            "P(c)"
        ])),
        0
    );
}

#[test]
fn witness_round_trips_through_eval() {
    let dir = TempDir::new().unwrap();
    let witness = dir.path().join("w.json");
    let w = witness.to_str().unwrap();
    let out = bilogic(&[
        "entail",
        "--premise",
        "forall x. P(x)",
        "--conclusion",
        "P(c)",
        "--witness-out",
        w,
    ]);
    assert_eq!(code(&out), 1);
    assert!(Path::new(w).exists());
    let premise = json(&bilogic(&["--output", "json", "eval", w, "forall x. P(x)"]));
    assert_eq!(premise["designated"], true);
    let conclusion = json(&bilogic(&["--output", "json", "eval", w, "P(c)"]));
    assert_eq!(conclusion["designated"], false);
}

#[test]
fn fuzzy_witness_round_trips_through_eval() {
    let dir = TempDir::new().unwrap();
    let witness = dir.path().join("w.json");
    let w = witness.to_str().unwrap();
    let out = bilogic(&[
        "--mode",
        "lbd",
        "--grid",
        "2",
        "--max-size",
        "1",
        "entail",
        "--premise",
        "P(c) || Q(c)",
        "--conclusion",
        "P(c) | Q(c)",
        "--witness-out",
        w,
    ]);
    assert_eq!(code(&out), 1, "{}", stdout(&out));
    let premise = json(&bilogic(&["--output", "json", "eval", w, "P(c) || Q(c)"]));
    assert_eq!(premise["designated"], true);
    let conclusion = json(&bilogic(&["--output", "json", "eval", w, "P(c) | Q(c)"]));
    assert_eq!(conclusion["designated"], false);
}

#[test]
fn budget_refusal_exits_with_four() {
    let out = Command::new(env!("CARGO_BIN_EXE_bilogic"))
        .args(["entail", "--conclusion", "forall x. P(x)"])
        .env("BILOGIC_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("BILOGIC_BUDGET"));
}

#[test]
fn json_verdicts_are_identical_across_worker_counts() {
    let masked = |workers: &str| {
        let out = bilogic(&[
            "--output",
            "json",
            "--workers",
            workers,
            "--max-size",
            "3",
            "entail",
            "--premise",
            "forall x. (P(x) => Q(x))",
            "--conclusion",
            "Pi x. Q(x)",
        ]);
        let mut v = json(&out);
        v["elapsed_ms"] = Value::Null;
        serde_json::to_string(&v).unwrap()
    };
    let one = masked("1");
    for workers in ["2", "4", "7"] {
        assert_eq!(masked(workers), one);
    }
}
