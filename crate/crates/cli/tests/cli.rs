use std::process::{Command, Output};

use serde_json::Value;

fn ordcal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordcal")).args(args).env_remove("ORDCAL_ITER_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn growth_order_of_a_sum() {
    let o = ordcal(&["hahn", "go", "x + 3*x^(1/2)"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "3*x^(1/2)"));
}

#[test]
fn growth_order_hidden_by_floor_is_indeterminate() {
    let o = ordcal(&["hahn", "go", "x", "--floor", "-3"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("indeterminate"));
    let exact = ordcal(&["hahn", "go", "x"]);
    assert_eq!((code(&exact), stdout(&exact).trim()), (0, "0"));
}

#[test]
fn chain_relation_membership() {
    let o = ordcal(&["free", "check-lemma51", "--vars", "1", "--cap", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "membership: true"));
    let o = ordcal(&["free", "check-lemma47", "--vars", "2", "--cap", "3"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "membership: true"));
}

#[test]
fn syntax_errors_report_offset() {
    let o = ordcal(&["hahn", "eval", "x + + 1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 4"));
}

#[test]
fn bad_flags_are_input_errors() {
    assert_eq!(code(&ordcal(&["hahn", "pow", "x", "-e", "one"])), 2);
    assert_eq!(code(&ordcal(&["hahn", "frobnicate"])), 2);
    assert_eq!(code(&ordcal(&["order", "tree", "--signs", "1,2"])), 2);
    assert_eq!(code(&ordcal(&["hahn", "invert", "2*x"])), 2);
}

#[test]
fn canonical_text_round_trips() {
    for text in ["x + 3*x^(1/2)", "-1/3 + x^(-1/2)", "-1*x + 1", "0", "x + O(x^(-2))"] {
        let o = ordcal(&["hahn", "eval", text]);
        assert_eq!(stdout(&o).trim(), text);
    }
    let o = ordcal(&["hahn", "eval", "1/3*x^(1) + x^(1) - x^(-1/2)"]);
    assert_eq!(stdout(&o).trim(), "4/3*x - x^(-1/2)");
}

#[test]
fn json_is_ordered_and_exact() {
    let o = ordcal(&["--json", "hahn", "pow", "x + 1", "-e", "-1", "--floor", "-3"]);
    let text = stdout(&o);
    assert!(text.find("\"terms\"").unwrap() < text.find("\"floor\"").unwrap());
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["floor"], "-3");
    let exps: Vec<&str> = v["terms"].as_array().unwrap().iter().map(|t| t["exp"].as_str().unwrap()).collect();
    assert_eq!(exps, ["-1", "-2"]);
}

#[test]
fn arithmetic_commands() {
    let run = |args: &[&str]| stdout(&ordcal(args)).trim().to_string();
    assert_eq!(run(&["hahn", "add", "x", "-1*x + 1"]), "1");
    assert_eq!(run(&["hahn", "mul", "x + 1", "x - 1"]), "x^(2) - 1");
    assert_eq!(run(&["hahn", "deriv", "x^(3/2) + 5"]), "3/2*x^(1/2)");
    assert_eq!(run(&["hahn", "compose", "x^(2)", "x + 1"]), "x^(2) + 2*x + 1");
    assert_eq!(run(&["hahn", "invert", "x + 1"]), "x - 1");
    assert_eq!(run(&["hahn", "iterate", "x + 1", "-e", "5/2"]), "x + 5/2");
    assert_eq!(
        run(&["hahn", "pow", "x + x^(1/2)", "-e", "1/2", "--floor", "-2"]),
        "x^(1/2) + 1/2 - 1/8*x^(-1/2) + 1/16*x^(-1) - 5/128*x^(-3/2) + O(x^(-2))"
    );
}

#[test]
fn decompose_then_recompose() {
    let input = "x + 3*x^(1/2) - x^(-1)";
    for scale in ["s0", "s1"] {
        for signs in ["left", "right", "alt", "1,-1,-1"] {
            let d = ordcal(&["--json", "decompose", "--scale", scale, "--signs", signs, "--floor", "-3", input]);
            assert_eq!(code(&d), 0);
            let file = tempfile::NamedTempFile::new().unwrap();
            std::fs::write(file.path(), &d.stdout).unwrap();
            let r = ordcal(&["recompose", file.path().to_str().unwrap()]);
            assert_eq!(stdout(&r).trim(), format!("{input} + O(x^(-3))"), "{scale} {signs}");
        }
    }
}

#[test]
fn iteration_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ordcal"))
        .args(["decompose", "--scale", "s0", "x + x^(1/2) + 1"])
        .env("ORDCAL_ITER_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("iteration cap"));
}

#[test]
fn tree_orders() {
    let o = ordcal(&["order", "tree", "--signs", "1,-1", "--segments", "1,3"]);
    assert_eq!(stdout(&o), "0 < 2 < 1\nL = {0}\nR = {}\n");
    let o = ordcal(&["--json", "order", "tree", "--signs", "-1,1,-1", "--segments", "2,4"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["L"], serde_json::json!([1]));
    assert_eq!(v["R"], serde_json::json!([0]));
}

#[test]
fn free_series_output() {
    let o = ordcal(&["free", "op", "--order", "0,1", "--cap", "2"]);
    assert_eq!(stdout(&o).trim(), "1 + X0 + X1 + X0.X1");
    let o = ordcal(&["free", "op", "--order", "0,0"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_suites_exit_zero_when_passing() {
    for suite in ["mg", "growth", "roundtrip", "chain"] {
        let o = ordcal(&["verify", suite, "--seed", "7", "--iters", "3", "--floor", "-3"]);
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("result: pass\n"));
    }
    let o = ordcal(&["--json", "verify", "mg", "--iters", "2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
}
