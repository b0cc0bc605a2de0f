use std::io::Write;
use std::process::{Command, Output, Stdio};

use realspec::cli::parse::parse_poly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realspec")).args(args).output().expect("spawn")
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_realspec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn real_radical_of_product() {
    let o = run(&["real-radical", "--ring", "Q[x]", "x^2*(x^2+1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x");
}

#[test]
fn classify_nilpotent_ring() {
    let o = run(&["classify", "--ring", "Q[x]/(x^2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "real=false semireal=true");
}

#[test]
fn glue_golden_instance() {
    let args = ["section", "glue", "--ring", "Q[x]/(x^2-x)", "--f", "1", "--patch", "x:x", "--patch", "x-1:0"];
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("x / 1"));
    assert!(text.contains("coeffs = [1, -1]"));

    let mut json = vec!["--json"];
    json.extend_from_slice(&args);
    let o = run(&json);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["outcome"], "glued");
    let v = run_stdin(&["cert", "verify", "-"], &o.stdout);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(stdout(&v).trim(), "valid=true");
}

#[test]
fn blocked_glue_exits_four() {
    let o = run(&["section", "glue", "--ring", "Q[x]/(x^3+x)", "--f", "x", "--patch", "x:0", "--patch", "x:x"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("structurally-blocked"));
}

#[test]
fn parse_errors_exit_two() {
    let o = run(&["factor", "x^^2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 3"));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn precondition_failures_exit_three() {
    assert_eq!(run(&["classify", "--ring", "Q[x]/(2*x)"]).status.code(), Some(3));
    let forged = br#"{"kind":"real-radical","ring":"Q[x]","element":"1","ideal":"x^2+1","m":1,"sos":[],"cofactor":"1"}"#;
    let o = run_stdin(&["cert", "verify", "-"], forged);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o).trim(), "valid=false");
}

#[test]
fn certificate_round_trip() {
    let o = run(&["--json", "cert", "find", "--ideal", "x^2+1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = run_stdin(&["cert", "verify", "-"], &o.stdout);
    assert_eq!(stdout(&v).trim(), "valid=true");

    let o = run(&["--json", "subcover", "--f", "x^2-1", "x-1", "x+1", "x"]);
    assert_eq!(o.status.code(), Some(0));
    let v = run_stdin(&["cert", "verify", "-"], &o.stdout);
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn printed_polynomials_reparse() {
    let o = run(&["factor", "x^4-1"]);
    let printed = stdout(&o);
    let product = parse_poly(printed.trim()).unwrap();
    assert_eq!(product, parse_poly("x^4-1").unwrap());
    let o = run(&["real-part", "(x^2-2)*(x^2+1)*(x+3)"]);
    let printed = stdout(&o);
    let back = parse_poly(printed.trim()).unwrap();
    assert_eq!(back.to_string(), printed.trim());
}

#[test]
fn exploration_is_deterministic() {
    let args = ["explore-question", "--rings", "2", "--trials", "2", "--seed", "11"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("explore-question seed=11"));

    let o = run(&["--json", "explore-question", "--rings", "3", "--trials", "0"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["trials_per_ring"], 0);
    assert!(doc["unresolved"].as_array().unwrap().is_empty());
}
