use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use wronsk_core::report::{Entry, Report};

fn wronsk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wronsk")).args(args).output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wronsk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

/// Writes `text` to a fresh file under the target temp dir.
fn instance_file(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Report {
    serde_json::from_slice(&out.stdout).unwrap()
}

const LINEAR: &str = "bases 1\nf1: x + 1\nterms 1\n1 : f1\n";
const SQUARE_MINUS_LINE: &str = "bases 2\nf1: x\nf2: x + 1\nterms 2\n1 : f1^2\n-1 : f2\n";

#[test]
fn dense_bound_of_a_linear_instance() {
    let path = instance_file("linear.txt", LINEAR);
    let out = wronsk(&["--json", "bound", path.to_str().unwrap(), "--method", "dense"]);
    assert_eq!(out.status.code(), Some(0));
    let roots = json(&out).roots.unwrap();
    assert_eq!(roots.a_priori_dense, Entry::value(4usize));
    assert_eq!(roots.a_priori_sparse, Entry::missing("not requested"));
}

#[test]
fn upsilon_bound_on_a_sparse_polynomial() {
    // 1 - 3x^2 + x^5: every prefix Wronskian vanishes only at 0
    let path = instance_file("descartes.txt", "bases 1\nf1: x\nterms 3\n1 : f1^0\n-3 : f1^2\n1 : f1^5\n");
    let out = wronsk(&["--json", "bound", path.to_str().unwrap(), "--method", "upsilon", "--exact"]);
    assert_eq!(out.status.code(), Some(0));
    let roots = json(&out).roots.unwrap();
    assert_eq!(roots.certified_upsilon, Entry::value(5usize));
    assert_eq!(roots.exact_count, Entry::value(3usize));
}

#[test]
fn invalid_input_exits_with_two() {
    let path = instance_file("broken.txt", "bases 1\nf1: x +\nterms 1\n1 : f1\n");
    let out = wronsk(&["bound", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(wronsk(&["roots", "/nonexistent/instance.txt"]).status.code(), Some(2));
    assert_eq!(with_stdin(&["roots", "-"], "terms 1\n").status.code(), Some(2));
}

#[test]
fn resource_caps_exit_with_three() {
    let out = with_stdin(&["--budget-degree", "10", "roots", "-"], "bases 1\nf1: x + 2\nterms 1\n1 : f1^50\n");
    assert_eq!(out.status.code(), Some(3));
    let out = with_stdin(&["--basis-cap", "1", "pit", "-"], SQUARE_MINUS_LINE);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn forced_zero_instance_is_certified_zero() {
    let gen = wronsk(&["--seed", "5", "gen", "--k", "6", "--m", "3", "--forced-zero", "hidden"]);
    assert_eq!(gen.status.code(), Some(0));
    let text = stdout(&gen);
    let out = with_stdin(&["--json", "pit", "-", "--mode", "whitebox"], &text);
    assert_eq!(out.status.code(), Some(0));
    let verdict = json(&out).roots.unwrap().pit_whitebox.unwrap();
    assert_eq!(verdict.verdict, "zero");
    assert_eq!(verdict.certificate_verified, Some(true));
    let out = with_stdin(&["--json", "pit", "-", "--mode", "blackbox"], &text);
    assert_eq!(json(&out).roots.unwrap().pit_blackbox.unwrap().verdict, "zero");
}

#[test]
fn nonzero_instance_has_a_witness() {
    for model in ["dense", "sparse"] {
        let out = with_stdin(&["--json", "pit", "-", "--mode", "blackbox", "--model", model], SQUARE_MINUS_LINE);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out).roots.unwrap().pit_blackbox.unwrap();
        assert_eq!(v.verdict, "nonzero");
        let witness: i64 = v.witness.unwrap().0.parse().unwrap();
        assert_ne!(witness * witness - witness - 1, 0);
        let queries: u64 = v.queries.0.parse().unwrap();
        let bound: u64 = v.bound.unwrap().0.parse().unwrap();
        assert!(queries <= bound + 1);
    }
    let text = stdout(&with_stdin(&["pit", "-", "--mode", "blackbox"], SQUARE_MINUS_LINE));
    assert!(text.contains("witness: x = "), "{text}");
}

#[test]
fn optimal_family_has_six_roots() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("optimal.txt");
    let gen = wronsk(&["gen", "--kind", "optimal", "--k", "2", "--p", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(gen.status.code(), Some(0));
    assert!(std::fs::read_to_string(&path).unwrap().contains("# predicted distinct real roots: 6"));
    let out = wronsk(&["--json", "roots", path.to_str().unwrap()]);
    assert_eq!(json(&out).roots.unwrap().exact_count, Entry::value(6usize));
}

#[test]
fn factored_wronskian_of_two_terms() {
    let out = with_stdin(&["wronskian", "-", "--prefix", "2"], SQUARE_MINUS_LINE);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("W = f1^5 * f2^4 * det T"), "{text}");
    assert!(text.contains("identity check against the direct Wronskian: ok"), "{text}");
    let out = with_stdin(&["--json", "wronskian", "-", "--prefix", "2"], SQUARE_MINUS_LINE);
    assert_eq!(json(&out).values["identity_check"], "true");
    assert_eq!(with_stdin(&["wronskian", "-", "--prefix", "3"], SQUARE_MINUS_LINE).status.code(), Some(2));
}

#[test]
fn verification_suites_pass() {
    for suite in ["frobenius", "power-derivative", "factorization", "optimality", "soundness", "pit-agreement"] {
        let out = wronsk(&["--json", "--seed", "11", "verify", "--suite", suite, "--cases", "20"]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stdout(&out));
        let s = json(&out).suite.unwrap();
        assert!(s.passed && s.failures.is_empty(), "{suite}");
    }
}

#[test]
fn json_reports_round_trip() {
    let out = with_stdin(&["--json", "bound", "-", "--exact"], SQUARE_MINUS_LINE);
    let raw = stdout(&out);
    let report: Report = serde_json::from_str(&raw).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap(), raw.trim_end());
    assert_eq!(report.command, "bound");
    assert_eq!(report.roots.unwrap().exact_count, Entry::value(2usize));
}

#[test]
fn output_is_deterministic_for_a_seed() {
    let a = wronsk(&["--seed", "9", "gen", "--k", "3", "--m", "2"]);
    let b = wronsk(&["--seed", "9", "gen", "--k", "3", "--m", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let x = stdout(&with_stdin(&["bound", "-"], &text));
    let y = stdout(&with_stdin(&["bound", "-"], &text));
    assert_eq!(x, y);
}
