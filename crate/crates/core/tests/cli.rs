//! End-to-end tests of the `schubert` binary: golden outputs, formats,
//! and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .env_remove("SCHUBERT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn schubert_polynomial_values() {
    assert_eq!(stdout_of(&["schubert", "312"]), "x1^2\n");
    assert_eq!(stdout_of(&["schubert", "w:2,1"]), "x1^2\n");
    assert_eq!(
        stdout_of(&["schubert", "w:2,3"]),
        "x1*x2 + x1*x3 + x2*x3\n"
    );
    assert_eq!(
        stdout_of(&["schubert", "312", "--format", "json"]),
        "{\"terms\":[{\"coefficient\":1,\"exponents\":[2]}]}\n"
    );
    assert_eq!(
        stdout_of(&["schubert", "312", "--format", "csv"]),
        "monomial,coefficient\nx1^2,1\n"
    );
}

#[test]
fn skew_apply_goldens() {
    assert_eq!(
        stdout_of(&["skew-apply", "4312", "312", "x1^3*x2^2"]),
        "x1^2 + x1*x4 + x4^2\n"
    );
    // the same operator named by words instead of windows
    assert_eq!(
        stdout_of(&["skew-apply", "w:2,1,3,2,1", "w:2,1", "x1^3*x2^2"]),
        "x1^2 + x1*x4 + x4^2\n"
    );
    // a Bruhat cover whose edge transposition is (1,3)
    assert_eq!(
        stdout_of(&["skew-apply", "312", "213", "x1^3*x2*x3"]),
        "x1^2*x2*x3 + x1*x2*x3^2\n"
    );
}

#[test]
fn skew_schubert_goldens() {
    assert_eq!(
        stdout_of(&["skew-schubert", "3241", "2134", "4"]),
        "x1^2*x2 + x1*x2*x4 + x2*x4^2\n"
    );
    assert_eq!(
        stdout_of(&["skew-schubert", "1423", "1243", "4"]),
        "x1^2*x2^2*x3 + x1*x2^2*x3^2\n"
    );
}

#[test]
fn constants_routes_agree() {
    let out = stdout_of(&["constants", "213", "213", "3", "--route", "all"]);
    assert_eq!(
        out,
        "route product:\nS[312]\nroute skew:\nS[312]\nroute paths:\nS[312]\n"
    );
    // single-route default prints the bare table
    assert_eq!(stdout_of(&["constants", "213", "213", "3"]), "S[312]\n");
    assert_eq!(
        stdout_of(&["constants", "213", "231", "3", "--format", "csv"]),
        "window,coefficient\n321,1\n"
    );
}

#[test]
fn key_and_schur_values() {
    assert_eq!(
        stdout_of(&["key", "c:0,0,2"]),
        "x1^2 + x1*x2 + x1*x3 + x2^2 + x2*x3 + x3^2\n"
    );
    assert_eq!(stdout_of(&["key", "2,1"]), "x1^2*x2\n");
    assert_eq!(
        stdout_of(&["schur", "2,1", "--mu", "1"]),
        "x1^2 + 2*x1*x2 + x2^2\n"
    );
    assert_eq!(
        stdout_of(&["schur", "2,1", "--mu", "1", "--route", "ssyt"]),
        "x1^2 + 2*x1*x2 + x2^2\n"
    );
    assert_eq!(
        stdout_of(&["schur", "2,1", "--mu", "1", "--route", "lr"]),
        "(1,1): 1\n(2): 1\n"
    );
}

#[test]
fn verify_suites_exit_clean() {
    assert_eq!(exit_code(&["verify", "theorem1", "--n", "5"]), 0);
    assert_eq!(exit_code(&["verify", "routes-equality", "--n", "3"]), 0);
    let text = stdout_of(&["verify", "identities", "--n", "3", "--trials", "20"]);
    assert!(!text.is_empty());
}

#[test]
fn verify_reports_are_stable() {
    let args = [
        "verify",
        "routes-equality",
        "--n",
        "3",
        "--format",
        "json",
    ];
    let one = stdout_of(&{
        let mut a = args.to_vec();
        a.extend(["--jobs", "1"]);
        a
    });
    let four = stdout_of(&{
        let mut a = args.to_vec();
        a.extend(["--jobs", "4"]);
        a
    });
    assert_eq!(one, four);
}

#[test]
fn exit_codes_for_bad_input() {
    // malformed permutation
    assert_eq!(exit_code(&["schubert", "31"]), 2);
    // malformed polynomial (implicit multiplication)
    assert_eq!(exit_code(&["skew-apply", "4312", "312", "x1 x2"]), 2);
    // v not below w in Bruhat order
    assert_eq!(exit_code(&["skew-apply", "2134", "4312", "x1"]), 2);
    // unknown subcommand
    assert_eq!(exit_code(&["frobnicate"]), 2);
}
