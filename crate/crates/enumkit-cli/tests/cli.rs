//! End-to-end tests of the `enumkit` binary: output shape, exit codes,
//! restarts, and the step-cap override.

use std::process::{Command, Output};

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_enumkit"));
    cmd.args(args);
    for (key, value) in env {
        cmd.env(key, value);
    }
    cmd.output().expect("the binary should run")
}

fn run(args: &[&str]) -> Output {
    run_with_env(args, &[])
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stdout_lines(output: &Output) -> Vec<String> {
    String::from_utf8_lossy(&output.stdout).lines().map(str::to_string).collect()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn ordered_walk_prints_words_and_a_count_line() {
    let out = run(&["enum", "--problem", "gray-ordered", "--n", "4", "--limit", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["0000", "0001", "0011", "# count=3"]);
}

#[test]
fn transversal_stream_comes_from_the_instance_file() {
    let out = run(&["enum", "--problem", "transversal", "--input", &fixture("triangle.hg")]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["111", "110", "101", "011", "010", "# count=5"]);
}

#[test]
fn monotone_clauses_enumerate_like_their_support_hypergraph() {
    let out = run(&["enum", "--problem", "monotone", "--input", &fixture("pair.cnf")]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["11", "10", "01", "# count=3"]);
}

#[test]
fn unsatisfiable_instances_print_count_zero_and_succeed() {
    let cases =
        [("krom", "contradiction.cnf"), ("xor", "inconsistent.xor"), ("ihs", "empty_clause.cnf")];
    for (problem, file) in cases {
        let out = run(&["enum", "--problem", problem, "--input", &fixture(file)]);
        assert_eq!(exit_code(&out), 0, "{problem} should exit 0");
        assert_eq!(stdout_lines(&out), ["# count=0"], "{problem} should print only the count");
    }
}

#[test]
fn resume_prints_only_the_suffix() {
    // Memoryless walk: no memory suffix needed.
    let out = run(&[
        "enum",
        "--problem",
        "transversal",
        "--input",
        &fixture("triangle.hg"),
        "--resume-from",
        "110",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["101", "011", "010", "# count=3"]);

    // One parity bit of memory, which must be consistent with the word.
    let out = run(&["enum", "--problem", "gray-ordered", "--n", "3", "--resume-from", "001:0"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["011", "010", "110", "111", "101", "100", "# count=6"]);

    let out = run(&["enum", "--problem", "gray-ordered", "--n", "3", "--resume-from", "001:1"]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a valid predecessor"));
}

#[test]
fn resume_rejects_non_solutions() {
    let out = run(&[
        "enum",
        "--problem",
        "transversal",
        "--input",
        &fixture("triangle.hg"),
        "--resume-from",
        "100",
    ]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn step_cap_environment_variable_aborts_runaway_runs() {
    let out =
        run_with_env(&["enum", "--problem", "gray-lex", "--n", "4"], &[("ENUM_STEP_CAP", "2")]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("fixpoint"));

    // A generous cap leaves the run untouched.
    let out =
        run_with_env(&["enum", "--problem", "gray-lex", "--n", "4"], &[("ENUM_STEP_CAP", "999")]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out).len(), 17);

    let out =
        run_with_env(&["enum", "--problem", "gray-lex", "--n", "4"], &[("ENUM_STEP_CAP", "soon")]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn bad_inputs_exit_with_code_two() {
    let out = run(&["enum", "--problem", "transversal", "--input", "/no/such/file"]);
    assert_eq!(exit_code(&out), 2);

    // Wrong format for the chosen problem names the offending line.
    let out = run(&["enum", "--problem", "krom", "--input", &fixture("triangle.hg")]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = run(&["enum", "--problem", "tiling", "--n", "4"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["enum", "--problem", "witness-const", "--word", "10a1"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["enum", "--problem", "gray-rank", "--n", "4"]);
    assert_eq!(exit_code(&out), 2, "missing --rank");
}

#[test]
fn runtime_failures_exit_with_code_one() {
    // A rank beyond the word length is a runtime rejection, not a parse error.
    let out = run(&["enum", "--problem", "gray-rank", "--n", "3", "--rank", "8"]);
    assert_eq!(exit_code(&out), 1);

    // Reachability needs a source vertex in the file.
    let out = run(&["enum", "--problem", "reach", "--input", &fixture("sourceless.g")]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn verify_passes_across_problem_kinds() {
    let cases: &[&[&str]] = &[
        &["verify", "--problem", "transversal", "--input", &fixture("triangle.hg")],
        &["verify", "--problem", "dominating", "--input", &fixture("funnel.g")],
        &["verify", "--problem", "ihs", "--input", &fixture("chain.cnf")],
        &["verify", "--problem", "krom", "--input", &fixture("pair.cnf")],
        &["verify", "--problem", "xor", "--input", &fixture("pair.xor")],
        &["verify", "--problem", "reach", "--input", &fixture("funnel.g")],
        &["verify", "--problem", "gray-ordered", "--n", "5"],
        &["verify", "--problem", "gray-rank", "--n", "4", "--rank", "9"],
        &["verify", "--problem", "witness-const", "--word", "1011"],
        &["verify", "--problem", "witness-poly", "--word", "10110011"],
    ];
    for args in cases {
        let out = run(args);
        let lines = stdout_lines(&out);
        assert_eq!(exit_code(&out), 0, "{args:?} failed: {lines:?}");
        assert_eq!(lines.last().map(String::as_str), Some("# verify=pass"));
    }
}

#[test]
fn verify_order_override_can_fail_a_passing_stream() {
    // The transversal walk starts at 111, which violates the 0<1 order.
    let out = run(&[
        "verify",
        "--problem",
        "transversal",
        "--input",
        &fixture("triangle.hg"),
        "--order",
        "lex-0<1",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert_eq!(stdout_lines(&out).last().map(String::as_str), Some("# verify=fail"));

    let out = run(&[
        "verify",
        "--problem",
        "transversal",
        "--input",
        &fixture("triangle.hg"),
        "--order",
        "set",
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn audit_reports_budget_purity_and_restarts() {
    let out = run(&["audit", "--problem", "xor", "--input", &fixture("pair.xor")]);
    let lines = stdout_lines(&out);
    assert_eq!(exit_code(&out), 0, "{lines:?}");
    assert!(lines.iter().any(|l| l.contains("measured=1 bits")));
    assert_eq!(lines.last().map(String::as_str), Some("# audit=pass"));
}

#[test]
fn bench_prints_delay_statistics() {
    let out = run(&["bench", "--problem", "gray-ordered", "--n", "6"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert!(lines[0].starts_with("samples=64 "));
    assert_eq!(lines.last().map(String::as_str), Some("# bench=done"));
}

#[test]
fn closed_stdout_ends_the_stream_quietly() {
    use std::io::{BufRead, BufReader};
    use std::process::{Command, Stdio};

    // 2^16 lines comfortably overflow the pipe buffer, so the writer is
    // still emitting when the reader hangs up after one line.
    let mut child = Command::new(env!("CARGO_BIN_EXE_enumkit"))
        .args(["enum", "--problem", "gray-ordered", "--n", "16"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    let stdout = child.stdout.take().expect("piped stdout");
    let mut first = String::new();
    BufReader::new(stdout).read_line(&mut first).expect("one line arrives");
    assert_eq!(first.trim(), "0000000000000000");
    // Dropping the reader closed the pipe; the child must exit successfully.
    let status = child.wait().expect("child exits");
    assert!(status.success(), "expected quiet success, got {status:?}");
}
