use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use bispace_lab::catalog::build_example;
use bispace_lab::harness::parse_machine;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bispace-lab"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn catalog_passes_and_negative_control_fails() {
    let out = run(&["verify-catalog"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = run(&["--format", "machine", "verify-catalog", "--negative-control"]);
    assert_eq!(out.status.code(), Some(1));
    let reports = parse_machine(&stdout(&out)).unwrap();
    assert_eq!(reports.iter().filter(|r| !r.passed()).count(), 1);
}

#[test]
fn user_file_reproduces_the_catalog_verdicts() {
    let path = fixture("ex-3.2.json");
    let out = run(&["--format", "machine", "check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let user = parse_machine(&stdout(&out)).unwrap().remove(0);

    let entry = build_example("ex-3.2").unwrap();
    let catalog = bispace_lab::catalog::verify_entry(&entry, false);
    assert_eq!(user.outcomes.len(), catalog.outcomes.len());
    for (u, c) in user.outcomes.iter().zip(&catalog.outcomes) {
        assert_eq!((&u.claim, &u.computed, u.passed), (&c.claim, &c.computed, c.passed));
    }
}

#[test]
fn no_claims_runs_the_default_battery() {
    let path = fixture("sierpinski.json");
    let out = run(&["--format", "machine", "check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = parse_machine(&stdout(&out)).unwrap().remove(0);
    assert!(report
        .outcomes
        .iter()
        .any(|o| o.claim == "A-12-preopen" && o.computed == "true"));
    assert!(report
        .outcomes
        .iter()
        .any(|o| o.claim == "A-21-semiopen" && o.computed == "false"));
}

#[test]
fn extra_claims_are_appended() {
    let path = fixture("sierpinski.json");
    let claims = fixture("extra-claims.json");
    let out = run(&["check", path.to_str().unwrap(), "--claims", claims.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("pass (3 passed, 0 failed)"));
}

#[test]
fn wrong_verdict_exits_one() {
    let path = fixture("wrong-verdict.json");
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.find("FAIL one-open").unwrap() < text.find("ok   zero-open").unwrap());
}

#[test]
fn malformed_file_reports_position_and_exits_two() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        "{{\"kind\": \"finite\",\n  \"points\": 2,\n  \"first\": [[], [0, 1]\n}}"
    )
    .unwrap();
    let out = run(&["check", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains(":4:"), "{err}");

    let out = run(&["check", "/nonexistent/space.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(run(&["suite", "--n", "4", "--which", "thm-4.1"]).status.code(), Some(2));
    assert_eq!(run(&["suite", "--n", "2", "--seed", "1"]).status.code(), Some(2));
    assert_eq!(run(&["suite", "--n", "2", "--which", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    for (n, count) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
        let out = run(&["enumerate", "--n", &n.to_string()]);
        assert!(stdout(&out).ends_with(&format!("{count} spaces on {n} points\n")));
        let out = run(&["--format", "machine", "enumerate", "--n", &n.to_string()]);
        let text = stdout(&out);
        let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
        assert_eq!(last["count"], count);
        assert_eq!(text.lines().count(), count + 1);
    }
}

#[test]
fn suite_list_names_every_suite() {
    let out = run(&["suite", "--n", "1", "--list"]);
    let listed: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(listed, bispace_lab::harness::suite_ids());
}
