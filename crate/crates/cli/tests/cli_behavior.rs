//! End-to-end behaviour of the `heis` binary: argument parsing, error exits,
//! output formats, the coefficient cache file, and the fixture verifier.

use std::path::PathBuf;
use std::process::Command;

fn heis() -> Command {
    Command::new(env!("CARGO_BIN_EXE_heis"))
}

fn run(args: &[&str]) -> (String, String, bool) {
    let out = heis().args(args).output().expect("spawn heis");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.success(),
    )
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn scratch_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("heis-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn product_text_output() {
    let (stdout, _, ok) = run(&["product", "1", "1"]);
    assert!(ok);
    assert!(stdout.contains("degree 2: 2=1  1,1=1"), "{stdout}");
    assert!(stdout.contains("# heis product 1 1"), "{stdout}");
}

#[test]
fn empty_partition_is_the_unit() {
    let (stdout, _, ok) = run(&["product", "-", "2,1"]);
    assert!(ok);
    assert!(stdout.contains("degree 3: 2,1=1"), "{stdout}");
}

#[test]
fn kronecker_size_mismatch_fails() {
    let (_, stderr, ok) = run(&["kronecker", "2", "1"]);
    assert!(!ok);
    assert!(stderr.contains("sizes differ"), "{stderr}");
}

#[test]
fn heisenberg_degree_out_of_range_fails() {
    let (_, stderr, ok) = run(&["heisenberg", "1", "1", "--degree", "5"]);
    assert!(!ok);
    assert!(stderr.contains("outside the valid range"), "{stderr}");
}

#[test]
fn malformed_partition_fails() {
    let (_, stderr, ok) = run(&["product", "1,2", "1"]);
    assert!(!ok);
    assert!(stderr.contains("not a partition"), "{stderr}");
}

#[test]
fn negative_entries_parse_for_stable() {
    let (stdout, _, ok) = run(&["stable", "2,1,1", "2,1", "-2,3,3"]);
    assert!(ok);
    assert!(stdout.contains("stable = 0"), "{stdout}");
}

#[test]
fn recover_hypothesis_violation_fails() {
    let (_, stderr, ok) = run(&["recover", "1", "2,1", "3,1"]);
    assert!(!ok);
    assert!(stderr.contains("recovery requires"), "{stderr}");
}

#[test]
fn csv_is_table_only() {
    let (_, stderr, ok) = run(&["--format", "csv", "product", "1", "1"]);
    assert!(!ok);
    assert!(stderr.contains("csv output is only available"), "{stderr}");

    let (stdout, _, ok) = run(&[
        "--format", "csv", "table", "1,1", "1", "--d", "1", "--h", "0", "--n", "3:4",
    ]);
    assert!(ok);
    let mut lines = stdout.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,-,1,2,\"1,1\",3,\"2,1\",\"1,1,1\",\"3,1\",\"2,2\",\"2,1,1\",\"1,1,1,1\""
    );
    assert_eq!(lines.next().unwrap(), "3,1,1,,0,,,,,,,");
}

#[test]
fn json_and_text_agree_on_numbers() {
    let (text, _, ok) = run(&["stable", "2,1,1", "2,1", "2,2"]);
    assert!(ok);
    assert!(text.contains("stable = 4"));

    let (json, _, ok) = run(&["--format", "json", "stable", "2,1,1", "2,1", "2,2"]);
    assert!(ok);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["value"].as_i64(), Some(4));
    assert_eq!(value["label"].as_str(), Some("stable"));
}

#[test]
fn onset_with_and_without_nu() {
    let (stdout, _, ok) = run(&["onset", "1,1", "1", "--d", "1", "--h", "0"]);
    assert!(ok);
    assert!(stdout.contains("stabilization_onset = 7"), "{stdout}");

    let (stdout, _, ok) = run(&["onset", "1,1", "1", "2", "--d", "1", "--h", "0"]);
    assert!(ok);
    assert!(stdout.contains("coefficient_onset = 5"), "{stdout}");

    let (_, stderr, ok) = run(&["onset", "1,1", "1", "--d", "-1", "--h", "0"]);
    assert!(!ok);
    assert!(stderr.contains("nonnegative"), "{stderr}");
}

#[test]
fn verify_passes_on_the_shipped_corpus() {
    let (stdout, stderr, ok) = run(&["verify", "--fixtures", fixtures_dir().to_str().unwrap()]);
    assert!(ok, "verify failed: {stdout} {stderr}");
    assert!(stdout.contains("verify: all fixtures pass"), "{stdout}");
}

#[test]
fn verify_missing_directory_fails() {
    let (_, stderr, ok) = run(&["verify", "--fixtures", "/nonexistent-heis-fixtures"]);
    assert!(!ok);
    assert!(stderr.contains("fixtures directory"), "{stderr}");
}

#[test]
fn verify_reports_failing_fixture_lines() {
    let dir = scratch_path("badfix");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(
        dir.join("bad.txt"),
        "# deliberately wrong pins\naguiar|1|1|2|7\nstraighten|1,3|1|2,2\n",
    )
    .unwrap();
    let (stdout, _, ok) = run(&["verify", "--fixtures", dir.to_str().unwrap()]);
    assert!(!ok);
    assert!(
        stdout.contains("FAIL bad.txt (2 of 2 checks failed)"),
        "{stdout}"
    );
    assert!(stdout.contains("line 2"), "{stdout}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cache_file_roundtrip_and_corruption() {
    let path = scratch_path("cache.txt");
    let _ = std::fs::remove_file(&path);

    let (_, _, ok) = run(&[
        "--cache",
        path.to_str().unwrap(),
        "heisenberg",
        "2,1,1",
        "2,1",
        "--degree",
        "4",
    ]);
    assert!(ok);
    let contents = std::fs::read_to_string(&path).unwrap();
    assert!(
        contents.lines().any(|l| l.starts_with("aguiar|")),
        "cache should persist computed coefficients: {contents}"
    );
    assert!(contents.lines().any(|l| l.starts_with("lr|")));

    // warm start must reproduce the same answer
    let (stdout, _, ok) = run(&[
        "--cache",
        path.to_str().unwrap(),
        "heisenberg",
        "2,1,1",
        "2,1",
        "--degree",
        "4",
    ]);
    assert!(ok);
    assert!(
        stdout.contains("4=1  3,1=3  2,2=2  2,1,1=3  1,1,1,1=1"),
        "{stdout}"
    );

    // corrupt one line: the run aborts naming the line number
    let mut lines: Vec<String> = contents.lines().map(String::from).collect();
    lines.insert(1, "garbage line".to_string());
    std::fs::write(&path, lines.join("\n")).unwrap();
    let (_, stderr, ok) = run(&["--cache", path.to_str().unwrap(), "product", "1", "1"]);
    assert!(!ok);
    assert!(stderr.contains("cache parse error at line 2"), "{stderr}");
    let _ = std::fs::remove_file(&path);
}

#[test]
fn table_row_for_empty_family() {
    let (stdout, _, ok) = run(&["table", "-", "-", "--d", "0", "--h", "0", "--n", "1:4"]);
    assert!(ok);
    for n in 1..=4 {
        assert!(stdout.contains(&format!("{n}  1")), "{stdout}");
    }
}
