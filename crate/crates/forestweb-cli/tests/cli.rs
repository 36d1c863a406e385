use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_forestweb");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const SIZE11_TABLEAU: &str = r#"{"schemaVersion":"1.0","kind":"tableau",
    "col1":[1,2,4,5,6,10,13,14,16,17,21],"col2":[3,7,8,9,11,12,15,18,19,20,22]}"#;

#[test]
fn enumerate_counts() {
    for (family, expected) in [
        ("tableaux", "14"),
        ("matchings", "14"),
        ("forest-webs", "12"),
        ("av132", "14"),
        ("av-class", "12"),
        ("av-cummings", "12"),
    ] {
        let out = run(&["enumerate", "--r", "4", "--family", family, "--count-only"]);
        assert!(out.status.success(), "{family}");
        assert_eq!(stdout(&out).trim(), expected, "{family}");
    }
}

#[test]
fn enumerate_json_lines_parse() {
    let out = run(&["enumerate", "--r", "3", "--family", "forest-webs", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["kind"], "forestWeb");
        assert_eq!(v["schemaVersion"], "1.0");
    }
}

#[test]
fn map_tableau_to_perm_golden() {
    let out = run_with_stdin(
        &["map", "--from", "tableau", "--to", "perm", "--input", "-"],
        SIZE11_TABLEAU,
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["word"], serde_json::json!([11, 8, 9, 7, 10, 5, 2, 3, 4, 1, 6]));
}

#[test]
fn map_perm_to_web_not_in_class_is_exit_2() {
    let input = r#"{"schemaVersion":"1.0","kind":"permutation","word":[4,3,2,1]}"#;
    let out = run_with_stdin(&["map", "--from", "perm", "--to", "web", "--input", "-"], input);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not {132,4321,3214}-avoiding"), "{err}");
}

#[test]
fn map_round_trips_through_every_kind() {
    let perm = r#"{"schemaVersion":"1.0","kind":"permutation","word":[3,4,2,1]}"#;
    let mut doc = perm.to_string();
    for (from, to) in [
        ("perm", "web"),
        ("web", "matching"),
        ("matching", "path"),
        ("path", "tableau"),
        ("tableau", "perm"),
    ] {
        let out = run_with_stdin(&["map", "--from", from, "--to", to, "--input", "-"], &doc);
        assert!(out.status.success(), "{from} -> {to}");
        doc = stdout(&out);
    }
    let v: serde_json::Value = serde_json::from_str(&doc).unwrap();
    assert_eq!(v["word"], serde_json::json!([3, 4, 2, 1]));
}

#[test]
fn map_kind_mismatch_is_exit_2() {
    let input = r#"{"schemaVersion":"1.0","kind":"permutation","word":[1]}"#;
    let out = run_with_stdin(&["map", "--from", "tableau", "--to", "perm", "--input", "-"], input);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_counts_table_and_exit_zero() {
    let out = run(&["verify", "--r-max", "6", "--claim", "counts"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("counts"), "{text}");
    assert!(text.contains("pass"), "{text}");
}

#[test]
fn verify_json_reports() {
    let out = run(&["verify", "--r-max", "5", "--claim", "all", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["kind"], "report");
        assert_eq!(v["failures"], serde_json::json!([]));
    }
}

#[test]
fn verify_over_cap_is_exit_2() {
    let out = run(&["verify", "--r-max", "99", "--claim", "counts"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn render_web_dot_and_tikz() {
    let enumerate = run(&["enumerate", "--r", "4", "--family", "forest-webs", "--json"]);
    let three_white = stdout(&enumerate)
        .lines()
        .find(|l| l.contains("threeWhite"))
        .unwrap()
        .to_string();
    let dot = run_with_stdin(
        &["render", "--input", "-", "--format", "dot", "--out", "-"],
        &three_white,
    );
    assert!(dot.status.success());
    assert!(stdout(&dot).starts_with("graph web {"));
    let tikz = run_with_stdin(
        &["render", "--input", "-", "--format", "tikz", "--out", "-"],
        &three_white,
    );
    assert!(tikz.status.success());
    assert!(stdout(&tikz).contains("\\begin{tikzpicture}"));
}

#[test]
fn render_to_file() {
    let dir = std::env::temp_dir().join("forestweb-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("web.dot");
    let input = r#"{"schemaVersion":"1.0","kind":"forestWeb","r":1,"type":"twoWhite","blocks":[[1],[2]]}"#;
    let out = run_with_stdin(
        &["render", "--input", "-", "--format", "dot", "--out", path.to_str().unwrap()],
        input,
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("b1 -- "));
}

#[test]
fn malformed_input_is_exit_2() {
    let out = run_with_stdin(
        &["map", "--from", "tableau", "--to", "perm", "--input", "-"],
        "{ not json",
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());
}

#[test]
fn usage_error_is_exit_2() {
    let out = run(&["enumerate", "--r", "4", "--family", "no-such-family"]);
    assert_eq!(out.status.code(), Some(2));
}
