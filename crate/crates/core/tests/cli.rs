//! Runs the installed binary end to end.

use std::process::{Command, Output};

fn motzkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motzkin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn rank_unrank() {
    let o = motzkin(&["rank", "((00)0(0()))"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "9763\n");
    assert_eq!(stdout(&motzkin(&["unrank", "5"])), "(0)0\n");
    assert_eq!(stdout(&motzkin(&["unrank", "9763"])), "((00)0(0()))\n");
}

#[test]
fn decompose_json() {
    let o = motzkin(&["decompose", "--json", "((00)0(0()))"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let expected = serde_json::json!({
        "length": 12,
        "pairs": [
            {"n": 12, "k": 1, "depth": 0, "contribution": 5798},
            {"n": 11, "k": 8, "depth": 1, "contribution": 3932},
            {"n": 6, "k": 2, "depth": 1, "contribution": 30},
            {"n": 4, "k": 3, "depth": 2, "contribution": 3},
        ],
        "total": 9763,
    });
    assert_eq!(doc, expected);
}

#[test]
fn table_rows() {
    let o = motzkin(&["table", "--max-n", "4"]);
    let text = stdout(&o);
    let rows: Vec<String> = text.lines().map(|l| l.replace('\t', " ")).collect();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[6], "6 4/3 ()00 4 7 6 3 – – –");
}

#[test]
fn failure_codes() {
    let o = motzkin(&["rank", ")("]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("position 1"));
    assert_eq!(
        motzkin(&["compose", "--length", "12", "--pair", "1,6", "--pair", "4,8"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        motzkin(&["seq", "fibonacci", "--upto", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(motzkin(&["rank"]).status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let o = motzkin(&["verify", "--max-len", "9"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
}
