use std::process::{Command, Output};

use serde_json::Value;

fn parikh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parikh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = parikh(&all);
    (
        serde_json::from_str(&stdout(&o)).unwrap(),
        o.status.code().unwrap(),
    )
}

#[test]
fn matrix_of_abcbac() {
    let o = parikh(&["matrix", "abc", "abcbac"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().next().unwrap().contains("1 2 2 3"));
    let (v, _) = json(&["matrix", "abc", "abcbac"]);
    assert_eq!(
        v["matrix"],
        serde_json::json!([[1, 2, 2, 3], [0, 1, 2, 3], [0, 0, 1, 2], [0, 0, 0, 1]])
    );
}

#[test]
fn count_and_empty_word() {
    assert_eq!(stdout(&parikh(&["count", "abc", "baacbc", "abc"])), "2\n");
    assert_eq!(stdout(&parikh(&["count", "ab", "aabab", "ab"])), "5\n");
    assert_eq!(stdout(&parikh(&["count", "ab", "aabab", "-"])), "1\n");
}

#[test]
fn equiv_exit_codes() {
    assert_eq!(
        parikh(&["equiv", "ab", "abba", "baab"]).status.code(),
        Some(0)
    );
    assert_eq!(parikh(&["equiv", "ab", "ab", "ba"]).status.code(), Some(1));
}

#[test]
fn restricted_ternary_audit_reports_the_pair() {
    let o = parikh(&[
        "audit",
        "complete",
        "--system",
        "ternary-ex0701c",
        "--max-len",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("abbcbacb / bacbabbc"));
    let (v, code) = json(&[
        "audit",
        "complete",
        "--system",
        "ternary-ex0701c",
        "--max-len",
        "8",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["witness"], serde_json::json!(["abbcbacb", "bacbabbc"]));
}

#[test]
fn prs_audits() {
    let o = parikh(&[
        "audit",
        "sound",
        "--system",
        "salomaa-abc",
        "--prs",
        "--max-len",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (v, code) = json(&["audit", "sound", "--system", "salomaa", "--max-len", "6"]);
    assert_eq!(code, 1);
    assert_eq!(v["witness"]["result"], "bacab");
    let o = parikh(&[
        "audit",
        "sound",
        "--system",
        "salomaa",
        "--prs",
        "--max-len",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn distances_and_paths() {
    let (v, code) = json(&["dist", "--system", "salomaa", "abbcacb", "baacbbc"]);
    assert_eq!((v["distance"].as_u64(), code), (Some(3), 0));
    let (v, code) = json(&["dist", "--system", "salomaa", "abc", "cba"]);
    assert_eq!((v["distance"].clone(), code), (Value::Null, 1));
    let (v, _) = json(&[
        "dist",
        "--system",
        "salomaa-abc",
        "--path",
        "abbcacb",
        "abcbabc",
    ]);
    assert_eq!(v["path"][0]["deltas"]["abc"], 1);
}

#[test]
fn irreducibility_commands() {
    let (v, code) = json(&["irr", "--prs", "binary-R1R2-ab", "bbaaabaab", "abbabaaba"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 3);
    let (v, code) = json(&[
        "path",
        "--prs",
        "binary-R1R2-ab",
        "--max-order",
        "2",
        "bbaaabaab",
        "abbabaaba",
    ]);
    assert_eq!(code, 0);
    assert!(v["steps"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["order"].as_u64() <= Some(2)));
    let o = parikh(&[
        "path",
        "--prs",
        "salomaa-abc",
        "--max-order",
        "2",
        "aabcbaaaccab",
        "baacaaabccba",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let (v, _) = json(&["decompose", "--prs", "salomaa-abc", "abbcacb", "baacbbc"]);
    assert_eq!(v["total_order"], 3);
    let (v, _) = json(&["derive", "--prs", "binary-swap-ab", "--max-len", "6"]);
    assert_eq!(v["histogram"], serde_json::json!({ "2": 31 }));
}

#[test]
fn errors_map_to_exit_codes() {
    assert_eq!(
        parikh(&["class", "--system", "binary-swap", "--cap", "3", "abab"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        parikh(&["irr", "--prs", "salomaa-abc", "abc", "cba"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(parikh(&["matrix", "ab", "abc"]).status.code(), Some(3));
    assert_eq!(
        parikh(&["dist", "--system", "no-such-system", "a", "a"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(parikh(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(parikh(&["--help"]).status.code(), Some(0));
}

#[test]
fn system_files_round_trip() {
    let dir = std::env::temp_dir().join(format!("parikh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("salomaa.json");
    let printed = stdout(&parikh(&["system", "salomaa-abc"]));
    std::fs::write(&file, &printed).unwrap();
    let path = file.to_str().unwrap();
    assert_eq!(stdout(&parikh(&["system", path])), printed);
    let o = parikh(&[
        "audit",
        "complete",
        "--system",
        path,
        "--prs",
        "--max-len",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(0));

    // a file named like a preset is only read with --prefer-file
    std::fs::write(
        dir.join("binary-swap"),
        stdout(&parikh(&["system", "binary-ex1506b"])),
    )
    .unwrap();
    let in_dir = |args: &[&str]| {
        let o = Command::new(env!("CARGO_BIN_EXE_parikh"))
            .args(args)
            .current_dir(&dir)
            .output()
            .unwrap();
        String::from_utf8(o.stdout).unwrap()
    };
    assert_eq!(
        in_dir(&["dist", "--system", "binary-swap", "ab", "ba"]),
        "1\n"
    );
    assert_eq!(
        in_dir(&[
            "--prefer-file",
            "dist",
            "--system",
            "binary-swap",
            "ab",
            "ba"
        ]),
        "unreachable\n"
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn json_words_reparse() {
    let (v, _) = json(&["class", "--system", "binary-ex1506b", "abba"]);
    for m in v["members"].as_array().unwrap() {
        let o = parikh(&["count", "ab", m.as_str().unwrap(), "ab"]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (v, _) = json(&["neighbors", "--system", "binary-ex1506b", "abba"]);
    assert_eq!(v[0]["infix"], "λ");
    assert_eq!(parikh(&["count", "ab", "λ", "λ"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "derive", "--prs", "salomaa-abc", "--max-len", "6"];
    assert_eq!(stdout(&parikh(&args)), stdout(&parikh(&args)));
    let args = [
        "--threads",
        "1",
        "audit",
        "complete",
        "--system",
        "ternary-ex0701c",
        "--max-len",
        "8",
    ];
    assert!(stdout(&parikh(&args)).contains("abbcbacb / bacbabbc"));
}

#[test]
fn verify_paper_budgets() {
    let o = parikh(&["verify-paper", "--budget", "zero"]);
    assert_eq!(o.status.code(), Some(2));
    let (v, code) = json(&["verify-paper"]);
    assert_eq!(code, 0);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 18);
    assert!(entries[..17].iter().all(|e| e["status"] == "pass"));
    assert_eq!(entries[17]["status"], "skipped");
}
