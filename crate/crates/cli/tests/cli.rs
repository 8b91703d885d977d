use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathramsey"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compute_reports_value_and_writes_a_checkable_witness() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.txt");
    let o = run(&["compute", "P3", "P6", "P6", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("predicted: 8"), "{text}");
    assert!(text.contains("value: 8"), "{text}");

    let witness = fs::read_to_string(&out).unwrap();
    assert!(witness.starts_with("7 3\n*\n"));
    assert!(witness.ends_with('\n'));

    let o = run(&["check", path_str(&out), "P3", "P6", "P6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("GOOD"));

    let o = run(&["check", path_str(&out), "P3", "P5", "P6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NOT-GOOD"));
    assert!(stdout(&o).contains("contains P5: path "));
}

#[test]
fn compute_stats_are_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let stats = dir.path().join("s.jsonl");
    let o = run(&["compute", "P4", "P5", "--stats", path_str(&stats)]);
    assert_eq!(o.status.code(), Some(0));
    let body = fs::read_to_string(&stats).unwrap();
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        for key in [
            "spec",
            "n",
            "verdict",
            "nodes",
            "oracle_prunes",
            "symmetry_prunes",
            "seconds",
        ] {
            assert!(v.get(key).is_some(), "missing {key} in {line}");
        }
    }
}

#[test]
fn witness_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.txt");
    let o = run(&["construct", "schelp", "2", "--out", path_str(&first)]);
    assert_eq!(o.status.code(), Some(0));
    let a = fs::read(&first).unwrap();

    let o = run(&["construct", "schelp", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let printed = stdout(&o);
    assert!(printed.ends_with(std::str::from_utf8(&a).unwrap()));

    // A partial host survives check unchanged.
    let o = run(&["check", path_str(&first), "P5", "P5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn constructions_pass_check() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], &[&str]); 4] = [
        (&["two-color", "6", "7"], &["P6", "P7"]),
        (&["three-color", "5", "7"], &["P3", "P5", "P7"]),
        (&["matching", "3", "4"], &["P3", "3K2", "4K2"]),
        (&["extremal", "--t", "2", "--n", "4", "--r", "1"], &["P5"]),
    ];
    for (i, (args, targets)) in cases.iter().enumerate() {
        let out = dir.path().join(format!("c{i}.txt"));
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--out", path_str(&out)]);
        let o = run(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let mut check = vec!["check", path_str(&out)];
        check.extend_from_slice(targets);
        let o = run(&check);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn four_block_properties() {
    let o = run(&["construct", "schelp", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("min degree: 8"), "{text}");
    assert!(text.contains("longest monochromatic path: 6"), "{text}");
}

#[test]
fn malformed_witness_exits_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "4 3\n*\n00x112\n").unwrap();
    let o = run(&["check", path_str(&bad), "P3", "P3", "P3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3, column 3"), "{err}");

    let o = run(&[
        "check",
        path_str(&dir.path().join("missing.txt")),
        "P3",
        "P3",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invalid_targets_exit_two() {
    for targets in [["P0", "P4"], ["Q3", "P4"], ["3K3", "P4"]] {
        let mut args = vec!["compute"];
        args.extend_from_slice(&targets);
        assert_eq!(run(&args).status.code(), Some(2), "{targets:?}");
    }
    assert_eq!(run(&["compute", "P3"]).status.code(), Some(2));
    assert_eq!(
        run(&["construct", "two-color", "5", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["construct", "schelp", "0"]).status.code(), Some(2));
}

#[test]
fn timeout_exits_three() {
    let o = run(&[
        "compute",
        "P3",
        "P7",
        "P7",
        "--budget",
        "0.000001",
        "--symmetry",
        "none",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("TIMEOUT"));
}

#[test]
fn lemmas() {
    let o = run(&["lemma", "k34"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("colorings checked: 2048"), "{text}");
    assert!(text.contains("pass"));

    assert_eq!(run(&["lemma", "nosuch"]).status.code(), Some(2));
}

#[test]
fn table_json_rows_match() {
    let o = run(&["table", "--max", "6", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.is_empty());
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "MATCH", "{line}");
        assert_eq!(v["predicted"], v["computed"]);
    }
}

#[test]
fn symmetry_levels_agree() {
    for level in ["none", "first-edge", "vertex-orbits"] {
        let o = run(&["compute", "P3", "P5", "P5", "--symmetry", level]);
        assert_eq!(o.status.code(), Some(0), "{level}");
        assert!(stdout(&o).contains("value: 6"));
    }
    assert_eq!(
        run(&["compute", "P3", "P4", "--symmetry", "bogus"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn compute_examples() {
    for (targets, value) in [(&["P6", "P6"][..], 8), (&["P3", "3K2", "3K2"][..], 8)] {
        let mut args = vec!["compute"];
        args.extend_from_slice(targets);
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{targets:?}");
        assert!(
            stdout(&o).contains(&format!("value: {value}")),
            "{}",
            stdout(&o)
        );
    }
}

#[test]
fn check_examples() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.txt");
    let o = run(&[
        "construct",
        "three-color",
        "6",
        "6",
        "--out",
        path_str(&file),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", path_str(&file), "P3", "P6", "P6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("brute-force path check agrees"));

    let red = dir.path().join("red.txt");
    fs::write(&red, "5 3\n*\n1111111111\n").unwrap();
    let o = run(&["check", path_str(&red), "P3", "P4", "P4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("color 1: 10 edges, contains P4: path "),
        "{}",
        stdout(&o)
    );

    let truncated = dir.path().join("cut.txt");
    fs::write(&truncated, "5 3\n*\n11111").unwrap();
    assert_eq!(
        run(&["check", path_str(&truncated), "P3", "P4", "P4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn construct_examples() {
    let o = run(&["construct", "matching", "3", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("on K9"), "{text}");
    assert!(
        text.contains("color 1: 15 edges, longest path 5, matching number 2"),
        "{text}"
    );
    assert!(text.contains("matching number 3"), "{text}");

    let o = run(&["construct", "extremal", "--t", "2", "--n", "4", "--r", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("graph on 8 vertices, 12 edges (bound 12)"),
        "{text}"
    );
    assert!(text.contains("longest path: 4"), "{text}");
}

#[test]
fn table_nine_adds_the_nine_vertex_rows() {
    let o = run(&["table", "--max", "9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    for spec in ["(P3,P6,P7)", "(P3,P7,P7)", "(P3,P5,P7)", "(P6,P7)"] {
        let line = text
            .lines()
            .find(|l| l.starts_with(spec))
            .unwrap_or_else(|| panic!("{spec} missing"));
        assert!(line.ends_with("MATCH"), "{line}");
    }
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn ex_corollary_lemma_passes() {
    let o = run(&["lemma", "ex-corollary"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches(" ok").count(), 18, "{text}");
    assert!(text.contains("graphs enumerated: "));
}
