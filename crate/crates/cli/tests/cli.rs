//! End-to-end checks of the binary: exit codes, file round trips, and
//! byte-identical verification reports.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn orbifix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbifix"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("orbifix-test-{}-{name}", std::process::id()));
    fs::write(&path, content).unwrap();
    path
}

#[test]
fn order_of_sym5() {
    let group = write_temp("s5.grp", "degree 5\n(0 1)\n(0 1 2 3 4)\n");
    let out = orbifix(&["order", "--group", group.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "120");
}

#[test]
fn orbits_of_intransitive_group() {
    let group = write_temp("c3x2.grp", "degree 5\n(0 1 2)(3 4)\n");
    let out = orbifix(&["orbits", "--group", group.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "0 1 2\n3 4\n");
}

#[test]
fn fixity_of_dihedral() {
    let group = write_temp("d5.grp", "degree 5\n(0 1 2 3 4)\n(1 4)(2 3)\n");
    let out = orbifix(&["fixity", "--group", group.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("rfx 1/5"));
    assert!(text.contains("fixity 1"));
}

#[test]
fn orbital_export_of_cycle() {
    let group = write_temp("c5.grp", "degree 5\n(0 1 2 3 4)\n");
    let out = orbifix(&[
        "orbital",
        "--group",
        group.to_str().unwrap(),
        "--omega",
        "0",
        "--delta",
        "1",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.starts_with("omega 0\ndelta 1\nself_paired false\nvertices 5\narcs 5\n"));
}

#[test]
fn bad_usage_exits_2() {
    let out = orbifix(&["order"]); // missing --group
    assert_eq!(out.status.code(), Some(2));
    let out = orbifix(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let missing = orbifix(&["order", "--group", "/nonexistent/path.grp"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn malformed_group_file_exits_2() {
    let group = write_temp("bad.grp", "degree 3\n(0 7)\n");
    let out = orbifix(&["order", "--group", group.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_runs_are_byte_identical() {
    let args = ["verify", "--lemmas", "L1,COR1,L4,LCOVER,THM_MAIN"];
    let first = orbifix(&args);
    let second = orbifix(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn verify_empty_lemma_set_is_empty_and_passes() {
    let out = orbifix(&["verify", "--lemmas", "none"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "instance_id,lemma_id,lhs,rhs,holds,context"
    );
}

#[test]
fn verify_rejects_non_automorphism_instance() {
    let graph = write_temp("k4.graph", "vertices 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    // A degree-5 group cannot act on a 4-vertex graph.
    let group = write_temp("wrong.grp", "degree 5\n(0 1)\n");
    let out = orbifix(&[
        "verify",
        "--graph",
        graph.to_str().unwrap(),
        "--group",
        group.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    // Right degree but not an automorphism: a path is not preserved.
    let path_graph = write_temp("path.graph", "vertices 4\n0 1\n1 2\n2 3\n");
    let rot = write_temp("rot.grp", "degree 4\n(0 1 2 3)\n");
    let out = orbifix(&[
        "verify",
        "--graph",
        path_graph.to_str().unwrap(),
        "--group",
        rot.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_accepts_valid_file_instance() {
    let graph = write_temp("c6.graph", "vertices 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    let group = write_temp("c6rot.grp", "degree 6\n(0 1 2 3 4 5)\n");
    let out = orbifix(&[
        "verify",
        "--lemmas",
        "LCOVER",
        "--graph",
        graph.to_str().unwrap(),
        "--group",
        group.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    let file_row = text
        .lines()
        .find(|l| l.starts_with("file:"))
        .expect("file instance row present");
    assert!(file_row.contains(",LCOVER,1,1,true"), "{file_row}");
}

#[test]
fn verify_with_random_sweep_is_seeded() {
    let args = ["verify", "--lemmas", "none", "--random", "5", "--seed", "9"];
    let first = orbifix(&args);
    let second = orbifix(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8_lossy(&first.stdout).to_string();
    assert!(text.contains("random-000"));
}

#[test]
fn threshold_values() {
    let out = orbifix(&["threshold", "--c", "1", "--alpha", "1/2"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("log10_N 1.505150"), "{text}");

    let out = orbifix(&["threshold", "--local", "sym3", "--alpha", "1/2"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("c 48"));

    let constants = write_temp("consts.txt", "# custom\nmygroup 5 20 100\n");
    let out = orbifix(&[
        "threshold",
        "--local",
        "mygroup",
        "--constants",
        constants.to_str().unwrap(),
        "--alpha",
        "1/4",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("c 100"));

    let out = orbifix(&["threshold", "--local", "unknown", "--alpha", "1/4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn jsonl_format_and_scatter() {
    let scatter = std::env::temp_dir().join(format!("orbifix-scatter-{}", std::process::id()));
    let out = orbifix(&[
        "verify",
        "--lemmas",
        "L4",
        "--format",
        "jsonl",
        "--scatter",
        scatter.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    let first_line = text.lines().next().unwrap();
    let parsed: serde_json::Value = serde_json::from_str(first_line).unwrap();
    assert_eq!(parsed["lemma_id"], "L4");
    let scatter_text = fs::read_to_string(&scatter).unwrap();
    assert!(scatter_text.contains("petersen 10 2/5"));
}
