//! End-to-end tests of the `qf` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn qf() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qf"))
}

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_axioms_builtin_passes() {
    let out = qf()
        .args(["check-axioms", "--family", "dihedral-3", "--xset", "self"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("family axioms: PASS"));
    assert!(stdout(&out).contains("x-set (self) axioms: PASS"));
}

#[test]
fn check_axioms_mutated_family_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.gfam");
    // dihedral-3 as an explicit table with op(0, 1, 2) corrupted
    let mut text = String::from("family explicit\ngroup cyclic 2\nxsize 3\n");
    for x in 0..3u32 {
        for g in 0..2u32 {
            for y in 0..3u32 {
                let r = if g == 0 { x } else { (2 * y + 3 - x) % 3 };
                text.push_str(&format!("op {x} {g} {y} {r}\n"));
            }
        }
    }
    let text = text.replace("op 0 1 2 1", "op 0 1 2 0");
    std::fs::write(&path, text).unwrap();
    let out = qf()
        .args(["check-axioms", "--family", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
    assert!(stdout(&out).contains("witness"));
}

#[test]
fn verify_cocycle_zero_and_corrupted() {
    let out = qf()
        .args([
            "verify-cocycle",
            "--family",
            "dihedral-3",
            "--cocycle",
            "zero",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.coc2");
    std::fs::write(
        &path,
        "cocycle2\np 3\nysize 1\nqsize 6\n(0, 1, 2) -> 1\n",
    )
    .unwrap();
    let out = qf()
        .args([
            "verify-cocycle",
            "--family",
            "dihedral-3",
            "--cocycle",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn invariant_of_the_trivial_spine() {
    let diagram = corpus().join("0_1.hkd");
    let out = qf()
        .args(["invariant", "--diagram", diagram.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{{0_9}_76}");

    let out = qf()
        .args([
            "invariant",
            "--diagram",
            diagram.to_str().unwrap(),
            "--format",
            "structured",
        ])
        .output()
        .unwrap();
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["mode"], "conj");
    assert_eq!(json["outer"][0]["mult"], 76);
}

#[test]
fn plain_mode_on_a_circle() {
    let circle = corpus().join("moves/r1_a.hkd");
    let out = qf()
        .args([
            "invariant",
            "--diagram",
            circle.to_str().unwrap(),
            "--mode",
            "plain",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{0_216}");
}

#[test]
fn table_runs_and_is_deterministic_across_threads() {
    let mut outputs = Vec::new();
    for threads in ["1", "4"] {
        let out = qf()
            .env("QF_THREADS", threads)
            .args(["table", "--corpus", corpus().to_str().unwrap()])
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", stdout(&out));
        outputs.push(out.stdout);
    }
    assert_eq!(outputs[0], outputs[1], "output differs across thread counts");
    let text = String::from_utf8_lossy(&outputs[0]);
    assert!(text.contains("0_1\t{{0_9}_76}\tok"));
}

#[test]
fn table_rejects_empty_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let out = qf()
        .args(["table", "--corpus", dir.path().to_str().unwrap()])
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn table_flags_expect_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wrong.hkd");
    std::fs::write(&path, "name wrong\nexpect {{0_9}_1}\nedge c\n").unwrap();
    let out = qf()
        .args(["table", "--corpus", dir.path().to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("MISMATCH"));
}

#[test]
fn mirror_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let once = dir.path().join("once.hkd");
    let twice = dir.path().join("twice.hkd");
    let kink = corpus().join("moves/r1_b.hkd");
    let out = qf()
        .args([
            "mirror",
            "--diagram",
            kink.to_str().unwrap(),
            "--output",
            once.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = qf()
        .args([
            "mirror",
            "--diagram",
            once.to_str().unwrap(),
            "--output",
            twice.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    // the double mirror reproduces the original combinatorics
    let original = qfamily::parse_diagram(&std::fs::read_to_string(&kink).unwrap()).unwrap();
    let back = qfamily::parse_diagram(&std::fs::read_to_string(&twice).unwrap()).unwrap();
    assert_eq!(original.to_text(), back.to_text());
    // and the single mirror flips the crossing sign
    let mirrored = qfamily::parse_diagram(&std::fs::read_to_string(&once).unwrap()).unwrap();
    assert_eq!(mirrored.crossing_sign(0), -original.crossing_sign(0));
}
