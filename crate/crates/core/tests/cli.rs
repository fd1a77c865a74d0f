//! End-to-end runs of the `psik` binary.

use std::fs;
use std::process::{Command, Output};

fn psik(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psik"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn criteria_on_case_study_groups() {
    let o = psik(&["criteria", "--group", "H1", "--group", "H2", "--k", "4..16"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with(
        "group\torder\tcriterion\tk_used\tlhs\trhs\trelation\tverdict\toracle\tconsistency\n"
    ));
    for g in ["H1", "H2"] {
        let row = out
            .lines()
            .find(|l| l.starts_with(&format!("{g}\t156\tMainPsiK\t")))
            .unwrap();
        assert!(
            row.contains("\t4\t") && row.contains("SolvableCertified\ttrue\ttrue"),
            "{row}"
        );
    }
}

#[test]
fn report_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2)
        .map(|i| dir.path().join(format!("r{i}.tsv")))
        .collect();
    let mut outs = Vec::new();
    for p in &paths {
        let o = psik(&["criteria", "--corpus", "--report", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        outs.push(o.stdout);
    }
    assert_eq!(fs::read(&paths[0]).unwrap(), fs::read(&paths[1]).unwrap());
    assert_eq!(outs[0], outs[1]);
}

#[test]
fn defs_files_are_loaded_and_bad_ones_named() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.defs");
    let bad = dir.path().join("bad.defs");
    fs::write(&good, "group C7\nkind cyclic\nn 7\nend\n").unwrap();
    fs::write(&bad, "group X\nkind nonsense\nend\n").unwrap();

    let o = psik(&["compute", "--defs", good.to_str().unwrap(), "--k", "1..2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("psi_1\t43\n"));

    let o = psik(&[
        "spectrum",
        "--defs",
        good.to_str().unwrap(),
        "--defs",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("C7\t7\t7\t6\n"));
    assert!(stderr(&o).contains("bad.defs"), "{}", stderr(&o));
}

#[test]
fn verify_paper_exit_codes() {
    let o = psik(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL\t"));

    let o = psik(&["verify-paper", "--corrupt-catalog"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL\t"));

    let o = psik(&["verify-paper", "--k", "5..20"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("LIMITED\tH1.MainPsiK"));
    assert!(out.contains("LIMITED\tH2.MainPsiK"));
}

#[test]
fn claim_check_default_grid_passes() {
    let o = psik(&["claim-check"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("7\t4\tfails\t-\n"));
    assert!(out.contains("199\t25\tholds\tholds\n"));
    assert!(out.ends_with("mismatches\n"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["criteria", "--group", "nosuch"][..],
        &["criteria", "--k", "9..3", "--group", "A5"],
        &["compute", "--group", "A5", "--k", "0..3"],
        &["compute", "--defs", "/nonexistent/file"],
        &["spectrum"],
        &["bogus"],
    ] {
        let o = psik(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    assert_eq!(psik(&["--help"]).status.code(), Some(0));
}

#[test]
fn cap_skips_are_reported() {
    let o = psik(&["criteria", "--group", "S5", "--group", "A5", "--cap", "100"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("skipped S5"));
    assert!(stdout(&o).contains("A5\t60\t"));
}
