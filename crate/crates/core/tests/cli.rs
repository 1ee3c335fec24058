use std::process::{Command, Output};

fn tmlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tmlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn run_addition() {
    let o = tmlab(&["run", "addition", "--input", "*|||*||*"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("steps=106\n"));
    assert!(out.contains("halt=EXPLICIT\n"));
    assert!(out.contains("tape=*|||*||*|||||*\n"));
}

#[test]
fn run_reports_budget_exhaustion() {
    let o = tmlab(&[
        "run",
        "addition",
        "--input",
        "*|||*||*",
        "--max-steps",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("halt=BUDGET_EXCEEDED"));
}

#[test]
fn run_with_trace_to_stdout() {
    let o = tmlab(&[
        "run",
        "addition",
        "--input",
        "*|||*||*",
        "--trace",
        "-",
        "--trace-every",
        "50",
    ]);
    let out = stdout(&o);
    assert!(out.starts_with("step=0 state=1 head=0 win=0 tape=*|||*||*\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("step=")).count(), 4);
}

#[test]
fn encode_and_decode() {
    let o = tmlab(&["encode", "addition", "--input", "*|||*||*"]);
    let full = stdout(&o);
    assert!(full
        .trim_end()
        .ends_with("SW01hhU11hhU11hhU11hhU01hhU11hhU11hhU01hh_"));
    let o = tmlab(&["decode-config", full.trim(), "--machine", "addition"]);
    let out = stdout(&o);
    assert!(out.contains("state=1\n"));
    assert!(out.contains("clean=true\n"));
    assert!(out.contains("head=0\n"));
    assert!(out.contains("tape=*|||*||*\n"));
}

#[test]
fn rna_conversions() {
    assert_eq!(
        stdout(&tmlab(&["rna", "encode", "SW01hh"])),
        "UUUGCACUGAGA\n"
    );
    assert_eq!(stdout(&tmlab(&["rna", "decode", "UUUG"])), "SW\n");
    assert!(!tmlab(&["rna", "decode", "UUU"]).status.success());
}

#[test]
fn stats_records() {
    let out = stdout(&tmlab(&["stats", "addition", "--format", "records"]));
    assert!(out.contains("pure_glides=13\n"));
    assert!(out.contains("empty_entries=21\n"));
}

#[test]
fn experiment_e1_passes() {
    let o = tmlab(&["experiment", "E1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("steps   106 (expected 106, match)"));
}

#[test]
fn verify_single_criterion() {
    let o = tmlab(&["verify", "--only", "A1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
    assert!(stdout(&o).starts_with("A1  PASS"));
    assert!(!tmlab(&["verify", "--only", "A11"]).status.success());
}

#[test]
fn unknown_machine_is_an_error() {
    let o = tmlab(&["show", "no-such-machine"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no-such-machine"));
}

#[test]
fn machine_from_file() {
    let dir = std::env::temp_dir().join(format!("tmlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("flip.tm");
    std::fs::write(&path, "alphabet: _ a\nstate 1:\n  a -> _ R\n  _ -> !\n").unwrap();
    let o = tmlab(&["run", path.to_str().unwrap(), "--input", "aaa"]);
    assert!(stdout(&o).contains("steps=3\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}
