use std::fs;
use std::process::{Command, Output};

use borel::suites::BFILE_DIR_VAR;
use tempfile::tempdir;

fn borel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_borel"))
        .args(args)
        .env_remove("BOREL_FORMAT")
        .env_remove(BFILE_DIR_VAR)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn borel_rows() {
    let o = borel(&["triangle", "borel", "--rows", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("42,120,135,70,14"));
    let json = borel(&["triangle", "p", "--rows", "3", "--format", "json"]);
    assert_eq!(stdout(&json), "[[\"1\"],[\"2\"],[\"5\",\"1\"]]\n");
}

#[test]
fn format_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_borel"))
        .args(["seq", "gencat", "--count", "4"])
        .env("BOREL_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "[[\"1\",\"1\",\"3\",\"13\"]]\n");
}

#[test]
fn rho_and_inverse() {
    assert_eq!(
        stdout(&borel(&["bij", "rho", "--input", "2143"])),
        "UUDD [2]\n"
    );
    assert_eq!(
        stdout(&borel(&["bij", "rho-inv", "--input", "UDUD []"])),
        "3421\n"
    );
    assert_eq!(
        stdout(&borel(&["bij", "rho", "--inverse", "--input", "UUDD"])),
        "4213\n"
    );
}

#[test]
fn worked_bijections() {
    let o = borel(&[
        "bij",
        "tree-path",
        "--input",
        "(((..)*((..)(..)*))(.((..).)))",
    ]);
    assert_eq!(stdout(&o), "UUUDDUUDDUDDUDUUDD [2,9]\n");
    let o = borel(&["bij", "match-rook", "--input", "1-5,2-3,4-10,6-8,7-9"]);
    assert_eq!(
        stdout(&o),
        "heights=5,5,4,3,3; rooks=(1,4),(2,5),(3,1),(4,3),(5,2)\n"
    );
    let o = borel(&[
        "bij",
        "match-rook",
        "--inverse",
        "--input",
        stdout(&o).trim(),
    ]);
    assert_eq!(stdout(&o), "1-5,2-3,4-10,6-8,7-9\n");
}

#[test]
fn enumeration_summaries() {
    let o = borel(&["enum", "marked-dyck", "--size", "3", "--histogram"]);
    assert_eq!(stdout(&o), "0,5\n1,6\n2,2\n");
    let o = borel(&["enum", "dumont", "--size", "6", "--class", "--count"]);
    assert_eq!(stdout(&o), "13\n");
    let o = borel(&["enum", "dumont", "--size", "4"]);
    assert_eq!(stdout(&o), "2143\n3421\n4213\n");
    let o = borel(&[
        "enum",
        "matchings",
        "--size",
        "4",
        "--avoiding",
        "123,213",
        "--stat",
        "nestings",
        "--histogram",
    ]);
    assert_eq!(stdout(&o), "0,14\n1,28\n2,20\n3,5\n");
}

#[test]
fn verify_dumont_suite() {
    let o = borel(&["verify", "--suite", "dumont", "--max-n", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("1,3,13,67,381"), "{text}");
    assert!(text.ends_with("7 checks, 0 failed\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(borel(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        borel(&["triangle", "borel", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(borel(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let o = borel(&["bij", "rho", "--input", "2134"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain error"));
}

#[test]
fn oeis_check_files() {
    let dir = tempdir().unwrap();
    let good = dir.path().join("b064062.txt");
    fs::write(
        &good,
        "# generalized Catalan\n0 1\n1 1\n2 3\n3 13\n\n4 67\n",
    )
    .unwrap();
    let o = borel(&[
        "oeis-check",
        "--bfile",
        good.to_str().unwrap(),
        "--seq",
        "A064062",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS"));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0 1\n1 1\n2 4\n").unwrap();
    let o = borel(&[
        "oeis-check",
        "--bfile",
        bad.to_str().unwrap(),
        "--seq",
        "A064062",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(
        text.contains("a(2)") && text.contains('4') && text.contains('3'),
        "{text}"
    );

    let none = dir.path().join("far.txt");
    fs::write(&none, "-5 1\n").unwrap();
    let o = borel(&[
        "oeis-check",
        "--bfile",
        none.to_str().unwrap(),
        "--seq",
        "A064062",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("no overlap"));

    let broken = dir.path().join("broken.txt");
    fs::write(&broken, "0 1\n1 x\n").unwrap();
    let o = borel(&[
        "oeis-check",
        "--bfile",
        broken.to_str().unwrap(),
        "--seq",
        "A064062",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn verify_picks_up_bfile_directory() {
    let dir = tempdir().unwrap();
    fs::write(
        dir.path().join("b234950.txt"),
        "0 1\n1 2\n2 1\n3 5\n4 6\n5 2\n",
    )
    .unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_borel"))
        .args(["verify", "--suite", "oeis"])
        .env(BFILE_DIR_VAR, dir.path())
        .output()
        .unwrap();
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    let line = |seq: &str| text.lines().find(|l| l.contains(seq)).unwrap().to_string();
    assert!(line("A234950").starts_with("PASS "), "{text}");
    assert!(line("A009766").starts_with("SKIP "), "{text}");
}

#[test]
fn output_is_stable() {
    let args = ["enum", "trees", "--size", "3", "--flavor", "branch"];
    assert_eq!(stdout(&borel(&args)), stdout(&borel(&args)));
    let json = stdout(&borel(&["verify", "--suite", "golden", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["exit_status"], 0);
}
