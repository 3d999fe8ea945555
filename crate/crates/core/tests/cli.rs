mod common;

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> (i32, String, String) {
    let Output { status, stdout, stderr } = Command::new(env!("CARGO_BIN_EXE_flechains")).args(args).output().unwrap();
    (status.code().unwrap(), String::from_utf8(stdout).unwrap(), String::from_utf8(stderr).unwrap())
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

const SUGIHARA: &str = "xi = O\nkappa = [t, u]\ngroup t = Z^0\nclass u = I\ngroup u = Z^0\nsubgroup u = trivial\nhom t->u = trivial\n";

#[test]
fn check_passes_on_a_valid_bunch() {
    let f = file(common::LAYERED);
    let (code, out, _) = run(&["check", path(&f), "--samples", "100"]);
    assert_eq!(code, 0, "{out}");
    for suite in ["bunch-groups", "bunch-algebras", "laws"] {
        assert!(out.contains(&format!("PASS {suite} 0")), "{out}");
    }
}

#[test]
fn check_reports_violations_with_status_one() {
    let broken = "xi = O\nkappa = [t, u, v]\ngroup t = Z^1\nclass u = J\ngroup u = Z^2\nclass v = J\ngroup v = Z^1\n\
                  hom t->u = matrix [[1],[0]]\nhom u->v = truncate 1\nhom t->v = matrix [[3]]\n";
    let f = file(broken);
    let (code, out, _) = run(&["check", path(&f)]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL G1"), "{out}");
    assert!(out.contains("FAIL bunch-groups"), "{out}");
}

#[test]
fn parse_errors_exit_with_two_and_a_location() {
    let f = file("xi = O\nkappa = [t, u]\nhom u->t = trivial\n");
    let (code, _, err) = run(&["check", path(&f)]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3, column 5: hom over non-increasing pair u->t"), "{err}");
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("frobnicate"));
    let (code, _, _) = run(&["check", "/nonexistent/bunch"]);
    assert_eq!(code, 2);
}

#[test]
fn derive_emits_the_three_element_table() {
    let f = file(SUGIHARA);
    let (code, out, _) = run(&["derive", path(&f), "--emit-table"]);
    assert_eq!(code, 0);
    let table = out.lines().skip_while(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n");
    assert_eq!(flechains::FiniteChainTable::parse(&table).unwrap(), common::s3());
    assert!(out.contains("parity: odd"));
}

#[test]
fn derive_lists_a_window_of_an_infinite_chain() {
    let f = file("xi = O\nkappa = [t]\ngroup t = Z^1\n");
    let (code, out, _) = run(&["derive", path(&f), "--window", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("elements (window 2, 5): -2@0 < -1@0 < 0@0 < 1@0 < 2@0"), "{out}");
}

#[test]
fn decompose_recovers_the_bunch() {
    let f = file(&common::s3().to_text());
    let (code, out, _) = run(&["decompose", path(&f)]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("layer u1 (Theta): unit 2, falsum 0, elements [0, 2]"), "{out}");
    let doc: String = out.lines().skip_while(|l| !l.starts_with("xi =")).take_while(|l| !l.starts_with("suite")).collect::<Vec<_>>().join("\n");
    let g = flechains::dsl::parse_bunch_dsl(&doc).unwrap().to_bunch().unwrap();
    assert!(g.same_as(&common::sugihara(flechains::Parity::Odd, 2)));
    assert!(out.contains("PASS chain-algebras-chain 0"));
}

#[test]
fn decompose_rejects_broken_tables() {
    let f = file("3 1 1\n0 0 0\n0 1 2\n0 2 1\n");
    let (code, out, _) = run(&["decompose", path(&f)]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"), "{out}");
    let f = file("3 1 1\n0 0 0\n0 1 7\n0 2 1\n");
    let (code, _, err) = run(&["decompose", path(&f)]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3, column 5"), "{err}");
}

#[test]
fn enumerate_prints_counts() {
    let (code, out, _) = run(&["enumerate", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("4 even-idempotent-f 1"));
    assert!(out.contains("4 even-nonidempotent-f 0"));
    let (code, out, _) = run(&["enumerate", "--n", "5", "--parity", "odd"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "5 odd 1"), "{out}");
    let (code, _, _) = run(&["enumerate", "--n", "9"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["enumerate", "--n", "3", "--parity", "sideways"]);
    assert_eq!(code, 2);
}

#[test]
fn roundtrip_runs_the_whole_theorem() {
    let f = file(common::MIXED);
    let (code, out, _) = run(&["roundtrip", path(&f), "--samples", "80", "--seed", "9"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().any(|l| l == "PASS main-theorem 0"), "{out}");
}
