use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use csym::io;
use csym_cli::{run, Cli, EXIT_FAIL, EXIT_INPUT, EXIT_PASS, EXIT_THEOREM};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn csym(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_csym")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn in_process(args: &[&str]) -> (i32, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("csym").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&cli, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn check_field_passes() {
    let (code, out, _) = csym(&["check", &fixture("field.json")]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("PASS"), "{out}");
}

#[test]
fn check_counterexample_reports_witness() {
    let (code, out, _) = csym(&["check", &fixture("counterexample.json")]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("(1,1,2)"), "{out}");
}

#[test]
fn bad_index_is_input_error() {
    let (code, out, err) = csym(&["check", &fixture("bad-index.json")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn missing_file_and_bad_flags() {
    assert_eq!(csym(&["check", "/nonexistent/x.json"]).0, EXIT_INPUT);
    assert_eq!(csym(&["check"]).0, EXIT_INPUT);
    assert_eq!(csym(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(csym(&["--help"]).0, 0);
}

#[test]
fn properties_select_the_identity() {
    let f = fixture("cs-nonassociative.json");
    assert_eq!(in_process(&["check", &f]).0, EXIT_PASS);
    assert_eq!(in_process(&["check", &f, "--property", "associative"]).0, EXIT_FAIL);
    assert_eq!(in_process(&["check", &f, "--property", "lie-admissible"]).0, EXIT_PASS);
}

#[test]
fn check_json_is_parseable() {
    let (code, out, _) = in_process(&["check", &fixture("counterexample.json"), "--json"]);
    assert_eq!(code, EXIT_FAIL);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.is_object());
}

#[test]
fn lie_writes_a_loadable_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let (code, _, _) = in_process(&["lie", &fixture("upper-triangular.json"), "--out", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    let g = io::parse_algebra(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g.dim(), 3);
    assert_eq!(in_process(&["lie", &fixture("counterexample.json")]).0, EXIT_FAIL);
}

#[test]
fn semidirect_exit_codes() {
    let a = fixture("cs-nonassociative.json");
    assert_eq!(in_process(&["semidirect", &a, &fixture("regular-cs-nonassociative.bimodule.json")]).0, EXIT_PASS);
    assert_eq!(in_process(&["semidirect", &a, &fixture("broken.bimodule.json")]).0, EXIT_FAIL);
}

#[test]
fn matched_pair_fixture() {
    let (code, out, _) = in_process(&["matched", &fixture("verified.pair.json")]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.matches("[PASS]").count(), 6);
}

#[test]
fn manin_and_bialgebra_codes() {
    assert_eq!(in_process(&["manin", &fixture("verified.bialgebra.json")]).0, EXIT_PASS);
    assert_eq!(in_process(&["manin", &fixture("mutated.bialgebra.json")]).0, EXIT_FAIL);
    assert_eq!(in_process(&["bialgebra", &fixture("verified.bialgebra.json")]).0, EXIT_PASS);
    assert_eq!(in_process(&["bialgebra", &fixture("trivial.bialgebra.json")]).0, EXIT_PASS);
    assert_eq!(in_process(&["bialgebra", &fixture("mutated.bialgebra.json")]).0, EXIT_FAIL);
}

#[test]
fn inconsistent_equivalence_exits_3() {
    let (code, out, _) = in_process(&["bialgebra", &fixture("field-pair.bialgebra.json")]);
    assert_eq!(code, EXIT_THEOREM);
    assert!(out.contains("THEOREM VIOLATION"), "{out}");
    let (code, out, _) = in_process(&["bialgebra", &fixture("field-pair.bialgebra.json"), "--json"]);
    assert_eq!(code, EXIT_THEOREM);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["consistent"], serde_json::Value::Bool(false));
}

#[test]
fn json_output_is_deterministic() {
    let f = fixture("verified.bialgebra.json");
    assert_eq!(csym(&["bialgebra", &f, "--json"]), csym(&["bialgebra", &f, "--json"]));
}

#[test]
fn search_counts_and_writes() {
    let (code, out, _) = in_process(&["search", "--dim", "2", "--center-symmetric"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "201 structures found\n");

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("found");
    let args = ["search", "--dim", "2", "--coeffs", "0,1", "--center-symmetric", "--non-associative", "--out"];
    let (code, _, _) = in_process(&[&args[..], &[d.to_str().unwrap()]].concat());
    assert_eq!(code, EXIT_PASS);
    assert_eq!(std::fs::read_dir(&d).unwrap().count(), 12);
    assert!(d.join("search-2-0001.json").exists());
}

#[test]
fn search_refusals() {
    assert_eq!(csym(&["search", "--dim", "3"]).0, EXIT_INPUT);
    assert_eq!(csym(&["search", "--dim", "2", "--coeffs", "1,x"]).0, EXIT_INPUT);
    let (code, out, _) = in_process(&["search", "--dim", "3", "--limit", "5", "--coeffs", "0,1"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "5 structures found\n");
}

#[test]
fn random_search_is_seeded() {
    let args = ["search", "--dim", "2", "--seed", "7", "--limit", "3", "--center-symmetric", "--json"];
    let a = in_process(&args);
    assert_eq!(a.0, EXIT_PASS);
    assert_eq!(a, in_process(&args));
}
