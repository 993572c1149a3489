use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn polycat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const FREE: &str = r#"{"field": "GF(32003)", "nvars": 2, "gens": [0]}"#;
const PSI_PHI: &str =
    r#"{"field": "GF(32003)", "nvars": 2, "gens": [0], "rels": [{"degree": 2, "entries": ["psi*phi"]}]}"#;
const PHI_SQUARED: &str =
    r#"{"field": "QQ", "nvars": 2, "gens": [0], "rels": [{"degree": 2, "entries": ["phi^2"]}]}"#;
const NIL: &str =
    r#"{"field": "GF(32003)", "nvars": 2, "gens": [0], "rels": [{"degree": 1, "entries": ["psi"]}]}"#;

#[test]
fn koszul_of_free_module_is_zero_in_degree_one() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "free.json", FREE);
    let o = polycat(&["koszul", s(&f), "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("zero: true"), "{out}");
    assert!(out.contains("torsion free: true"), "{out}");
}

#[test]
fn koszul_dims_of_psi_phi_quotient() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "x.json", PSI_PHI);
    let o = polycat(&["koszul", s(&f), "1", "--bound", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dims 0..=5: [0, 0, 1, 0, 0, 0]"), "{}", stdout(&o));
}

#[test]
fn koszul_index_out_of_range_is_usage_error() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "free.json", FREE);
    assert_eq!(polycat(&["koszul", s(&f), "3"]).status.code(), Some(4));
}

#[test]
fn parse_and_semantic_errors() {
    let dir = TempDir::new().unwrap();
    let bad_json = write(&dir, "bad.json", "{ not json");
    assert_eq!(polycat(&["koszul", s(&bad_json), "0"]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(polycat(&["theta", s(&missing)]).status.code(), Some(2));
    let inhomogeneous = write(
        &dir,
        "inhom.json",
        r#"{"field": "QQ", "nvars": 2, "gens": [0], "rels": [{"degree": 2, "entries": ["psi + phi^2"]}]}"#,
    );
    assert_eq!(polycat(&["koszul", s(&inhomogeneous), "0"]).status.code(), Some(3));
    let one_var = write(&dir, "one.json", r#"{"field": "QQ", "nvars": 1, "gens": [0]}"#);
    assert_eq!(polycat(&["theta", s(&one_var)]).status.code(), Some(3));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(polycat(&["frobnicate"]).status.code(), Some(4));
    assert_eq!(polycat(&["suite", "--count", "many"]).status.code(), Some(4));
    assert_eq!(polycat(&["--help"]).status.code(), Some(0));
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("r");
    assert_eq!(polycat(&["suite", "--bound", "0", "--out", s(&out)]).status.code(), Some(4));
}

#[test]
fn theta_reports() {
    let dir = TempDir::new().unwrap();
    let free = write(&dir, "free.json", FREE);
    let o = polycat(&["theta", s(&free)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("free rank: 1"));
    assert!(stdout(&o).contains("not psi-nilpotent"));

    let nil = write(&dir, "nil.json", NIL);
    let o = polycat(&["theta", s(&nil)]);
    assert!(stdout(&o).contains("zero module, nilpotent index 1"), "{}", stdout(&o));

    let phi2 = write(&dir, "phi2.json", PHI_SQUARED);
    let o = polycat(&["theta", s(&phi2)]);
    assert!(stdout(&o).contains("torsion: [(t^2)]"), "{}", stdout(&o));
    assert!(stdout(&o).contains("free rank: 0"));
}

#[test]
fn artin_rees_worked_example() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "ar.json",
        r#"{"module": {"field": "QQ", "gens": 1, "rels": []}, "submodule": [["t^2"]]}"#,
    );
    let o = polycat(&["artin-rees", s(&f), "--bound", "16"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n0: 2"));
    assert!(stdout(&o).contains("re-verified on [2, 16]: true"));
    let o = polycat(&["artin-rees", s(&f), "--bound", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn filtration_and_k0_reports() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "two.json",
        r#"{"field": "GF(32003)", "nvars": 2, "gens": [0, 2]}"#,
    );
    let o = polycat(&["filtration", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = polycat(&["k0-report", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("value at q = 1: 2"), "{}", stdout(&o));
    assert!(stdout(&o).contains("torsion-free decomposition: true"));
    let nil = write(&dir, "nil.json", NIL);
    let o = polycat(&["k0-report", s(&nil)]);
    assert!(stdout(&o).contains("devissage classes: true"), "{}", stdout(&o));
}

#[test]
fn empty_suite_writes_empty_report() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("report");
    let o = polycat(&["suite", "--count", "0", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(out.join("report.json")).unwrap(), "[]");
    assert_eq!(
        fs::read_to_string(out.join("summary.csv")).unwrap(),
        "check,instances,passed,failed\n"
    );
}

#[test]
fn suite_runs_are_identical() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for out in [&a, &b] {
        let o = polycat(&["suite", "--seed", "5", "--count", "4", "--field", "QQ", "--out", s(out)]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    let ra = fs::read(a.join("report.json")).unwrap();
    assert!(ra.len() > 2);
    assert_eq!(ra, fs::read(b.join("report.json")).unwrap());
    assert_eq!(
        fs::read(a.join("summary.csv")).unwrap(),
        fs::read(b.join("summary.csv")).unwrap()
    );
    let c = dir.path().join("c");
    polycat(&["suite", "--seed", "6", "--count", "4", "--field", "QQ", "--out", s(&c)]);
    assert_ne!(ra, fs::read(c.join("report.json")).unwrap());
}

#[test]
fn replay_files() {
    let dir = TempDir::new().unwrap();
    let corrupt = write(&dir, "corrupt.json", "{\"check\": 17");
    assert_eq!(polycat(&["replay", s(&corrupt)]).status.code(), Some(2));
    assert_eq!(
        polycat(&["replay", s(&dir.path().join("nowhere.json"))]).status.code(),
        Some(2)
    );

    let instance = |expected: usize| {
        format!(
            r#"{{"check": "artin_rees", "instance_id": "t", "limits": {{"piece_bound": 12, "artin_rees_bound": 16}},
                "instance": {{"kind": "endo_pair", "module": {{"field": "QQ", "gens": 1}},
                              "submodule": [["t^2"]], "expected_index": {expected}}}}}"#
        )
    };
    let good = write(&dir, "good.json", &instance(2));
    let o = polycat(&["replay", s(&good)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass artin_rees t"));
    let bad = write(&dir, "bad.json", &instance(3));
    assert_eq!(polycat(&["replay", s(&bad)]).status.code(), Some(1));
}
