use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lebdecomp::io;
use lebdecomp::{make_psd, Tolerance};
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lebdecomp"));
    cmd.env_remove("LEBDECOMP_TOL_RANK");
    cmd
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

const I2: &str = r#"{"n": 2, "entries": [[1, 0], [0, 1]]}"#;
const E11: &str = r#"{"n": 2, "entries": [[1, 0], [0, 0]]}"#;
const E22: &str = r#"{"n": 2, "entries": [[0, 0], [0, 1]]}"#;

#[test]
fn decompose_of_dominated_pair() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", I2);
    let b = write(dir.path(), "b.json", I2);
    let out = run(&["decompose", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = io::parse_value(&stdout(&out)).unwrap();
    let b_abs = io::matrix_from_value(&doc["result"]["b_abs"]["matrix"]).unwrap();
    let b_sing = io::matrix_from_value(&doc["result"]["b_sing"]["matrix"]).unwrap();
    assert!(lebdecomp::linalg::frobenius(&(b_abs - io::parse_matrix(I2).unwrap())) < 1e-12);
    assert!(lebdecomp::linalg::frobenius(&b_sing) < 1e-12);
    assert_eq!(doc["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(doc["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(doc["tolerance"]["rel_rank"].as_f64(), Some(1e-10));
}

#[test]
fn check_singular_report() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", E11);
    let b = write(dir.path(), "b.json", E22);
    let out = run(&["check-singular", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = io::parse_value(&stdout(&out)).unwrap();
    let report = &doc["result"]["report"];
    for key in ["verdict", "parallel_sum_vanishes", "multivalued_part_full", "ranges_disjoint", "closure_reaches_range"] {
        assert_eq!(report[key], true, "{key}");
    }
}

#[test]
fn douglas_without_range_inclusion() {
    let dir = TempDir::new().unwrap();
    let t1 = write(dir.path(), "t1.json", r#"{"n": 2, "entries": [[0], [1]]}"#);
    let t2 = write(dir.path(), "t2.json", r#"{"n": 2, "entries": [[1], [0]]}"#);
    let out = run(&["douglas", t1.to_str().unwrap(), t2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("RangeInclusionViolated"));
    let out = run(&["douglas", t2.to_str().unwrap(), t2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = io::parse_value(&stdout(&out)).unwrap();
    assert_eq!(doc["result"]["conditions_hold"], true);
}

#[test]
fn output_is_byte_identical_and_reparses() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", r#"{"n": 3, "entries": [[2, [0, 1], 0], [[0, -1], 1, 0], [0, 0, 0]]}"#);
    let b = write(dir.path(), "b.json", r#"{"n": 3, "entries": [[1, 0, 1], [0, 1, 0], [1, 0, 1]]}"#);
    let args = ["decompose", a.to_str().unwrap(), b.to_str().unwrap()];
    let first = stdout(&run(&args));
    let second = stdout(&run(&args));
    assert_eq!(first, second);

    let doc = io::parse_value(&first).unwrap();
    let tol = Tolerance::default();
    for key in ["b_abs", "b_sing"] {
        let m = io::matrix_from_value(&doc["result"][key]["matrix"]).unwrap();
        make_psd(&m, &tol).unwrap();
    }
    let p = io::matrix_from_value(&doc["result"]["projection_p"]).unwrap();
    assert_eq!(p.shape(), (3, 3));
}

#[test]
fn every_command_runs() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", E11);
    let b = write(dir.path(), "b.json", I2);
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    for cmd in ["decompose", "parallel-sum", "limit", "check-ac", "check-singular", "check-mutual", "alpha"] {
        let out = run(&[cmd, a, b]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", stderr(&out));
        io::parse_value(&stdout(&out)).unwrap();
    }
    let out = run(&["rn-witness", a, b, "--y", "[0, 1]"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = io::parse_value(&stdout(&out)).unwrap();
    assert!(doc["result"]["residual"].as_f64().unwrap() > 0.5);

    let out = run(&["induces-measure", a]);
    assert_eq!(io::parse_value(&stdout(&out)).unwrap()["result"]["induces_measure"], true);

    let t = write(dir.path(), "t.json", &format!(r#"{{"gram": {I2}}}"#));
    let w = write(dir.path(), "w.json", &format!(r#"{{"gram": {E11}}}"#));
    let out = run(&["form", t.to_str().unwrap(), w.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let alpha = write(dir.path(), "alpha.json", r#"{"atoms": ["x", "y"], "values": [1, 0]}"#);
    let beta = write(dir.path(), "beta.json", r#"{"atoms": ["x", "y"], "values": [2, 3]}"#);
    let out = run(&["measure", alpha.to_str().unwrap(), beta.to_str().unwrap()]);
    let doc = io::parse_value(&stdout(&out)).unwrap();
    assert!((doc["result"]["beta_sing"]["values"][1].as_f64().unwrap() - 3.0).abs() <= 1e-9);

    let f = write(dir.path(), "f.json", &format!(r#"{{"algebra": {{"kind": "full_matrix", "k": 2}}, "density": {E11}}}"#));
    let g = write(dir.path(), "g.json", &format!(r#"{{"algebra": {{"kind": "full_matrix", "k": 2}}, "density": {I2}}}"#));
    let out = run(&["functional", f.to_str().unwrap(), g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = TempDir::new().unwrap();
    let good = write(dir.path(), "good.json", I2);
    let garbage = write(dir.path(), "bad.json", "{not json");
    let indefinite = write(dir.path(), "neg.json", r#"{"n": 2, "entries": [[1, 0], [0, -1]]}"#);
    let small = write(dir.path(), "small.json", r#"{"n": 1, "entries": [[1]]}"#);
    let (g, x, n, s) = (good.to_str().unwrap(), garbage.to_str().unwrap(), indefinite.to_str().unwrap(), small.to_str().unwrap());

    let out = run(&["decompose", g, x]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("ParseError"));
    assert_eq!(run(&["decompose", g, "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", g]).status.code(), Some(2));
    assert_eq!(run(&["rn-witness", g, g]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate", g, g]).status.code(), Some(2));

    let out = run(&["decompose", g, n]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("NotPsd"));
    let out = run(&["decompose", g, s]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("DimensionMismatch"));
}

#[test]
fn tolerance_flag_beats_environment() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", I2);
    let (a, b) = (a.to_str().unwrap(), a.to_str().unwrap());
    let doc = |out: Output| io::parse_value(&stdout(&out)).unwrap()["tolerance"]["rel_rank"].as_f64();

    let env_only = bin().env("LEBDECOMP_TOL_RANK", "1e-8").args(["decompose", a, b]).output().unwrap();
    assert_eq!(doc(env_only), Some(1e-8));
    let both = bin()
        .env("LEBDECOMP_TOL_RANK", "1e-8")
        .args(["decompose", a, b, "--tol-rank", "1e-6"])
        .output()
        .unwrap();
    assert_eq!(doc(both), Some(1e-6));
}

#[test]
fn text_format_and_output_file() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", E11);
    let b = write(dir.path(), "b.json", I2);
    let out = run(&["decompose", a.to_str().unwrap(), b.to_str().unwrap(), "--format", "text"]);
    let text = stdout(&out);
    assert!(text.contains("eigenvalues(B_a)"));
    assert!(text.contains("eigenvalues(B_s)"));
    assert!(text.contains("dim M: 1"));

    let target = dir.path().join("out.json");
    let out = run(&["parallel-sum", a.to_str().unwrap(), b.to_str().unwrap(), "-o", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc = io::parse_value(&fs::read_to_string(&target).unwrap()).unwrap();
    let ps = io::matrix_from_value(&doc["result"]["parallel_sum"]["matrix"]).unwrap();
    assert!((ps[(0, 0)].re - 0.5).abs() < 1e-12);
}
