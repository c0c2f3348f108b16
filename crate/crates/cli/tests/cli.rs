use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ritzsym::io::{build_case, write_matrix_market, CaseSpec};
use ritzsym::SymmetricOperator;
use ritzsym_cli::{run_from, EXIT_IO, EXIT_NUMERIC, EXIT_USAGE};
use serde_json::Value;

fn bin(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ritzsym"));
    cmd.args(args).env_remove("RITZSYM_DENSE_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&run_from(args).unwrap()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn rayleigh_quotient_of_case_one() {
    let v = json(&["estimate", "--matrix", "case:1", "--f", "poly:0,1", "--m", "1"]);
    assert!((v["estimate"].as_f64().unwrap() - 0.51).abs() < 1e-14);
}

#[test]
fn full_length_estimate_matches_oracle() {
    let v = json(&["estimate", "--matrix", "case:1", "--f", "exp", "--m", "50", "--oracle"]);
    assert!(v["relative_error"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn output_is_reproducible() {
    let args = [
        "estimate", "--matrix", "case:3", "--f", "sqrt", "--m", "7", "--format", "csv",
    ];
    let a = bin(&args, &[]);
    let b = bin(&args, &[]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("quantity,value\nestimate,"));
    assert_eq!(text.lines().filter(|l| l.starts_with("node_")).count(), 7);
}

#[test]
fn exit_codes() {
    let usage = bin(&["estimate", "--matrix", "case:1", "--m", "3"], &[]);
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
    let unknown = bin(&["estimate", "--matrix", "case:1", "--f", "tanh", "--m", "3"], &[]);
    assert_eq!(unknown.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("available"));
    let missing = bin(
        &["estimate", "--matrix", "/nonexistent.mtx", "--f", "exp", "--m", "3"],
        &[],
    );
    assert_eq!(missing.status.code(), Some(EXIT_IO));

    // a shifted case 1 matrix has nonpositive Ritz values, outside the domain of log
    let dir = tempfile::tempdir().unwrap();
    let mtx = dir.path().join("shifted.mtx");
    let case = build_case(&CaseSpec::Uniform).unwrap();
    let d = case.operator.to_dense();
    let shifted = SymmetricOperator::dense_from_upper(50, |i, j| d[(i, j)] - if i == j { 0.6 } else { 0.0 }).unwrap();
    write_matrix_market(&shifted, &mtx).unwrap();
    let domain = bin(&["estimate", "--matrix", path_str(&mtx), "--f", "log", "--m", "4"], &[]);
    assert_eq!(domain.status.code(), Some(EXIT_NUMERIC));
    let help = bin(&["--help"], &[]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn symmetry_reports_per_case() {
    let one = json(&["symmetry", "--case", "1"]);
    assert_eq!(one["verdict"]["ritz_symmetric"], true);
    assert!((one["report"]["ritz"]["center"].as_f64().unwrap() - 0.51).abs() < 1e-12);
    assert_eq!(one["table"]["sufficient_condition"], "Yes");
    assert_eq!(one["inputs"]["m"], 10);
    let three = json(&["symmetry", "--case", "3"]);
    assert_eq!(three["verdict"]["ritz_symmetric"], false);
    assert_eq!(three["table"]["sufficient_condition"], "?");
}

#[test]
fn measure_file_for_case_one() {
    let dir = tempfile::tempdir().unwrap();
    run_from(["symmetry", "--case", "1", "--out-dir", path_str(dir.path())]).unwrap();
    let text = fs::read_to_string(dir.path().join("measure.csv")).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(text.lines().next(), Some("t_start,t_end,value"));
    assert_eq!(rows.len(), 50);
    let mut prev = 0.0;
    for row in &rows {
        let value: f64 = row[2].parse().unwrap();
        assert!((value - prev - 0.02).abs() < 1e-13);
        prev = value;
    }
    assert_eq!(rows[49][1], "inf");
    let ritz = fs::read_to_string(dir.path().join("ritz.csv")).unwrap();
    assert_eq!(ritz.lines().count(), 11);
    let report: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(report["measure_emitted"], true);
}

#[test]
fn dense_cap_gates_the_measure() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("capped");
    let capped = bin(
        &["symmetry", "--case", "2", "--out-dir", path_str(&out)],
        &[("RITZSYM_DENSE_CAP", "20")],
    );
    assert!(capped.status.success());
    let v: Value = serde_json::from_slice(&capped.stdout).unwrap();
    assert_eq!(v["table"]["symmetric_eigenvalues"], "unknown");
    assert!(v["dense_skipped"]
        .as_str()
        .unwrap()
        .contains("--allow-dense-cap-override"));
    assert!(!out.join("measure.csv").exists());
    assert!(out.join("ritz.csv").exists());

    let out = dir.path().join("override");
    let lifted = bin(
        &[
            "symmetry",
            "--case",
            "2",
            "--allow-dense-cap-override",
            "--out-dir",
            path_str(&out),
        ],
        &[("RITZSYM_DENSE_CAP", "20")],
    );
    assert!(lifted.status.success());
    assert!(out.join("measure.csv").exists());
}

#[test]
fn case_four_pipeline_on_a_stand_in_matrix() {
    // any symmetric Matrix Market file exercises the case 4 path; a linear diagonal would
    // make the spectrum symmetric, so the shift is quadratic
    let dir = tempfile::tempdir().unwrap();
    let mtx = dir.path().join("stand_in.mtx");
    let n = 120;
    let entries = (0..n).flat_map(|i| {
        let diag = std::iter::once((i, i, 2.0 + (i as f64 / n as f64).powi(2)));
        let off = (i > 0).then(|| (i, i - 1, -1.0));
        diag.chain(off)
    });
    write_matrix_market(&SymmetricOperator::sparse(n, entries).unwrap(), &mtx).unwrap();
    let v = json(&[
        "symmetry",
        "--case",
        "4",
        "--nd3k",
        path_str(&mtx),
        "--dense-solver",
        "householder-ql",
    ]);
    assert_eq!(v["inputs"]["case"], 4);
    assert_eq!(
        v["inputs"]["vector_split"],
        "first 60 entries +1, remaining 60 entries -1"
    );
    assert_eq!(v["table"]["symmetric_eigenvalues"], "No");
    let missing = run_from(["symmetry", "--case", "4"]).unwrap_err();
    assert_eq!(missing.exit_code(), EXIT_USAGE);
}

#[test]
fn matrix_and_vector_files() {
    let dir = tempfile::tempdir().unwrap();
    let mtx = dir.path().join("a.mtx");
    fs::write(
        &mtx,
        "%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 2\n2 1 1\n",
    )
    .unwrap();
    let vec = dir.path().join("u.txt");
    fs::write(&vec, "1\n0\n").unwrap();
    let v = json(&[
        "estimate",
        "--matrix",
        path_str(&mtx),
        "--vector",
        path_str(&vec),
        "--f",
        "poly:0,0,1",
        "--m",
        "2",
    ]);
    // e1^T A^2 e1 = 2^2 + 1^2
    assert!((v["estimate"].as_f64().unwrap() - 5.0).abs() < 1e-13);
    let sym = json(&["symmetry", "--matrix", path_str(&mtx), "--vector", "ones", "--m", "2"]);
    assert_eq!(sym["table"]["symmetric_eigenvalues"], "Yes");
    fs::write(&vec, "1\n0\n3\n").unwrap();
    let err = run_from([
        "estimate",
        "--matrix",
        path_str(&mtx),
        "--vector",
        path_str(&vec),
        "--f",
        "exp",
        "--m",
        "1",
    ])
    .unwrap_err();
    assert_eq!(err.exit_code(), EXIT_USAGE);
}

#[test]
fn bounds_rows() {
    let csv = run_from(["bounds", "--kappa-grid", "9,1,0.5"]).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "kappa,rho,lower,upper,average,exact,status");
    let row: Vec<f64> = lines[1].split(',').take(6).map(|x| x.parse().unwrap()).collect();
    assert!((row[2] - 1.0 / 6.0).abs() < 1e-4);
    assert!((row[5] - 0.29248).abs() < 1e-4);
    assert!((row[3] - 0.5).abs() < 1e-4);
    assert!(lines[2].ends_with(",,,,,,error: invalid input: condition number must be finite and greater than 1; got 1"));
    assert!(lines[3].contains("error:"));
    assert_eq!(lines[3].split(',').count(), 7);

    let reference = run_from(["bounds", "--kappa-grid", "paper"]).unwrap();
    assert_eq!(reference.lines().count(), 10);
    assert_eq!(run_from(["bounds"]).unwrap(), reference);

    let v = json(&[
        "bounds",
        "--kappa-grid",
        "100",
        "--f",
        "exp",
        "--lambda-min",
        "0.01",
        "--format",
        "json",
    ]);
    let f = &v["rows"][0]["function"];
    assert!(f["m_sym"]["floor"].as_u64().unwrap() <= f["m_asym"]["floor"].as_u64().unwrap());

    let single = run_from(["bounds", "--lambda-min", "1", "--lambda-max", "9"]).unwrap();
    assert!(single
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("9.0000000000000000e0,2.0000000000000000e0,"));
    for bad in [
        vec!["bounds", "--kappa-grid", "10", "--lambda-min", "1", "--lambda-max", "5"],
        vec!["bounds", "--f", "exp"],
        vec!["bounds", "--kappa-grid", "ten"],
        vec!["bounds", "--epsilon", "0"],
    ] {
        assert_eq!(run_from(&bad).unwrap_err().exit_code(), EXIT_USAGE, "{bad:?}");
    }
}

#[test]
fn output_files_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bounds.json");
    let printed = run_from(["bounds", "--format", "json", "--out", path_str(&out)]).unwrap();
    assert!(printed.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
}
