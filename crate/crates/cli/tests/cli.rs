use std::io::Write;
use std::process::{Command, Output};

use matprod_regseq::regseq::{RegularityCertificate, Verdict};
use serde_json::Value;
use tempfile::NamedTempFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matprod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn input_file(lines: &[&str]) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    for l in lines {
        writeln!(f, "{l}").unwrap();
    }
    f
}

#[test]
fn gen_lists_pattern() {
    let o = run(&["gen", "--n", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["f"].as_array().unwrap().len(), 8);
    assert_eq!(v["ftilde"].as_array().unwrap().len(), 15);

    let o = run(&["gen", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("f11 f12\nf21 ×\n"));

    assert_eq!(code(&run(&["gen", "--n", "1"])), 2);
}

#[test]
fn certify_exit_codes_and_json() {
    assert_eq!(code(&run(&["certify", "--n", "5"])), 0);
    let o = run(&["certify", "--n", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["steps"].as_array().unwrap().len(), 4);
    assert_eq!(v["verdict"], "certified");
    let cert = RegularityCertificate::from_json(&stdout(&o)).unwrap();
    assert_eq!(cert.recheck(), Verdict::Certified);

    assert_eq!(code(&run(&["certify", "--bogus"])), 2);
    // the augmented sequence does not certify under plain lex
    assert_eq!(code(&run(&["certify", "--n", "3", "--order", "lex"])), 1);
}

#[test]
fn certify_from_input() {
    let f = input_file(&[
        "# column one and a bare variable",
        "x[1,1]*y[1,1] + x[1,2]*y[2,1]",
        "x[2,1]*y[1,1] + x[2,2]*y[2,1]",
        "y[1,2]",
        "x[1,1]*y[1,2] + x[1,2]*y[2,2]",
    ]);
    let o = run(&["certify", "--input", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["steps"][3]["kind"], "TECHNICAL");
}

#[test]
fn oracle_verdicts() {
    for method in ["hilbert", "colon"] {
        let o = run(&["oracle", "--n", "2", "--method", method]);
        assert_eq!(code(&o), 0, "{method}");
        assert!(stdout(&o).contains("verdict: regular"));
    }
    let full = input_file(&[
        "# all four entries of XY, n = 2",
        "x[1,1]*y[1,1] + x[1,2]*y[2,1]",
        "x[1,1]*y[1,2] + x[1,2]*y[2,2]",
        "x[2,1]*y[1,1] + x[2,2]*y[2,1]",
        "x[2,1]*y[1,2] + x[2,2]*y[2,2]",
    ]);
    let path = full.path().to_str().unwrap();
    for method in ["hilbert", "colon"] {
        let o = run(&["oracle", "--n", "2", "--input", path, "--method", method, "--format", "json"]);
        assert_eq!(code(&o), 1);
        let v = json(&o);
        assert_eq!(v["report"]["verdict"], "not_regular");
        assert_eq!(v["report"]["first_failure"], 4);
        let t = run(&["oracle", "--n", "2", "--input", path, "--method", method]);
        assert_eq!(code(&t), 1);
        assert!(stdout(&t).contains("not regular (first failure at element 4"));
    }
    assert_eq!(code(&run(&["oracle", "--n", "2", "--input", path, "--budget-pairs", "1"])), 3);
}

#[test]
fn counterexample_report() {
    // The quoted relation does not vanish, so its witness check fails (exit
    // 1); the corrected relation holds.
    let o = run(&["counterexample", "--field", "rat", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["corrected"]["residue"], "0");
    assert_eq!(v["corrected"]["product_in_ideal"], true);
    assert_eq!(v["corrected"]["multiplier_outside_ideal"], true);
    assert_eq!(v["quoted"]["identity_holds"], false);
    for prime in ["3", "5", "32003"] {
        let p = run(&["counterexample", "--field", "gfp", "--prime", prime, "--format", "json"]);
        assert_eq!(code(&p), 1);
        assert_eq!(json(&p)["corrected"]["residue"], "0");
    }
    // p must exceed n, and n defaults to 2
    assert_eq!(code(&run(&["counterexample", "--field", "gfp", "--prime", "2"])), 2);
}

#[test]
fn search_extends_pattern() {
    let o = run(&["search", "--n", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["final_length"], 3);
    assert_eq!(v["log"][0]["candidate"], "f[2,2]");
    assert_eq!(v["log"][0]["outcome"], "rejected");
    let o = run(&["search", "--n", "3", "--budget-pairs", "100000"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("final length"));
}

#[test]
fn groebner_basis_command() {
    let f = input_file(&["x - y", "y^2"]);
    let o = run(&["gb", "--order", "lex", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "x - y\ny^2\n");

    let col = input_file(&[
        "2*x[1,1]*y[1,1] + 2*x[1,2]*y[2,1]",
        "x[2,1]*y[1,1] + x[2,2]*y[2,1]",
    ]);
    let o = run(&["gb", "--input", col.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["basis"][0], "x[1,1]*y[1,1] + x[1,2]*y[2,1]");
    assert_eq!(v["basis"][1], "x[2,2]*y[2,1] + x[2,1]*y[1,1]");

    let empty = input_file(&["# nothing here"]);
    assert_eq!(code(&run(&["gb", "--input", empty.path().to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["gb"])), 2);
    let bad = input_file(&["x +* y"]);
    assert_eq!(code(&run(&["gb", "--order", "lex", "--input", bad.path().to_str().unwrap()])), 2);
}

#[test]
fn startup_validation() {
    assert_eq!(code(&run(&["gen", "--prime", "32004"])), 2);
    assert_eq!(code(&run(&["gen", "--n", "5", "--prime", "5"])), 2);
    assert_eq!(code(&run(&["oracle", "--budget-pairs", "0"])), 2);
    assert_eq!(code(&run(&["oracle", "--method", "magic"])), 2);
    assert_eq!(code(&run(&["gen", "--n", "3", "--prime", "5"])), 0);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let o = run(&["certify", "--n", "3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.ends_with('\n'));
    let cert = RegularityCertificate::from_json(&text).unwrap();
    assert_eq!(cert.recheck(), Verdict::Certified);
}
