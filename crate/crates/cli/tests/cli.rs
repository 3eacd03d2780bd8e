use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_polykeller"));
    c.env_remove("POLYKELLER_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

/// Writes `text` to a per-test scratch file.
fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("polykeller-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    (serde_json::from_str(&stdout(&o)).expect("json report"), code(&o))
}

fn canonical(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("duration_ms");
    v
}

#[test]
fn check_keller_identity() {
    let id = scratch("id.pmap", "vars: x1 x2\nF1 = x1\nF2 = x2\n");
    let o = run(&["check", "keller", "-i", id.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("verdict: pass"));
}

#[test]
fn check_squarefree_reports_witness() {
    let (v, c) = json(&["check", "squarefree", "-e", "x1^2*x2"]);
    assert_eq!(c, 1);
    assert_eq!(v["verdict"], "fail");
    let w = &v["reports"][0]["witnesses"][0];
    assert_eq!(w["role"], "repeated factor");
    assert_eq!(w["value"], "x1");
}

#[test]
fn check_keller_arity_mismatch_is_an_error() {
    let o = run(&["check", "keller", "-e", "x1^2"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not square"));
}

#[test]
fn check_other_kinds() {
    assert_eq!(code(&run(&["check", "irreducible", "-e", "x1^2 + x2^2"])), 0);
    assert_eq!(code(&run(&["check", "irreducible", "-e", "x1^2 - x2^2"])), 1);
    assert_eq!(code(&run(&["check", "nilpotent", "-e", "x2^3", "-e", "0"])), 0);
    assert_eq!(code(&run(&["check", "nilpotent", "-e", "x2^3", "-e", "x1^3"])), 1);
    assert_eq!(code(&run(&["check", "symmetric", "-e", "x1 + x2^2", "-e", "2*x1*x2"])), 0);
    let dz = ["check", "druzkowski", "-e", "x1 + (x1 + x2)^3", "-e", "x2 - (x1 + x2)^3"];
    assert_eq!(code(&run(&dz)), 0);
    assert_eq!(code(&run(&["check", "keller", "--vars", "a b", "-e", "a + b^2", "-e", "b"])), 0);
}

#[test]
fn construct_ch_echoes_relation() {
    let cubic = scratch("cubic.pmap", "vars: x1 x2\nF1 = x1 + x2^3\nF2 = x2\n");
    let (v, c) = json(&["construct", "--variant", "ch", "--lambda", "1,0", "-i", cubic.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(v["output"]["components"].as_array().unwrap().len(), 3);
    let rel = &v["reports"][0]["witnesses"][0];
    assert_eq!(rel["role"], "relation");
    assert_eq!(rel["value"], "det jac G = det jac F");
    let text = stdout(&run(&["construct", "--variant", "ch", "--lambda", "1,0", "-i", cubic.to_str().unwrap()]));
    assert!(text.contains("# det jac G = det jac F (verified)"));
}

#[test]
fn construct_symred_identity() {
    let id1 = scratch("id1.pmap", "vars: x1\nF1 = x1\n");
    let out = id1.with_file_name("symred.pmap");
    let o = run(&[
        "construct", "--variant", "symred", "--u", "1", "--uprime", "-1", "--f", "0", "-i",
        id1.to_str().unwrap(), "-o", out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let written = fs::read_to_string(&out).unwrap();
    assert!(written.contains("vars: x1 y1\nG1 = 2*x1\nG2 = -2*y1\n"), "{written}");
}

#[test]
fn construct_rejects_small_d() {
    let o = run(&["construct", "--variant", "dzl", "--d", "1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("d >= 2"));
}

#[test]
fn verify_examples() {
    let (v, c) = json(&[
        "verify", "--property", "squarefree-preservation", "--gen", "tame-keller", "--n", "3", "--trials", "50",
        "--seed", "42",
    ]);
    assert_eq!(c, 0);
    assert_eq!(v["reports"][0]["passed"], 50);
    let (v, c) = json(&[
        "verify", "--property", "symm-det-identity", "--gen", "tame-keller", "--n", "2", "--trials", "25", "--seed",
        "7",
    ]);
    assert_eq!((c, v["verdict"].as_str()), (0, Some("pass")));
    let (v, c) = json(&["verify", "--property", "irredlc-bound", "--trials", "0"]);
    assert_eq!((c, v["verdict"].as_str()), (2, Some("inapplicable")));
    assert_eq!(code(&run(&["verify", "--property", "no-such-property"])), 2);
}

#[test]
fn verify_is_deterministic_across_runs_and_jobs() {
    let args = ["verify", "--property", "irredth-sampling", "--n", "3", "--trials", "6", "--samples", "10", "--seed", "5"];
    let (a, _) = json(&args);
    let (b, _) = json(&args);
    assert_eq!(canonical(a.clone()), canonical(b));
    let mut parallel = args.to_vec();
    parallel.extend(["--jobs", "4"]);
    let (c, _) = json(&parallel);
    assert_eq!(canonical(a)["reports"], canonical(c)["reports"]);
}

#[test]
fn seed_comes_from_environment_when_absent() {
    let env = bin()
        .env("POLYKELLER_SEED", "9")
        .args(["--json", "gen", "--kind", "tame-keller", "--n", "2"])
        .output()
        .unwrap();
    let env: Value = serde_json::from_slice(&env.stdout).unwrap();
    let (flag, _) = json(&["gen", "--kind", "tame-keller", "--n", "2", "--seed", "9"]);
    assert_eq!(env["seed"], 9);
    assert_eq!(env["output"], flag["output"]);
    let (default, _) = json(&["gen", "--kind", "tame-keller", "--n", "2"]);
    assert_eq!(default["seed"], 0);
}

#[test]
fn gen_examples() {
    let o = run(&["gen", "--kind", "tame-keller", "--n", "2", "--steps", "0", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("vars: x1 x2\nF1 = x1\nF2 = x2\n"));
    let a = run(&["gen", "--kind", "nilpotent-cubic", "--n", "2", "--seed", "3"]);
    let b = run(&["gen", "--kind", "nilpotent-cubic", "--n", "2", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&run(&["gen", "--kind", "tame-keller", "--n", "0"])), 2);
}

#[test]
fn gen_output_reparses_and_reverifies() {
    for seed in ["1", "2", "3"] {
        let path = scratch(&format!("tame{seed}.pmap"), "");
        let o = run(&["gen", "--kind", "tame-keller", "--n", "3", "--seed", seed, "-o", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        let (a, c) = json(&["check", "keller", "-i", path.to_str().unwrap()]);
        assert_eq!(c, 0);
        let (b, _) = json(&["check", "keller", "-i", path.to_str().unwrap()]);
        assert_eq!(canonical(a), canonical(b));
    }
    let path = scratch("nil.pmap", "");
    run(&["gen", "--kind", "nilpotent-cubic", "--n", "4", "--seed", "8", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&run(&["check", "nilpotent", "-i", path.to_str().unwrap()])), 0);
}

#[test]
fn json_keys_are_sorted_and_rationals_are_strings() {
    let (v, _) = json(&["check", "irreducible", "-e", "1/2*x1^2 - 2"]);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let unit = v["reports"][0]["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .find(|w| w["role"] == "unit")
        .unwrap();
    assert_eq!(unit["value"], "1/2");
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn map_file_errors_carry_line_numbers() {
    let bad = scratch("bad.pmap", "# header\nvars: x1 x2\nF1 = x1 +\n");
    let o = run(&["check", "keller", "-i", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"), "{}", String::from_utf8_lossy(&o.stderr));
}
