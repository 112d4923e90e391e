use std::path::PathBuf;
use std::process::Command;

use qmcode::verify::CampaignReport;

fn config(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs").join(name).display().to_string()
}

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn run_with_stdin(args: &[&str], input: &str) -> Outcome {
    let mut argv = vec!["qmcode"];
    argv.extend_from_slice(args);
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = qmcode::cli::run(argv, &mut stdin, &mut out, &mut err);
    Outcome { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn run(args: &[&str]) -> Outcome {
    run_with_stdin(args, "")
}

#[test]
fn acode_example() {
    let cfg = config("z5_b.cfg");
    let o = run(&["--config", &cfg, "code", "--side", "A", "a^2 b a b a b a^4 b a b a"]);
    assert_eq!(o.code, 0, "{}", o.err);
    assert_eq!(o.out.trim(), "(1,2,1,2)");
    let o = run(&["--config", &cfg, "code", "--side", "B", "a^2 b a b a b a^4 b a b a"]);
    assert_eq!(o.out.trim(), "(5)");
}

#[test]
fn weighted_code_example() {
    let cfg = config("z_b.cfg");
    let o = run(&["--config", &cfg, "wcode", "a^7 b a^-2 b a^-4 b a^-1 b a^9 b a^2 b a^-3"]);
    assert_eq!(o.code, 0, "{}", o.err);
    assert_eq!(o.out.trim(), "(7,7,11,3)");
}

#[test]
fn qm_example() {
    let cfg = config("z5_b.cfg");
    let o = run(&["--config", &cfg, "qm", "--spec", "code:A:(1,2)", "a^2 b a b a b a^4 b a b a"]);
    assert_eq!(o.code, 0, "{}", o.err);
    assert_eq!(o.out.trim(), "1");
}

#[test]
fn word_from_stdin() {
    let cfg = config("z5_b.cfg");
    let o = run_with_stdin(&["--config", &cfg, "reduce", "-"], "a^3 a^2 b\n");
    assert_eq!(o.code, 0, "{}", o.err);
    assert_eq!(o.out.trim(), "b");
}

#[test]
fn generic_verb() {
    let o = run(&["generic", "(1,2,3)"]);
    assert_eq!(o.out.trim(), "true");
    let o = run(&["generic", "(1,2)"]);
    assert_eq!(o.out.trim(), "false");
}

#[test]
fn swap_commutator_on_infinite_dihedral() {
    let cfg = config("d_inf.cfg");
    let o = run(&["--config", &cfg, "commutator", "--aut", "swap", "a"]);
    assert_eq!(o.code, 0, "{}", o.err);
    assert_eq!(o.out.trim(), "b a");
}

#[test]
fn domain_errors_exit_one() {
    let cfg = config("z5_b.cfg");
    let o = run(&["--config", &cfg, "code", "a^2 c"]);
    assert_eq!(o.code, 1);
    assert!(o.err.starts_with("error[syntax]"), "{}", o.err);

    let o = run(&["--config", &cfg, "qm", "--spec", "weighted:A:(1,2)", "a"]);
    assert_eq!(o.code, 1);
    assert!(o.err.starts_with("error["), "{}", o.err);

    let o = run(&["--config", &config("z_b.cfg"), "verify-invariance", "--spec", "code:A:(1,2)", "--kinds", "transvection", "--seed", "1"]);
    assert_eq!(o.code, 1);
    assert!(o.err.starts_with("error[no-invariance-claim]"), "{}", o.err);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["code", "a"]).code, 2, "missing --config");
    assert_eq!(run(&["--config", &config("z5_b.cfg"), "code", "--side", "C", "a"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn missing_config_file_is_a_domain_error() {
    let o = run(&["--config", "/nonexistent/group.cfg", "code", "a"]);
    assert_eq!(o.code, 1);
    assert!(o.err.starts_with("error[io]"), "{}", o.err);
}

#[test]
fn defect_report_round_trips() {
    let cfg = config("z5_b.cfg");
    let o = run(&["--config", &cfg, "--format", "machine", "verify-defect", "--spec", "code:A:(1,2)", "--seed", "7", "--trials", "500"]);
    assert_eq!(o.code, 0, "{}", o.err);
    let docs: Vec<&str> = o.out.split("\n# ---\n").collect();
    assert_eq!(docs.len(), 2);
    let report = CampaignReport::from_toml(docs[0]).unwrap();
    assert_eq!(report.trials, 500);
    assert_eq!(report.seed, 7);
    assert!(report.passed());
    assert_eq!(report.to_toml(), docs[0].trim_start());
    let theta = CampaignReport::from_toml(docs[1]).unwrap();
    assert_eq!(theta.check, "theta-subadditivity");
    for field in ["trials", "max_observed", "bound", "violations", "seed"] {
        assert!(docs[0].contains(field), "missing {field}");
    }
}

#[test]
fn seeded_runs_are_byte_identical() {
    let cfg = config("z_z3.cfg");
    let args = ["--config", &cfg, "verify-invariance", "--spec", "weighted:A:(1,2)", "--kinds", "fauto,transv", "--seed", "42", "--trials", "200"];
    let first = run(&args);
    assert_eq!(first.code, 0, "{}", first.err);
    assert!(first.out.contains("seed: 42"));
    for _ in 0..3 {
        assert_eq!(run(&args).out, first.out);
    }
}

#[test]
fn unseeded_runs_print_their_seed() {
    let cfg = config("z5_b.cfg");
    let o = run(&["--config", &cfg, "verify-defect", "--spec", "code:A:(1,2)", "--trials", "50"]);
    assert_eq!(o.code, 0, "{}", o.err);
    let seed: u64 = o.out.lines().find_map(|l| l.strip_prefix("seed: ")).unwrap().parse().unwrap();
    let again = run(&["--config", &cfg, "verify-defect", "--spec", "code:A:(1,2)", "--trials", "50", "--seed", &seed.to_string()]);
    assert_eq!(again.out, o.out);
}

#[test]
fn witness_scl_prints_certificate() {
    let cfg = config("z5_z7.cfg");
    let o = run(&["--config", &cfg, "witness-scl", "--n", "5,6,7", "--power", "3000"]);
    assert_eq!(o.code, 0, "{}", o.err);
    assert!(o.out.contains("w ∈ [Aut(G),G]"));
    assert!(o.out.contains("f̄(w) ∈ [0.99, 1.01] (N=3000, D≤30)"), "{}", o.out);
    assert!(o.out.contains("scl_Aut(w) ≥ 33/2000"), "{}", o.out);
}

#[test]
fn witness_growth_from_cli() {
    let cfg = config("z5_b.cfg");
    let o = run(&["--config", &cfg, "witness", "--mode", "distinct", "--z", "(1,2,3)", "--m", "4"]);
    assert_eq!(o.code, 0, "{}", o.err);
    let w = o.out.lines().find_map(|l| l.strip_prefix("w = ")).unwrap_or(o.out.lines().next().unwrap()).to_string();
    let q = run(&["--config", &cfg, "qm", "--spec", "code:A:(1,2,3)", &w]);
    assert_eq!(q.out.trim(), "1", "{}", o.out);
}

#[test]
fn binary_matches_library_entry_point() {
    let cfg = config("z5_b.cfg");
    let out = Command::new(env!("CARGO_BIN_EXE_qmcode"))
        .args(["--config", &cfg, "code", "--side", "A", "a^2 b a b a b a^4 b a b a"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "(1,2,1,2)");
    let bad = Command::new(env!("CARGO_BIN_EXE_qmcode")).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
