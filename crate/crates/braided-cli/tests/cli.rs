use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use braided_cli::{find_command, run_command, Options, RunConfig, COMMANDS};
use serde_json::Value;

const COMMAND_NAMES: &[&str] = &[
    "check-qyd",
    "free-double-pbw",
    "minimal-relations",
    "nichols-hilbert",
    "deformed-hilbert",
    "hc-gram",
    "minimality",
    "cherednik-pbw",
    "dunkl-check",
    "restricted-dims",
    "embed-check",
    "fomin-kirillov",
    "kaplansky",
    "standard-module",
];

const OPERATIONS: &[&str] = &[
    "bosonisation_check",
    "braid_equation_check",
    "braided_factorial",
    "braided_integer",
    "braiding_from_yd",
    "build_YV",
    "build_reflection_yd",
    "cherednik_algebra",
    "classify_1dim_check",
    "commutativity_classification_check",
    "conjugacy_classes",
    "deformed_factorial",
    "deformed_nichols_hilbert",
    "delta_tc",
    "dual_module",
    "dunkl_commutator",
    "embed_Mc_check",
    "find_reflections",
    "fomin_kirillov_dims",
    "group_from_generators",
    "harish_chandra_gram",
    "induce_subquotient",
    "kernel_basis",
    "kron",
    "minimal_relations",
    "minimality_check",
    "mix_structures",
    "nichols_hilbert",
    "nichols_product",
    "quadratic_double_dims",
    "quasibraided_factorial",
    "qyd_check",
    "restricted_dims",
    "right_quasibraided_factorial",
    "semibraiding_from_compatible",
    "standard_module_matrices",
    "straighten",
    "tensor_module",
    "woronowicz_oracle",
    "yd_module_check",
    "yd_pairing_check",
];

fn configs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs")
}

fn run_bin(config: &Path, extra: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braided"))
        .arg("--config")
        .arg(config)
        .args(extra)
        .output()
        .expect("binary runs")
}

fn write_config(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path
}

fn parse(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report on stdout")
}

#[test]
fn dispatch_table_covers_commands_and_operations() {
    let names: Vec<&str> = COMMANDS.iter().map(|c| c.name).collect();
    assert_eq!(names, COMMAND_NAMES);
    let reachable: BTreeSet<&str> = COMMANDS.iter().flat_map(|c| c.operations.iter().copied()).collect();
    for op in OPERATIONS {
        assert!(reachable.contains(op), "{op} is not reachable from any command");
    }
    for op in &reachable {
        assert!(OPERATIONS.contains(op), "{op} is not a known operation");
    }
    assert!(find_command("no-such-command").is_none());
}

#[test]
fn every_sample_config_passes() {
    let mut seen = BTreeSet::new();
    for entry in fs::read_dir(configs_dir()).unwrap() {
        let path = entry.unwrap().path();
        let cfg = RunConfig::from_json(&fs::read_to_string(&path).unwrap()).unwrap();
        let report = run_command(&cfg, &Options::default());
        assert!(report.pass, "{}: {:?}", path.display(), report.error);
        assert_eq!(report.exit_code, 0);
        seen.insert(cfg.command);
    }
    for name in COMMAND_NAMES {
        assert!(seen.contains(*name), "no sample config for {name}");
    }
}

#[test]
fn nichols_hilbert_of_y_s3() {
    let out = run_bin(&configs_dir().join("nichols-y-s3.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = parse(&out);
    assert_eq!(r["result"]["dims"], serde_json::json!([1, 3, 4, 3, 1, 0]));
    assert_eq!(r["config"]["truncation"], 5);
    let csv = run_bin(&configs_dir().join("nichols-y-s3.json"), &["--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), "degree,dim\n0,1\n1,3\n2,4\n3,3\n4,1\n5,0\n");
}

#[test]
fn cherednik_pbw_passes() {
    let out = run_bin(&configs_dir().join("cherednik-pbw-s3.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = parse(&out);
    assert_eq!(r["pass"], true);
    assert_eq!(r["group"]["order"], 6);
}

#[test]
fn reports_are_byte_identical() {
    for name in ["free-double-y-s3.json", "deformed-y-s3.json", "check-pathological.json"] {
        let a = run_bin(&configs_dir().join(name), &[]);
        let b = run_bin(&configs_dir().join(name), &[]);
        assert_eq!(a.status.code(), Some(0), "{name}");
        assert_eq!(a.stdout, b.stdout, "{name}");
    }
}

#[test]
fn seed_and_timing_flags() {
    let path = configs_dir().join("deformed-y-s3.json");
    let r = parse(&run_bin(&path, &["--seed", "99", "--trials", "2"]));
    assert_eq!(r["config"]["seed"], 99);
    assert_eq!(r["config"]["trials"], 2);
    assert!(r.get("wall_time_ms").is_none());
    let timed = parse(&run_bin(&path, &["--timing", "--threads", "2"]));
    assert!(timed["wall_time_ms"].is_u64());
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let out = run_bin(&configs_dir().join("kaplansky.json"), &["--output", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(r["result"]["total_dim"], 8);
}

#[test]
fn malformed_group_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let unknown = write_config(&dir, "a.json", r#"{"command": "check-qyd", "group": {"tetrahedral": 3}}"#);
    let out = run_bin(&unknown, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tetrahedral"));
    let bad_point = write_config(
        &dir,
        "b.json",
        r#"{"command": "check-qyd", "group": {"permutations": {"degree": 3, "generators": ["(1 4)"]}}, "module": "sign", "structure": "zero"}"#,
    );
    let out = run_bin(&bad_point, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(parse(&out)["error"].as_str().unwrap().contains("invalid input"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in [
        ("unknown.json", r#"{"command": "frobnicate"}"#),
        ("prime.json", r#"{"command": "kaplansky", "field": {"prime": 9}}"#),
        ("zero.json", r#"{"command": "kaplansky", "truncation": 0}"#),
        ("label.json", r#"{"command": "check-qyd", "group": {"symmetric": 3}, "module": "reflection", "structure": {"yd": {"degrees": ["(1 2)", "(7 8)"]}}}"#),
        ("field.json", r#"{"command": "kaplansky", "colour": "red"}"#),
        ("noyd.json", r#"{"command": "nichols-hilbert", "group": {"symmetric": 3}, "module": "reflection", "structure": "zero"}"#),
        ("class.json", r#"{"command": "cherednik-pbw", "group": {"symmetric": 3}, "module": "reflection", "structure": {"cherednik": {"t": 1, "c": {"by_element": {"(1 2)": 1, "(2 3)": 2, "(1 3)": 1}}}}}"#),
    ] {
        let out = run_bin(&write_config(&dir, name, body), &[]);
        assert_eq!(out.status.code(), Some(2), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn caps_are_enforced() {
    let path = configs_dir().join("nichols-y-s3.json");
    let out = run_bin(&path, &["--max-matrix-dim", "100"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(parse(&out)["error"].as_str().unwrap().contains("max-matrix-dim"));
    let out = run_bin(&configs_dir().join("fomin-kirillov-s3.json"), &["--max-group-order", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failed_checks_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    // L_(1 2) = 1 alone is not equivariant under conjugation.
    let bad = write_config(
        &dir,
        "bad.json",
        r#"{"command": "check-qyd", "group": {"symmetric": 3}, "module": "reflection", "structure": {"explicit": {"(1 2)": [[1, 0], [0, 1]]}}}"#,
    );
    let out = run_bin(&bad, &[]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(parse(&out)["pass"], false);
    // The symmetric double of the Weyl algebra over GF(3) has the central element x^3.
    let weyl = write_config(
        &dir,
        "weyl.json",
        r#"{"command": "minimality", "field": {"prime": 3}, "group": "trivial", "module": {"trivial": 1}, "structure": {"explicit": {"()": [[1]]}}, "double": "symmetric", "truncation": 4}"#,
    );
    let out = run_bin(&weyl, &[]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(parse(&out)["result"]["first_violation"], 3);
}

#[test]
fn csv_needs_a_table() {
    let out = run_bin(&configs_dir().join("kaplansky.json"), &["--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}
