//! End-to-end command-line tests: subcommand behavior, exit codes, error
//! wording, and byte-level determinism of the emitted JSON and CSV.

use assert_cmd::Command;
use padic_frames::{GroupContext, PAdicRational, StepFunction};

fn bin() -> Command {
    let mut cmd = Command::cargo_bin("padic-frames").unwrap();
    cmd.env_remove("PADIC_FRAMES_CONFIG");
    cmd
}

fn stdout_of(args: &[&str]) -> Vec<u8> {
    let output = bin().args(args).output().unwrap();
    assert!(
        output.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    output.stdout
}

#[test]
fn example_two_coset_reports_the_closed_form() {
    let stdout = stdout_of(&["example", "twoH", "--p", "3", "--n", "1"]);
    let report: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
    assert!((report["A"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(report["B"].as_f64().unwrap(), 4.0);
    assert_eq!(report["zero_measure"].as_f64().unwrap(), 0.0);
    assert_eq!(report["matches_expected"], serde_json::Value::Bool(true));
}

#[test]
fn example_small_ball_is_parseval() {
    let stdout = stdout_of(&["example", "cH", "--p", "2", "--m", "1"]);
    let report: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
    assert!((report["A"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert!((report["B"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(report["is_parseval"], serde_json::Value::Bool(true));
}

#[test]
fn example_dyadic_dead_class_measure() {
    let stdout = stdout_of(&["example", "twoH2", "--p", "2", "--n", "2"]);
    let report: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
    assert!((report["A"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    assert!((report["B"].as_f64().unwrap() - 4.0).abs() < 1e-9);
    assert_eq!(report["zero_measure"].as_f64().unwrap(), 0.25);
}

#[test]
fn example_output_is_byte_identical_across_runs() {
    let args = ["example", "twoH", "--p", "5", "--n", "1"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn example_preconditions_exit_with_usage_code() {
    bin()
        .args(["example", "twoH", "--p", "2", "--n", "1"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("odd prime"));
    bin()
        .args(["example", "twoH2", "--p", "3", "--n", "1"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("p = 2"));
    bin()
        .args(["example", "twoH", "--p", "3", "--m", "1"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("--n"));
    bin()
        .args(["example", "nope", "--p", "3", "--n", "1"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("unknown example"));
}

#[test]
fn example_writes_symbol_csv_when_asked() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("symbol.csv");
    stdout_of(&[
        "example",
        "twoH",
        "--p",
        "3",
        "--n",
        "1",
        "--out-csv",
        path.to_str().unwrap(),
    ]);
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("eta_class,value\n0,4.0\n"));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn example_accepts_a_section_offsets_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("offsets.json");
    std::fs::write(&path, "{\"1/p^1\": 2}").unwrap();
    let stdout = stdout_of(&[
        "example",
        "twoH",
        "--p",
        "3",
        "--n",
        "1",
        "--section",
        path.to_str().unwrap(),
    ]);
    let report: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
    assert_eq!(report["section"], "offsets");
    assert_eq!(report["matches_expected"], serde_json::Value::Bool(true));
}

#[test]
fn phi_prints_csv_then_report_for_the_unit_ball() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("unit.json");
    let ctx = GroupContext::with_default_level(2).unwrap();
    let f = StepFunction::indicator(ctx, &PAdicRational::zero(2), 0, None).unwrap();
    std::fs::write(&path, f.to_json()).unwrap();

    let stdout = stdout_of(&["phi", "--input", path.to_str().unwrap()]);
    let text = String::from_utf8(stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("eta_class,value"));
    assert_eq!(lines.next(), Some("0,1.0"));
    let report: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(report["A"].as_f64().unwrap(), 1.0);
    assert_eq!(report["B"].as_f64().unwrap(), 1.0);
    assert_eq!(report["is_parseval"], serde_json::Value::Bool(true));
    assert!(lines.next().is_none());
}

#[test]
fn phi_emits_the_two_coset_symbol_rows() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("two-coset.json");
    let csv_path = dir.path().join("symbol.csv");
    let ctx = GroupContext::with_default_level(3).unwrap();
    let f = StepFunction::indicator(ctx, &PAdicRational::zero(3), 0, None)
        .unwrap()
        .add(&StepFunction::indicator(ctx, &PAdicRational::new(3, 1, 1), 0, None).unwrap())
        .unwrap();
    std::fs::write(&input, f.to_json()).unwrap();

    let stdout = stdout_of(&[
        "phi",
        "--input",
        input.to_str().unwrap(),
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    // With --out, stdout carries only the report line.
    let report: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
    assert!((report["A"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert!((report["B"].as_f64().unwrap() - 4.0).abs() < 1e-9);

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let rows: Vec<(u32, f64)> = csv
        .lines()
        .skip(1)
        .map(|line| {
            let (class, value) = line.split_once(',').unwrap();
            (class.parse().unwrap(), value.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].0, 0);
    assert!((rows[0].1 - 4.0).abs() < 1e-9);
    assert!((rows[1].1 - 1.0).abs() < 1e-9);
    assert!((rows[2].1 - 1.0).abs() < 1e-9);
}

#[test]
fn phi_output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let ctx = GroupContext::with_default_level(2).unwrap();
    let f = StepFunction::indicator(ctx, &PAdicRational::new(2, 1, 2), 1, None).unwrap();
    std::fs::write(&path, f.to_json()).unwrap();
    let args = ["phi", "--input", path.to_str().unwrap()];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn phi_error_paths_use_data_exit_code() {
    let dir = tempfile::tempdir().unwrap();

    let zero = dir.path().join("zero.json");
    std::fs::write(
        &zero,
        "{\"p\":2,\"support_level\":0,\"constancy_level\":1,\"re\":[0.0,0.0],\"im\":[0.0,0.0]}",
    )
    .unwrap();
    bin()
        .args(["phi", "--input", zero.to_str().unwrap()])
        .assert()
        .code(1)
        .stderr(predicates::str::contains(
            "zero function generates the zero system",
        ));

    let malformed = dir.path().join("malformed.json");
    std::fs::write(&malformed, "{\"p\": 2, \"re\": [1.0]").unwrap();
    bin()
        .args(["phi", "--input", malformed.to_str().unwrap()])
        .assert()
        .code(1);

    bin()
        .args(["phi", "--input", dir.path().join("missing.json").to_str().unwrap()])
        .assert()
        .code(1);

    let composite = dir.path().join("composite.json");
    std::fs::write(
        &composite,
        "{\"p\":6,\"support_level\":0,\"constancy_level\":0,\"re\":[1.0],\"im\":[0.0]}",
    )
    .unwrap();
    bin()
        .args(["phi", "--input", composite.to_str().unwrap()])
        .assert()
        .code(1)
        .stderr(predicates::str::contains("6"));
}

#[test]
fn verify_emits_passing_lines_and_a_summary() {
    let stdout = stdout_of(&[
        "verify",
        "plancherel",
        "--p",
        "2",
        "--trials",
        "3",
        "--seed",
        "7",
    ]);
    let text = String::from_utf8(stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    for line in &lines[..9] {
        let check: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(check["pass"], serde_json::Value::Bool(true));
        assert_eq!(check["seed"].as_u64(), Some(7));
    }
    let summary: serde_json::Value = serde_json::from_str(lines[9]).unwrap();
    assert_eq!(summary["suite"], "plancherel");
    assert_eq!(summary["checks"].as_u64(), Some(9));
    assert_eq!(summary["failures"].as_u64(), Some(0));
    assert_eq!(summary["pass"], serde_json::Value::Bool(true));
}

#[test]
fn verify_runs_the_aggregate_suite() {
    let stdout = stdout_of(&["verify", "all", "--p", "2", "--trials", "2", "--seed", "3"]);
    let text = String::from_utf8(stdout).unwrap();
    assert!(text.lines().count() > 10);
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["pass"], serde_json::Value::Bool(true));
}

#[test]
fn verify_output_is_byte_identical_across_runs() {
    let args = ["verify", "lemmas", "--p", "3", "--trials", "2", "--seed", "11"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn verify_rejects_unknown_suites() {
    bin()
        .args(["verify", "bogus"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("unknown suite"));
}

#[test]
fn environment_config_is_honored_and_flags_override_it() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    std::fs::write(&config, "{\"tol_rel\": 0.5}").unwrap();

    // A huge zero threshold absorbs the two half-height classes of the
    // dyadic example at n = 2, so the report no longer matches.
    let output = bin()
        .args(["example", "twoH2", "--p", "2", "--n", "2"])
        .env("PADIC_FRAMES_CONFIG", config.to_str().unwrap())
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(report["zero_measure"].as_f64().unwrap(), 0.75);
    assert_eq!(report["matches_expected"], serde_json::Value::Bool(false));

    // The flag wins over the environment.
    bin()
        .args(["example", "twoH2", "--p", "2", "--n", "2", "--tol-rel", "1e-9"])
        .env("PADIC_FRAMES_CONFIG", config.to_str().unwrap())
        .assert()
        .code(0);
}
