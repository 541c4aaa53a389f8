//! Command line behavior: exit codes, the seed environment fallback,
//! batch mode, and construct round trips.

use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str], env: &[(&str, &str)]) -> (String, String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qalg"));
    cmd.args(args).env_remove("QALG_SEED");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn malformed_json_exits_2() {
    let (_, stderr, code) = run(&["info", fixture("malformed.json").to_str().unwrap()], &[]);
    assert_eq!(code, 2, "stderr: {stderr}");
}

#[test]
fn precondition_violation_exits_3() {
    // kA2 is not self-injective, so fg refuses with a precondition error
    let (_, stderr, code) = run(&["fg", fixture("ka2.json").to_str().unwrap()], &[]);
    assert_eq!(code, 3, "stderr: {stderr}");
    assert!(stderr.contains("not self-injective") || stderr.contains("form"));
}

#[test]
fn info_reports_non_frobenius_exhaustively() {
    let (stdout, _, code) = run(
        &["info", fixture("ka2.json").to_str().unwrap(), "--json"],
        &[],
    );
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["results"]["frobenius"], false);
    assert_eq!(report["results"]["frobenius_decision_exact"], true);
    assert_eq!(
        report["results"]["radical_layer_dims"],
        serde_json::json!([3, 1])
    );
}

#[test]
fn info_on_quantum_plane() {
    let (stdout, _, code) = run(
        &["info", fixture("lambda_q2.json").to_str().unwrap(), "--json"],
        &[],
    );
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["results"]["dimension"], 4);
    assert_eq!(
        report["results"]["radical_layer_dims"],
        serde_json::json!([4, 3, 1])
    );
    assert_eq!(report["results"]["socle_dim"], 1);
    assert_eq!(report["results"]["connected"], true);
    assert_eq!(report["results"]["frobenius"], true);
}

#[test]
fn seed_env_fallback() {
    let (stdout, _, code) = run(
        &["info", fixture("kx3.json").to_str().unwrap(), "--json"],
        &[("QALG_SEED", "41")],
    );
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["seed"], 41);
    // the explicit flag wins
    let (stdout, _, _) = run(
        &[
            "info",
            fixture("kx3.json").to_str().unwrap(),
            "--json",
            "--seed",
            "5",
        ],
        &[("QALG_SEED", "41")],
    );
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["seed"], 5);
}

#[test]
fn construct_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, file) in [
        ("trivext", "kronecker.json"),
        ("smash2", "kx3.json"),
        ("veronese2", "kx3.json"),
        ("beilinson", "lambda_q1.json"),
        ("double", "kx3.json"),
    ] {
        let out = dir.path().join(format!("{kind}.json"));
        let (_, stderr, code) = run(
            &[
                "construct",
                kind,
                fixture(file).to_str().unwrap(),
                "-o",
                out.to_str().unwrap(),
            ],
            &[],
        );
        assert_eq!(code, 0, "{kind}: {stderr}");
        // reload: table-form loading runs the full axiom check
        let (filedata, _) = qalg::format::load_file(&out).unwrap();
        let algebra = filedata.to_algebra().unwrap();
        assert!(algebra.check().is_empty(), "{kind}: axioms");
        assert!(filedata.basis_labels.is_some(), "{kind}: labels retained");
    }
}

#[test]
fn construct_skew_with_nakayama_generator() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("skew.json");
    let (_, stderr, code) = run(
        &[
            "construct",
            "skew",
            fixture("lambda_q1.json").to_str().unwrap(),
            "--generator",
            "nakayama",
            "-o",
            out.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(code, 0, "{stderr}");
    let (filedata, _) = qalg::format::load_file(&out).unwrap();
    let algebra = filedata.to_algebra().unwrap();
    assert_eq!(algebra.dim(), 8);
}

#[test]
fn construct_twisted_trivext_with_arrow_spec() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("twisted.json");
    let (_, stderr, code) = run(
        &[
            "construct",
            "twisted-trivext",
            fixture("kronecker.json").to_str().unwrap(),
            "--sigma",
            r#"{"arrows": {"a": {"coeff": "1", "arrow": "b"}, "b": {"coeff": "1", "arrow": "a"}}}"#,
            "-o",
            out.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(code, 0, "{stderr}");
    let (filedata, _) = qalg::format::load_file(&out).unwrap();
    assert_eq!(filedata.to_algebra().unwrap().dim(), 8);
}

#[test]
fn invalid_sigma_is_rejected() {
    let (_, _, code) = run(
        &[
            "construct",
            "twisted-trivext",
            fixture("kronecker.json").to_str().unwrap(),
            "--sigma",
            r#"{"arrows": {"a": {"coeff": "0", "arrow": "b"}}}"#,
        ],
        &[],
    );
    assert_eq!(code, 3); // zero coefficient: not an automorphism
    let (_, _, code) = run(
        &[
            "construct",
            "twisted-trivext",
            fixture("kronecker.json").to_str().unwrap(),
            "--sigma",
            "not json",
        ],
        &[],
    );
    assert_eq!(code, 2);
}

#[test]
fn fg_batch_runs_in_name_order() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["b_lambda_q1.json", "a_kx3.json"] {
        let src = if name.contains("kx3") { "kx3.json" } else { "lambda_q1.json" };
        std::fs::copy(fixture(src), dir.path().join(name)).unwrap();
    }
    let (stdout, stderr, code) = run(&["fg", "--batch", dir.path().to_str().unwrap()], &[]);
    assert_eq!(code, 0, "{stderr}");
    let first = stdout.find("a_kx3.json").unwrap();
    let second = stdout.find("b_lambda_q1.json").unwrap();
    assert!(first < second);
}

#[test]
fn type_command_reports_certificates() {
    let (stdout, _, code) = run(
        &["type", fixture("lambda_q2.json").to_str().unwrap(), "--json"],
        &[],
    );
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["results"]["label"], "~A1");
    let cert = &report["results"]["components"][0]["certificate"];
    assert_eq!(cert["zero"], 1);
    assert!(cert["kernel_vector"].is_array());
}

#[test]
fn nakayama_reports_infinite_outer_order() {
    let (stdout, _, code) = run(
        &["nakayama", fixture("lambda_q2.json").to_str().unwrap(), "--json"],
        &[],
    );
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["results"]["outer_order"], "infinite");
    assert_eq!(report["results"]["automorphism_order"], "exceeds bound");
    assert_eq!(report["results"]["symmetric"], false);
    assert_eq!(report["results"]["weakly_symmetric"], true);
}

#[test]
fn square_zero_but_not_self_injective_is_rejected() {
    // three loops with radical square zero: the socle is too big for a
    // nondegenerate pairing, so fg must refuse before the square-zero
    // clause can fire
    let (_, stderr, code) = run(&["fg", fixture("three_loops.json").to_str().unwrap()], &[]);
    assert_eq!(code, 3, "stderr: {stderr}");
    assert!(stderr.contains("not self-injective"));
}

#[test]
fn beyond_extended_dynkin_answers_no() {
    let (stdout, _, code) = run(
        &["type", fixture("type_other.json").to_str().unwrap(), "--json"],
        &[],
    );
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["results"]["label"], "other");
    let (stdout, _, code) = run(
        &["fg", fixture("type_other.json").to_str().unwrap(), "--json"],
        &[],
    );
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["results"]["answer"], "no");
    let reasons = report["results"]["reasons"].as_array().unwrap();
    assert!(reasons
        .iter()
        .any(|r| r["rule"].as_str().unwrap().contains("complexity")));
}

#[test]
fn selftest_passes() {
    let (stdout, stderr, code) = run(&["selftest"], &[]);
    assert_eq!(code, 0, "selftest failed: {stdout}\n{stderr}");
    assert!(stdout.lines().filter(|l| l.starts_with("PASS")).count() >= 25);
    assert_eq!(stdout.lines().filter(|l| l.starts_with("FAIL")).count(), 0);
}
