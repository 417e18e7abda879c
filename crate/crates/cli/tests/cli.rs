//! Black-box tests against the compiled binary: pinned output bytes, JSON
//! payloads checked against the library, and exit-code classification.

use std::process::{Command, Output};

use cliffeq_core::{ComplexMatrix, LieGenerator, LinearOperator, Signature};
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_cliffeq");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("CLIFFEQ_MAX_N")
        .output()
        .expect("binary should run")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn failure(args: &[&str]) -> (i32, String) {
    let out = run(args);
    assert!(!out.status.success(), "command {args:?} unexpectedly passed");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).expect("stdout should be JSON")
}

#[test]
fn omega_output_is_pinned() {
    assert_eq!(stdout(&["omega", "2", "0"]), "Cl(2,0): omega = e12, omega^2 = -1\n");
    assert_eq!(
        stdout(&["omega", "3", "1", "--format", "json"]),
        "{\"r\":3,\"s\":1,\"omega_squared\":-1}\n"
    );
}

#[test]
fn classify_formats() {
    assert_eq!(stdout(&["classify", "3", "1"]), "Cl(3,1) = H(2), real dimension 16\n");
    assert_eq!(stdout(&["classify", "2", "0", "--format", "latex"]), "\\mathbb{H}\n");
    let value = json(&["classify", "0", "2", "--format", "json"]);
    assert_eq!(value["tag"], "R");
    assert_eq!(value["size"], 2);
    assert_eq!(value["real_dimension"], 4);
}

#[test]
fn invariants_lists_spanning_vectors() {
    assert_eq!(
        stdout(&["invariants", "2", "1"]),
        "invariant subspace of Cl(2,1): dimension 2\n1\ne123\n"
    );
}

#[test]
fn jstruct_lists_solutions_or_pinned_message() {
    assert_eq!(stdout(&["jstruct", "3", "1"]), "J(1) = -e1234\nJ(1) = e1234\n");
    assert_eq!(
        stdout(&["jstruct", "4", "0"]),
        "no equivariant complex structure exists (\u{3c9}\u{b2}=+1)\n"
    );
    let value = json(&["jstruct", "4", "0", "--format", "json"]);
    assert_eq!(value["exists"], false);
    assert_eq!(value["solutions"].as_array().unwrap().len(), 0);
}

#[test]
fn idempotents_listing_is_pinned() {
    assert_eq!(
        stdout(&["idempotents", "1", "1"]),
        "0\n1/2 - 1/2*e12\n1/2 + 1/2*e12\n1\n"
    );
    assert_eq!(stdout(&["idempotents", "3", "1"]), "0\n1\n");
}

#[test]
fn gamma_text_uses_identity_idempotent_by_default() {
    assert_eq!(
        stdout(&["gamma", "0", "2"]),
        "Cl(0,2), p = 1: module dimension 2\n\
         gamma_1 =\n[ 0, 1 ]\n[ 1, 0 ]\n\
         gamma_2 =\n[ 0, -i ]\n[ i, 0 ]\n"
    );
}

#[test]
fn gamma_json_matches_library_matrices() {
    let value = json(&[
        "gamma",
        "3",
        "1",
        "--idempotent",
        "1/2 - 1/2*e14",
        "--basis",
        "1-e14,e12-e24,e1+e4,e2+e124",
        "--format",
        "json",
    ]);
    assert_eq!(value["idempotent"], "1/2 - 1/2*e14");
    assert_eq!(value["module_dimension"], 4);
    assert_eq!(
        value["basis"],
        serde_json::json!(["1 - e14", "e12 - e24", "e1 + e4", "e2 + e124"])
    );
    let matrices: Vec<ComplexMatrix> = value["matrices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| ComplexMatrix::from_json(m).unwrap())
        .collect();
    let expected = [
        ComplexMatrix::from_int_rows(&[
            &[(0, 0), (0, 0), (-1, 0), (0, 0)],
            &[(0, 0), (0, 0), (0, 0), (1, 0)],
            &[(1, 0), (0, 0), (0, 0), (0, 0)],
            &[(0, 0), (-1, 0), (0, 0), (0, 0)],
        ]),
        ComplexMatrix::from_int_rows(&[
            &[(0, 0), (0, 0), (0, 0), (-1, 0)],
            &[(0, 0), (0, 0), (-1, 0), (0, 0)],
            &[(0, 0), (1, 0), (0, 0), (0, 0)],
            &[(1, 0), (0, 0), (0, 0), (0, 0)],
        ]),
        ComplexMatrix::from_int_rows(&[
            &[(0, 0), (0, 0), (0, 0), (0, 1)],
            &[(0, 0), (0, 0), (0, -1), (0, 0)],
            &[(0, 0), (0, -1), (0, 0), (0, 0)],
            &[(0, 1), (0, 0), (0, 0), (0, 0)],
        ]),
        ComplexMatrix::from_int_rows(&[
            &[(0, 0), (0, 0), (1, 0), (0, 0)],
            &[(0, 0), (0, 0), (0, 0), (1, 0)],
            &[(1, 0), (0, 0), (0, 0), (0, 0)],
            &[(0, 0), (1, 0), (0, 0), (0, 0)],
        ]),
    ];
    assert_eq!(matrices, expected);
}

#[test]
fn mul_and_act_produce_pinned_results() {
    assert_eq!(stdout(&["mul", "3", "0", "e1", "e2"]), "e12\n");
    assert_eq!(
        stdout(&["mul", "3", "0", "e12", "e12", "--format", "json"]),
        "{\"r\":3,\"s\":0,\"result\":\"-1\"}\n"
    );
    assert_eq!(stdout(&["act", "3", "1", "--generator", "1,2", "e1"]), "-e2\n");
    let value = json(&["act", "3", "1", "--generator", "1,2", "e1", "--format", "json"]);
    assert_eq!(value["generator"], serde_json::json!([1, 2]));
    assert_eq!(value["result"], "-e2");
}

#[test]
fn act_json_operator_round_trips_through_library() {
    let value = json(&["act", "2", "2", "--generator", "1,3", "--format", "json"]);
    let sig = Signature::new(2, 2).unwrap();
    let expected = LieGenerator::new(&sig, 1, 3).unwrap().action_matrix(&sig);
    assert_eq!(LinearOperator::from_json(&value["operator"]), Ok(expected));
}

#[test]
fn failures_map_to_documented_exit_codes() {
    let (code, stderr) = failure(&["mul", "2", "0", "e1 +", "e2"]);
    assert_eq!(code, 2, "parse errors are usage failures: {stderr}");
    assert!(stderr.starts_with("error: "), "stderr was {stderr:?}");

    let (code, stderr) = failure(&["gamma", "4", "0"]);
    assert_eq!(code, 1);
    assert_eq!(
        stderr,
        "error: no equivariant complex structure exists (\u{3c9}\u{b2}=+1)\n"
    );

    let (code, _) = failure(&["gamma", "3", "1", "--idempotent", "e1"]);
    assert_eq!(code, 1);

    let (code, _) = failure(&["verify", "--max-n", "20"]);
    assert_eq!(code, 2);

    let (code, _) = failure(&["omega", "13", "0"]);
    assert_eq!(code, 2);

    let (code, _) = failure(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn dimension_cap_env_override() {
    let out = Command::new(BIN)
        .args(["omega", "13", "0"])
        .env("CLIFFEQ_MAX_N", "13")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("omega^2 = "), "output was {text:?}");

    let out = Command::new(BIN)
        .args(["omega", "2", "0"])
        .env("CLIFFEQ_MAX_N", "pony")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_run_is_deterministic_and_passes() {
    let args = ["verify", "--max-n", "2", "--cases", "20"];
    let first = stdout(&args);
    assert!(first.ends_with("all checks passed\n"), "output was {first:?}");
    assert_eq!(stdout(&args), first);

    let value = json(&["verify", "--max-n", "2", "--cases", "10", "--format", "json"]);
    assert_eq!(value["passed"], true);
    assert_eq!(value["checks"].as_array().unwrap().len(), 12);
    assert_eq!(value["seed"], serde_json::json!(0x436c_1ff0u64));
}
