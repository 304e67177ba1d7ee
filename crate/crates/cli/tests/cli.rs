//! End-to-end tests for the `zeq` binary: golden text output, exit codes,
//! and bit-for-bit agreement between `--format json` and the library.

use std::process::Output;

use zeq_core::semiring::SemiringId;
use zeq_core::zsolver::{solve_report, ZProblem};
use zeq_core::{Matrix, Vector};

fn zeq(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_zeq"))
        .args(args)
        .output()
        .expect("failed to spawn zeq")
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exited normally")
}

/// The 7x7 reference matrix used by the `seven_*` fixtures.
fn seven(ctx: SemiringId) -> Matrix {
    let rows = vec![
        vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        vec![1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 2.0],
    ];
    Matrix::new(ctx, rows).unwrap()
}

#[test]
fn solve_reference_text() {
    let out = zeq(&["solve", &fixture("seven_max_times.json")]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let expected = "\
semiring: max-times
lambda: 1
solvable: yes
rho_bar: 0
J classes: {4, 6}
J nodes: {4, 6}
least solution: (0, 0, 0, 1, 0, 1, 0)
unique: no
basis at 1 (columns from nodes {1, 3}):
  (1, 0, 1, 0, 0, 1, 0)
  (0, 0, 1, 0, 0, 1, 0)
";
    assert_eq!(stdout_of(&out), expected);
}

#[test]
fn solve_unsolvable_exits_two() {
    let out = zeq(&["solve", &fixture("seven_max_times_e7.json")]);
    assert_eq!(code(&out), 2);
    let text = stdout_of(&out);
    assert!(text.contains("solvable: no"), "got: {text}");
    assert!(text.contains("reason: rho_bar=2 > lambda=1"), "got: {text}");
    assert!(text.contains("J nodes: {7}"), "got: {text}");
    assert!(!text.contains("least solution"), "got: {text}");
}

#[test]
fn solve_without_rhs_defaults_to_zero() {
    let out = zeq(&["solve", &fixture("no_rhs_max_times.json")]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("least solution: (0, 0)"), "got: {text}");
    assert!(text.contains("unique: yes"), "got: {text}");
}

#[test]
fn solve_lambda_override() {
    let out = zeq(&["solve", &fixture("seven_max_times.json"), "--lambda", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("lambda: 3"), "got: {text}");
    // 3 is not an eigenvalue, so the solution is unique; entries are b/3-ish
    // values produced by exact f64 division.
    assert!(text.contains("unique: yes"), "got: {text}");
    assert!(text.contains("0.3333333333333333"), "got: {text}");
}

#[test]
fn solve_json_matches_library_bit_for_bit() {
    for name in ["seven_max_times.json", "seven_nonnegative.json"] {
        let out = zeq(&["solve", &fixture(name), "--format", "json"]);
        assert_eq!(code(&out), 0);
        let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();

        let id = doc["semiring"].as_str().unwrap();
        let ctx = SemiringId::parse(id).unwrap();
        let b = Vector::new(ctx, vec![0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
        let p = ZProblem::new(seven(ctx), b, 1.0).unwrap();
        let report = solve_report(&p);

        assert_eq!(
            doc["rho_bar"].as_f64().unwrap().to_bits(),
            report.rho_bar.to_bits(),
            "{name}: rho_bar differs from the library"
        );
        let least = report.least.expect("reference problem is solvable");
        let printed = doc["least"].as_array().unwrap();
        assert_eq!(printed.len(), least.len());
        for (shown, computed) in printed.iter().zip(least.as_slice()) {
            assert_eq!(
                shown.as_f64().unwrap().to_bits(),
                computed.to_bits(),
                "{name}: least solution entry differs from the library"
            );
        }
        assert_eq!(doc["solvable"].as_bool().unwrap(), report.solvable);
        assert_eq!(doc["unique"].as_bool().unwrap(), report.unique);
    }
}

#[test]
fn spectrum_reference_text() {
    let out = zeq(&["spectrum", &fixture("seven_max_times.json")]);
    assert_eq!(code(&out), 0);
    let expected = "\
semiring: max-times
classes: 7
  class 1: nodes {1}, root 1
  class 2: nodes {2}, root 1
  class 3: nodes {3}, root 1
  class 4: nodes {4}, root 0
  class 5: nodes {5}, root 0
  class 6: nodes {6}, root 0
  class 7: nodes {7}, root 2
rho: 2
Lambda: {0, 1, 2}
spectral at 0: classes {4, 6}
spectral at 1: classes {1, 3}
spectral at 2: classes {7}
basis at 1 (columns from nodes {1, 3}):
  (1, 0, 1, 0, 0, 1, 0)
  (0, 0, 1, 0, 0, 1, 0)
basis at 2 (columns from nodes {7}):
  (0, 0, 0, 0, 0, 0, 1)
";
    assert_eq!(stdout_of(&out), expected);
}

#[test]
fn spectrum_json_matches_library() {
    let out = zeq(&["spectrum", &fixture("seven_max_times.json"), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();

    let data = zeq_core::spectral::spectral_data(&seven(SemiringId::MaxTimes)).unwrap();

    let shown: Vec<u64> = doc["lambda_set"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap().to_bits())
        .collect();
    let computed: Vec<u64> = data.lambdas().iter().map(|x| x.to_bits()).collect();
    assert_eq!(shown, computed);
    assert_eq!(
        doc["rho"].as_f64().unwrap().to_bits(),
        data.rho.to_bits()
    );
}

#[test]
fn spectrum_rejects_lattice_instances() {
    let out = zeq(&["spectrum", &fixture("lattice_max_min.json")]);
    assert_eq!(code(&out), 1);
    assert!(
        stderr_of(&out).contains("spectral analysis unsupported for this semiring"),
        "got: {}",
        stderr_of(&out)
    );
}

#[test]
fn fnf_reference_text() {
    let out = zeq(&["fnf", &fixture("seven_max_times.json")]);
    assert_eq!(code(&out), 0);
    let expected = "\
semiring: max-times
classes: 7
  class 1: nodes {1}, root 1
  class 2: nodes {2}, root 1
  class 3: nodes {3}, root 1
  class 4: nodes {4}, root 0
  class 5: nodes {5}, root 0
  class 6: nodes {6}, root 0
  class 7: nodes {7}, root 2
permutation: (1, 2, 3, 4, 5, 6, 7)
reduced arcs: 3->1, 4->2, 5->2, 6->3, 6->4, 7->5
";
    assert_eq!(stdout_of(&out), expected);
}

#[test]
fn star_divergent_closure_still_exits_zero() {
    let out = zeq(&["star", &fixture("seven_max_times.json")]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("spectral radius: 2"), "got: {text}");
    assert!(
        text.contains("closure: diverged (convergence requires spectral radius <= 1)"),
        "got: {text}"
    );
    // The affine iteration still reaches a fixed point for this right-hand side.
    assert!(text.contains("A*b (2 iterations): (0, 0, 0, 1, 0, 1, 0)"), "got: {text}");
}

#[test]
fn star_zero_matrix_closure_is_identity() {
    let out = zeq(&["star", &fixture("zero_nonnegative.json"), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["converged"].as_bool().unwrap(), true);
    assert_eq!(doc["radius"].as_f64().unwrap(), 0.0);
    assert_eq!(doc["closure"], serde_json::json!([[1.0, 0.0], [0.0, 1.0]]));
}

#[test]
fn star_lattice_instance_converges() {
    let out = zeq(&["star", &fixture("lattice_max_min.json")]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("closure ("), "got: {text}");
    assert!(text.contains("A*b (3 iterations): (0.5, 0.5, 0.5)"), "got: {text}");
}

#[test]
fn decompose_reference() {
    let out = zeq(&[
        "decompose",
        &fixture("seven_max_times.json"),
        &fixture("solution_y1.json"),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("least part: (0, 0, 0, 1, 0, 1, 0)"), "got: {text}");
    assert!(text.contains("eigen part: (2, 0, 3, 0, 0, 3, 0)"), "got: {text}");

    let out = zeq(&[
        "decompose",
        &fixture("seven_nonnegative.json"),
        &fixture("solution_y2.json"),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("least part: (0, 0, 0, 1, 0, 1, 0)"), "got: {text}");
    assert!(text.contains("eigen part: (0, 0, 1, 0, 0, 1, 0)"), "got: {text}");
}

#[test]
fn decompose_rejects_non_solution() {
    let out = zeq(&[
        "decompose",
        &fixture("seven_max_times.json"),
        &fixture("solution_not.json"),
    ]);
    assert_eq!(code(&out), 1);
    assert!(
        stderr_of(&out).contains("not a solution"),
        "got: {}",
        stderr_of(&out)
    );
}

#[test]
fn rejects_unknown_semiring_id() {
    let out = zeq(&["solve", &fixture("bad_semiring.json")]);
    assert_eq!(code(&out), 1);
    let err = stderr_of(&out);
    assert!(err.contains("unknown semiring id \"boolean\""), "got: {err}");
    assert!(
        err.contains("max-times, nonnegative, max-min, lukasiewicz"),
        "got: {err}"
    );
}

#[test]
fn rejects_mismatched_rhs_length() {
    let out = zeq(&["solve", &fixture("bad_rhs_len.json")]);
    assert_eq!(code(&out), 1);
    assert!(
        stderr_of(&out).contains("b has 3 entries but the matrix is 2x2"),
        "got: {}",
        stderr_of(&out)
    );
}

#[test]
fn missing_file_is_an_error() {
    let out = zeq(&["solve", &fixture("does_not_exist.json")]);
    assert_eq!(code(&out), 1);
    assert!(stderr_of(&out).contains("cannot read"), "got: {}", stderr_of(&out));
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    let out = zeq(&["solve"]);
    assert_eq!(code(&out), 1, "missing argument should be a usage error");

    let out = zeq(&["frobnicate"]);
    assert_eq!(code(&out), 1, "unknown subcommand should be a usage error");

    let out = zeq(&["solve", &fixture("seven_max_times.json"), "--no-such-flag"]);
    assert_eq!(code(&out), 1, "unknown flag should be a usage error");

    let out = zeq(&["--help"]);
    assert_eq!(code(&out), 0, "--help is not an error");
    assert!(stdout_of(&out).contains("solve"));

    let out = zeq(&["--version"]);
    assert_eq!(code(&out), 0, "--version is not an error");
}

#[test]
fn output_is_byte_for_byte_deterministic() {
    for args in [
        vec!["solve", &fixture("seven_max_times.json")[..]],
        vec!["solve", &fixture("seven_nonnegative.json")[..], "--format", "json"],
        vec!["spectrum", &fixture("seven_max_times.json")[..], "--format", "json"],
        vec!["star", &fixture("lattice_max_min.json")[..]],
    ] {
        let first = zeq(&args);
        let second = zeq(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert_eq!(code(&first), code(&second));
    }
}
