//! End-to-end tests of the `tvlab` binary: golden outputs, determinism of
//! verification reports, and exit-code conventions (0 success, 1 failed
//! verification, 2 usage or input errors).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn tvlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tvlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("utf-8 stderr")
}

fn write_file(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).expect("scratch file writes");
    path
}

const SQUARE: &str = "points v1 2 4\n0 0\n1 0\n0 1\n1 1\n";

#[test]
fn chessboard_build_prints_canonical_text() {
    let out = tvlab(&["complex", "build", "chessboard", "--m", "2", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "simplicial v1 6\n0 4\n0 5\n1 3\n1 5\n2 3\n2 4\n"
    );
}

#[test]
fn homology_reports_a_circle_for_the_hexagon_board() {
    let dir = tempfile::tempdir().expect("tempdir");
    let board = dir.path().join("c23.cx");
    let out = tvlab(&[
        "complex", "build", "chessboard", "--m", "2", "--n", "3",
        "--output", board.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = tvlab(&["homology", "--input", board.to_str().unwrap()]);
    assert!(out.status.success());
    let groups: Value = serde_json::from_str(stdout_of(&out)).expect("JSON report");
    assert_eq!(
        groups,
        serde_json::json!([
            {"degree": 0, "betti": 1, "torsion": []},
            {"degree": 1, "betti": 1, "torsion": []}
        ])
    );
}

#[test]
fn radon_splits_the_unit_square_through_its_center() {
    let dir = tempfile::tempdir().expect("tempdir");
    let pts = write_file(dir.path(), "square.pts", SQUARE);
    let out = tvlab(&["radon", "--input", pts.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "{\"parts\":[[0,3],[1,2]],\"point\":[\"1/2\",\"1/2\"],\
         \"coefficients\":[[\"1/2\",\"1/2\"],[\"1/2\",\"1/2\"]]}\n"
    );
}

#[test]
fn degree_of_the_three_column_collapse_is_two() {
    let out = tvlab(&["degree", "--p", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"p\":3,\"degree\":2}\n");
}

#[test]
fn witness_configuration_has_no_partition() {
    let dir = tempfile::tempdir().expect("tempdir");
    let pts = dir.path().join("w23.pts");
    let out = tvlab(&[
        "complex", "build", "witness", "--d", "2", "--r", "3",
        "--output", pts.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = tvlab(&[
        "tverberg", "--input", pts.to_str().unwrap(), "--r", "3", "--exhaustive",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"result\": \"none\"}\n");
}

#[test]
fn collinear_points_partition_into_nested_intervals() {
    let dir = tempfile::tempdir().expect("tempdir");
    let pts = write_file(dir.path(), "line5.pts", "points v1 1 5\n3\n1\n4\n1\n5\n");
    let out = tvlab(&["tverberg", "--input", pts.to_str().unwrap(), "--r", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "{\"parts\":[[0],[1,2],[3,4]],\"point\":[\"3\"],\
         \"coefficients\":[[\"1\"],[\"1/3\",\"2/3\"],[\"1/2\",\"1/2\"]]}\n"
    );
}

#[test]
fn dimension_cap_limits_part_sizes() {
    let dir = tempfile::tempdir().expect("tempdir");
    // Two coincident pairs: capped at single-vertex parts, only the
    // duplicates can meet.
    let pts = write_file(dir.path(), "dup.pts", "points v1 2 4\n2 2\n2 2\n5 0\n0 5\n");
    let out = tvlab(&[
        "tverberg", "--input", pts.to_str().unwrap(), "--r", "2", "--max-dim", "0",
    ]);
    assert!(out.status.success());
    let cert: Value = serde_json::from_str(stdout_of(&out)).expect("certificate JSON");
    assert_eq!(cert["parts"], serde_json::json!([[0], [1]]));

    let square = write_file(dir.path(), "square.pts", SQUARE);
    let out = tvlab(&[
        "tverberg", "--input", square.to_str().unwrap(), "--r", "2", "--max-dim", "0",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"result\": \"none\"}\n");
}

#[test]
fn verification_reports_are_byte_identical_for_equal_seeds() {
    let first = tvlab(&["verify", "radon-random", "--seed", "5"]);
    let second = tvlab(&["verify", "radon-random", "--seed", "5"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let report: Value = serde_json::from_str(stdout_of(&first)).expect("JSON report");
    assert_eq!(report["suite"], "radon-random");
    assert_eq!(report["seed"], 5);
    assert_eq!(report["pass"], true);
    assert_eq!(report["checks"].as_array().map(Vec::len), Some(5));
}

#[test]
fn verification_report_is_independent_of_worker_count() {
    let serial = tvlab(&["verify", "witness-none", "--seed", "3", "--jobs", "1"]);
    let parallel = tvlab(&["verify", "witness-none", "--seed", "3", "--jobs", "4"]);
    assert!(serial.status.success());
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn human_readable_report_prints_a_table() {
    let out = tvlab(&["verify", "witness-none", "--human"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("suite witness-none: PASS"));
    assert!(text.contains("witness-d2-r3"));
}

#[test]
fn deleted_join_json_mirror_feeds_back_into_homology() {
    let dir = tempfile::tempdir().expect("tempdir");
    let board = dir.path().join("c23.cx");
    let mirror = dir.path().join("dj.json");
    assert!(tvlab(&[
        "complex", "build", "chessboard", "--m", "2", "--n", "3",
        "--output", board.to_str().unwrap(),
    ])
    .status
    .success());
    assert!(tvlab(&[
        "complex", "build", "deleted-join", "--input", board.to_str().unwrap(),
        "--r", "2", "--json", "--output", mirror.to_str().unwrap(),
    ])
    .status
    .success());
    let out = tvlab(&["homology", "--input", mirror.to_str().unwrap()]);
    assert!(out.status.success());
    let groups: Value = serde_json::from_str(stdout_of(&out)).expect("JSON report");
    assert_eq!(groups[0]["betti"], 1);
}

#[test]
fn malformed_coordinates_report_file_and_line() {
    let dir = tempfile::tempdir().expect("tempdir");
    let pts = write_file(dir.path(), "bad.pts", "points v1 2 3\n0 0\n1 0\nx y\n");
    let out = tvlab(&["radon", "--input", pts.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("line 4"), "stderr: {err}");
    assert!(err.contains("bad integer"), "stderr: {err}");
}

#[test]
fn radon_rejects_wrong_point_count() {
    let dir = tempfile::tempdir().expect("tempdir");
    let pts = write_file(dir.path(), "three.pts", "points v1 2 3\n0 0\n1 0\n0 1\n");
    let out = tvlab(&["radon", "--input", pts.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("expected 4 points"));
}

#[test]
fn composite_modulus_is_rejected() {
    let dir = tempfile::tempdir().expect("tempdir");
    let board = dir.path().join("c23.cx");
    assert!(tvlab(&[
        "complex", "build", "chessboard", "--m", "2", "--n", "3",
        "--output", board.to_str().unwrap(),
    ])
    .status
    .success());
    let out = tvlab(&[
        "homology", "--input", board.to_str().unwrap(), "--mod-p", "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("prime"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = tvlab(&["verify", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}
