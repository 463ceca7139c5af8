//! End-to-end tests of the command-line surface: JSON schemas, exit codes,
//! determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn visikit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_visikit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn visikit_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_visikit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin written");
    child.wait_with_output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn visibility_of_the_interleaved_family_has_thirty_edges() {
    let out = visikit(&["visibility", "--kind", "cyl", "--k", "1", "--lengths", "1,6,2,7,3,8,4,9,5,10"]);
    let v = stdout_json(&out);
    assert_eq!(v["n"], 10);
    assert_eq!(v["edges"].as_array().unwrap().len(), 30);
}

#[test]
fn visibility_tsv_lists_edges() {
    let out = visikit(&["visibility", "--kind", "flat", "--k", "0", "--lengths", "2,1,3", "--format", "tsv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "n\t3\n0\t1\n0\t2\n1\t2\n");
}

#[test]
fn oracle_spot_check() {
    let out = visikit(&["oracle", "--kind", "flat", "--k", "0", "--lengths", "2,1,3", "--pair", "0,2"]);
    assert_eq!(stdout_json(&out)["visible"], true);
    let out = visikit(&["oracle", "--kind", "flat", "--k", "0", "--lengths", "1,2,3", "--pair", "0,2"]);
    assert_eq!(stdout_json(&out)["visible"], false);
}

#[test]
fn embed_then_check_quasiplanar_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let drawing = dir.path().join("drawing.json");
    let out = visikit(&[
        "embed",
        "--k",
        "1",
        "--lengths",
        "1,6,2,7,3,8,4,9,5,10",
        "--output",
        drawing.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = visikit(&["check-quasiplanar", "--k", "1", "--drawing", drawing.to_str().unwrap()]);
    assert_eq!(stdout_json(&out)["quasiplanar"], true);
    let out = visikit(&["check-maximal", "--k", "1", "--drawing", drawing.to_str().unwrap()]);
    assert_eq!(stdout_json(&out)["maximal"], true);
}

#[test]
fn peel_square_with_diagonal() {
    let out = visikit_stdin(
        &["peel", "--k", "0"],
        r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3],[0,2]]}"#,
    );
    let v = stdout_json(&out);
    assert_eq!(v["output"]["kind"], "cyl");
    assert_eq!(v["output"]["lengths"], serde_json::json!([2, 1, 3, 4]));
    assert_eq!(v["steps"][0]["vertex"], 1);
    assert_eq!(v["steps"][0]["length"], 1);
    assert_eq!(v["steps"][0]["degree"], 2);
    assert_eq!(v["steps"][0]["forced"], false);
}

#[test]
fn peel_refuses_non_maximal_without_force() {
    let hull = r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#;
    let out = visikit_stdin(&["peel", "--k", "0"], hull);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not maximal"));

    let out = visikit_stdin(&["peel", "--k", "0", "--force"], hull);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not match"));
}

#[test]
fn flat_peel_triangle() {
    let out = visikit_stdin(&["flat-peel"], r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#);
    let v = stdout_json(&out);
    assert_eq!(v["output"]["kind"], "flat");
    assert_eq!(v["output"]["lengths"], serde_json::json!([2, 1, 3]));
}

#[test]
fn gen_families() {
    let out = visikit(&["gen", "--family", "forced-peel", "--k", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["lengths"], serde_json::json!([1, 6, 2, 7, 3, 8, 4, 9, 5, 10]));

    let out = visikit(&["gen", "--family", "k-complete", "--k", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["lengths"], serde_json::json!([1, 2, 3, 4, 5, 6, 7]));

    let out = visikit(&["gen", "--family", "counterexample", "--k", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["n"], 8);
    assert_eq!(v["edges"], serde_json::json!([[0, 5], [1, 4], [2, 7], [3, 6]]));
}

#[test]
fn gen_random_is_seed_deterministic() {
    let a = visikit(&["gen", "--family", "random", "--n", "9", "--k", "2", "--seed", "7"]);
    let b = visikit(&["gen", "--family", "random", "--n", "9", "--k", "2", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = visikit(&["gen", "--family", "random", "--n", "9", "--k", "2", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn curl_and_cut_round_trip() {
    let out = visikit(&["curl", "--k", "0", "--lengths", "2,1,3", "--kind", "flat"]);
    let v = stdout_json(&out);
    assert_eq!(v["kind"], "cyl");
    assert_eq!(v["lengths"], serde_json::json!([2, 1, 3]));

    let out = visikit(&["cut", "--k", "0", "--lengths", "2,3,1"]);
    let v = stdout_json(&out);
    assert_eq!(v["kind"], "flat");
    assert_eq!(v["lengths"], serde_json::json!([2, 1, 3]));
}

#[test]
fn cut_domain_error_exits_one() {
    let out = visikit(&["cut", "--k", "0", "--lengths", "5,1,4,2,3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("two longest not adjacent"));
}

#[test]
fn curl_preserves_reports_the_criterion() {
    let out = visikit(&["curl-preserves", "--k", "0", "--lengths", "2,1,3", "--kind", "flat"]);
    let v = stdout_json(&out);
    assert_eq!(v["curl_preserves"], true);
    assert_eq!(v["n_below_2k_plus_2"], false);

    let out = visikit(&["curl-preserves", "--k", "0", "--lengths", "1,2,3", "--kind", "flat"]);
    assert_eq!(stdout_json(&out)["curl_preserves"], false);

    // n = 3 < 2k+2 = 4: flagged, criterion reduces to completeness
    let out = visikit(&["curl-preserves", "--k", "1", "--lengths", "3,1,2", "--kind", "flat"]);
    let v = stdout_json(&out);
    assert_eq!(v["curl_preserves"], true);
    assert_eq!(v["n_below_2k_plus_2"], true);
}

#[test]
fn jpairs_diameters_of_the_octagon() {
    let out = visikit(&["jpairs", "--n", "8", "--j", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v, serde_json::json!([[0, 4], [1, 5], [2, 6], [3, 7]]));
}

#[test]
fn max_edges_formula() {
    let out = visikit(&["max-edges", "--n", "10", "--k", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["max_edges"], 30);
}

#[test]
fn degeneracy_and_color_of_k5() {
    let k5 = r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#;
    let out = visikit_stdin(&["degeneracy"], k5);
    let v = stdout_json(&out);
    assert_eq!(v["degeneracy"], 4);
    assert_eq!(v["order"], serde_json::json!([0, 1, 2, 3, 4]));

    let out = visikit_stdin(&["color"], k5);
    let v = stdout_json(&out);
    assert_eq!(v["num_colors"], 5);
}

#[test]
fn complete_extends_the_hull() {
    let out = visikit_stdin(
        &["complete", "--k", "0"],
        r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#,
    );
    let v = stdout_json(&out);
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 5);
    assert!(edges.contains(&serde_json::json!([0, 2])));
}

#[test]
fn forced_peel_analysis_reports_the_boundary_tie() {
    let dir = tempfile::tempdir().unwrap();
    let drawing = dir.path().join("family.json");
    let out = visikit(&[
        "gen", "--family", "forced-peel", "--k", "1", "--output", dir.path().join("arr.json").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = visikit(&[
        "embed", "--k", "1", "--input", dir.path().join("arr.json").to_str().unwrap(),
        "--output", drawing.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = visikit(&[
        "forced-peel-analysis", "--k", "1", "--steps", "5", "--drawing", drawing.to_str().unwrap(),
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["forced"], serde_json::json!([true, true, true, true, false]));
    assert_eq!(v["all_forced"], false);
    assert_eq!(v["adjacent_longest_pair"], serde_json::json!([7, 8]));
}

#[test]
fn export_svg_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    let arrangement = r#"{"kind":"cyl","k":1,"lengths":[1,6,2,7,3,8,4,9,5,10]}"#;
    for path in [&a, &b] {
        let out = visikit_stdin(&["export-svg", "--output", path.to_str().unwrap()], arrangement);
        assert!(out.status.success());
    }
    let svg_a = std::fs::read_to_string(&a).unwrap();
    let svg_b = std::fs::read_to_string(&b).unwrap();
    assert_eq!(svg_a, svg_b);
    assert!(svg_a.starts_with("<svg "));
    assert_eq!(svg_a.matches("<line").count(), 10);

    let out = visikit_stdin(&["export-svg"], r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("<circle").count(), 3);
}

#[test]
fn malformed_input_exits_two() {
    let out = visikit_stdin(&["check-quasiplanar", "--k", "0"], "{not json");
    assert_eq!(out.status.code(), Some(2));

    let out = visikit_stdin(&["visibility"], r#"{"kind":"cyl","k":0,"lengths":[1,0,2]}"#);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lengths[1]"));

    let out = visikit_stdin(&["degeneracy"], r#"{"n":2,"edges":[[0,0]]}"#);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop"));

    let out = visikit(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));

    let out = visikit(&["check-quasiplanar", "--drawing", "/nonexistent/never.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot read"));
}

#[test]
fn json_parse_serialize_round_trip() {
    let arrangement = r#"{"kind":"cyl","k":1,"lengths":[1,6,2]}"#;
    let out = visikit_stdin(&["curl"], arrangement);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), arrangement);
}

#[test]
fn verify_subcommand_reports_all_criteria() {
    let out = visikit(&["verify", "--max-n", "5", "--random", "5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("criterion")).collect();
    assert_eq!(lines.len(), 9, "{text}");
    assert_eq!(lines.iter().filter(|l| l.contains("PASS")).count(), 8);
    // the forced-peel check carries the documented boundary tie
    assert!(lines[6].contains("FAIL") && lines[6].contains("eligible vertices [3, 8]"), "{}", lines[6]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_honors_the_env_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_visikit"))
        .args(["verify", "--random", "2"])
        .env("VISIKIT_MAX_N", "3")
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("criterion 1")), "{text}");
}
