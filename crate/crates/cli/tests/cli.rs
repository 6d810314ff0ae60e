//! End-to-end tests of the `pursuit` binary: pipelines, formats, and exit
//! codes. Each test drives the compiled binary through its public surface
//! exactly as a shell user would.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn pursuit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pursuit"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = pursuit()
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
        .write_all(stdin.as_bytes())
        .expect("stdin writes");
    child.wait_with_output().expect("binary exits")
}

fn run(args: &[&str]) -> Output {
    run_with_stdin(args, "")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn build_dodecahedron_document() {
    let out = run(&["build", "dodecahedron"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["n"], 20);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 30);
    assert_eq!(doc["faces"].as_array().unwrap().len(), 12);
}

#[test]
fn build_quadrangulation_counts() {
    let out = run(&["build", "quadrangulation"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 182);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 360);
    assert_eq!(doc["faces"].as_array().unwrap().len(), 180);
}

#[test]
fn build_kite_graph_counts_and_alias() {
    for target in ["kite-graph", "Qprime"] {
        let out = run(&["build", target]);
        assert_eq!(code(&out), 0);
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(doc["n"], 182);
        assert_eq!(doc["edges"].as_array().unwrap().len(), 720);
        assert_eq!(doc["crossings"].as_array().unwrap().len(), 180);
    }
}

#[test]
fn copnumber_pipeline_reports_exceeds_two_on_quadrangulation() {
    let quad = stdout(&run(&["build", "Q"]));
    let out = run_with_stdin(&["copnumber", "--max", "2"], &quad);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(
        stdout(&out).contains("cop_number=exceeds 2"),
        "got: {}",
        stdout(&out)
    );
}

#[test]
fn solve_dodecahedron_with_three_cops_is_a_cop_win() {
    let dodeca = stdout(&run(&["build", "dodecahedron"]));
    let out = run_with_stdin(&["solve", "--cops", "3"], &dodeca);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("cop_win=true"), "got: {text}");
    let out = run_with_stdin(&["solve", "--cops", "2"], &dodeca);
    assert!(stdout(&out).contains("cop_win=false"));
}

#[test]
fn budget_override_trips_exit_code_three() {
    let dodeca = stdout(&run(&["build", "dodecahedron"]));
    let mut child = pursuit()
        .args(["solve", "--cops", "2"])
        .env("PURSUIT_BUDGET_STATES", "10")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(dodeca.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 3, "{}", stderr(&out));
}

#[test]
fn unknown_subcommand_and_bad_target_are_usage_errors() {
    let out = run(&["frobnicate"]);
    assert_eq!(code(&out), 2);
    let out = run(&["build", "no-such-graph"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown build target"));
}

#[test]
fn simulate_greedy_cop_catches_stationary_robber() {
    let path_doc = r#"{"n": 4, "edges": [[0,1],[1,2],[2,3]]}"#;
    let out = run_with_stdin(
        &[
            "simulate",
            "--cops",
            "greedy",
            "--robber",
            "stationary",
            "--start",
            "3",
            "--rounds",
            "10",
        ],
        path_doc,
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("outcome=CAPTURED"), "got: {text}");
    assert!(text.starts_with("0;0;3\n"), "transcript starts with placement: {text}");
}

#[test]
fn simulate_escape_robber_survives_on_quadrangulation() {
    let quad = stdout(&run(&["build", "quadrangulation"]));
    let out = run_with_stdin(
        &[
            "simulate",
            "--cops",
            "seeded",
            "--cop-count",
            "2",
            "--seed",
            "7",
            "--robber",
            "escape",
            "--rounds",
            "200",
        ],
        &quad,
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("outcome=SURVIVED rounds=200"));
}

#[test]
fn simulate_escape_robber_on_kite_graph_reports_claim_violation() {
    let kite = stdout(&run(&["build", "kite-graph"]));
    let out = run_with_stdin(
        &[
            "simulate",
            "--cops",
            "optimal",
            "--cop-count",
            "2",
            "--robber",
            "escape",
            "--rounds",
            "500",
        ],
        &kite,
    );
    assert_eq!(code(&out), 1, "expected exit 1, stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("CLAIM_VIOLATION"), "{}", stderr(&out));
}

#[test]
fn simulate_seeded_requires_seed() {
    let quad = stdout(&run(&["build", "Q"]));
    let out = run_with_stdin(
        &[
            "simulate",
            "--cops",
            "seeded",
            "--cop-count",
            "2",
            "--robber",
            "escape",
            "--rounds",
            "5",
        ],
        &quad,
    );
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--seed"));
}

#[test]
fn one_planarize_petersen_pipeline() {
    let drawing = stdout(&run(&["build", "petersen-drawing"]));
    let out = run_with_stdin(&["build", "one-planarize"], &drawing);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 40);
    assert_eq!(doc["crossings"].as_array().unwrap().len(), 5);
    // The planarized graph still needs three cops.
    let out = run_with_stdin(&["copnumber", "--max", "3"], &stdout(&out));
    assert!(stdout(&out).contains("cop_number=3"));
}

#[test]
fn export_dot_is_stable_and_styles_crossings() {
    let kite = stdout(&run(&["build", "kite-graph"]));
    let a = run_with_stdin(&["export", "--format", "dot"], &kite);
    let b = run_with_stdin(&["export", "--format", "dot"], &kite);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b), "DOT export must be deterministic");
    let text = stdout(&a);
    assert!(text.starts_with("graph pursuit {"));
    assert!(text.contains("[style=dashed]"), "crossing edges are dashed");
    assert!(text.contains("class=\"D_VERTEX\""));
    assert!(text.contains("class=\"EDGE_MID\""));
}

#[test]
fn export_json_canonicalizes() {
    let messy = r#"{"n": 3, "edges": [[2,1],[1,0],[0,2]]}"#;
    let out = run_with_stdin(&["export", "--format", "json"], messy);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let edges: Vec<(u64, u64)> = doc["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e[0].as_u64().unwrap(), e[1].as_u64().unwrap()))
        .collect();
    assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2)]);
}

#[test]
fn transcript_round_trips_through_export() {
    let dir = std::env::temp_dir().join(format!("pursuit-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let tpath = dir.join("game.transcript");
    let path_doc = r#"{"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4]]}"#;
    let out = run_with_stdin(
        &[
            "simulate",
            "--cops",
            "greedy",
            "--robber",
            "stationary",
            "--start",
            "4",
            "--rounds",
            "10",
            "--transcript-out",
            tpath.to_str().unwrap(),
        ],
        path_doc,
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let saved = std::fs::read_to_string(&tpath).unwrap();
    let out = run_with_stdin(
        &[
            "export",
            "--format",
            "transcript",
            "--transcript",
            tpath.to_str().unwrap(),
        ],
        path_doc,
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).starts_with(&saved), "replay echoes the transcript");
    assert!(stdout(&out).contains("outcome=CAPTURED"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_solver_oracles_passes() {
    let out = run(&["verify", "solver-oracles", "--seed", "1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("VERDICT tree-cop-number PASS"));
    assert!(text.contains("VERDICT dismantlable-iff-one-cop PASS"));
}

#[test]
fn verify_unknown_check_is_usage_error() {
    let out = run(&["verify", "bogus"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("available:"));
}

#[test]
fn simulate_outer_robber_survives_on_twisted_cycle() {
    // Outer drawing with a chordless 4-cycle 0-3-1-4 whose layout makes it
    // non-chordal yet valid at one crossing per edge.
    let doc = r#"{"n": 6, "edges": [[0,3],[0,4],[0,5],[1,2],[1,3],[1,4],[2,3],[4,5]], "outer": true}"#;
    let out = run_with_stdin(
        &[
            "simulate",
            "--cops",
            "optimal",
            "--cop-count",
            "1",
            "--robber",
            "outer",
            "--rounds",
            "300",
        ],
        doc,
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("outcome=SURVIVED rounds=300"));
}
