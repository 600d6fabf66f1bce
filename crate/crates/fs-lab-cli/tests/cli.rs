//! End-to-end checks of the binary: spec'd invocations, exit codes, and the
//! determinism guarantee across thread counts.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fs_lab::constructions::{theta_zero, Sidecar};
use fs_lab::graph::Graph;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fs-lab"))
}

fn tmpfile(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn construct_theta0_prints_the_fixture_graph() {
    let out = bin().args(["construct", "theta0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let g: Graph = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(g, theta_zero());
}

#[test]
fn components_census_is_byte_identical_across_thread_counts() {
    let k22 = tmpfile("k22.json");
    let out = bin()
        .args(["construct", "complete_bipartite", "--r", "2"])
        .arg("--out")
        .arg(&k22)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let mut runs = Vec::new();
    for threads in ["1", "4"] {
        let out = bin()
            .arg("components")
            .arg(&k22)
            .arg(&k22)
            .args(["--threads", threads])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
        assert!(
            stderr_of(&out).contains(&format!("threads={threads}")),
            "run must log its thread count"
        );
        runs.push(out.stdout);
    }
    assert_eq!(runs[0], runs[1], "censuses must not depend on thread count");

    let text = String::from_utf8(runs[0].clone()).unwrap();
    assert!(text.contains("\"num_components\":2"));
    assert!(text.contains("\"sizes\":[12,12]"));
}

#[test]
fn thread_count_env_var_is_honored() {
    let k22 = tmpfile("k22-env.json");
    bin()
        .args(["construct", "complete_bipartite", "--r", "2"])
        .arg("--out")
        .arg(&k22)
        .output()
        .unwrap();
    let out = bin()
        .arg("components")
        .arg(&k22)
        .arg(&k22)
        .env("FS_LAB_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr_of(&out).contains("threads=2"));
}

#[test]
fn oversized_census_is_refused_with_a_memory_estimate() {
    let k11 = tmpfile("k11.json");
    bin()
        .args(["construct", "complete", "--n", "11"])
        .arg("--out")
        .arg(&k11)
        .output()
        .unwrap();
    let out = bin().arg("components").arg(&k11).arg(&k11).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("MiB"), "cap refusal must estimate memory: {err}");
}

#[test]
fn classify_reports_wilson_classes() {
    let k23 = tmpfile("k23.json");
    bin()
        .args(["construct", "complete_bipartite", "--r", "2", "--k", "3"])
        .arg("--out")
        .arg(&k23)
        .output()
        .unwrap();
    let out = bin().arg("classify").arg(&k23).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["wilsonian"], serde_json::Value::Bool(false));
    assert_eq!(report["almost_wilsonian"], serde_json::Value::Bool(true));
    assert_eq!(report["bipartite"], serde_json::Value::Bool(true));
}

#[test]
fn verify_prop_2_3_exits_zero() {
    let out = bin().args(["verify", "PROP_2_3", "--r", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["claim"], "PROP_2_3");
    assert_eq!(report["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_thm_1_10_spec_example_exits_zero() {
    let out = bin()
        .args(["verify", "THM_1_10", "--r", "4", "--trials", "50", "--seed", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    assert!(stderr_of(&out).contains("seed=1"));
}

#[test]
fn verify_thm_1_11_legal_triple_exits_zero() {
    let out = bin()
        .args(["verify", "THM_1_11", "--r", "3", "--d1", "2", "--d2", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
}

#[test]
fn verify_thm_1_11_illegal_triple_names_the_required_sum() {
    let out = bin()
        .args(["verify", "THM_1_11", "--r", "3", "--d1", "1", "--d2", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_of(&out).contains("4"),
        "the message must state the required degree sum: {}",
        stderr_of(&out)
    );
}

#[test]
fn unknown_claims_list_the_known_ids() {
    let out = bin().args(["verify", "THM_9_9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("THM_1_4") && err.contains("CONJ_8_1"), "{err}");
}

#[test]
fn missing_required_flag_exits_two() {
    let out = bin().args(["verify", "THM_1_10"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--r"));
}

#[test]
fn construct_pair_writes_three_loadable_files() {
    let stem = tmpfile("block-pair");
    let out = bin()
        .args(["construct", "thm_1_11", "--r", "2", "--d1", "1", "--d2", "2"])
        .arg("--out")
        .arg(&stem)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));

    let base = stem.display();
    let x: Graph = serde_json::from_str(
        &std::fs::read_to_string(format!("{base}.x.json")).unwrap(),
    )
    .unwrap();
    let y: Graph = serde_json::from_str(
        &std::fs::read_to_string(format!("{base}.y.json")).unwrap(),
    )
    .unwrap();
    let sidecar: Sidecar = serde_json::from_str(
        &std::fs::read_to_string(format!("{base}.sigma.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(x.n(), 4);
    assert_eq!(y.n(), 4);
    assert_eq!(sidecar.sigma.n(), 4);
}

#[test]
fn constructed_pair_replays_through_components() {
    // the block pair is the library's own disconnection witness, so the
    // census over its files must come back with more than two components
    let stem = tmpfile("replay-pair");
    bin()
        .args(["construct", "thm_1_11", "--r", "2", "--d1", "2", "--d2", "1"])
        .arg("--out")
        .arg(&stem)
        .output()
        .unwrap();
    let base = stem.display();
    let out = bin()
        .arg("components")
        .arg(format!("{base}.x.json"))
        .arg(format!("{base}.y.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let census: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(census["num_components"].as_u64().unwrap() >= 3);
}

#[test]
fn exchangeable_walks_a_star_instance() {
    let star = tmpfile("star5.json");
    let c5 = tmpfile("c5.json");
    bin()
        .args(["construct", "star", "--n", "5"])
        .arg("--out")
        .arg(&star)
        .output()
        .unwrap();
    bin()
        .args(["construct", "cycle", "--n", "5"])
        .arg("--out")
        .arg(&c5)
        .output()
        .unwrap();
    let out = bin()
        .arg("exchangeable")
        .arg(&star)
        .arg(&c5)
        .args(["--u", "0", "--v", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let result: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(result["exchangeable"].is_boolean());
    if result["exchangeable"].as_bool().unwrap() {
        assert!(result["swaps"].is_array(), "a reachable answer carries its walk");
    }
}

#[test]
fn random_constructions_are_reproducible() {
    let args = ["construct", "random", "--n", "8", "--min-degree", "5", "--seed", "7"];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let g: Graph = serde_json::from_str(&stdout_of(&a)).unwrap();
    assert_eq!(g.n(), 8);
    assert!(g.min_degree() >= 5);
}

#[test]
fn search_runs_the_open_conjecture_sweep() {
    let out = bin()
        .args(["search", "CONJ_8_1", "--n", "6", "--d1", "4", "--d2", "4", "--trials", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["claim"], "CONJ_8_1");
    assert_eq!(report["instances_checked"].as_u64(), Some(5));
}

#[test]
fn search_outside_the_boundary_region_is_a_usage_error() {
    let out = bin()
        .args(["search", "CONJ_8_1", "--n", "6", "--d1", "2", "--d2", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("2·min + 3·max") || stderr_of(&out).contains("region"));
}
