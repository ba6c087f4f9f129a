use std::process::Command;

use homalg_harness::report::Report;
use homalg_harness::scenarios::{list_scenarios, run_scenario, Overrides};
use serde_json::Value;

fn homalg(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_homalg")).args(args).output().expect("binary runs")
}

#[test]
fn list_is_stable() {
    let out = homalg(&["list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let ids: Vec<&str> = text.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    let expected: Vec<&str> = list_scenarios().iter().map(|s| s.id).collect();
    assert_eq!(ids, expected);
    assert_eq!(ids[0], "koszul-counterexample-p2");
}

#[test]
fn json_schema() {
    let out = homalg(&["run", "main-example-tor", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["scenario"], "main-example-tor");
    assert_eq!(v["parameters"]["weight"], 4);
    for c in v["claims"].as_array().unwrap() {
        for key in ["id", "paper_ref", "expected", "provenance", "computed", "status"] {
            assert!(c[key].is_string(), "{key} in {c}");
        }
        assert!(c["ms"].is_u64());
        assert!(["PAPER", "TRIVIAL", "DERIVED"].contains(&c["provenance"].as_str().unwrap()));
    }
    let r: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.claim("H3").unwrap().computed, "(Z/2)^4");
}

#[test]
fn text_mirrors_json() {
    let out = homalg(&["run", "class2-pbw", "--text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let r = run_scenario("class2-pbw", Overrides::default()).unwrap();
    assert_eq!(text.lines().count(), r.claims.len() + 1);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(homalg(&["run", "no-such-scenario"]).status.code(), Some(2));
    let out = homalg(&["run", "main-example-tor", "--weight", "40"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("1..=6"));
    assert_eq!(homalg(&["module", "bogus", "--op", "dim"]).status.code(), Some(2));
}

#[test]
fn claim_ids_unique_per_report() {
    for s in list_scenarios() {
        if ["koszul-pid-acyclic", "purity-probes", "koszul-homotopy"].contains(&s.id) {
            continue;
        }
        let r = run_scenario(s.id, Overrides::default()).unwrap();
        let mut ids: Vec<&str> = r.claims.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n, "{}", s.id);
        assert!(!r.failed(), "{}", s.id);
    }
}

#[test]
fn module_command() {
    let out = homalg(&["module", "diagonal:p=2,n=3", "--op", "wedge-kernel", "--n", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("dim 1"));
    let json = r#"{"p":2,"m":3,"rank":3,"relations":[[1,1,0],[1,2,1],[1,4,2]]}"#;
    let out = homalg(&["module", json, "--op", "dim"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "dim 17");
}

#[test]
fn lie_command() {
    let out = homalg(&["lie", "heisenberg", "--degree", "2"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "H_2 Z^2");
}

#[test]
fn matrix_command() {
    let dir = std::env::temp_dir().join(format!("homalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.txt");
    std::fs::write(&path, "2 2 Z\n2 4\n6 8\n").unwrap();
    let p = path.to_str().unwrap();
    let snf = homalg(&["matrix", p, "--op", "snf"]);
    assert_eq!(String::from_utf8(snf.stdout).unwrap().trim(), "[2, 4]");
    let rank = homalg(&["matrix", p, "--op", "rank"]);
    assert_eq!(String::from_utf8(rank.stdout).unwrap().trim(), "2");
    std::fs::remove_dir_all(&dir).unwrap();
}
