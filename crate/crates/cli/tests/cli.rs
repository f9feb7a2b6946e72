use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn locgame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locgame"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn lcapt_cycles_need_one_round_with_two_cops() {
    for m in 4..=8 {
        let name = format!("cycle:{m}");
        let out = locgame(&["lcapt", "--named", &name, "-k", "2"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), "1\n", "{name}");
    }
    // C_6 in graph6 (networkx encoding)
    let out = locgame(&["lcapt", "--graph6", "EhEG", "-k", "2"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn lcapt_values_follow_round_convention() {
    let out = locgame(&["lcapt", "--named", "example41", "-k", "1", "--json"]);
    let v = json(&out);
    assert_eq!(v["value"], 2);
    assert_eq!(v["structure_height"], 3);
    assert_eq!(v["consistent"], true);

    let out = locgame(&["lcapt", "--named", "star:4", "-k", "1"]);
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn lcapt_reads_edge_files_and_reports_infinity() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.txt");
    fs::write(&path, "# K_4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let p = path.to_str().unwrap();
    let out = locgame(&["lcapt", "--edges", p, "-k", "1"]);
    assert_eq!((out.status.code(), stdout(&out)), (Some(0), "inf\n".to_string()));
    let out = locgame(&["lcapt", "--edges", p, "-k", "3"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn exit_codes() {
    assert_eq!(locgame(&["lcapt", "--graph6", "zzz"]).status.code(), Some(2));
    assert_eq!(locgame(&["lcapt", "--named", "nosuch:3"]).status.code(), Some(2));
    assert_eq!(locgame(&["lcapt", "--edges", "/nonexistent/edges"]).status.code(), Some(2));
    // two components
    assert_eq!(locgame(&["lcapt", "--graph6", "CA"]).status.code(), Some(2));
    assert_eq!(locgame(&["lcapt", "--named", "Gm:5", "-k", "2"]).status.code(), Some(3));
    let out = locgame(&["simulate", "--named", "T33", "--strategy", "one-cop-tree", "-k", "1"]);
    assert_eq!(out.status.code(), Some(4));
    let out = locgame(&["simulate", "--named", "path:5", "--strategy", "two-cop-tree"]);
    assert_eq!(out.status.code(), Some(4));
    let out = locgame(&["simulate", "--named", "path:5", "--strategy", "one-cop-tree", "-k", "2"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn lcapt_with_raised_cap() {
    let out = locgame(&["lcapt", "--named", "Gm:5", "-k", "2", "--cap", "13"]);
    assert_eq!((out.status.code(), stdout(&out)), (Some(0), "3\n".to_string()));
}

#[test]
fn structure_rows_for_example_tree() {
    let out = locgame(&["structure", "--named", "example41", "--distance-k", "1", "--reduced"]);
    assert_eq!(
        stdout(&out),
        "Row 3: 13,23,34,35,145,245\nRow 2: 14,15,45\nRow 1: 1,2,3,4,5\n"
    );
    let out = locgame(&["structure", "--named", "example41"]);
    let text = stdout(&out);
    assert!(text.contains("Row 2: 12,14,15,24,25,45,124,125\n"), "{text}");
}

#[test]
fn structure_from_coloring_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.txt");
    fs::write(&path, "# discrete\n1|2|3|4|5|6\n").unwrap();
    let out = locgame(&["structure", "--named", "cycle:6", "--colorings", path.to_str().unwrap(), "--json"]);
    let v = json(&out);
    assert_eq!(v["height"], 2);
    assert_eq!(v["solvable"], true);

    fs::write(&path, "1|2|9\n").unwrap();
    let out = locgame(&["structure", "--named", "cycle:6", "--colorings", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn simulate_two_cop_strategy() {
    let v = json(&locgame(&["simulate", "--named", "T33", "--strategy", "two-cop-tree", "-k", "2"]));
    assert!(v["worst_rounds"].as_u64().unwrap() <= 2);
    assert_eq!(v["strategy"], "two-cop-tree");

    let v = json(&locgame(&["simulate", "--named", "Gm:5", "--strategy", "two-cop-tree", "--cap", "13"]));
    assert_eq!(v["worst_rounds"], 3);
    assert_eq!(v["game_value"], 3);
    assert_eq!(v["bound"], 3);
    let probes: Vec<&str> = v["trace"].as_array().unwrap().iter().map(|s| s["probe"].as_str().unwrap()).collect();
    assert_eq!(probes, ["{2,3}", "{5,6}", "{11,12}"]);
}

#[test]
fn simulate_optimal_matches_value() {
    let v = json(&locgame(&["simulate", "--named", "star:5", "--strategy", "optimal", "-k", "1"]));
    assert_eq!(v["worst_rounds"], v["game_value"]);
    assert_eq!(v["bound"], Value::Null);
}

#[test]
fn verify_suites_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("r.csv");
    let out = locgame(&["verify", "--suite", "outerplanar", "--n-max", "6", "--seeds", "20", "--csv", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 failures"));
    let rows = fs::read_to_string(&csv).unwrap();
    assert!(rows.starts_with("claim,graph6,computed,bound,ok,detail\n"));

    let v = json(&locgame(&["verify", "--suite", "lemma44", "--n-max", "5", "--seeds", "200", "--json"]));
    assert_eq!(v["summary"]["failures"], 0);
    for r in v["records"].as_array().unwrap() {
        if r["claim"] == "lemma44-height" {
            assert!(r["computed"].as_u64().unwrap() <= r["bound"].as_u64().unwrap());
        }
    }

    let out = locgame(&["verify", "--suite", "trees", "--n-max", "10"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_reports_failures_with_exit_one() {
    // One 12-vertex tree exceeds the one-cop leaf bound.
    let out = locgame(&["verify", "--suite", "trees", "--n-max", "12"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL tree-leaf-bound KhC_K?@?K??@"));
}

#[test]
fn cache_is_reused_and_matches_recomputation() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("values.jsonl");
    let c = cache.to_str().unwrap();
    let first = locgame(&["verify", "--suite", "outerplanar", "--n-max", "6", "--seeds", "10", "--cache", c]);
    let lines = fs::read_to_string(&cache).unwrap();
    let second = locgame(&["verify", "--suite", "outerplanar", "--n-max", "6", "--seeds", "10", "--cache", c]);
    assert_eq!(stdout(&first), stdout(&second));
    assert_eq!(fs::read_to_string(&cache).unwrap(), lines, "no new entries on a warm run");
    for line in lines.lines() {
        let e: Value = serde_json::from_str(line).unwrap();
        let g6 = e["graph6"].as_str().unwrap();
        let k = e["k"].to_string();
        let fresh = stdout(&locgame(&["lcapt", "--graph6", g6, "-k", &k]));
        let cached = e["value"].as_u64().map_or("inf".to_string(), |v| v.to_string());
        assert_eq!(fresh.trim(), cached, "{g6}");
    }
}

#[test]
fn cache_skips_torn_lines() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("values.jsonl");
    fs::write(&cache, "{\"graph6\":\"Bw\",\"k\":1,\"value\":1}\n{\"graph6\":\"Cl\",\"k").unwrap();
    let out = locgame(&["lcapt", "--named", "path:3", "--cache", cache.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn output_is_byte_stable() {
    let args = ["simulate", "--named", "example41", "--strategy", "one-cop-tree"];
    assert_eq!(locgame(&args).stdout, locgame(&args).stdout);
    let args = ["verify", "--suite", "lemma44", "--n-max", "4", "--seeds", "30", "--json"];
    assert_eq!(locgame(&args).stdout, locgame(&args).stdout);
}
