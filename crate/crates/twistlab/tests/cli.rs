use std::path::PathBuf;
use std::process::{Command, Output};

use twistlab::corpus;
use twistlab::io::{self, AlgebraTable, UnaryMapFile};
use twistlab_core::{fixtures, twist};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(name: &str) -> String {
    fixtures().join(format!("{name}.json")).display().to_string()
}

fn twistlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn shipped_fixtures_match_the_corpus() {
    for f in corpus::corpus().unwrap() {
        let path = fixtures().join(format!("{}.json", f.name));
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, io::algebra_json(&f.algebra), "{} is stale", f.name);
        let first: AlgebraTable = serde_json::from_str(&text).unwrap();
        let again: AlgebraTable = serde_json::from_str(&first.to_json()).unwrap();
        assert_eq!(first, again);
        assert_eq!(again.certify().unwrap(), f.algebra);
    }
}

#[test]
fn nelson_type_but_not_paraconsistent() {
    let nt = twistlab(&["check", &fixture("tw_g3_a"), "--variety", "nt"]);
    assert_eq!(nt.status.code(), Some(0));
    assert!(stdout(&nt).contains("PASS"));

    let npc = twistlab(&["check", &fixture("tw_g3_a"), "--variety", "npc"]);
    assert_eq!(npc.status.code(), Some(1));
    assert!(stdout(&npc).contains("odd fails at ((1,a), (a,1))"));
}

#[test]
fn hexagon_dot_lists_the_six_pairs() {
    let out = twistlab(&["twist", &fixture("l3"), "--iota", "0", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    let mut labels: Vec<&str> = dot
        .lines()
        .filter_map(|l| l.split("label=\"").nth(1))
        .filter_map(|l| l.split('"').next())
        .collect();
    labels.sort();
    assert_eq!(labels, ["(0,0)", "(0,1)", "(0,a)", "(1,0)", "(a,0)", "(a,a)"]);
    assert_eq!(dot.matches("->").count(), 6);
    assert_eq!(dot.matches("fillcolor=gray").count(), 3);
    assert!(dot.contains("label=\"(1,0)\", shape=square"));
}

#[test]
fn iota_by_name_or_index() {
    let a = twistlab(&["twist", &fixture("s3"), "--iota", "e", "--json"]);
    let b = twistlab(&["twist", &fixture("s3"), "--iota", "1", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a), std::fs::read_to_string(fixture("tw_s3_e")).unwrap());

    // names win over indices
    let top = twistlab(&["twist", &fixture("g3"), "--iota", "1", "--json"]);
    assert_eq!(stdout(&top), std::fs::read_to_string(fixture("tw_g3_1")).unwrap());
    let a = twistlab(&["twist", &fixture("g3"), "--iota", "a", "--json"]);
    assert_eq!(stdout(&a), std::fs::read_to_string(fixture("tw_g3_a")).unwrap());
}

#[test]
fn malformed_and_invalid_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{\"size\": 2").unwrap();
    let out = twistlab(&["check", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let not_residuated = dir.path().join("bad.json");
    std::fs::write(
        &not_residuated,
        r#"{"size":2,"join":[[0,1],[1,1]],"meet":[[0,0],[0,1]],"prod":[[1,1],[1,1]],"unit":1}"#,
    )
    .unwrap();
    let out = twistlab(&["check", not_residuated.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));

    let out = twistlab(&["twist", &fixture("l3"), "--iota", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = twistlab(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_counts_and_json_lines() {
    let out = twistlab(&["enumerate", "--size", "4", "--count-only"]);
    assert_eq!(stdout(&out).trim(), "20");
    let out = twistlab(&["enumerate", "--size", "5", "--involutive", "--commutative", "--count-only"]);
    assert_eq!(stdout(&out).trim(), "21");
    let out = twistlab(&["enumerate", "--size", "3", "--odd"]);
    let lines: Vec<AlgebraTable> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!lines.is_empty());
    for t in lines {
        let a = t.certify().unwrap();
        assert_eq!(a.neg(a.unit().unwrap()), a.unit().unwrap());
    }
    let all = twistlab(&["enumerate", "--size", "4"]);
    let tail = twistlab(&["enumerate", "--size", "4", "--skip", "15", "--limit", "3"]);
    let all = stdout(&all);
    let expected: Vec<&str> = all.lines().skip(15).take(3).collect();
    assert_eq!(stdout(&tail).lines().collect::<Vec<_>>(), expected);
}

#[test]
fn morphisms_and_subalgebras() {
    let out = twistlab(&["morphisms", &fixture("l2"), &fixture("l3"), "--kind", "embed"]);
    assert_eq!(out.status.code(), Some(0));
    let out = twistlab(&["morphisms", &fixture("l3"), &fixture("l2"), "--kind", "iso"]);
    assert_eq!(out.status.code(), Some(1));
    let out = twistlab(&["morphisms", &fixture("g3"), &fixture("l3"), "--kind", "embed", "--signature", "lattice"]);
    assert_eq!(out.status.code(), Some(0));
    let out = twistlab(&["subalgebras", &fixture("tw_l3_0")]);
    assert!(stdout(&out).contains("{(0,0), (0,a), (0,1), (a,0), (1,0)}"));
}

#[test]
fn conucleus_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = twistlab(&["conucleus", "enumerate", &fixture("tw_g3_a")]);
    assert_eq!(out.status.code(), Some(0));
    let maps: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert!(!maps.is_empty());
    for (i, m) in maps.iter().enumerate() {
        assert!(m.contains("\"parent\":\"tw_g3_a\""));
        let path = dir.path().join(format!("tau{i}.json"));
        std::fs::write(&path, m).unwrap();
        let p = path.to_str().unwrap();
        let out = twistlab(&["conucleus", "check", &fixture("tw_g3_a"), p, "--level", "nelson"]);
        assert_eq!(out.status.code(), Some(0), "{m}");
        let out = twistlab(&["conucleus", "image", &fixture("tw_g3_a"), p]);
        let img: AlgebraTable = serde_json::from_str(&stdout(&out)).unwrap();
        img.certify().unwrap();
    }
}

#[test]
fn represent_writes_a_proof_log() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("log.jsonl");
    let tw = twist::twist(&fixtures::lukasiewicz3(), 0).unwrap();
    let tau = UnaryMapFile { parent: "tw_l3_0".into(), table: twist::tau_tw(&tw).unwrap().table };
    let tau_path = dir.path().join("tau.json");
    std::fs::write(&tau_path, serde_json::to_string(&tau).unwrap()).unwrap();
    let out = twistlab(&[
        "represent",
        &fixture("tw_l3_0"),
        "--tau",
        tau_path.to_str().unwrap(),
        "--emit-proof-log",
        log.to_str().unwrap(),
    ]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    for key in ["thm:representation", "thm:adjunction", "thm:rasiowa", "thm:inca"] {
        assert!(text.contains(&format!("PASS  {key}")), "{key}");
    }
    let lines: Vec<serde_json::Value> = std::fs::read_to_string(&log)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 5 * 36 + 2 * 6);
    assert!(lines.iter().all(|l| l["ok"] == true));
}

#[test]
fn export_corpus_and_canonical_form() {
    let dir = tempfile::tempdir().unwrap();
    let out = twistlab(&["export", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), corpus::corpus().unwrap().len());
    let a = twistlab(&["export", &fixture("tw_l3_0"), "--canonical"]);
    let b = twistlab(&["export", &fixture("fig4_chain"), "--canonical"]);
    assert_eq!(a.status.code(), Some(0));
    assert_ne!(stdout(&a), stdout(&b));
    let dot = twistlab(&["export", &fixture("g3"), "--format", "dot"]);
    assert!(stdout(&dot).starts_with("digraph \"g3\""));
}

#[test]
fn paper_suite_passes_on_shipped_fixtures() {
    let out = twistlab(&["paper-suite", "--fixtures", fixtures().to_str().unwrap()]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("17/17 claims pass"));
}
