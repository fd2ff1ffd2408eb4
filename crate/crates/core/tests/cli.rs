use std::collections::BTreeSet;
use std::process::Command;

use clap::CommandFactory;
use serde_json::Value;
use weylchar::cli::{run, Cli};

const BIN: &str = env!("CARGO_BIN_EXE_weylchar");
const SCHEMA: &str = include_str!("../schema/v1.json");

fn weylchar(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN)
        .args(args)
        .env_clear()
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn in_process(args: &[&str]) -> weylchar::cli::Outcome {
    run(std::iter::once("weylchar").chain(args.iter().copied()))
}

#[test]
fn clap_definition_is_consistent() {
    Cli::command().debug_assert();
}

#[test]
fn exit_codes() {
    assert_eq!(weylchar(&["verify", "example313", "--p", "5"]).0, 0);
    assert_eq!(weylchar(&["--p", "4", "weyl", "enum"]).0, 2);
    assert_eq!(weylchar(&["weyl", "enum", "--no-such-flag"]).0, 2);
    assert_eq!(weylchar(&["weyl"]).0, 2);
    assert_eq!(weylchar(&["roots", "wpsi", "--psi", "[[1,0],[0,1]]"]).0, 2);
    assert_eq!(weylchar(&["verify", "lemma314", "--datum", "sc-a2"]).0, 3);
    assert_eq!(weylchar(&["weyl", "enum", "--cap-weyl", "5"]).0, 4);
    assert_eq!(weylchar(&["bh", "subreps", "--set", "a1,a2,a3,a4,a5,a6", "--cap-subrep", "5"]).0, 4);
    // Over F_2 every character is trivial, so the chain suite has nothing to test and fails.
    assert_eq!(weylchar(&["verify", "chain", "--datum", "gl3", "--p", "2"]).0, 5);
}

#[test]
fn diagnostics_are_one_line() {
    for args in [
        vec!["--p", "4", "weyl", "enum"],
        vec!["verify", "lemma314", "--datum", "sc-a2"],
        vec!["weyl", "enum", "--cap-weyl", "5"],
        vec!["weyl", "enum", "--bogus"],
    ] {
        let (code, stdout, stderr) = weylchar(&args);
        assert!(stdout.is_empty());
        assert_eq!(stderr.lines().count(), 1, "{stderr}");
        let line = stderr.trim_end();
        assert!(line.starts_with("weylchar: kind="), "{line}");
        assert!(line.contains(&format!(" code={code} message=\"")), "{line}");
    }
}

#[test]
fn environment_overrides_flags() {
    let out = Command::new(BIN)
        .args(["verify", "example313"])
        .env_clear()
        .env("WEYLCHAR_P", "7")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["p"], 7);
    assert_eq!(v["config"]["p"], 7);
    let out = Command::new(BIN)
        .args(["verify", "example313", "--p", "3"])
        .env_clear()
        .env("WEYLCHAR_P", "7")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["p"], 3);
}

#[test]
fn documented_examples() {
    let (code, out, _) = weylchar(&["verify", "lemma314", "--datum", "g2", "--p", "5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["characters_swept"], 256);
    assert_eq!(v["result"]["violations"], 0);
    assert_eq!(v["result"]["optimality_witness_at_length_6"], true);

    let (code, out, _) = weylchar(&["ord", "report", "--datum", "gl3", "--levi", "a1", "--d", "1"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let degrees: Vec<u64> = v["result"]["rows"].as_array().unwrap().iter().map(|r| r["degree"].as_u64().unwrap()).collect();
    assert_eq!(degrees, vec![0, 1, 2]);
    assert_eq!(v["result"]["rows"][0]["status"], "proved_n0");

    let (code, out, _) = weylchar(&["datum", "describe", "--kind", "gl", "--n", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["theta"], serde_json::json!([2, 1, 0]));
}

fn keys(v: &Value) -> BTreeSet<String> {
    v.as_object().unwrap().keys().cloned().collect()
}

fn schema_keys(v: &Value) -> BTreeSet<String> {
    v.as_array().unwrap().iter().map(|k| k.as_str().unwrap().to_string()).collect()
}

#[test]
fn output_matches_frozen_schema() {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    assert_eq!(schema["schema_version"], weylchar::cli::SCHEMA_VERSION);
    let chi = r#"{"p":5,"components":[{"val_p":1,"e":0},{"val_p":2,"e":1},{"val_p":3,"e":0}]}"#;
    let runs: Vec<(&str, Vec<&str>)> = vec![
        ("datum describe", vec!["datum", "describe"]),
        ("weyl enum", vec!["weyl", "enum"]),
        ("weyl kostant", vec!["weyl", "kostant", "--levi", "a1"]),
        ("weyl bruhat", vec!["weyl", "bruhat", "--leq", "s1", "s1s2"]),
        ("weyl decompose", vec!["weyl", "decompose", "--w", "s1s2", "--levi", "a1"]),
        ("weyl reduced", vec!["weyl", "reduced", "--w", "s1s2s1"]),
        ("char generic", vec!["char", "generic", "--spec", chi]),
        ("char example313", vec!["char", "example313"]),
        ("char sweep-lemma314", vec!["char", "sweep-lemma314"]),
        ("char sweep-coroot", vec!["char", "sweep-coroot"]),
        ("char act", vec!["char", "act", "--w", "s1", "--spec", chi]),
        ("char lemma314", vec!["char", "lemma314", "--w", "s1", "--spec", chi]),
        ("roots wpsi", vec!["roots", "wpsi", "--psi", "[[1,1]]"]),
        ("roots orth", vec!["roots", "orth", "--set", "a1,a2"]),
        ("roots closed", vec!["roots", "closed"]),
        ("ord rhs", vec!["ord", "rhs", "--levi", "a1", "--deg", "1"]),
        ("ord report", vec!["ord", "report", "--levi", "a1"]),
        ("ord strata", vec!["ord", "strata", "--levi", "a1"]),
        ("ord chain", vec!["ord", "chain", "--levi", "a1", "--wp", "s1s2"]),
        ("bh build", vec!["bh", "build", "--char", chi]),
        ("bh socle", vec!["bh", "socle", "--char", chi]),
        ("bh subreps", vec!["bh", "subreps", "--set", "a1,a3"]),
        ("ext chain", vec!["ext", "chain", "--chi", chi, "--chiP", chi, "--chiPP", chi]),
        ("ext conj343", vec!["ext", "conj343", "--P", "a1", "--Pp", "a2"]),
        ("ext prop345", vec!["ext", "prop345", "--levi", "a2"]),
        ("ext prop347", vec!["ext", "prop347"]),
        ("verify example313", vec!["verify", "example313"]),
        ("verify kostant", vec!["verify", "kostant"]),
        ("verify conj343", vec!["verify", "conj343"]),
        ("selftest", vec!["roots", "--selftest"]),
    ];
    let listed: BTreeSet<String> = schema["results"].as_object().unwrap().keys().cloned().collect();
    for (name, args) in runs {
        assert!(listed.contains(name), "{name} missing from schema");
        let out = in_process(&args);
        assert_eq!(out.code, 0, "{name}: {}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(keys(&v), schema_keys(&schema["envelope"]), "{name}");
        assert_eq!(keys(&v["config"]), schema_keys(&schema["config"]), "{name}");
        assert_eq!(keys(&v["result"]), schema_keys(&schema["results"][name]), "{name}");
        assert_eq!(v["schema_version"], 1);
    }
    let out = in_process(&["char", "example313"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(keys(&v["result"]["character"]), schema_keys(&schema["character"]));
    assert_eq!(keys(&v["result"]["character"]["components"][0]), schema_keys(&schema["character_component"]));
}

#[test]
fn graphs_are_written_to_the_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("a3");
    let out = in_process(&[
        "bh", "graphs", "--datum", "gl4", "--char", "strongly-generic", "--out", target.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    for f in ["ext_graph.dot", "lattice.json", "hasse.dot"] {
        assert!(target.join(f).exists(), "{f}");
    }
    let lattice: Value = serde_json::from_str(&std::fs::read_to_string(target.join("lattice.json")).unwrap()).unwrap();
    assert_eq!(lattice["constituents"].as_array().unwrap().len(), 5);
    let hasse = std::fs::read_to_string(target.join("hasse.dot")).unwrap();
    assert_eq!(hasse.matches("[label=").count(), 6);
}

#[test]
fn json_output_goes_to_a_file_with_out() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("enum.json");
    let out = in_process(&["weyl", "enum", "--out", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["order"], 6);
}

#[test]
fn dot_output() {
    let out = in_process(&["bh", "build", "--datum", "gl4", "--char", "strongly-generic", "--format", "dot"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("graph") || out.stdout.starts_with("digraph"));
    let out = in_process(&["bh", "subreps", "--set", "a1,a3", "--format", "dot"]);
    assert!(out.stdout.starts_with("digraph"));
    assert_eq!(in_process(&["weyl", "enum", "--format", "dot"]).code, 2);
}

#[test]
fn every_group_has_a_passing_selftest() {
    for g in ["datum", "weyl", "char", "roots", "ord", "bh", "ext"] {
        let out = in_process(&[g, "--selftest"]);
        assert_eq!(out.code, 0, "{g}: {}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["result"]["passed"], true, "{g}");
        assert!(!v["result"]["checks"].as_array().unwrap().is_empty(), "{g}");
    }
}

#[test]
fn conj343_command_cases() {
    let case = |args: &[&str]| {
        let out = in_process(args);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        v["result"]["case"].as_str().unwrap().to_string()
    };
    let base = ["ext", "conj343", "--datum", "gl4"];
    let with = |extra: &[&'static str]| base.iter().copied().chain(extra.iter().copied()).collect::<Vec<_>>();
    assert_eq!(case(&with(&["--P", "a1", "--Pp", "a3"])), "case_i");
    assert_eq!(case(&with(&["--P", "a1", "--Pp", "a1", "--pi-prime", "twist:a3"])), "case_ii");
    assert_eq!(case(&with(&["--P", "a1", "--Pp", "a1", "--pi-prime", "twist:a3", "--d", "2"])), "case_iii");
    assert_eq!(case(&with(&["--P", "a1", "--Pp", "a1,a2"])), "case_iv");
    assert_eq!(in_process(&with(&["--P", "a1", "--Pp", "a1", "--pi-prime", "twist:a2"])).code, 2);
}
