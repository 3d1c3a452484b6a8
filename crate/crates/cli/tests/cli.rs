use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qsp4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsp4")).args(args).env_remove("SP4Q_REPORT_DIR").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn catalog_holds_with_exit_zero() {
    let o = qsp4(&["verify", "--family", "qboson", "--cutoff", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let last = out.lines().last().unwrap();
    assert!(last.ends_with(", 0 fail"), "{last}");
}

#[test]
fn mutation_exits_one_with_witness() {
    let o = qsp4(&["verify", "--family", "qboson", "--cutoff", "8", "--mutate", "J-commutator", "--failures-only"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let fails: Vec<&str> = out.lines().filter(|l| l.starts_with("FAILS")).collect();
    assert!(!fails.is_empty());
    assert!(fails.iter().all(|l| l.contains("J-commutator [mutated]") && l.contains(" at |")), "{out}");
}

#[test]
fn mutated_json_carries_witness() {
    let o = qsp4(&["verify", "--family", "classical", "--cutoff", "6", "--mutate", "Bose-cc creators", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let fails: Vec<&Value> = v.as_array().unwrap().iter().filter(|r| r["verdict"] == "Fails").collect();
    assert!(!fails.is_empty());
    for f in fails {
        assert_eq!(f["relation"], "Bose-cc creators [mutated]");
        assert!(f["witness"]["src"]["nu1"].is_u64());
    }
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(qsp4(&["verify", "--cutoff", "3"]).status.code(), Some(2));
    assert_eq!(qsp4(&["verify", "--mutate", "no such relation", "--cutoff", "6"]).status.code(), Some(2));
    assert_eq!(qsp4(&["verify", "--q", "-1", "--cutoff", "6"]).status.code(), Some(2));
    assert_eq!(qsp4(&["pyramid", "--labels", "triple-min", "--sector", "odd"]).status.code(), Some(2));
    assert_eq!(qsp4(&["spectrum", "--table", "nope"]).status.code(), Some(2));
}

#[test]
fn pyramids_match_goldens() {
    for (args, file) in [
        (["--labels", "pair", "--sector", "even"], "figure1_pair_even.txt"),
        (["--labels", "pair", "--sector", "odd"], "figure2_pair_odd.txt"),
        (["--labels", "triple-min", "--sector", "even"], "figure3_triple_min.txt"),
        (["--labels", "triple-max", "--sector", "even"], "figure4_triple_max.txt"),
    ] {
        let o = qsp4(&[&["pyramid", "--rows", "4"], &args[..]].concat());
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden(file), "{file}");
    }
}

#[test]
fn spectrum_matches_golden() {
    let o = qsp4(&["spectrum", "--table", "alpha+odd", "--cutoff", "12"]);
    assert_eq!(stdout(&o), golden("spectrum_alpha+odd.txt"));
}

#[test]
fn json_keys_are_sorted_and_round_trip() {
    let o = qsp4(&["verify", "--family", "tensor", "--suite", "ladder", "--format", "json", "--cutoff", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    for r in v.as_array().unwrap() {
        let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
    // Timings may lose their last digit through f64 parsing; everything else is byte-stable.
    let stable = |t: &str| t.lines().filter(|l| !l.contains("\"wall_ms\"")).collect::<Vec<_>>().join("\n");
    assert_eq!(stable(&serde_json::to_string_pretty(&v).unwrap()), stable(&text));
}

#[test]
fn report_dir_receives_json() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_qsp4"))
        .args(["verify", "--family", "classical", "--cutoff", "6"])
        .env("SP4Q_REPORT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(dir.path().join("verify.json")).unwrap();
    let v: Value = serde_json::from_str(&written).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["verdict"] == "Holds"));
}

#[test]
fn eval_prints_coefficient_and_amplitude() {
    let o = qsp4(&["eval", "J_+", "--family", "qboson", "--state", "0,2", "--q", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("|1,1>"), "{}", stdout(&o));
}
