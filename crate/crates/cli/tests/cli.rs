use std::process::{Command, Output};

use osp_core::characters::product_inverse;
use serde_json::Value;

fn osp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osp")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = osp(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn classify_examples() {
    let v = json(&["classify", "--n", "3", "--a", "0,0", "--d", "1/2"]);
    assert_eq!(v["verdict"]["branch"], "isolated");
    assert_eq!(v["verdict"]["governing_point"]["label"], "d23");
    let v = json(&["classify", "--n", "3", "--a", "1,1", "--d", "3"]);
    assert_eq!(v["verdict"]["branch"], "boundary");
    let v = json(&["classify", "--n", "3", "--a", "0,0", "--d", "1/4"]);
    assert_eq!(v["verdict"]["unitary"], false);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "--d", "0.5"][..],
        &["classify", "--a", "1", "--d", "1"],
        &["classify", "--n", "17", "--a", "0", "--d", "1"],
        &["nonsense"],
        &["verify", "--id", "sv_d7"],
        &["verify"],
        &["character", "--case", "d9"],
        &["multiplet", "--labels", "1,1"],
        &["classify", "--d", "1", "--format", "dot"],
    ] {
        assert_eq!(osp(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn character_examples() {
    let text = stdout(&["character", "--case", "d23", "--n", "3", "--maxdeg", "6"]);
    assert_eq!(text.lines().next(), Some("1"));
    let text = stdout(&["character", "--case", "d2eq13", "--maxdeg", "6"]);
    assert!(!text.lines().any(|l| l.starts_with('-')));
    // Only δ₃ among the restricted roots contributes to pure powers of t₃.
    let text = stdout(&["character", "--case", "verma", "--n", "3", "--maxdeg", "4"]);
    assert!(text.lines().any(|l| l == "1 * t3^4"), "{text}");
}

#[test]
fn golden_characters() {
    let cases: [(&str, &[&str]); 5] = [
        ("d1_m1_2_m2_1", &["--case", "d1", "--m1", "2", "--m2", "1"]),
        ("d12_m2_2", &["--case", "d12", "--m2", "2"]),
        ("d2eq13", &["--case", "d2eq13"]),
        ("d2_m2_3", &["--case", "d2", "--m2", "3"]),
        ("d23", &["--case", "d23"]),
    ];
    for (name, extra) in cases {
        let mut args = vec!["character", "--maxdeg", "8"];
        args.extend_from_slice(extra);
        let want = std::fs::read_to_string(format!("{}/tests/golden/{name}.txt", env!("CARGO_MANIFEST_DIR"))).unwrap();
        assert_eq!(stdout(&args), want, "{name}");
    }
}

#[test]
fn d23_golden_is_the_closed_form() {
    let want = product_inverse(3, &[vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 1]], 8).to_text();
    let golden = std::fs::read_to_string(format!("{}/tests/golden/d23.txt", env!("CARGO_MANIFEST_DIR"))).unwrap();
    assert_eq!(golden, want);
}

#[test]
fn verify_all() {
    let v = json(&["verify", "--all", "--n", "3"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r["pass"] == true));
    let v = json(&["verify", "--id", "sv_d2", "--a", "0,2", "--d", "7"]);
    assert_eq!(v[0]["pass"], false);
}

#[test]
fn gram_examples() {
    let v = json(&["gram", "--n", "3", "--a", "0,0", "--d", "3/4", "--max-level", "3"]);
    assert_eq!(v["verdict"], "not_psd");
    assert!(v["report"]["witness"]["text"].as_str().unwrap().contains('*'));
    assert!(v["report"]["witness"]["norm"].as_str().unwrap().starts_with('-'));
    let csv = stdout(&["gram", "--a", "0,0", "--d", "1", "--offset", "0,1,1"]);
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn multiplet_dot() {
    let dot = stdout(&["multiplet", "--n", "3", "--labels", "1,1,1", "--format", "dot"]);
    assert!(dot.starts_with("digraph multiplet {"));
    let nodes = dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    assert_eq!(nodes, 48);
    assert_eq!(dot, stdout(&["multiplet", "--n", "3", "--labels", "1,1,1"]));
    let v = json(&["multiplet", "--labels", "1,0,1", "--format", "json"]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 24);
}

#[test]
fn weyl_and_points() {
    let v = json(&["weyl", "--n", "3"]);
    assert_eq!(v["order"], 48);
    assert_eq!(stdout(&["weyl", "--word", "s1s2s1s2", "--format", "text"]), "s2s1\n");
    let v = json(&["reduction-points", "--n", "3", "--a", "0,0"]);
    assert_eq!(v["points"]["first_reduction_point"], "2");
    assert_eq!(v["ordering_violations"].as_array().unwrap().len(), 0);
    let csv = stdout(&["grid", "--n", "3", "--a-max", "1", "--kmax", "4", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 1 + 4 * 5);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("osp-cli-{}.json", std::process::id()));
    let out = osp(&["classify", "--d", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["verdict"]["unitary"], true);
    std::fs::remove_file(path).unwrap();
}
