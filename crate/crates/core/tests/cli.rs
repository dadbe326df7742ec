//! End-to-end runs of the `shyp` binary.

use std::process::{Command, Output};

fn shyp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shyp"))
        .args(args)
        .env_remove("SHYP_MAX_D")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = shyp(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.ends_with('\n') && text.lines().count() == 1, "{text}");
    serde_json::from_str(&text).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&shyp(&["tdcount", "-d", "5"])), "51\n");
    assert_eq!(json(&["facets", "-d", "5", "-S", "0,2,4", "--format", "json"]).as_array().unwrap().len(), 26);
    assert_eq!(stdout(&shyp(&["mpp", "-d", "4", "-S", "0,2,4"])), "{\"p\":[2,2,1,1],\"num_vertices\":6}\n");
}

#[test]
fn every_subcommand_produces_output() {
    let v = json(&["vertices", "-d", "4", "-S", "1,3"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(json(&["edges", "-d", "4", "-S", "even"]).as_array().unwrap().len(), 24);
    assert_eq!(json(&["decompose", "-d", "5", "-S", "0,2,4"]).as_array().unwrap().len(), 2);
    let s = json(&["slice", "-d", "5", "-S", "0,2,4", "--layer", "2"]);
    assert_eq!(s["vertices"].as_array().unwrap().len(), 10);
    let t = json(&["triangulate", "-d", "3", "-S", "all"]);
    assert_eq!(t["count"], 6);
    assert_eq!(t["volume"], "1/1");
    let vol = json(&["volume", "-d", "3", "-S", "1,2"]);
    assert_eq!(vol["volume"], "2/3");
    assert_eq!(vol["normalized"], "4/1");
    let paths = json(&["paths", "-d", "3", "-S", "all"]);
    assert_eq!(paths.as_array().unwrap().len(), 6);
    assert_eq!(paths[0].as_array().unwrap().len(), 4);
    let ext = json(&["extbound", "-d", "5", "-S", "even"]);
    assert_eq!((ext["bound"].as_u64(), ext["facets"].as_u64()), (Some(20), Some(26)));
    let report = json(&["verify", "-d", "4", "-S", "even", "--against", "oracle"]);
    assert!(report.as_array().unwrap().iter().all(|r| r["passed"] == true));
}

#[test]
fn text_vertex_format() {
    let out = stdout(&shyp(&["vertices", "-d", "2", "-S", "all", "--format", "text"]));
    assert_eq!(out, "d=2 S=0,1,2\n0 0\n1 0\n0 1\n1 1\n");
}

#[test]
fn exit_codes() {
    assert_eq!(shyp(&["facets", "-d", "4", "-S", "0,4"]).status.code(), Some(2));
    assert_eq!(shyp(&["slice", "-d", "4", "-S", "0,4", "--layer", "2"]).status.code(), Some(2));
    assert_eq!(shyp(&["triangulate", "--order", "sideways"]).status.code(), Some(2));
    assert_eq!(shyp(&["edges", "-d", "20", "-S", "all"]).status.code(), Some(3));
    assert_eq!(shyp(&["verify", "-d", "6"]).status.code(), Some(3));
    assert_eq!(shyp(&["triangulate", "-d", "7", "-S", "all"]).status.code(), Some(3));
}

#[test]
fn env_overrides_cap() {
    let run = |env: &str| {
        Command::new(env!("CARGO_BIN_EXE_shyp"))
            .args(["vertices", "-d", "4", "-S", "all"])
            .env("SHYP_MAX_D", env)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("3"), Some(3));
    assert_eq!(run("4"), Some(0));
}

#[test]
fn seeded_output_is_reproducible() {
    let args = ["triangulate", "-d", "5", "-S", "even", "--order", "random", "--seed", "11"];
    let a = shyp(&args);
    assert_eq!(a.stdout, shyp(&args).stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["count"], 51);
}
