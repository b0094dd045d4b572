use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_flagideal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

const TWO_K2: &str = "# flagposet v1\nelements: a b c d\na < b\nc < d\n";

#[test]
fn classify_mixed_example() {
    let r = json(&["classify", "--example", "3.4"]);
    assert_eq!(r["graded"], true);
    assert_eq!(r["unmixed"]["structural"]["value"], false);
    assert_eq!(r["unmixed"]["structural"]["witness"]["kind"], "chain_pair");
    assert_eq!(r["unmixed"]["oracle"], false);
    assert_eq!(r["cm"]["structural"]["value"], false);
    assert_eq!(r["disagreements"].as_array().unwrap().len(), 0);
}

#[test]
fn classify_cohen_macaulay_example() {
    let r = json(&["classify", "--example", "4.9"]);
    assert_eq!(r["generators"], 17);
    assert_eq!(r["cm"]["structural"]["value"], true);
    assert_eq!(r["cm"]["oracle"], true);
    assert_eq!(r["cm_oracle_details"]["projdim"], r["cm_oracle_details"]["height"]);
}

#[test]
fn classify_ungraded_poset() {
    let r = json(&["classify", "--example", "pentagon"]);
    assert_eq!(r["graded"], false);
    assert!(r["cm"].is_null());
    assert!(r["unmixed"].is_null());
}

#[test]
fn classify_without_oracles() {
    let r = json(&["classify", "--example", "hom:2,3", "--no-oracle"]);
    assert!(r["cm"]["oracle"].is_null());
    assert!(r["minimal_vertex_covers"].is_null());
    assert_eq!(r["bi_cm"]["value"], true);
}

#[test]
fn classify_csv_and_text() {
    let out = run(&["classify", "--example", "4.9", "--format", "csv"]);
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.starts_with("property,structural,oracle\n"));
    assert!(csv.contains("cohen_macaulay,true,true"));
    let out = run(&["classify", "--example", "3.4", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("unmixed             no (oracle: no)"));
}

#[test]
fn betti_of_two_disjoint_edges() {
    let out = run_stdin(&["betti", "-", "--multidegree", "a,b,c,d"], TWO_K2);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["display"], "t^3");
    assert_eq!(v["betti"], serde_json::json!([0, 1, 0, 0]));

    let out = run_stdin(&["betti", "-", "--format", "csv"], TWO_K2);
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(csv, "j,|A|,A,beta\n0,2,a;b,1\n0,2,c;d,1\n1,4,a;b;c;d,1\n");
}

#[test]
fn betti_verify_agrees() {
    let brute = json(&["betti", "--example", "3.4"]);
    let verified = json(&["betti", "--example", "3.4", "--verify"]);
    let fast = json(&["betti", "--example", "3.4", "--fast"]);
    assert_eq!(brute, verified);
    assert_eq!(brute, fast);
    let v = json(&["betti", "--example", "3.4", "--multidegree", "a1,a2,a3", "--verify"]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["display"], "t^3");
}

#[test]
fn fast_betti_needs_a_graded_poset() {
    let out = run(&["betti", "--example", "pentagon", "--fast"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn covers_listing() {
    let v = json(&["covers", "--example", "chain:3"]);
    assert_eq!(v["count"], 3);
    let v = json(&["covers", "--example", "antichain:2"]);
    assert_eq!(v["covers"], serde_json::json!([["1", "2"]]));
}

#[test]
fn generate_is_deterministic() {
    let a = run(&["generate", "--widths", "3,3,2", "--q", "0.5", "--seed", "42"]);
    let b = run(&["generate", "--widths", "3,3,2", "--q", "0.5", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let printed = run_stdin(&["print", "-"], &String::from_utf8(a.stdout.clone()).unwrap());
    assert_eq!(printed.stdout, a.stdout);
}

#[test]
fn generate_single_layer_is_an_antichain() {
    let out = run(&["generate", "--widths", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('<'));
    assert!(text.contains("p1_4"));
}

#[test]
fn hom_poset_is_a_letterplace_poset() {
    let v = json(&["isomorphic", "example:hom:2,3", "example:letterplace:2,chain:3"]);
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["mapping"].as_array().unwrap().len(), 6);
    let v = json(&["isomorphic", "example:chain:3", "example:antichain:3"]);
    assert_eq!(v["isomorphic"], false);
    assert!(v["mapping"].is_null());
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["classify", "--example", "hom:3,3", "--budget-betti-vars", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["classify", "/nonexistent/poset.txt"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "--example", "nonsense"]).status.code(), Some(1));
    assert_eq!(run_stdin(&["print", "-"], "a < a\n").status.code(), Some(1));
    assert_eq!(run(&["generate", "--widths", "2", "--q", "1.5"]).status.code(), Some(1));
    assert_ne!(run(&["classify"]).status.code(), Some(0));
}
