use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn superheis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superheis")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn identical_seed_gives_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = superheis(&["verify", "--suite", "groups", "--m", "1", "--seed", "11", "--json", p.to_str().unwrap(), "--quiet"]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        assert!(o.stdout.is_empty());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let c = dir.path().join("c.json");
    superheis(&["verify", "--suite", "groups", "--m", "1", "--seed", "12", "--json", c.to_str().unwrap(), "--quiet"]);
    let report: Value = serde_json::from_slice(&fs::read(&c).unwrap()).unwrap();
    assert_eq!(report["config"]["seed"], 12);
}

#[test]
fn report_records_carry_identities() {
    let o = superheis(&["verify", "--suite", "fw", "--m", "1", "--json", "-", "--quiet"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let sorted = {
        let mut s = names.clone();
        s.sort();
        s
    };
    assert_eq!(names, sorted);
    for c in checks {
        assert!(!c["identity"].as_str().unwrap().is_empty());
        let discrepant = c["verdict"] == "exact-discrepancy";
        assert_eq!(discrepant, c.get("discrepancy_factor").is_some(), "{}", c["name"]);
    }
    // an exact discrepancy is a finding, not a failure
    assert!(checks.iter().any(|c| c["verdict"] == "exact-discrepancy"));
    assert!(report["conventions"].as_array().unwrap().len() > 3);
}

#[test]
fn groups_at_m1_all_laws_pass_in_text_mode() {
    let o = superheis(&["verify", "--suite", "groups", "--m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("groups.heisenberg.h_exp.n1"));
    assert!(out.lines().last().unwrap().ends_with("0 error"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(superheis(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(superheis(&["verify", "--suite", "fw", "--m", "5"]).status.code(), Some(2));
    assert_eq!(superheis(&["verify", "--G", "/nonexistent/g.json"]).status.code(), Some(2));
    assert_eq!(superheis(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(superheis(&["compute", "nope", "--input", "/dev/null"]).status.code(), Some(2));
}

#[test]
fn user_supplied_form_must_be_antisymmetric() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    fs::write(&g, r#"{"m":2,"G":[["0","1"],["1","0"]]}"#).unwrap();
    let o = superheis(&["verify", "--suite", "bargmann", "--m", "2", "--G", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pfaffian_of_canonical_four_is_one() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    fs::write(&g, r#"{"m":4,"G":[["0","1","0","0"],["-1","0","0","0"],["0","0","0","1"],["0","0","-1","0"]]}"#).unwrap();
    let o = superheis(&["pfaffian", "--G", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");

    fs::write(&g, r#"[["0","3/2"],["-3/2","0"]]"#).unwrap();
    assert_eq!(stdout(&superheis(&["pfaffian", "--G", g.to_str().unwrap()])).trim(), "3/2");
}

#[test]
fn svn_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("form.json");
    fs::write(&f, r#"{"beta":"1","omega_odd":[["1","0"],["0","1"]],"omega_even":[["0","1"],["-1","0"]]}"#).unwrap();
    assert_eq!(stdout(&superheis(&["svn", "--form", f.to_str().unwrap()])).trim(), "ExistsUnique");
    fs::write(&f, r#"{"beta":"1","omega_odd":[["1","0"],["0","-1"]]}"#).unwrap();
    assert_eq!(stdout(&superheis(&["svn", "--form", f.to_str().unwrap()])).trim(), "None");
    fs::write(&f, r#"{"beta":"0","omega_odd":[["1"]]}"#).unwrap();
    assert_eq!(superheis(&["svn", "--form", f.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn compute_fw_and_oddon_mul() {
    let dir = tempfile::tempdir().unwrap();
    let one = r#"{"terms":[{"indices":[],"re":"1","im":"0"}]}"#;
    let input = dir.path().join("fw.json");
    fs::write(&input, format!(r#"{{"m":1,"f":{one},"g":{one}}}"#)).unwrap();
    let o = superheis(&["compute", "fw", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["generators"][2], "Θ1");
    assert_eq!(v["value"]["terms"][0]["indices"][0], 3);
    assert_eq!(v["value"]["terms"][0]["im"], "-1");

    let mul = dir.path().join("mul.json");
    fs::write(
        &mul,
        format!(r#"{{"n":1,"left":{{"kind":"real","a":{{"terms":[]}},"b":{one}}},"right":{{"kind":"real","a":{{"terms":[{{"indices":[1],"re":"1","im":"0"}}]}},"b":{{"terms":[]}}}}}}"#),
    )
    .unwrap();
    let o = superheis(&["compute", "oddon-mul", "--input", mul.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["product"]["b"]["terms"][0]["indices"][0], 1);
    assert_eq!(v["product"]["a"]["terms"].as_array().unwrap().len(), 0);
}

#[test]
fn compute_schema_errors_point_at_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.json");
    fs::write(&input, r#"{"m":1,"f":{"terms":[{"indices":[],"re":"1","im":"0"},{"indices":[2,2],"re":"1","im":"0"}]},"g":{"terms":[]}}"#).unwrap();
    let o = superheis(&["compute", "fw", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("f.terms[1]"));
}
