use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn hopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf")).args(args).env_remove("HOPF_MAX_N").output().expect("binary runs")
}

fn hopf_env(args: &[&str], max_n: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf")).args(args).env("HOPF_MAX_N", max_n).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn e_test_on_distinct_block_sizes_fails() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(&dir, "piprime.json", r#"{"name": "PiPrime", "a": [1, 1, 1, 4, 5, 16, 82, 169, 541]}"#);
    let out = hopf(&["seq-tests", "--input", &input, "--tests", "etest"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["tool"], "seq-tests");
    assert_eq!(v["verdict"], "fail");
    let report = &v["details"][0]["report"];
    assert_eq!(report["first_violation"], 4);
    assert_eq!(report["witness"][0]["value"], "-8");
}

#[test]
fn default_tests_pass_on_bell_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        &dir,
        "bell.json",
        r#"[{"name": "Bell", "a": [1, 1, 2, 5, 15, 52, 203], "abar": [1, 1, 2, 3, 5, 7, 11]},
            {"name": "el", "a": [0, 1, 2, 3, 4]}]"#,
    );
    let out = hopf(&["seq-tests", "--input", &input]);
    let v = json(&out);
    assert_eq!(out.status.code(), Some(1), "{v}");
    let details = v["details"].as_array().unwrap();
    let bell: Vec<&Value> = details.iter().filter(|d| d["sequence"] == "Bell").collect();
    assert_eq!(bell.len(), 5);
    assert!(bell.iter().all(|d| d["report"]["verdict"] == "pass"));
    let el_limit = details.iter().find(|d| d["sequence"] == "el" && d["report"]["test"] == "ek-limit").unwrap();
    assert_eq!(el_limit["report"]["verdict"], "fail");
    assert!(details.iter().any(|d| d["sequence"] == "el" && d["skipped"].is_string()));
}

#[test]
fn lagrange_for_sets_in_partitions() {
    let out = hopf(&["lagrange", "--sub", "E->Pi", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["details"][0]["q_dims"], serde_json::json!([1, 0, 1, 1, 4, 11]));
    let out = hopf(&["lagrange", "--surj", "L->E", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["details"][0]["q_dims"], serde_json::json!([1, 0, 1, 2, 9, 44]));
    let out = hopf(&["lagrange", "--sub", "L->E", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not injective"));
}

#[test]
fn lie_basis_on_three_labels() {
    let out = hopf(&["lie-basis", "--labels", "a,b,c", "--ell0", "a,b,c"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let brackets: Vec<&str> = v["details"].as_array().unwrap().iter().filter_map(|d| d["bracket"].as_str()).collect();
    assert_eq!(brackets, vec!["[a,[b,c]]", "[[a,c],b]"]);
}

#[test]
fn hker_basis_for_a_single_derangement() {
    let out = hopf(&["hker-basis", "--labels", "s,m,i,t,e", "--ell0", "s|m|i|t|e", "--ell", "i|t|e|m|s"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["details"][0]["product"], "[s,[i,e]]·[m,t]");
    assert_eq!(v["details"][0]["in_hker"], true);
    let out = hopf(&["hker-basis", "--labels", "a,b,c", "--ell", "a|c|b"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a derangement"));
}

#[test]
fn series_division_from_species_and_files() {
    let out =
        hopf(&["series-div", "--numer-species", "Pi", "--denom-species", "PiPrime", "--kind", "egf", "--order", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["details"][0]["report"]["first_violation"], 3);
    assert_eq!(v["details"][0]["report"]["witness"][0]["value"], "-1/3");

    let dir = tempfile::tempdir().unwrap();
    let numer = write(&dir, "n.json", r#"{"name": "Pi types", "a": [1, 1, 2, 3, 5, 7, 11]}"#);
    let denom = write(&dir, "d.json", r#"{"name": "PiPrime types", "a": [1, 1, 1, 2, 2, 3, 4]}"#);
    let out = hopf(&["series-div", "--numer", &numer, "--denom", &denom, "--kind", "tgf", "--order", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["details"][0]["quotient"], "1 + x^2 + 2*x^4 + 3*x^6 + O(x^7)");
}

#[test]
fn species_dimensions_with_types() {
    let out = hopf(&["species-dims", "--species", "Pal", "--max-n", "6", "--types"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["details"][0]["dims"], serde_json::json!(["1", "1", "3", "7", "43", "171", "1581"]));
    assert_eq!(v["details"][0]["types"][5], 4);
}

#[test]
fn axioms_and_morphisms() {
    let out = hopf(&["axioms", "--monoid", "Pal", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = hopf(&["axioms", "--monoid", "L", "--max-n", "3", "--axioms", "commutative,cocommutative"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["details"][0]["passed"], false);
    assert_eq!(v["details"][1]["passed"], true);
    let out = hopf(&["morphism-check", "--morphism", "Pi->PiS:2", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn kernels_and_primitives() {
    let out = hopf(&["hker-dims", "--morphism", "L->E", "--max-n", "4"]);
    let v = json(&out);
    assert_eq!(v["details"][0]["hker"], serde_json::json!([1, 0, 1, 2, 9]));
    assert_eq!(v["details"][0]["lker"], serde_json::json!([0, 0, 1, 2, 6]));
    let out = hopf(&["primitives", "--monoid", "Pi", "--max-n", "4"]);
    assert_eq!(json(&out)["details"][0]["dims"], serde_json::json!([0, 1, 1, 1, 1]));
    let out = hopf(&["primitives", "--monoid", "L", "--labels", "a,b"]);
    assert_eq!(json(&out)["details"][0]["space"]["dim"], 1);
    let out = hopf(&["pbw-check", "--monoid", "Pi", "--morphism", "L->E", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hopf(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hopf(&["axioms", "--monoid", "L", "--max-n", "10"]).status.code(), Some(2));
    assert_eq!(hopf(&["axioms", "--monoid", "Nope"]).status.code(), Some(2));
    assert_eq!(
        hopf(&["series-div", "--numer-species", "Pi", "--denom-species", "E", "--order", "33"]).status.code(),
        Some(2)
    );
    assert_eq!(hopf(&["--help"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.json", r#"{"a": [1, -2]}"#);
    let out = hopf(&["seq-tests", "--input", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(r#""abar""#));
    let out = hopf(&["seq-tests", "--input", &bad, "--tests", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_cap_can_only_be_lowered() {
    assert_eq!(hopf_env(&["primitives", "--monoid", "E", "--max-n", "4"], "3").status.code(), Some(2));
    assert_eq!(hopf_env(&["primitives", "--monoid", "E", "--max-n", "3"], "3").status.code(), Some(0));
    assert_eq!(hopf_env(&["primitives", "--monoid", "E", "--max-n", "10"], "20").status.code(), Some(2));
    assert_eq!(hopf_env(&["primitives", "--monoid", "E", "--max-n", "3"], "many").status.code(), Some(2));
}

#[test]
fn text_output_and_output_file() {
    let out = hopf(&["lagrange", "--sub", "E->Pi", "--max-n", "4", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("tool     lagrange\nverdict  pass\n"));
    assert!(text.contains("q_dims       1, 0, 1, 1, 4"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = hopf(&["hker-dims", "--morphism", "L->E", "--max-n", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn output_is_deterministic() {
    let args = ["axioms", "--monoid", "Hadamard(L,Pi)", "--max-n", "3", "--threads", "4"];
    let first = hopf(&args);
    let second = hopf(&args);
    assert_eq!(first.stdout, second.stdout);
    let args = ["hker-basis", "--labels", "a,b,c,d"];
    assert_eq!(hopf(&args).stdout, hopf(&args).stdout);
}
