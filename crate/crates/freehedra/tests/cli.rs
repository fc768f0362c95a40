use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freehedra")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut a = args.to_vec();
    a.extend(["--json", "-"]);
    let o = run(&a);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).unwrap())
}

#[test]
fn fvector_output() {
    let (code, v) = json(&["fvector", "--bound", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v[2]["f_vector"], serde_json::json!([5, 5, 1]));
    assert_eq!(v[3]["f_vector"], serde_json::json!([12, 18, 8, 1]));
}

#[test]
fn diagonal_output() {
    let (code, v) = json(&["diagonal", "--cell", "012]"]);
    assert_eq!(code, 0);
    assert_eq!(v["terms"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["fvector", "--ring", "Q"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["svg", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--check", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["hochschild", "ring"]).status.code(), Some(2));
    assert_eq!(run(&["hochschild", "theorem1", "--gens", "x:3"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_and_sorted() {
    let args = ["verify", "--check", "fvector", "--check", "coassociator", "--check", "random_associativity", "--bound", "4"];
    let (code, a) = json(&[&args[..], &["--workers", "3"]].concat());
    let (_, b) = json(&[&args[..], &["--workers", "1"]].concat());
    assert_eq!(code, 0);
    assert_eq!(a, b);
    let names: Vec<&str> = a["certificates"].as_array().unwrap().iter().map(|c| c["check"].as_str().unwrap()).collect();
    assert_eq!(names, ["coassociator", "fvector", "random_associativity"]);
    assert!(a["certificates"][0].get("duration_ms").is_none());
}

#[test]
fn the_seed_reaches_the_random_check() {
    let (_, v) = json(&["verify", "--check", "random_associativity", "--bound", "4", "--seed", "7"]);
    assert_eq!(v["certificates"][0]["details"]["seed"], 7);
}

#[test]
fn faults_exit_with_one() {
    let (code, v) = json(&["verify", "--fault", "--check", "cell_complex", "--check", "hga_identities"]);
    assert_eq!(code, 1);
    for c in v["certificates"].as_array().unwrap() {
        assert_eq!(c["verdict"], "fail");
        assert!(!c["witnesses"].as_array().unwrap().is_empty());
    }
}

#[test]
fn config_files() {
    let dir = std::env::temp_dir().join(format!("freehedra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let empty = dir.join("empty.json");
    std::fs::write(&empty, "{}").unwrap();
    let (code, v) = json(&["verify", "--config", empty.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(v["certificates"].as_array().unwrap().is_empty());
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"checks": [{"name": "fvector", "fault": true}]}"#).unwrap();
    assert_eq!(run(&["verify", "--config", bad.to_str().unwrap()]).status.code(), Some(2));
    let alg = dir.join("alg.json");
    std::fs::write(&alg, r#"{"generators": "x:2"}"#).unwrap();
    let (code, v) = json(&["hochschild", "ring", "--algebra", alg.to_str().unwrap(), "--trivial-hga", "--bound", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["ranks"], serde_json::json!([1, 1, 1, 1, 1, 1, 1]));
    assert_eq!(run(&["hochschild", "ring", "--algebra", alg.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn hochschild_subcommands() {
    let (code, v) = json(&["hochschild", "theorem1", "--gens", "x:2,y:2", "--bound", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    let (code, _) = json(&["hochschild", "theorem1", "--gens", "x:3", "--ring", "Z/2", "--bound", "6"]);
    assert_eq!(code, 0);
    let (code, v) = json(&["hochschild", "example1", "--bound", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["witness_degree"], 2);
    let (code, _) = json(&["hochschild", "example1", "--bound", "5", "--model", "printed"]);
    assert_eq!(code, 1);
    let (code, v) = json(&["hochschild", "ring", "--space", "s2", "--bound", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["ranks"], serde_json::json!([1, 1, 1, 1, 1]));
}

#[test]
fn loopmodel_identify() {
    let (code, v) = json(&["loopmodel", "identify", "--space", "s2", "--bound", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(run(&["loopmodel", "identify", "--space", "missing.json"]).status.code(), Some(2));
}

#[test]
fn svg_files() {
    let path = std::env::temp_dir().join(format!("freehedra-f3-{}.svg", std::process::id()));
    let o = run(&["svg", "--n", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<circle").count(), 12);
    assert_eq!(svg.matches("<line").count(), 18);
    std::fs::remove_file(&path).unwrap();
    let o = run(&["svg", "--n", "0"]);
    assert_eq!(stdout(&o).matches("<circle").count(), 1);
}
