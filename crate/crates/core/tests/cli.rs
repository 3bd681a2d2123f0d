use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn matx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matx")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p.to_str().unwrap().to_string()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn tutte_of_u23() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "u23.json", &json!({"construct": "uniform", "r": 2, "n": 3}));
    let o = matx(&["tutte", &f]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["results"]["T"], json!([[0, 1, 1], [1, 0, 1], [2, 0, 1]]));
}

#[test]
fn invariants_of_theta() {
    let dir = tempfile::tempdir().unwrap();
    let edges = json!({"edges": [["s","a","1"],["a","t","2"],["s","b","3"],["b","t","4"],["s","c","5"],["c","t","6"]]});
    let f = write(dir.path(), "theta.json", &edges);
    let o = matx(&["invariants", &f]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    assert_eq!(v["results"]["broken_circuit_complex"]["h"], json!([1, 2, 3, 1, 0]));
    assert_eq!(v["results"]["kcm_level"], json!(2));
}

#[test]
fn loopy_charpoly_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "loop.json", &json!({"labels": ["a", "b"], "bases": [["a"]]}));
    assert_eq!(matx(&["tutte", &f]).status.code(), Some(0));
    let o = matx(&["tutte", "--charpoly", &f]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("loop"));
}

#[test]
fn input_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", &json!({"labels": ["a","b","c","d"], "bases": [["a","b"],["c","d"]]}));
    assert_eq!(matx(&["invariants", &bad]).status.code(), Some(3));
    assert_eq!(matx(&["tutte", "/nonexistent/file.json"]).status.code(), Some(3));
    assert_eq!(matx(&["frobnicate"]).status.code(), Some(3));
    let ok = write(dir.path(), "u.json", &json!({"construct": "uniform", "r": 1, "n": 2}));
    assert_eq!(matx(&["verify", "--suite", "nope", &ok]).status.code(), Some(3));
}

#[test]
fn violation_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "h.json", &json!({"h": [1, 2, 3, 1], "n": 5, "k": 2}));
    let o = matx(&["verify", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout_json(&o)["results"]["summary"]["violation"].as_u64().unwrap() > 0);

    let clean = write(dir.path(), "u.json", &json!({"construct": "uniform", "r": 2, "n": 5}));
    assert_eq!(matx(&["verify", &clean]).status.code(), Some(0));
}

#[test]
fn reliability_of_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "tri.json", &json!({"edges": [["a","b","x"],["b","c","y"],["c","a","z"]]}));
    let o = matx(&["reliability", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["results"]["R"], json!([1, 0, -3, 2]));
}

#[test]
fn corpus_is_deterministic_and_clean() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for d in [&a, &b] {
        let o = matx(&["corpus", "generate", "--seed", "7", "--max-n", "7", "-o", d.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let ma = std::fs::read(a.join("manifest.json")).unwrap();
    assert_eq!(ma, std::fs::read(b.join("manifest.json")).unwrap());
    let o = matx(&["verify", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["results"]["summary"]["violation"], json!(0));
    assert!(v["results"]["summary"]["instances"].as_u64().unwrap() > 50);
}
