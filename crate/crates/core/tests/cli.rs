use std::process::{Command, Output};

use cocyred::{CohModel, SignTensor};
use serde_json::Value;

fn cocyred(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cocyred")).args(args).env_remove("COCYRED_WORKERS").output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn cohomology_reports_ranks_and_dimension() {
    let o = cocyred(&["cohomology", "--group", "g1:2", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("dim H^2 = 3"), "{}", stdout(&o));
    let o = cocyred(&["cohomology", "--group", "g2:2", "--degree", "3"]);
    assert!(stdout(&o).contains("dim H^3 = 10"), "{}", stdout(&o));
}

#[test]
fn basis_json_lists_reps_then_cobs() {
    let o = cocyred(&["basis", "--group", "g1:1", "--degree", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["hdim"], 3);
    let elements = v["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 3 + 1);
    assert_eq!(elements[0]["label"], "rep:1");
    assert_eq!(elements[3]["label"].as_str().map(|s| s.starts_with("cob:")), Some(true));
}

#[test]
fn basis_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.txt");
    let o = cocyred(&["basis", "--group", "cyclic:1", "--degree", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("# rep:1\n"), "{text}");
}

#[test]
fn tensor_text_round_trips() {
    let o = cocyred(&["tensor", "--group", "g1:1", "--degree", "3", "--combo", "c4,c7,c10,c13"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let t = SignTensor::from_text(&stdout(&o)).unwrap();
    assert_eq!((t.side(), t.arity()), (4, 3));
    assert!(cocyred::tensor::is_improper_hadamard(&t));
    let empty = cocyred(&["tensor", "--group", "g1:1", "--degree", "3", "--combo", ""]);
    let ones = SignTensor::from_text(&stdout(&empty)).unwrap();
    assert!(ones.signs().iter().all(|&s| s == 1));
}

#[test]
fn search_headlines() {
    let o = cocyred(&["search", "--group", "g1:1", "--degree", "3", "--test", "improper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("improper: 64, proper-among-hits: 0"), "{}", stdout(&o));
    let o = cocyred(&["search", "--group", "g1:1", "--degree", "2", "--test", "hadamard2d", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 4);
    assert!(v["hits"]["hadamard2d"].as_u64().unwrap() > 0);
}

#[test]
fn search_worker_count_does_not_change_output() {
    let args = ["search", "--group", "cyclic:2", "--degree", "3", "--test", "improper", "--format", "json"];
    let one = cocyred(&[&args[..], &["--workers", "1"]].concat());
    let three = cocyred(&[&args[..], &["--workers", "3"]].concat());
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(strip(&one), strip(&three));
}

#[test]
fn search_dump_lists_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let o = cocyred(&[
        "search",
        "--group",
        "cyclic:2",
        "--degree",
        "3",
        "--test",
        "improper",
        "--dump",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let witnesses = v["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 32);
}

#[test]
fn oversized_search_exits_three() {
    let o = cocyred(&["search", "--group", "cyclic:5", "--degree", "3", "--test", "improper"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    let sampled =
        ["search", "--group", "cyclic:5", "--degree", "3", "--test", "improper", "--sample", "300", "--seed", "5"];
    let a = cocyred(&sampled);
    let b = cocyred(&sampled);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(cocyred(&["cohomology", "--group", "g1:0", "--degree", "2"]).status.code(), Some(1));
    assert_eq!(cocyred(&["search", "--group", "g1:1", "--degree", "3", "--test", "nope"]).status.code(), Some(1));
    assert_eq!(
        cocyred(&["search", "--group", "g1:1", "--degree", "3", "--test", "improper", "--seed", "1"]).status.code(),
        Some(1)
    );
    let o = cocyred(&["cohomology", "--group", "g2:1", "--degree", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("model not provided by paper"), "{}", stderr(&o));
}

#[test]
fn verify_builtin_passes() {
    let o = cocyred(&["verify", "--group", "d4t:2", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"), "{}", stdout(&o));
}

#[test]
fn model_file_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("g1.json");
    let model = CohModel::builtin("g1:1".parse().unwrap(), 2).unwrap();
    model.save(&good).unwrap();
    let o = cocyred(&["cohomology", "--model", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("dim H^2 = 3"), "{}", stdout(&o));
    assert_eq!(cocyred(&["verify", "--model", good.to_str().unwrap()]).status.code(), Some(0));

    let mut v: Value = serde_json::from_str(&model.to_json().unwrap()).unwrap();
    v["lift"]["1,2"] = serde_json::json!([1, 0, 0]);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let o = cocyred(&["verify", "--model", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL"), "{}", stdout(&o));
}
