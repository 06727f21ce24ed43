use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn weylkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylkit"))
        .args(args)
        .env_remove("WEYLKIT_CACHE")
        .output()
        .expect("weylkit runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = weylkit(&all);
    serde_json::from_str(stdout(&out).trim()).unwrap()
}

fn dims(v: &Value) -> Vec<u64> {
    v["ext_dims"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
}

#[test]
fn ext_examples() {
    let v = json(&["ext", "--p", "3", "--lambda", "8,3", "--mu", "11", "--max-degree", "0"]);
    assert_eq!(dims(&v), [1]);
    assert_eq!(v["key"]["n"], 2);
    assert_eq!(v["key"]["r"], 11);
    assert_eq!(v["key"]["mu"], serde_json::json!([11, 0]));

    let v = json(&["ext", "--p", "5", "--lambda", "2,1", "--mu", "3", "--max-degree", "2"]);
    assert_eq!(dims(&v), [0, 0, 0]);

    let v = json(&["ext", "--p", "2", "--lambda", "2,1", "--mu", "2,1", "--max-degree", "0"]);
    assert_eq!(dims(&v), [1]);
}

#[test]
fn ext_with_shift_reports_hypotheses() {
    let v = json(&["ext", "--p", "3", "--d", "1", "--lambda", "8,3", "--mu", "11", "--max-degree", "1"]);
    assert_eq!(v["hypotheses"]["pd_gt_r_minus_l1"], false);
    assert_eq!(v["hypotheses"]["mu2_le_l1"], true);
}

#[test]
fn verify_examples() {
    let cases = [
        (["--theorem", "1.1.1", "--p", "3", "--lambda", "8,3", "--mu", "11"], "SHARPNESS", 0),
        (["--theorem", "1.1.1", "--p", "2", "--lambda", "1,1", "--mu", "2"], "PASS", 0),
        (["--theorem", "6.1", "--p", "3", "--lambda", "1,1,1,1", "--mu", "2,2"], "SHARPNESS", 0),
    ];
    for (args, verdict, code) in cases {
        let mut all = vec!["verify", "--d", "1"];
        all.extend(args);
        all.extend(["--format", "json"]);
        let out = weylkit(&all);
        assert_eq!(out.status.code(), Some(code), "{args:?}");
        let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        assert_eq!(v["verdict"], verdict, "{args:?}");
    }

    let v = json(&["verify", "--theorem", "hom-bound", "--p", "3", "--lambda", "1,1,1,1", "--mu", "2,2"]);
    assert_eq!(dims(&v), [1]);
    assert_eq!(v["shifted_dims"], serde_json::json!([0]));
    assert_eq!(v["shifted_key"]["lambda"], serde_json::json!([4, 1, 1, 1]));

    let v = json(&["verify", "--theorem", "weyl-periodicity", "--p", "2", "--lambda", "1,1", "--mu", "2"]);
    assert_eq!(v["complex_isomorphism"], true);
}

#[test]
fn verify_table_output() {
    let out = weylkit(&["verify", "--theorem", "1.1.1", "--p", "3", "--lambda", "8,3", "--mu", "11"]);
    let text = stdout(&out);
    assert!(text.contains("verdict: SHARPNESS"), "{text}");
    assert!(text.contains("pd_gt_r_minus_l1: false"), "{text}");
}

#[test]
fn tool_examples() {
    let out = weylkit(&["straighten", "--p", "3", "--mu", "2,2", "--tableau", "1,2/2,2"]);
    assert_eq!(stdout(&out), "0\n");
    let out = weylkit(&["straighten", "--p", "2", "--mu", "4,2", "--tableau", "1,1,1,2/2,2"]);
    assert_ne!(stdout(&out), "0\n");

    let out = weylkit(&["p-kostka", "--p", "2", "--mu", "2", "--alpha", "1,1"]);
    assert_eq!(stdout(&out), "0\n");
    let out = weylkit(&["kostka", "--mu", "2", "--alpha", "1,1"]);
    assert_eq!(stdout(&out), "1\n");

    let out = weylkit(&["schur-mul", "--p", "2", "--omega", "1,1/0,0", "--pi", "1,0/1,0"]);
    assert_eq!(stdout(&out), "0\n");
    let v = json(&["schur-mul", "--p", "3", "--omega", "1,1/0,0", "--pi", "1,0/1,0"]);
    assert_eq!(v["terms"][0]["coefficient"], 2);

    let v = json(&["gram", "--p", "2", "--mu", "2", "--alpha", "1,1"]);
    assert_eq!(v["radical_dim"], 1);
    assert_eq!(v["simple_dim"], 0);

    let v = json(&["resolve-info", "--lambda", "1,1"]);
    let summands: Vec<u64> =
        v["degrees"].as_array().unwrap().iter().map(|d| d["summands"].as_u64().unwrap()).collect();
    assert_eq!(summands, [1, 1]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["ext", "--p", "4", "--lambda", "1", "--mu", "1"][..],
        &["ext", "--p", "2", "--lambda", "3", "--mu", "1"],
        &["ext", "--p", "2", "--lambda", "1,x", "--mu", "2"],
        &["ext", "--p", "2", "--lambda", "1,2", "--mu", "3"],
        &["verify", "--theorem", "9.9", "--p", "2", "--lambda", "1,1", "--mu", "2"],
        &["straighten", "--p", "3", "--mu", "2,2", "--tableau", "1,2/2"],
        &["ext", "--p", "2"],
    ] {
        let out = weylkit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn resource_cap_exits_3() {
    let out = weylkit(&["ext", "--p", "2", "--lambda", "11,10", "--mu", "21"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

fn survey(dir: &Path, cache: &Path, extra: &[&str]) -> (Option<i32>, String) {
    let file = dir.join("survey.ndjson");
    let mut args = vec!["survey", "--out", file.to_str().unwrap(), "--cache-dir", cache.to_str().unwrap()];
    args.extend(extra);
    let out = weylkit(&args);
    (out.status.code(), std::fs::read_to_string(&file).unwrap_or_default())
}

#[test]
fn survey_small_grid_and_warm_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let grid = ["--p", "2", "--n", "2", "--r-min", "2", "--r-max", "2"];
    let (code, cold) = survey(dir.path(), &cache, &grid);
    assert_eq!(code, Some(0));
    let records: Vec<Value> = cold.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let pairs: Vec<(Value, Value, Vec<u64>)> =
        records.iter().map(|v| (v["key"]["lambda"].clone(), v["key"]["mu"].clone(), dims(v))).collect();
    use serde_json::json;
    assert_eq!(
        pairs,
        [
            (json!([2, 0]), json!([2, 0]), vec![1, 0, 0]),
            (json!([1, 1]), json!([2, 0]), vec![1, 1, 0]),
            (json!([1, 1]), json!([1, 1]), vec![1, 0, 0]),
        ]
    );
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 3);

    let (code, warm) = survey(dir.path(), &cache, &grid);
    assert_eq!(code, Some(0));
    assert_eq!(warm, cold);

    let mut recheck = grid.to_vec();
    recheck.push("--recheck");
    let (code, again) = survey(dir.path(), &cache, &recheck);
    assert_eq!(code, Some(0));
    assert_eq!(again, cold);
}

#[test]
fn survey_empty_grid() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let (code, text) = survey(dir.path(), &cache, &["--p", "2", "--n", "2", "--r-min", "3", "--r-max", "2"]);
    assert_eq!(code, Some(0));
    assert_eq!(text, "");
    assert!(dir.path().join("survey.ndjson").exists());
}

#[test]
fn ext_cache_is_reused_and_tampering_detected() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["ext", "--p", "2", "--lambda", "1,1", "--mu", "2", "--format", "json", "--cache-dir", cache];
    let first = stdout(&weylkit(&args));
    let second = stdout(&weylkit(&args));
    assert_eq!(first, second);

    let entry = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let text = std::fs::read_to_string(&entry).unwrap();
    std::fs::write(&entry, text.replace("\"ext_dims\":[1,1,0]", "\"ext_dims\":[1,2,0]")).unwrap();
    let mut recheck = args.to_vec();
    recheck.push("--recheck");
    let out = weylkit(&recheck);
    assert_eq!(out.status.code(), Some(1));
}
