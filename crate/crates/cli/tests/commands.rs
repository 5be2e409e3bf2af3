use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitspace")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    assert_eq!(v["schema"], 1);
    v
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn classify_examples() {
    let v = json(&["classify", "5", "4", "--connected"]);
    assert_eq!(v["known_result"], "NotSmooth_Thm1_5");
    assert_eq!(v["theorem"], "1.5");
    assert_eq!(json(&["classify", "3"])["manifold_possible"], false);
    assert_eq!(code(&["classify", "6"]), 2);
}

#[test]
fn invariant_examples() {
    let v = json(&["invariant", "44", "[1, 0]"]);
    assert_eq!(v["coord"]["d"], 1.0);
    assert_eq!(v["coord"]["lambda"], serde_json::json!([0.0, 0.0, 0.0, 0.0]));

    let v = json(&["invariant", "333", "[[1,0,0],[0,1,0],[0,0,1]]"]);
    assert_eq!(v["coord"]["det"], 1.0);
    let s = v["coord"]["S"].as_array().unwrap();
    assert!(s.iter().flat_map(|r| r.as_array().unwrap()).all(|e| e.as_f64().unwrap().abs() < 1e-12));

    let v = json(&["invariant", "43", r#"[0, "i"]"#]);
    assert_eq!(v["coord"]["d"], -1.0);
    assert_eq!(v["coord"]["lambda0"], serde_json::json!([0.0, 0.0, 0.0]));

    let v = json(&["invariant", "7", "[0,0,0,1,0,0,0]"]);
    assert_eq!(v["in_f"], true);
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(code(&["invariant", "44", "not json"]), 2);
    assert_eq!(code(&["invariant", "43", "[0, 1]"]), 2);
    assert_eq!(code(&["invariant", "99", "[]"]), 2);
    assert_eq!(code(&["region", "m7", "--resolution", "1"]), 2);
    assert_eq!(code(&["verify", "inv44", "--samples", "0"]), 2);
}

#[test]
fn orbit_eq_translates() {
    let v = json(&["orbit-eq", "44", "[1, 0]", r#"["i", 0]"#]);
    assert_eq!(v["same_orbit"], true);
    assert_eq!(v["witness"]["su2"].as_array().unwrap().len(), 4);
    let v = json(&["orbit-eq", "44", "[1, 0]", "[2, 0]"]);
    assert_eq!(v["same_orbit"], false);
}

#[test]
fn verify_reports_and_exit_codes() {
    let v = json(&["verify", "inv44", "--samples", "10000", "--seed", "7"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"][0]["failures"], 0);
    assert_eq!(code(&["verify", "no_such_suite"]), 2);
}

#[test]
fn same_seed_same_bytes_outside_timing() {
    let strip = |mut v: Value| {
        for r in v["reports"].as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("wall_time_s");
        }
        serde_json::to_string(&v).unwrap()
    };
    let args = ["verify", "sep44", "--samples", "20", "--seed", "3"];
    assert_eq!(strip(json(&args)), strip(json(&args)));
    let args = ["orbit-eq", "333", "[[1,2,0],[0,1,0],[0,0,1]]", "[[0,1,0],[1,2,0],[0,0,1]]"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn region_mesh() {
    let out = run(&["region", "D", "--resolution", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x1,x2,x3,in_region,on_boundary");
    assert_eq!(lines.len(), 28);
    assert!(lines.contains(&"1,1,1,1,1"));

    let text = String::from_utf8(run(&["region", "m7", "--resolution", "21"]).stdout).unwrap();
    assert!(text.lines().any(|l| l == "0.5,0.2,0.1,1,0"));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("orbitspace-table1-{}.json", std::process::id()));
    let out = run(&["table1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    std::fs::remove_file(path).ok();
}
