use std::process::{Command, Output};

fn groth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groth")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim().to_string()
}

#[test]
fn expand_single_extended_box() {
    let o = groth(&["expand", "--family", "G", "--shape", "2//1", "--vars", "1", "--xcap", "2", "--bcap", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1 - b*x1^2");
}

#[test]
fn count_standard_tableaux() {
    let o = groth(&["count", "--family", "ST", "--shape", "2,1,1/1", "--n", "2"]);
    assert_eq!(stdout(&o), "2");
}

#[test]
fn verify_exit_codes() {
    let args = ["verify", "skewCauchy", "--mu", "-", "--nu", "-", "--xvars", "1", "--yvars", "1"];
    let o = groth(&[&args[..], &["--xcap", "3", "--ycap", "3", "--bcap", "3"]].concat());
    assert_eq!(o.status.code(), Some(0));
    // a β = 1 identity asked at formal β is a usage error
    let o = groth(&["verify", "specializationCatalan", "--beta", "formal"]);
    assert_eq!(o.status.code(), Some(2));
    let o = groth(&["verify", "noSuchIdentity"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_shape_names_the_flag() {
    let o = groth(&["expand", "--family", "G", "--shape", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--shape"));
    let o = groth(&["verify", "skewCauchy", "--mu", "1,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--mu"));
}

#[test]
fn json_round_trips() {
    let o = groth(&["--json", "expand", "--family", "g", "--shape", "2,1/1", "--vars", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["terms"].as_array().is_some_and(|t| !t.is_empty()));
    assert_eq!(v["variables"][0], "b");

    let o = groth(&["--json", "graph", "build", "--kind", "moebiusY", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "moebiusY");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);

    let o = groth(&["--json", "verify", "cauchy", "--xvars", "1", "--yvars", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
}

#[test]
fn worked_walks_and_apply() {
    let o = groth(&["graph", "walk", "--kind", "betaY", "--beta", "1", "--from", "2", "--to", "2,1", "--steps", "2"]);
    assert_eq!(stdout(&o), "-3");
    let o = groth(&[
        "graph", "walk", "--kind", "betaY", "--beta", "1", "--from", "2,1,1", "--to", "1", "--steps", "2",
        "--direction", "down",
    ]);
    assert_eq!(stdout(&o), "2");
    let o = groth(&["apply", "--word", "u1", "--partition", "-"]);
    assert_eq!(stdout(&o), "(1)·[1]");
}

#[test]
fn suite_output_is_independent_of_threads() {
    let run = |t: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_groth"))
            .args(["--json", "suite", "--criteria", "5,11"])
            .env("GROTH_THREADS", t)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        for r in v.as_array_mut().unwrap() {
            r["report"]["stats"]["wall_time_ms"] = 0.into();
        }
        v
    };
    assert_eq!(run("1"), run("3"));
}
