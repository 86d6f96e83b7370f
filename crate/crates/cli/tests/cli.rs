use std::process::{Command, Output};

use serde_json::Value;

fn permclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permclass"))
        .args(args)
        .env_remove("PERMCLASS_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("single JSON document")
}

#[test]
fn count_both_agrees_on_small_lengths() {
    let out = permclass(&["count", "--to", "4", "--method", "both", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["all_agree"], true);
    let counts: Vec<&str> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["brute"].as_str().unwrap())
        .collect();
    assert_eq!(counts, ["1", "2", "6", "22"]);
}

#[test]
fn count_gf_gives_series() {
    let out = permclass(&["count", "--to", "10", "--method", "gf", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("length,gf"));
    let last: Vec<&str> = lines.last().unwrap().split(',').collect();
    assert_eq!(last, ["10", "58656"]);
}

#[test]
fn zero_length_is_a_usage_error() {
    assert_eq!(code(&permclass(&["count", "--to", "0"])), 2);
    assert_eq!(code(&permclass(&["simples", "--to", "3"])), 2);
    assert_eq!(
        code(&permclass(&["count", "--to", "3", "--method", "magic"])),
        2
    );
    assert_eq!(code(&permclass(&["frobnicate"])), 2);
}

#[test]
fn simples_totals_and_types() {
    let out = permclass(&["simples", "--to", "6", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let rows = doc["rows"].as_array().unwrap();
    let totals: Vec<&str> = rows.iter().map(|r| r["total"].as_str().unwrap()).collect();
    assert_eq!(totals, ["2", "4", "10"]);
    assert_eq!(rows[0]["types"]["type1"], "1");
    assert_eq!(rows[0]["types"]["inv-type1"], "1");
    assert_eq!(rows[1]["types"]["sporadic-42513"], "1");
    assert_eq!(rows[1]["types"]["sporadic-35142"], "1");
    assert_eq!(rows[1]["types"]["type1"], "1");
    assert_eq!(rows[1]["types"]["inv-type1"], "1");
}

#[test]
fn encode_and_decode() {
    let out = permclass(&["encode", "5 1 6 4 7 2 8 3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "bacbcacb\n");

    let out = permclass(&["decode", "bacb"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "3 1 4 2\n");
}

#[test]
fn encode_error_codes() {
    assert_eq!(code(&permclass(&["encode", "2143"])), 4);
    assert_eq!(code(&permclass(&["encode", "2 2 1"])), 3);
    assert_eq!(code(&permclass(&["decode", "abz"])), 3);
}

#[test]
fn grid_membership() {
    let out = permclass(&[
        "grid",
        "--matrix",
        "-1,-1;1,1;0,-1",
        "6 12 11 7 10 4 5 9 3 8 2 1",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["member"], true);
    assert!(doc["witness"]["col_cuts"].is_array());

    let out = permclass(&["grid", "--matrix", "-1", "12"]);
    assert_eq!(stdout(&out), "non-member\n");
    let out = permclass(&["grid", "--matrix", "1;-1;1", "3142"]);
    assert!(stdout(&out).starts_with("member"));
    assert_eq!(code(&permclass(&["grid", "--matrix", "1;2", "12"])), 3);
}

#[test]
fn verify_small_passes() {
    let out = permclass(&["verify", "--to", "4"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).lines().all(|l| !l.starts_with("FAIL")));
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        &["count", "--to", "5", "--format", "json"][..],
        &["simples", "--to", "6", "--format", "json"][..],
        &["verify", "--to", "5", "--format", "json"][..],
    ] {
        let text = stdout(&permclass(args));
        let parsed: Value = serde_json::from_str(&text).unwrap();
        let mut again = serde_json::to_string_pretty(&parsed).unwrap();
        again.push('\n');
        assert_eq!(again, text);
    }
}

#[test]
fn output_is_independent_of_thread_count() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_permclass"))
            .args(["count", "--to", "8", "--format", "csv"])
            .env("PERMCLASS_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    let flag = permclass(&["count", "--to", "8", "--format", "csv", "--threads", "3"]);
    assert_eq!(one, flag.stdout);
}

#[test]
fn bad_thread_env_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_permclass"))
        .args(["count", "--to", "2"])
        .env("PERMCLASS_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}
