use std::process::{Command, Output};

fn map(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_map"))
        .args(args)
        .env("MAP_OFFLINE", "1")
        .env("OEIS_CACHE_DIR", std::env::temp_dir().join("map-cli-test-empty-cache"))
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = map(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    map(args).status.code().unwrap()
}

#[test]
fn enumeration_examples() {
    assert_eq!(stdout(&["enumerate", "m2", "3", "--count", "--by-height"]).trim(), "2 3 3 1");
    assert_eq!(stdout(&["enumerate", "m1", "0", "--count"]).trim(), "1");
    assert_eq!(stdout(&["enumerate", "m2r", "--antidiagonal", "4", "--count"]).trim(), "9");
}

#[test]
fn triangle_plain_matches_counts() {
    let t = stdout(&["triangle", "m2", "4", "4"]);
    assert_eq!(t, "1 0 0 0\n1 1 0 0\n1 2 1 0\n2 3 3 1\n");
    for route in ["iter", "closed", "recur", "riordan"] {
        assert_eq!(stdout(&["triangle", "m2", "4", "4", "--route", route]), t, "{route}");
    }
}

#[test]
fn triangle_csv_and_json_shapes() {
    let csv = stdout(&["triangle", "m1", "3", "3", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,k,count"));
    assert_eq!(lines.count(), 9);

    let json: serde_json::Value = serde_json::from_str(&stdout(&["triangle", "m2", "2", "2", "--format", "json"])).unwrap();
    assert_eq!(json["family"], "m2");
    assert_eq!(json["route"], "enum");
    assert_eq!(json["rows"], 2);
    assert_eq!(json["cols"], 2);
    assert_eq!(json["data"], serde_json::json!([[1, 0], [1, 1]]));
}

#[test]
fn series_outputs() {
    assert_eq!(stdout(&["series", "motzkin", "--order", "5"]).trim(), "1 1 2 4 9 21");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["series", "motzkin", "--order", "3", "--format", "json"])).unwrap();
    assert_eq!(json["name"], "motzkin");
    assert_eq!(json["terms"], serde_json::json!([1, 1, 2, 4]));
}

#[test]
fn formula_value() {
    let cell = stdout(&["formula", "m2-lagrange", "3", "1"]);
    assert_eq!(cell.trim(), "3");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["enumerate", "m9", "3", "--count"]), 2);
    assert_eq!(code(&["triangle", "m1r", "4", "4", "--route", "recur"]), 2);
    assert_eq!(code(&["series", "m1r", "--which", "total@u=1"]), 2);
    assert_eq!(code(&["formula", "no-such-formula", "1", "1"]), 2);
    assert_eq!(code(&["oeis", "B12"]), 2);
}

#[test]
fn offline_unknown_reference_exits_3() {
    assert_eq!(code(&["oeis", "A000045"]), 3);
}

#[test]
fn embedded_reference_prints_terms() {
    assert!(stdout(&["oeis", "A001006"]).starts_with("1 1 2 4 9 21 51"));
}

#[test]
fn verify_exit_codes() {
    let out = stdout(&["verify", "--suite", "kernel", "--order", "8", "--width", "8"]);
    assert!(out.contains("0 failed"));
    // the auxiliary reference has too few offline terms to match
    assert_eq!(code(&["verify", "--suite", "oeis"]), 1);
    let json: serde_json::Value =
        serde_json::from_slice(&map(&["verify", "--suite", "oeis", "--format", "json"]).stdout).unwrap();
    assert!(json.is_object() || json.is_array());
}
