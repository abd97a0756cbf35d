use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn harmap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmap"))
        .args(args)
        .env_remove("HARMAP_THREADS")
        .output()
        .expect("spawn harmap")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .filter_map(|l| l.split_once('='))
        .find(|(k, _)| k.trim() == key)
        .map(|(_, v)| v.trim().parse().unwrap())
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
}

#[test]
fn bmo_identity() {
    let id = data("identity.json");
    let out = harmap(&["bmo", id.to_str().unwrap(), "--r", "0.5", "--omega", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!((field(&text, "norm") - 0.5).abs() < 1e-9);
    assert!((field(&text, "bound") - 1.17741).abs() < 1e-5);
    assert!(text.ends_with("result: pass\n"));
}

#[test]
fn malformed_file_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"label\": \"bad\",\n  \"h\": [[0, 0], [1, ]],\n  \"g\": [[0,0]]\n}\n").unwrap();
    let out = harmap(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bad.json:3:21:"), "{err}");
}

#[test]
fn missing_file_is_input_error() {
    let out = harmap(&["norms", "/nonexistent/map.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn alpha_beyond_q_is_parameter_error() {
    let out = harmap(&["landau", "--C", "1", "--alpha", "5"]);
    assert_eq!(out.status.code(), Some(3));
    let out = harmap(&["bounds", "--C", "-1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sense_reversing_map_fails_hypothesis() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rev.json");
    std::fs::write(&path, r#"{"label": "rev", "h": [[0,0],[0.2,0]], "g": [[0,0],[0,0],[0.5,0]]}"#).unwrap();
    for cmd in ["analyze", "lipschitz"] {
        let out = harmap(&["--grid", "fast", cmd, path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(3), "{cmd}");
    }
}

#[test]
fn quasiregular_first_coefficient() {
    let out = harmap(&["--csv", "bounds", "--C", "1", "--K", "1", "--n-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let header = text.lines().find(|l| l.starts_with("table,")).unwrap();
    let row = text.lines().find(|l| l.starts_with("bounds,1,")).unwrap();
    let col = header.split(',').position(|c| c == "quasiregular").unwrap();
    let v: f64 = row.split(',').nth(col).unwrap().parse().unwrap();
    assert_eq!(v, 1.0);
}

#[test]
fn extremal_map_matches_expected() {
    let f = data("extremal.json");
    let out = harmap(&["--grid", "fast", "analyze", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS expected C"));
    assert!(text.contains("PASS expected alpha"));
}

#[test]
fn csv_has_check_block() {
    let f = data("shear.json");
    let out = harmap(&["--csv", "--grid", "fast", "norms", f.to_str().unwrap(), "--r", "0.3,0.6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert!(blocks[0].starts_with("key,value\n"));
    assert!(blocks.iter().any(|b| b.starts_with("check,status,margin,detail\n")));
    let mut rdr = csv::ReaderBuilder::new().flexible(true).from_reader(blocks[0].as_bytes());
    assert!(rdr.records().all(|r| r.unwrap().len() == 2));
}

#[test]
fn output_is_reproducible_across_threads() {
    let f = data("shear.json");
    let run = |threads: &str| {
        let out = harmap(&["--grid", "fast", "--threads", threads, "lipschitz", f.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        text.split_once('\n').unwrap().1.to_string()
    };
    let a = run("1");
    assert_eq!(a, run("1"));
    assert_eq!(a, run("3"));
}

#[test]
fn seed_changes_sampled_output() {
    let f = data("shear.json");
    let run = |seed: &str| harmap(&["--grid", "fast", "--seed", seed, "lipschitz", f.to_str().unwrap()]).stdout;
    assert_ne!(run("1"), run("2"));
}

#[test]
fn identity_is_convex_everywhere() {
    let f = data("identity.json");
    let out = harmap(&["--grid", "fast", "convex", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS fully convex: 4 radii"), "{text}");
}

#[test]
fn extremal_lipschitz_chain() {
    let f = data("extremal.json");
    let out = harmap(&["--grid", "fast", "lipschitz", f.to_str().unwrap(), "--r", "0.5", "--omega", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS estimates nested"));
    assert!(text.contains("PASS gradient chain"));
}

#[test]
fn bounds_column_matches_library() {
    let out = harmap(&["--csv", "bounds", "--C", "1", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("bounds,")).collect();
    assert_eq!(rows.len(), 5);
    for (n, row) in (1..).zip(rows) {
        let v: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
        assert_eq!(v, harmap_core::bounds::bound_hc(1.0, n).unwrap());
    }
}
