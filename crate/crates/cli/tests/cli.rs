use std::process::Command;

use monocone_cli::run::contains_float;
use serde_json::Value;

fn exe() -> Command {
    Command::new(env!("CARGO_BIN_EXE_monocone"))
}

fn request(name: &str) -> String {
    format!("{}/../../requests/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn error_code(out: &std::process::Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).expect("errors are JSON");
    v["error"]["code"].as_str().unwrap().to_string()
}

#[test]
fn every_request_file_runs_without_floats() {
    let dir = format!("{}/../../requests", env!("CARGO_MANIFEST_DIR"));
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let out = exe().arg("analyze").arg(&path).output().unwrap();
        assert!(out.status.success(), "{}: {}", path.display(), String::from_utf8_lossy(&out.stderr));
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert!(!contains_float(&v), "{}", path.display());
        assert_eq!(v["tool"], "monocone");
    }
}

#[test]
fn window_flag_overrides_request() {
    let out = exe().args(["analyze", &request("hf-square"), "--window", "3,3"]).output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["request"]["window"], serde_json::json!([3, 3]));
}

#[test]
fn leamer_plot_flags_atoms() {
    let dir = std::env::temp_dir().join(format!("monocone-plot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (svg, csv) = (dir.join("l.svg"), dir.join("l.csv"));
    let out = exe()
        .args(["plot", &request("leamer-11-12-15-s2"), "--window", "60,6", "--svg"])
        .arg(&svg)
        .arg("--csv")
        .arg(&csv)
        .output()
        .unwrap();
    assert!(out.status.success());
    let csv = std::fs::read_to_string(csv).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("x,y,atom_flag"));
    let rows: Vec<Vec<i64>> = lines.map(|l| l.split(',').map(|t| t.parse().unwrap()).collect()).collect();
    assert!(rows.contains(&vec![11, 0, 1]) && rows.contains(&vec![22, 0, 0]) && rows.contains(&vec![0, 0, 0]));
    let atoms = rows.iter().filter(|r| r[2] == 1).count();
    let svg = std::fs::read_to_string(svg).unwrap();
    assert_eq!(svg.matches("class=\"atom\"").count(), atoms);
    assert_eq!(svg.matches("class=\"member\"").count(), rows.len() - atoms);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn machine_readable_errors() {
    let mut child = exe()
        .args(["analyze", "-", "--window", "5,5"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(br#"{"kind":"leamer","gamma":[2,3],"step":3}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_code(&out), "invalid-spec");
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"]["message"], "s in Gamma");

    let out = exe().args(["analyze", &request("hf-square"), "--window", "0,4"]).output().unwrap();
    assert_eq!(error_code(&out), "window-too-small");
    let out = exe().args(["corpus", "--seed", "1", "--count", "0"]).output().unwrap();
    assert_eq!(error_code(&out), "bad-argument");
    let out = exe().args(["analyze", "/nonexistent/spec.json"]).output().unwrap();
    assert_eq!(error_code(&out), "io");
}

#[test]
fn corpus_summary() {
    let out = exe().args(["corpus", "--seed", "3", "--count", "5"]).output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["violations"], 0);
    assert_eq!(v["instances"].as_array().unwrap().len(), 5);
    assert!(!contains_float(&v));
}
