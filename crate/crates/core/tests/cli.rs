use std::path::Path;
use std::process::{Command, Output};

use qaskey::Rat;

fn qaskey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qaskey")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

#[test]
fn eval_examples() {
    let o = qaskey(&["eval", "--family", "cqu", "--n", "0", "--qparams", "1/2,2/3", "--at-z", "7/5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "1");

    let o = qaskey(&["eval", "--family", "ultraspherical", "--n", "2", "--alpha", "0", "--at", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "-1/8");
}

#[test]
fn q_racah_top_matches_closed_form() {
    let o = qaskey(&[
        "eval", "--family", "q-racah", "--n", "2", "--alpha", "1/3", "--beta", "1/2", "--delta", "-4", "--q", "1/4",
        "--N", "3", "--x", "N",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let value = text.lines().next().unwrap();
    let closed = text.lines().find_map(|l| l.strip_prefix("closed form at x = N: ")).expect("closed form line");
    assert_eq!(value, closed);
}

#[test]
fn racah_weights_sum_to_first_norm() {
    let common = ["--family", "racah-weights", "--alpha", "1/2", "--beta", "1/3", "--delta", "11/2", "--N", "4"];
    let o = qaskey(&[&["table"], &common[..]].concat());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("index,exact,float"));
    let weights: Vec<Rat> = rows.map(|r| r.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(weights.len(), 5);
    assert_eq!(weights[0], Rat::one());
    let total = weights.into_iter().fold(Rat::zero(), |a, w| a + w);

    let mut norms = common;
    norms[1] = "racah-norms";
    let o = qaskey(&[&["table"], &norms[..], &["--to", "0"]].concat());
    let h0: Rat = first_data_field(&stdout(&o));
    assert_eq!(total, h0);
}

fn first_data_field(csv: &str) -> Rat {
    csv.lines().nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap()
}

#[test]
fn empty_range_prints_header_only() {
    let o = qaskey(&[
        "table", "--family", "krawtchouk-weights", "--p", "1/3", "--N", "4", "--from", "3", "--to", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "index,exact,float\n");
}

#[test]
fn configuration_errors_exit_two() {
    for args in [
        vec!["verify", "--suite", "duality", "--qparams", "3/2,1"],
        vec!["verify", "--suite", "no-such-suite"],
        vec!["verify"],
        vec!["verify", "--suite", "duality", "--alpha", "-1"],
        vec!["frobnicate"],
        vec!["eval", "--family", "cqu", "--n", "1"],
    ] {
        let o = qaskey(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

fn strip_wall_time(json: &str) -> String {
    json.lines().filter(|l| !l.contains("\"wallTimeMs\"")).collect::<Vec<_>>().join("\n")
}

#[test]
fn json_report_shape_and_determinism() {
    let args = ["verify", "--suite", "duality", "--format", "json"];
    let a = qaskey(&args);
    assert_eq!(a.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    for key in ["version", "suite", "grid", "checks", "summary", "wallTimeMs"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["suite"], "duality");
    assert_eq!(doc["summary"]["fail"], 0);
    let checks = doc["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["verdict"] == "pass"));

    let b = qaskey(&args);
    assert_eq!(strip_wall_time(&stdout(&a)), strip_wall_time(&stdout(&b)));
}

#[test]
fn out_flag_and_text_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = qaskey(&[
        "verify", "--suite", "orthogonality", "--format", "text", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l.starts_with("PASS  orthogonality.krawtchouk")));
    assert!(text.lines().last().unwrap().starts_with("suite orthogonality:"));
}

#[test]
fn csv_format() {
    let o = qaskey(&["verify", "--suite", "backward-shift", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers[2], "verdict");
    let rows: Vec<_> = reader.records().map(|r| r.unwrap()).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| &r[2] == "pass"));
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("qaskey.conf");
    write(&cfg, "# restriction on one point\nsuite = restriction\nformat = csv\nqparams = 1/2,2/3\n");
    let o = qaskey(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("id,params,verdict"));

    let o = qaskey(&["verify", "--config", cfg.to_str().unwrap(), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["suite"], "restriction");

    write(&cfg, "suite = restriction\ncolour = blue\n");
    let o = qaskey(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

/// Everything passes except the two q -> 1 limits, whose error decays at
/// second order and so falls outside the first-order ratio band.
#[test]
fn full_run_fails_only_on_q_limits() {
    let o = qaskey(&["verify", "--suite", "all", "--qparams", "1/2,2/3"]);
    assert_eq!(o.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let mut failing: Vec<&str> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] != "pass")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    failing.sort();
    assert_eq!(failing, ["limits.cqu-to-ultra", "limits.dual-addition-q-to-1"]);
    assert_eq!(doc["summary"]["error"], 0);
}
