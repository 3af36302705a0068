use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const D6: &str = "0 1 1\n1 2 1\n0 2 1\n3 4 1\n4 5 1\n3 5 1\n2 3 0.5\n";

const METRIC_KEYS: [&str; 18] = [
    "command",
    "format",
    "cut",
    "n",
    "m",
    "k",
    "value",
    "normalized_value",
    "cut_weight",
    "size_s",
    "vol_s",
    "cluster_sizes",
    "cluster_volumes",
    "terminals",
    "flow_calls",
    "disconnected",
    "classification_rate",
    "wall_time_seconds",
];

fn xist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn labels(path: &Path) -> Vec<usize> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| l.parse().unwrap())
        .collect()
}

fn metrics(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn cut_dumbbell_ncut() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "d6.txt", D6);
    let (lab, met) = (dir.path().join("labels.txt"), dir.path().join("m.json"));
    let out = xist(&[
        "cut",
        "--input",
        s(&input),
        "--cut",
        "ncut",
        "--labels",
        s(&lab),
        "--metrics",
        s(&met),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(labels(&lab), vec![0, 0, 0, 1, 1, 1]);
    let m = metrics(&met);
    assert!((m["value"].as_f64().unwrap() - 0.0118343).abs() < 1e-7);
    assert!((m["normalized_value"].as_f64().unwrap() - 2.0 / 13.0).abs() < 1e-12);
    assert_eq!(m["size_s"], 3);
    assert_eq!(m["vol_s"], 6.5);
    assert_eq!(m["flow_calls"], 1);
    assert_eq!(m["cut"], "ncut");
    let keys: Vec<&str> = m.as_object().unwrap().keys().map(String::as_str).collect();
    let mut expected = METRIC_KEYS.to_vec();
    expected.sort();
    let mut got = keys.clone();
    got.sort();
    assert_eq!(got, expected);
}

#[test]
fn cut_disconnected_is_zero() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "two.txt", "0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n");
    let (lab, met) = (dir.path().join("l.txt"), dir.path().join("m.json"));
    let out = xist(&[
        "cut",
        "--input",
        s(&input),
        "--labels",
        s(&lab),
        "--metrics",
        s(&met),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(labels(&lab), vec![0, 0, 0, 1, 1, 1]);
    let m = metrics(&met);
    assert_eq!(m["value"], 0.0);
    assert_eq!(m["disconnected"], true);
    assert_eq!(m["flow_calls"], 0);
}

#[test]
fn largest_component_labels_only_that_component() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "g.txt", &format!("{D6}10 11\n"));
    let (lab, met) = (dir.path().join("l.txt"), dir.path().join("m.json"));
    let out = xist(&[
        "cut",
        "--input",
        s(&input),
        "--largest-component",
        "--labels",
        s(&lab),
        "--metrics",
        s(&met),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(labels(&lab), vec![0, 0, 0, 1, 1, 1]);
    assert_eq!(metrics(&met)["n"], 6);
}

#[test]
fn multicut_dumbbell() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "d6.txt", D6);
    let (lab, met) = (dir.path().join("l.txt"), dir.path().join("m.json"));
    let out = xist(&[
        "multicut",
        "--k",
        "2",
        "--input",
        s(&input),
        "--labels",
        s(&lab),
        "--metrics",
        s(&met),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(labels(&lab), vec![0, 0, 0, 1, 1, 1]);
    let m = metrics(&met);
    assert_eq!(m["command"], "multicut");
    assert_eq!(m["k"], 2);
    assert!((m["value"].as_f64().unwrap() - 0.5 / 42.25).abs() < 1e-12);

    let out = xist(&[
        "multicut",
        "--k",
        "3",
        "--input",
        s(&input),
        "--labels",
        s(&lab),
        "--metrics",
        s(&met),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let l = labels(&lab);
    assert_eq!(l.len(), 6);
    assert_eq!(*l.iter().max().unwrap(), 2);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let points = dir.path().join("pts.csv");
    assert_eq!(
        xist(&[
            "gen",
            "gaussian",
            "--n",
            "80",
            "--delta",
            "3",
            "--seed",
            "4",
            "--out",
            s(&points)
        ])
        .status
        .code(),
        Some(0)
    );
    let mut runs = Vec::new();
    for i in 0..2 {
        let (lab, met) = (
            dir.path().join(format!("l{i}")),
            dir.path().join(format!("m{i}")),
        );
        let out = xist(&[
            "cut",
            "--input",
            s(&points),
            "--format",
            "csv-points",
            "--omit-timing",
            "--labels",
            s(&lab),
            "--metrics",
            s(&met),
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        runs.push((std::fs::read(&lab).unwrap(), std::fs::read(&met).unwrap()));
    }
    assert_eq!(runs[0], runs[1]);
    let m: Value = serde_json::from_slice(&runs[0].1).unwrap();
    assert_eq!(m["wall_time_seconds"], Value::Null);
    assert!(m["classification_rate"].as_f64().unwrap() > 0.5);
    assert_eq!(
        String::from_utf8(runs[0].0.clone())
            .unwrap()
            .lines()
            .count(),
        80
    );
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for p in [&a, &b] {
        assert_eq!(
            xist(&[
                "gen",
                "gaussian",
                "--n",
                "25",
                "--delta",
                "2",
                "--seed",
                "11",
                "--out",
                s(p)
            ])
            .status
            .code(),
            Some(0)
        );
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert_eq!(text.lines().next(), Some("x,y,label"));
    assert_eq!(text.lines().count(), 26);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let d6 = write(&dir, "d6.txt", D6);
    let path = write(&dir, "p3.txt", "0 1\n1 2\n");
    let bad = write(&dir, "bad.txt", "0 1\n0 x\n");

    assert_eq!(xist(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(xist(&["cut"]).status.code(), Some(2));
    assert_eq!(
        xist(&["cut", "--input", s(&d6), "--cut", "sparsest"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        xist(&["cut", "--input", s(&d6), "--subset", "intensity"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        xist(&["multicut", "--k", "1", "--input", s(&d6)])
            .status
            .code(),
        Some(2)
    );

    let missing = dir.path().join("missing.txt");
    assert_eq!(
        xist(&["cut", "--input", s(&missing)]).status.code(),
        Some(1)
    );
    let out = xist(&["cut", "--input", s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(
        xist(&["multicut", "--k", "9", "--input", s(&d6)])
            .status
            .code(),
        Some(1)
    );

    let out = xist(&["cut", "--input", s(&path)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--subset all"));
    let out = xist(&[
        "cut",
        "--input",
        s(&path),
        "--subset",
        "all",
        "--cut",
        "ratio",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let m: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(m["value"], 0.5);
}

#[test]
fn image_input() {
    let dir = TempDir::new().unwrap();
    // two bright squares on a dim background
    let mut pgm = String::from("P2\n8 8\n255\n");
    for y in 0..8 {
        let row: Vec<String> = (0..8)
            .map(|x| {
                if (x < 3 && y < 3) || (x > 4 && y > 4) {
                    "250"
                } else {
                    "10"
                }
                .to_string()
            })
            .collect();
        pgm.push_str(&row.join(" "));
        pgm.push('\n');
    }
    let input = write(&dir, "img.pgm", &pgm);
    let lab = dir.path().join("l.txt");
    for subset in ["degree", "intensity"] {
        let out = xist(&[
            "cut",
            "--input",
            s(&input),
            "--format",
            "pgm",
            "--grid",
            "8",
            "--subset",
            subset,
            "--labels",
            s(&lab),
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let m: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(m["n"], 64);
        assert_eq!(labels(&lab).len(), 64);
    }
}

#[test]
fn oracle_and_bench() {
    let out = xist(&["oracle", "--max-n", "9", "--trials", "20", "--seed", "3"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["trials"], 20);
    assert_eq!(xist(&["oracle", "--max-n", "20"]).status.code(), Some(1));
    assert_eq!(xist(&["oracle", "--min-n", "3"]).status.code(), Some(2));

    let out = xist(&["bench", "grid", "--sizes", "8,12", "--repeats", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,n,m,terminals,flow_calls,value,seconds");
    assert_eq!(lines.len(), 3);
    assert!(lines[2].starts_with("12,144,"));
}
