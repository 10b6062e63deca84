use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn matchgap(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_matchgap"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

const FAMILIES: [(&str, bool, bool); 4] = [
    // name, takes k, connected
    ("triangle-star", true, true),
    ("triangles", true, false),
    ("c5", false, true),
    ("k2k3", false, true),
];

#[test]
fn generators_pipe_into_stats_and_verify() {
    for (family, takes_k, connected) in FAMILIES {
        let ks: Vec<usize> = if takes_k { (1..=6).collect() } else { vec![0] };
        for k in ks {
            let k_text = k.to_string();
            let mut args = vec!["gen", family];
            if takes_k {
                args.push(&k_text);
            }
            let gen = matchgap(&args, b"");
            assert!(gen.status.success(), "gen {family} {k}");
            assert_eq!(String::from_utf8_lossy(&gen.stdout).lines().count(), 1);

            let stats = matchgap(&["stats"], &gen.stdout);
            assert!(stats.status.success(), "stats {family} {k}");
            let rec = &json_lines(&stats)[0];
            assert_eq!(rec["gap_ok"], true);
            assert_eq!(rec["equality_gap"], true, "{family} {k}: {rec}");

            let union = matchgap(&["verify", "--mode", "union"], &gen.stdout);
            assert!(union.status.success(), "verify union {family} {k}");
            if connected {
                let conn = matchgap(&["verify", "--mode", "connected"], &gen.stdout);
                assert!(conn.status.success(), "verify connected {family} {k}");
                let summary = json_lines(&conn).last().unwrap()["summary"].clone();
                assert_eq!(summary["equality_gap"].as_array().unwrap().len(), 1);
            }
        }
    }
}

#[test]
fn gen_shapes() {
    let out = matchgap(&["gen", "triangle-star", "3"], b"");
    let line = String::from_utf8(out.stdout).unwrap();
    let g = matchgap::parse_graph6(line.trim()).unwrap();
    assert_eq!(g.n(), 11);

    let out = matchgap(&["gen", "--family", "triangles", "--k", "4"], b"");
    let g = matchgap::parse_graph6(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    assert_eq!(g.n(), 12);
    assert_eq!(
        matchgap::components(&g, &matchgap::VertexSet::empty())
            .components
            .len(),
        4
    );

    let out = matchgap(&["gen", "c5"], b"");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "Dhc\n");

    assert_eq!(matchgap(&["gen", "petersen"], b"").status.code(), Some(2));
}

#[test]
fn canonical_examples() {
    let out = matchgap(&["canonical"], b"Dhc\n");
    assert!(out.status.success());
    let recs = json_lines(&out);
    let stats: Vec<&Value> = recs.iter().map(|r| &r["stats"]).collect();
    assert_eq!(
        stats[0],
        &serde_json::json!({"w0": 0, "w1": 0, "c": {"2": 1}})
    );
    // P4 and K1,3
    let p4 = matchgap::families::path(4);
    let k13 = matchgap::families::star(3);
    let input = format!(
        "{}\n{}\n",
        matchgap::encode_graph6(&p4).unwrap(),
        matchgap::encode_graph6(&k13).unwrap()
    );
    let recs = json_lines(&matchgap(&["canonical"], input.as_bytes()));
    assert_eq!(
        recs[0]["stats"],
        serde_json::json!({"w0": 0, "w1": 2, "c": {}})
    );
    assert_eq!(
        recs[1]["stats"],
        serde_json::json!({"w0": 2, "w1": 1, "c": {}})
    );
}

#[test]
fn verify_enumerated() {
    let out = matchgap(&["verify", "--enumerate", "7", "--mode", "connected"], b"");
    assert!(out.status.success());
    let summary = json_lines(&out).last().unwrap()["summary"].clone();
    assert_eq!(summary["total"], 853);
    assert_eq!(summary["violations"].as_array().unwrap().len(), 0);

    let out = matchgap(&["verify", "--enumerate", "5", "--mode", "connected"], b"");
    assert!(out.status.success());
    let summary = json_lines(&out).last().unwrap()["summary"].clone();
    assert!(!summary["equality_gap"].as_array().unwrap().is_empty());
    assert_eq!(summary["mismatches"].as_array().unwrap().len(), 0);

    let out = matchgap(&["verify", "--enumerate", "9"], b"");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6"));
}

#[test]
fn unions_from_file() {
    let dir = std::env::temp_dir().join(format!("matchgap-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("unions.g6");
    let connected: Vec<Vec<matchgap::Graph>> =
        (1..=6).map(matchgap::enumerate::connected_graphs).collect();
    let unions = matchgap::enumerate::unions_of_connected(&connected, 6);
    let text: String = unions
        .iter()
        .map(|g| matchgap::encode_graph6(g).unwrap() + "\n")
        .collect();
    std::fs::write(&path, text).unwrap();
    let out = matchgap(
        &[
            "verify",
            "--mode",
            "union",
            "--input",
            path.to_str().unwrap(),
        ],
        b"",
    );
    std::fs::remove_dir_all(&dir).unwrap();
    // Bounds hold, but ratio 3/2 is also reached by K3 plus isolated vertices, which the
    // verifier reports as characterization mismatches.
    assert_eq!(out.status.code(), Some(1));
    let summary = json_lines(&out).last().unwrap()["summary"].clone();
    assert!(summary["violations"].as_array().unwrap().is_empty());
    let strings = |key: &str| -> Vec<matchgap::Graph> {
        summary[key]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| matchgap::parse_graph6(v.as_str().unwrap()).unwrap())
            .collect()
    };
    let gap_eq = strings("equality_gap");
    assert_eq!(gap_eq.len(), 2); // K3 and 2K3
    for g in &gap_eq {
        assert_eq!(g.edge_count(), g.n());
    }
    let mismatches = strings("mismatches");
    assert_eq!(mismatches.len(), 3); // K3 plus one, two or three isolated vertices
    for g in &mismatches {
        assert_eq!(g.edge_count() % 3, 0);
        assert_eq!(
            matchgap::matching_number(g) * 3,
            matchgap::alpha_f_halves(g)
        );
    }
}

#[test]
fn deterministic_across_job_counts() {
    let corpus = matchgap(&["gen", "connected", "6"], b"");
    assert!(corpus.status.success());
    for cmd in [
        &["stats"][..],
        &["witness"],
        &["canonical"],
        &["verify"],
        &["stats", "--format", "tsv"],
    ] {
        let outputs: Vec<Vec<u8>> = ["1", "2", "7"]
            .iter()
            .map(|jobs| {
                let mut args = cmd.to_vec();
                args.extend(["--jobs", jobs]);
                matchgap(&args, &corpus.stdout).stdout
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{cmd:?}");
        assert!(!outputs[0].is_empty());
    }
}

#[test]
fn dash_reads_stdin() {
    for cmd in ["stats", "witness", "canonical", "verify"] {
        let explicit = matchgap(&[cmd, "--input", "-"], b"Dhc\n");
        let implicit = matchgap(&[cmd], b"Dhc\n");
        assert!(explicit.status.success(), "{cmd}");
        assert_eq!(explicit.stdout, implicit.stdout);
        assert!(!explicit.stdout.is_empty());
    }
}

#[test]
fn parse_errors_name_the_line() {
    let out = matchgap(&["stats"], b"Dhc\nD~\nBw\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let recs = json_lines(&out);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[1]["line"], 3);
}

#[test]
fn witness_cap() {
    let big = matchgap::encode_graph6(&matchgap::families::path(18)).unwrap() + "\n";
    let out = matchgap(&["witness"], big.as_bytes());
    assert_eq!(out.status.code(), Some(2));
    let rec = &json_lines(&out)[0];
    assert!(rec["error"].as_str().unwrap().contains("n=18"));
    let out = matchgap(&["witness", "--cap", "18"], big.as_bytes());
    assert!(out.status.success());
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["odd_component"]["value"], 0);
}

#[test]
fn tsv_mirrors_json() {
    let json = json_lines(&matchgap(&["stats"], b"Dhc\nBw\n"));
    let tsv = matchgap(&["stats", "--format", "tsv"], b"Dhc\nBw\n");
    let text = String::from_utf8(tsv.stdout).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split('\t').collect();
    for (row, rec) in lines.zip(&json) {
        for (col, cell) in header.iter().zip(row.split('\t')) {
            let v = &rec[*col];
            let expected = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(cell, expected, "column {col}");
        }
    }
}
