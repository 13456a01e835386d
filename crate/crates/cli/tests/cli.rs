use std::fs;
use std::process::{Command, Output};

use idomlab::canon::is_isomorphic;
use idomlab::{families, Graph};

fn idomlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idomlab"))
        .args(args)
        .env_remove("IDOMLAB_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn contains_isomorph(lines: &str, target: &Graph) -> bool {
    lines
        .lines()
        .filter_map(|l| {
            l.split(',')
                .find_map(|field| Graph::from_graph6(field).ok())
        })
        .any(|g| g.n() == target.n() && is_isomorphic(&g, target).unwrap())
}

#[test]
fn solve_named_graphs() {
    let out = idomlab(&["solve", "--family", "prism:5;pendant:3,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "graph6,n,gamma,i,gamma_witness,i_witness");
    assert!(lines[1].contains(",10,3,4,"));
    assert!(lines[2].contains(",9,3,5,"));
}

#[test]
fn empty_input_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.g6");
    fs::write(&path, "").unwrap();
    let out = idomlab(&["solve", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    fs::write(&path, "Cl\n\nD?\n").unwrap();
    let out = idomlab(&["solve", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(idomlab(&["verify"]).status.code(), Some(2));
    assert_eq!(
        idomlab(&["verify", "--family", "prism:5", "--bounds", "nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(idomlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn gen_round_trips_through_input() {
    let out = idomlab(&["gen", "--family", "regular", "--k", "3", "--n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cubic8.g6");
    fs::write(&path, &text).unwrap();
    let solved = idomlab(&["solve", "--input", path.to_str().unwrap()]);
    assert_eq!(stdout(&solved).lines().count(), 6);
}

#[test]
fn verify_cubic_campaign() {
    let out = idomlab(&[
        "verify",
        "--family",
        "regular",
        "--k",
        "3",
        "--n",
        "4",
        "--n-max",
        "10",
        "--bounds",
        "thm-cubic",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("graph6,n,regularity,gamma,i,bound,lhs,rhs,status\n"));
    let tight: String = text
        .lines()
        .filter(|l| l.ends_with(",tight"))
        .collect::<Vec<_>>()
        .join("\n");
    assert!(contains_isomorph(&tight, &families::prism(5).unwrap()));
}

#[test]
fn candidate_violation_exits_3() {
    let out = idomlab(&[
        "verify",
        "--family",
        "kbip:3,3",
        "--bounds",
        "owest-question",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DISCOVERY owest-question"));
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    for format in ["csv", "json"] {
        let base = [
            "verify", "--family", "regular", "--k", "4", "--n", "5", "--n-max", "9", "--bounds",
            "all", "--format", format,
        ];
        let one = idomlab(&[&base[..], &["--jobs", "1"]].concat());
        let four = idomlab(&[&base[..], &["--jobs", "4"]].concat());
        let env = Command::new(env!("CARGO_BIN_EXE_idomlab"))
            .args(base)
            .env("IDOMLAB_JOBS", "3")
            .output()
            .unwrap();
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, four.stdout);
        assert_eq!(one.stdout, env.stdout);
    }
}

#[test]
fn json_report_shape() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = idomlab(&[
        "verify",
        "--family",
        "blowup:7,2",
        "--bounds",
        "thm-kreg,ratio-kreg",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["graphs"], 1);
    assert_eq!(report["rows"][0]["i"], 6);
    assert_eq!(report["rows"][0]["verdicts"][0]["status"], "tight");
    assert_eq!(report["rows"][0]["verdicts"][0]["rhs"], "6");
    assert_eq!(report["summary"][1]["holds"], 1);
    assert!(report["counterexamples"].as_array().unwrap().is_empty());
}

#[test]
fn discharge_reports() {
    let out = idomlab(&["discharge", "--family", "blowup:7,2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["all_nonpositive"], true);
    assert!(report["report"]["final"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c == "0"));
    assert!(report["report"]["transfers"]
        .as_array()
        .unwrap()
        .iter()
        .any(|t| t["rule"] == "R2"));

    let g6 = families::complete_bipartite(4, 4).unwrap().to_graph6();
    let out = idomlab(&["discharge", &g6]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("excluded graph K_{k,k}"));

    let out = idomlab(&["discharge", "--family", "prism:5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("k=3 unsupported by rules"));
}

#[test]
fn search_tight_examples() {
    let out = idomlab(&["search-tight", "--k", "4", "--n", "14", "--samples", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(contains_isomorph(
        &stdout(&out),
        &families::cycle_blowup(7, 2).unwrap()
    ));

    let out = idomlab(&["search-tight", "--k", "3", "--n", "10"]);
    assert!(contains_isomorph(
        &stdout(&out),
        &families::prism(5).unwrap()
    ));

    let out = idomlab(&["search-tight", "--k", "5", "--n", "9", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["entries"][0]["n"], 9);
    assert_eq!(report["entries"][0]["exhaustive"], true);
}

#[test]
fn ids_enum_lists_every_minimum_set() {
    let out = idomlab(&["ids-enum", "--family", "blowup:7,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 1 + 7);
}
