//! End-to-end tests of the `mostar` binary: flags, formats, exit codes,
//! and the generate → file → compute round trip.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use mostar::edgelist;
use mostar::families::{generate, Family, FamilySpec};
use mostar::invariants::mostar;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mostar"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mostar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_graph_file(path: &Path, family: Family, params: &[u32]) {
    let g = generate(&FamilySpec::new(family, params.to_vec())).unwrap();
    std::fs::write(path, edgelist::render(&g)).unwrap();
}

#[test]
fn compute_mostar_of_p4() {
    let p = tmp("p4.txt");
    write_graph_file(&p, Family::Path, &[4]);
    let out = run(&[
        "compute",
        "--input",
        p.to_str().unwrap(),
        "--index",
        "mostar",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn compute_all_on_regular_graph() {
    let p = tmp("c6.txt");
    write_graph_file(&p, Family::Cycle, &[6]);
    let out = run(&["compute", "--input", p.to_str().unwrap(), "--index", "all"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "mostar 0\nirr 0\nirr-t 0\n");
}

#[test]
fn compute_exit_codes() {
    let p = tmp("disc.txt");
    std::fs::write(&p, "4 2\n0 1\n2 3\n").unwrap();
    let out = run(&[
        "compute",
        "--input",
        p.to_str().unwrap(),
        "--index",
        "mostar",
    ]);
    assert_eq!(out.status.code(), Some(3), "disconnected input");
    // irregularity is degree-based and still fine
    let out = run(&["compute", "--input", p.to_str().unwrap(), "--index", "irr"]);
    assert_eq!(out.status.code(), Some(0));

    let bad = tmp("bad.txt");
    std::fs::write(&bad, "not a graph\n").unwrap();
    let out = run(&["compute", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "parse error");

    let out = run(&["compute", "--input", "/nonexistent/x.txt"]);
    assert_eq!(out.status.code(), Some(2), "missing file");

    let out = run(&["compute", "--input", p.to_str().unwrap(), "--index", "nope"]);
    assert_eq!(out.status.code(), Some(2), "unknown index");
}

#[test]
fn compute_edge_table_formats() {
    let p = tmp("p3.txt");
    write_graph_file(&p, Family::Path, &[3]);
    let out = run(&[
        "compute",
        "--input",
        p.to_str().unwrap(),
        "--edges",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "u,v,n_u,n_v,contribution\n0,1,1,2,1\n1,2,2,1,1\n"
    );

    let out = run(&[
        "compute",
        "--input",
        p.to_str().unwrap(),
        "--index",
        "all",
        "--edges",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["order"], 3);
    assert_eq!(v["mostar"], 2);
    assert_eq!(v["irr"], 2);
    assert_eq!(v["irr-t"], 2);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
    assert_eq!(v["edges"][0]["contribution"], 1);
}

#[test]
fn generate_families() {
    let out = run(&["generate", "--family", "path", "--params", "7"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("7 6\n"));

    let out = run(&["generate", "--family", "wheel", "--params", "5"]);
    assert!(stdout(&out).starts_with("6 10\n"));

    let out = run(&["generate", "--family", "hypercube", "--params", "3"]);
    assert!(stdout(&out).starts_with("8 12\n"));

    let out = run(&["generate", "--family", "nope", "--params", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["generate", "--family", "cycle", "--params", "2"]);
    assert_eq!(out.status.code(), Some(2), "parameter below minimum");
    let out = run(&["generate", "--family", "grid", "--params", "3"]);
    assert_eq!(out.status.code(), Some(2), "bad arity");
    let out = run(&["generate", "--family", "path", "--params", "x"]);
    assert_eq!(out.status.code(), Some(2), "non-numeric parameter");
}

#[test]
fn products_match_size_formulas() {
    let k2 = tmp("k2.txt");
    let k1 = tmp("k1.txt");
    let p2 = tmp("p2.txt");
    let p3 = tmp("p3b.txt");
    write_graph_file(&k2, Family::Complete, &[2]);
    write_graph_file(&k1, Family::Complete, &[1]);
    write_graph_file(&p2, Family::Path, &[2]);
    write_graph_file(&p3, Family::Path, &[3]);

    let out = run(&[
        "product",
        "--op",
        "cartesian",
        "--lhs",
        p2.to_str().unwrap(),
        "--rhs",
        p3.to_str().unwrap(),
    ]);
    assert!(stdout(&out).starts_with("6 7\n"));

    let out = run(&[
        "product",
        "--op",
        "corona",
        "--lhs",
        k2.to_str().unwrap(),
        "--rhs",
        k2.to_str().unwrap(),
    ]);
    assert!(stdout(&out).starts_with("6 7\n"));

    let out = run(&[
        "product",
        "--op",
        "sve",
        "--lhs",
        k2.to_str().unwrap(),
        "--rhs",
        k1.to_str().unwrap(),
        "--third",
        k1.to_str().unwrap(),
    ]);
    assert!(stdout(&out).starts_with("5 5\n"));

    let out = run(&[
        "product",
        "--op",
        "subdivision",
        "--lhs",
        p3.to_str().unwrap(),
    ]);
    assert!(stdout(&out).starts_with("5 4\n"));

    // a product written to a file is a valid input again
    let grid = tmp("grid.txt");
    let out = run(&[
        "product",
        "--op",
        "cartesian",
        "--lhs",
        p3.to_str().unwrap(),
        "--rhs",
        p3.to_str().unwrap(),
        "--out",
        grid.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&["compute", "--input", grid.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "36");

    let out = run(&["product", "--op", "warp", "--lhs", p3.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "unknown op");
    let out = run(&["product", "--op", "join", "--lhs", p3.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "join needs --rhs");
    let out = run(&[
        "product",
        "--op",
        "subdivision",
        "--lhs",
        p3.to_str().unwrap(),
        "--rhs",
        p3.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2), "subdivision takes one factor");
}

#[test]
fn generate_compute_round_trip_matches_library() {
    let cases: Vec<(Family, Vec<u32>)> = vec![
        (Family::Path, vec![9]),
        (Family::Cycle, vec![7]),
        (Family::Star, vec![6]),
        (Family::Wheel, vec![6]),
        (Family::Fan, vec![5]),
        (Family::Grid, vec![3, 4]),
        (Family::Ladder, vec![4]),
        (Family::Hypercube, vec![4]),
        (Family::Friendship, vec![3]),
        (Family::Cone, vec![4, 2]),
        (Family::BridgePath, vec![3]),
        (Family::BridgeCycle, vec![2, 5]),
        (Family::CompleteBipartite, vec![2, 4]),
        (Family::Hamming, vec![2, 3]),
    ];
    for (family, params) in cases {
        let g = generate(&FamilySpec::new(family, params.clone())).unwrap();
        let expect = mostar(&g).unwrap();
        let file = tmp(&format!("rt-{family}.txt"));
        let params_arg = params
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let out = run(&[
            "generate",
            "--family",
            &family.to_string(),
            "--params",
            &params_arg,
            "--out",
            file.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{family}");
        let out = run(&["compute", "--input", file.to_str().unwrap()]);
        assert_eq!(
            stdout(&out).trim(),
            expect.to_string(),
            "{family} {params_arg}"
        );
    }
}

#[test]
fn verify_exit_codes_and_report() {
    // no proven-claim violations at this scale
    let report = tmp("r4.json");
    let out = run(&[
        "verify",
        "--suite",
        "all",
        "--max-n",
        "4",
        "--seed",
        "42",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["spec_version"], "1.0");
    assert_eq!(v["corpus"]["max_n"], 4);
    assert_eq!(v["corpus"]["seed"], 42);
    assert!(v["outcomes"].as_array().unwrap().len() > 100);
    assert!(v["summary"].as_object().unwrap().len() >= 40);

    // the published indu-bala bound fails once order-5 stars enter the
    // corpus; the exit code reports it
    let out = run(&[
        "verify",
        "--suite",
        "all",
        "--max-n",
        "5",
        "--seed",
        "42",
        "--report",
        tmp("r5.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));

    // worked-example discrepancies alone never fail the run
    let out = run(&[
        "verify",
        "--suite",
        "examples",
        "--max-n",
        "5",
        "--seed",
        "42",
        "--report",
        tmp("rex.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--max-n", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_are_reproducible() {
    let a = tmp("det-a.json");
    let b = tmp("det-b.json");
    for p in [&a, &b] {
        let out = run(&[
            "verify",
            "--suite",
            "bounds",
            "--max-n",
            "4",
            "--seed",
            "7",
            "--report",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(
        std::fs::read(&a).unwrap(),
        std::fs::read(&b).unwrap(),
        "byte-identical reports"
    );
}

#[test]
fn bench_prints_timing_rows() {
    let out = run(&["bench", "--family", "grid", "--sizes", "4,6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].contains("family=grid size=4 order=16"));
    assert!(rows[0].contains("oracle_ms="));
    assert!(rows[0].contains("formula="));

    let out = run(&["bench", "--family", "ladder", "--sizes", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1);

    let out = run(&["bench", "--family", "unknown", "--sizes", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn registry_dump_is_valid_json() {
    let out = run(&["registry"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let claims = v.as_array().unwrap();
    assert!(claims.len() >= 40);
    assert!(claims.iter().any(|c| c["id"] == "thm.cartesian"));
    for c in claims {
        assert!(c["kind"].is_string());
        assert!(c["suite"].is_string());
        assert!(c["params"].is_string());
    }
}
