//! End-to-end checks of the binary: report schemas, bound flags recomputed
//! from raw numbers, and the documented exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_steiner-tsp"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn assert_ok(out: &Output) {
    assert!(
        out.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn solve_petersen_with_oracle_report() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(&["gen", "petersen", "p.txt"], dir.path()));
    let out = run(
        &["solve", "p.txt", "--oracle", "--json", "report.json"],
        dir.path(),
    );
    assert_ok(&out);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap())
            .unwrap();
    assert_eq!(report["n"], 10);
    assert_eq!(report["m"], 15);
    let opt = report["opt"].as_u64().unwrap();
    for run in report["runs"].as_array().unwrap() {
        let achieved = run["achieved"].as_u64().unwrap();
        let bound_num = run["bound_num"].as_i64().unwrap();
        let bound_den = run["bound_den"].as_i64().unwrap();
        // Re-derive the bound flag from the raw numbers.
        assert_eq!(
            run["within_bound"].as_bool().unwrap(),
            (achieved as i64) * bound_den <= bound_num
        );
        assert!(opt <= achieved);
    }
    // The pipeline tour on the Petersen graph stays within floor(4n/3).
    let steiner = &report["runs"][0];
    assert!(steiner["achieved"].as_u64().unwrap() <= 13);
}

#[test]
fn solve_theta_with_supplied_tree() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(
        &["gen", "theta", "--n", "6", "--chord", "3", "t.txt"],
        dir.path(),
    ));
    std::fs::write(
        dir.path().join("t.tree"),
        "# tree\n6 5\n0 1\n1 2\n2 3\n0 5\n4 5\n",
    )
    .unwrap();
    let out = run(
        &["solve", "t.txt", "--tree", "t.tree", "--json", "r.json"],
        dir.path(),
    );
    assert_ok(&out);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(report["runs"][0]["case"], "TREE_MATCHING");
    assert_eq!(report["runs"][0]["achieved"], 6);
    assert_eq!(report["runs"][0]["tree_strategy"], serde_json::Value::Null);
}

#[test]
fn analyze_cycle_reports_circulation() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(&["gen", "cycle", "--n", "9", "c.txt"], dir.path()));
    let out = run(&["analyze", "c.txt", "--json", "a.json"], dir.path());
    assert_ok(&out);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("a.json")).unwrap()).unwrap();
    assert_eq!(report["kappa"], 2);
    assert_eq!(report["biconnected"], true);
    assert_eq!(report["dfs"]["k"], 1);
    assert_eq!(report["dfs"]["circulation_cost"], 0);
    assert_eq!(report["dfs"]["bound_num"], 38); // (4*9 + 2)/3
    assert_eq!(report["dfs"]["bound_den"], 3);
}

#[test]
fn bench_directory_to_csv() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 1..=3 {
        assert_ok(&run(
            &[
                "gen",
                "random",
                "--n",
                "9",
                "--m",
                "14",
                "--seed",
                &seed.to_string(),
                &format!("g{seed}.txt"),
            ],
            dir.path(),
        ));
    }
    let out = run(
        &["bench", ".", "--oracle", "--csv", "bench.csv"],
        dir.path(),
    );
    assert_ok(&out);
    let csv = std::fs::read_to_string(dir.path().join("bench.csv")).unwrap();
    let mut lines = csv.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("instance,n,m,algorithm"));
    let mut rows = 0;
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), header.split(',').count());
        assert_eq!(cols.last().unwrap(), &"ok");
        // opt <= achieved, and the bound flag holds
        let achieved: i64 = cols[6].parse().unwrap();
        let opt: i64 = cols[10].parse().unwrap();
        assert!(opt <= achieved);
        assert_eq!(cols[11], "true");
        rows += 1;
    }
    assert_eq!(rows, 6); // two algorithms per instance
}

#[test]
fn corollary_flag_reports_condition() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(&["gen", "cycle", "--n", "8", "c.txt"], dir.path()));
    let out = run(
        &[
            "solve",
            "c.txt",
            "--lower-bound-alpha",
            "0/1",
            "--json",
            "r.json",
        ],
        dir.path(),
    );
    assert_ok(&out);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    // A simple cycle satisfies the alpha = 0 condition.
    assert_eq!(report["corollary"]["condition_holds"], true);
}

#[test]
fn exit_code_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.txt"), "not numbers\n").unwrap();
    let out = run(&["solve", "bad.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["solve", "missing.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_not_biconnected() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("path.txt"), "3 2\n0 1\n1 2\n").unwrap();
    let out = run(&["solve", "path.txt"], dir.path());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_code_budget() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(
        &[
            "gen", "planted", "--n", "20", "--extra", "8", "--seed", "1", "g.txt",
        ],
        dir.path(),
    ));
    let out = run(&["solve", "g.txt", "--oracle"], dir.path());
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn gen_planted_writes_tree_and_solver_accepts_it() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(
        &[
            "gen",
            "planted",
            "--n",
            "40",
            "--extra",
            "12",
            "--seed",
            "7",
            "g.txt",
            "--tree-out",
            "g.tree",
        ],
        dir.path(),
    ));
    let out = run(
        &["solve", "g.txt", "--tree", "g.tree", "--json", "r.json"],
        dir.path(),
    );
    assert_ok(&out);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    let achieved = report["runs"][0]["achieved"].as_u64().unwrap();
    assert!(achieved <= 4 * 40 / 3);
}

#[test]
fn bench_marks_bad_instances_as_failed_rows() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(&["gen", "cycle", "--n", "6", "good.txt"], dir.path()));
    std::fs::write(dir.path().join("bad.txt"), "oops\n").unwrap();
    let out = run(&["bench", ".", "--csv", "b.csv"], dir.path());
    assert_ok(&out); // per-instance failures are not fatal
    let csv = std::fs::read_to_string(dir.path().join("b.csv")).unwrap();
    assert!(csv.lines().any(|l| l.contains("parse_error")));
    assert!(csv
        .lines()
        .any(|l| l.starts_with("good.txt") && l.ends_with("ok")));
}

#[test]
fn threads_env_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(&["gen", "cycle", "--n", "6", "c.txt"], dir.path()));
    let out = bin()
        .args(["solve", "c.txt"])
        .env("STEINER_TSP_THREADS", "1")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_ok(&out);
}

#[test]
fn analyze_petersen_dirac_flag() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(&["gen", "petersen", "p.txt"], dir.path()));
    let out = run(
        &["analyze", "p.txt", "--strategy", "dfs", "--json", "a.json"],
        dir.path(),
    );
    assert_ok(&out);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("a.json")).unwrap()).unwrap();
    assert_eq!(report["kappa"], 3);
    // A DFS tree of the Petersen graph is a Hamiltonian path: two odd
    // vertices, so the connectivity predicate clears.
    assert_eq!(report["tree"]["odd_size"], 2);
    assert_eq!(report["predicates"]["dirac"], true);
}
