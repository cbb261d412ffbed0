//! Command-line front end: parse edge-list instances, run the tour pipeline
//! and baselines, surface certificates and oracle numbers, and batch-bench
//! instance directories to CSV.
//!
//! Exit codes: 0 success, 2 parse error, 3 precondition (not biconnected),
//! 4 budget exceeded.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use steiner_tsp::generators::{self, NamedGraph};
use steiner_tsp::spanning::{build_spanning_tree, SpanningTree, TreeStrategy};
use steiner_tsp::tour::AttemptOutcome;
use steiner_tsp::{
    cyclability_predicates, dfs_circulation, io as gio, oracle, shortest_path_metric,
    solve_detailed, solve_with_tree, Error, Graph, Rational, SolveConfig, SolveReport,
};

#[derive(Parser)]
#[command(
    name = "steiner-tsp",
    version,
    about = "Graph-TSP tours from spanning trees and Steiner cycles"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one instance and print the tour certificate.
    Solve {
        /// Edge-list file ("n m" header, one "u v" line per edge).
        path: PathBuf,
        /// Spanning tree to use instead of the built-in strategies.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Tree strategy: all, bfs, dfs, random, fewodd.
        #[arg(long, default_value = "all")]
        strategy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also compute the exact optimum (n <= 18).
        #[arg(long)]
        oracle: bool,
        /// Vertex-count ceiling for the exhaustive cycle search.
        #[arg(long, default_value_t = 18)]
        budget: usize,
        /// Lower-bound coefficient "P/Q" for the 4/3-approximation check
        /// (OPT >= (1+alpha) n).
        #[arg(long)]
        lower_bound_alpha: Option<String>,
        /// Write the full JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Report connectivity, tree statistics, cyclability predicates, and the
    /// DFS circulation certificate.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long, default_value = "bfs")]
        strategy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run every instance in a directory and emit one CSV row per algorithm.
    Bench {
        dir: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 18)]
        budget: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write instance files for the named and random families.
    Gen {
        #[command(subcommand)]
        family: GenCmd,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    Petersen {
        out: PathBuf,
    },
    Wheel {
        #[arg(long)]
        r: usize,
        out: PathBuf,
    },
    Bipartite {
        #[arg(long)]
        c: usize,
        #[arg(long)]
        n: usize,
        out: PathBuf,
    },
    Cycle {
        #[arg(long)]
        n: usize,
        out: PathBuf,
    },
    Theta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        chord: usize,
        out: PathBuf,
    },
    /// Hamiltonian path plus random chords, biconnected by rejection.
    Planted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        out: PathBuf,
        /// Also write the planted path as a tree file.
        #[arg(long)]
        tree_out: Option<PathBuf>,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        out: PathBuf,
    },
    Cubic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn configure_threads() {
    #[cfg(feature = "parallel")]
    if let Ok(v) = std::env::var("STEINER_TSP_THREADS") {
        if let Ok(threads) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.max(1))
                .build_global();
        }
    }
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Input(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Input(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Input(_) => 2,
        CliError::Lib(Error::Parse { .. }) => 2,
        CliError::Lib(Error::BadParameter(_)) => 2,
        CliError::Lib(Error::NotBiconnected) => 3,
        CliError::Lib(Error::TooLarge { .. })
        | CliError::Lib(Error::BudgetExceeded(_))
        | CliError::Lib(Error::SubsetTooLarge { .. }) => 4,
        CliError::Lib(_) => 1,
    }
}

fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    Ok(gio::read_graph(&read_to_string(path)?)?)
}

fn parse_strategies(s: &str) -> Result<Vec<TreeStrategy>, CliError> {
    if s == "all" {
        Ok(TreeStrategy::ALL.to_vec())
    } else {
        Ok(vec![s
            .parse::<TreeStrategy>()
            .map_err(|e| CliError::Input(e.to_string()))?])
    }
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let err = || CliError::Input(format!("expected a rational like 1/4, got {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| err())?;
    let q: i64 = q.parse().map_err(|_| err())?;
    if q <= 0 {
        return Err(err());
    }
    Ok(Rational::new(p, q))
}

fn outcome_label(outcome: &AttemptOutcome) -> String {
    match outcome {
        AttemptOutcome::FoundSimple => "found_simple".into(),
        AttemptOutcome::ProvenAbsent => "proven_absent".into(),
        AttemptOutcome::BudgetExhausted => "budget".into(),
        AttemptOutcome::UsedApproximate(g) => format!("approximate(gamma={g})"),
        AttemptOutcome::ApproximateTooLong(g) => format!("approximate_rejected(gamma={g})"),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Solve {
            path,
            tree,
            strategy,
            seed,
            oracle: want_oracle,
            budget,
            lower_bound_alpha,
            json,
        } => cmd_solve(
            &path,
            tree.as_deref(),
            &strategy,
            seed,
            want_oracle,
            budget,
            lower_bound_alpha.as_deref(),
            json.as_deref(),
        ),
        Cmd::Analyze {
            path,
            tree,
            strategy,
            seed,
            json,
        } => cmd_analyze(&path, tree.as_deref(), &strategy, seed, json.as_deref()),
        Cmd::Bench {
            dir,
            seed,
            oracle: want_oracle,
            budget,
            csv,
        } => cmd_bench(&dir, seed, want_oracle, budget, csv.as_deref()),
        Cmd::Gen { family } => cmd_gen(family),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    path: &Path,
    tree: Option<&Path>,
    strategy: &str,
    seed: u64,
    want_oracle: bool,
    budget: usize,
    alpha: Option<&str>,
    json_out: Option<&Path>,
) -> Result<(), CliError> {
    let g = load_graph(path)?;
    let n = g.vertex_count();
    let metric_opt = if want_oracle {
        let metric = shortest_path_metric(&g)?;
        Some(oracle::held_karp_opt(&metric)?.opt_length)
    } else {
        None
    };

    let t0 = Instant::now();
    let report: SolveReport = match tree {
        Some(tree_path) => {
            let t = gio::read_tree(&read_to_string(tree_path)?, &g)?;
            solve_with_tree(&g, &t, budget)?
        }
        None => {
            let cfg = SolveConfig {
                strategies: parse_strategies(strategy)?,
                seed,
                exhaustive_budget: budget,
            };
            solve_detailed(&g, &cfg)?
        }
    };
    let steiner_ms = t0.elapsed().as_secs_f64() * 1e3;

    let metric = shortest_path_metric(&g)?;
    let t1 = Instant::now();
    let baseline = steiner_tsp::double_tree_baseline(&g, &metric)?;
    let baseline_ms = t1.elapsed().as_secs_f64() * 1e3;

    let mut cert = report.certificate.clone();
    cert.opt = metric_opt;
    if let Some(opt) = metric_opt {
        assert!(opt <= report.tour.length, "optimum exceeds achieved length");
        assert!(opt <= baseline.length);
    }

    let corollary = match alpha {
        Some(text) => {
            let alpha = parse_rational(text)?;
            if alpha < Rational::from_integer(0) || alpha > Rational::from_integer(1) {
                return Err(CliError::Input("alpha must lie in [0, 1]".into()));
            }
            // The check needs a cycle; it applies only when the pipeline
            // used one (simple or approximate).
            report
                .cycle
                .as_ref()
                .map(|c| (alpha, steiner_tsp::corollary_check(alpha, c)))
        }
        None => None,
    };

    let mut steiner_json = cert.to_json();
    steiner_json["algorithm"] = "steiner_pipeline".into();
    steiner_json["within_bound"] = cert.bound_holds().into();
    steiner_json["wall_ms"] = serde_json::json!(steiner_ms);
    let baseline_json = serde_json::json!({
        "algorithm": "double_tree",
        "achieved": baseline.length,
        "bound_num": 2 * (n as i64 - 1),
        "bound_den": 1,
        "within_bound": baseline.length <= 2 * (n - 1),
        "wall_ms": baseline_ms,
    });
    let attempts: Vec<serde_json::Value> = report
        .attempts
        .iter()
        .map(|a| {
            serde_json::json!({
                "strategy": a.strategy.map(|s| s.name()).unwrap_or("supplied"),
                "odd_size": a.odd_size,
                "outcome": outcome_label(&a.outcome),
            })
        })
        .collect();
    let json_report = serde_json::json!({
        "instance": path.display().to_string(),
        "n": n,
        "m": g.edge_count(),
        "opt": metric_opt,
        "runs": [steiner_json, baseline_json],
        "attempts": attempts,
        "proven_absent": report.any_proven_absent(),
        "corollary": corollary.map(|(alpha, holds)| serde_json::json!({
            "alpha": format!("{}/{}", alpha.numer(), alpha.denom()),
            "condition_holds": holds,
        })),
        "tour": report.tour.stops,
    });

    println!("instance: {} (n={n}, m={})", path.display(), g.edge_count());
    println!(
        "steiner pipeline: achieved {}, case {}, bound {}/{}, gamma {}, strategy {}, {:.1} ms",
        report.tour.length,
        cert.case.name(),
        cert.bound.numer(),
        cert.bound.denom(),
        cert.gamma,
        cert.tree_strategy.map(|s| s.name()).unwrap_or("supplied"),
        steiner_ms,
    );
    println!(
        "double tree:      achieved {}, bound {}, {:.1} ms",
        baseline.length,
        2 * (n - 1),
        baseline_ms
    );
    if let Some(opt) = metric_opt {
        println!("oracle optimum:   {opt}");
    }
    if report.any_proven_absent() {
        println!("note: no simple Steiner cycle exists for some attempted odd set (proven)");
    }
    if let Some((alpha, holds)) = corollary {
        println!(
            "corollary (alpha={alpha}): cycle condition {}; bound 4n/(3-gamma) <= (4/3)(1+alpha)n {}",
            if holds { "holds" } else { "fails" },
            if holds { "applies" } else { "is not implied" },
        );
    }
    println!("tour: {}", gio::write_cycle(&report.tour.stops).trim_end());

    if let Some(out) = json_out {
        write_file(out, &serde_json::to_string_pretty(&json_report).unwrap())?;
    }
    Ok(())
}

fn cmd_analyze(
    path: &Path,
    tree: Option<&Path>,
    strategy: &str,
    seed: u64,
    json_out: Option<&Path>,
) -> Result<(), CliError> {
    let g = load_graph(path)?;
    let n = g.vertex_count();
    let biconnected = g.is_biconnected();
    let kappa = g.vertex_connectivity().ok();

    let (tree_label, spanning) = match tree {
        Some(tp) => (
            "supplied".to_string(),
            gio::read_tree(&read_to_string(tp)?, &g)?,
        ),
        None => {
            let strat = strategy
                .parse::<TreeStrategy>()
                .map_err(|e| CliError::Input(e.to_string()))?;
            (
                strat.name().to_string(),
                build_spanning_tree(&g, strat, seed)?,
            )
        }
    };
    let odd: Vec<usize> = spanning.odd_set().iter().copied().collect();

    let predicates = if biconnected {
        match cyclability_predicates(&g, spanning.odd_set()) {
            Ok(f) => Some(f),
            Err(Error::SubsetTooLarge { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };

    let dfs = dfs_circulation::dfs_tree(&g, 0)?;
    let circulation = if biconnected {
        Some(dfs_circulation::select_back_edges(&g, &dfs)?)
    } else {
        None
    };

    let mut text = String::new();
    let _ = writeln!(
        text,
        "instance: {} (n={n}, m={})",
        path.display(),
        g.edge_count()
    );
    let _ = writeln!(
        text,
        "biconnected: {}, kappa: {}",
        if biconnected { "yes" } else { "no" },
        kappa.map(|k| k.to_string()).unwrap_or_else(|| "-".into())
    );
    let _ = writeln!(
        text,
        "tree ({tree_label}): odd set size {}, leaves {}",
        odd.len(),
        spanning.leaf_count()
    );
    if let Some(f) = &predicates {
        let _ = writeln!(
            text,
            "cyclability of odd set: dirac {}, shi {}, fournier {}",
            f.dirac, f.shi, f.fournier
        );
    }
    let _ = writeln!(
        text,
        "dfs tree: {} leaves; plain bound 4n/3 = {}/3",
        dfs.leaf_count(),
        4 * n
    );
    if let Some(c) = &circulation {
        let _ = writeln!(
            text,
            "circulation certificate: cost {} <= k = {}, bound (4n+2k)/3 = {}/{}",
            c.total_cost,
            c.k,
            c.bound.numer(),
            c.bound.denom()
        );
    }
    print!("{text}");

    if let Some(out) = json_out {
        let json = serde_json::json!({
            "instance": path.display().to_string(),
            "n": n,
            "m": g.edge_count(),
            "biconnected": biconnected,
            "kappa": kappa,
            "tree": {
                "source": tree_label,
                "odd_size": odd.len(),
                "odd_set": odd,
                "leaf_count": spanning.leaf_count(),
            },
            "predicates": predicates.map(|f| serde_json::json!({
                "dirac": f.dirac, "shi": f.shi, "fournier": f.fournier,
            })),
            "dfs": {
                "k": dfs.leaf_count(),
                "circulation_cost": circulation.as_ref().map(|c| c.total_cost),
                "selected_back_edges": circulation.as_ref().map(|c| c.selected_back_edges.len()),
                "bound_num": circulation.as_ref().map(|c| *c.bound.numer()),
                "bound_den": circulation.as_ref().map(|c| *c.bound.denom()),
            },
        });
        write_file(out, &serde_json::to_string_pretty(&json).unwrap())?;
    }
    Ok(())
}

struct BenchRow {
    instance: String,
    n: usize,
    m: usize,
    algorithm: &'static str,
    strategy: String,
    case: String,
    achieved: Option<usize>,
    bound: Option<Rational>,
    gamma: String,
    opt: Option<usize>,
    wall_ms: f64,
    status: &'static str,
}

impl BenchRow {
    fn csv(&self) -> String {
        let within = match (self.achieved, self.bound) {
            (Some(a), Some(b)) => (Rational::from_integer(a as i64) <= b).to_string(),
            _ => String::new(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{:.2},{}",
            self.instance,
            self.n,
            self.m,
            self.algorithm,
            self.strategy,
            self.case,
            self.achieved.map(|a| a.to_string()).unwrap_or_default(),
            self.bound
                .map(|b| b.numer().to_string())
                .unwrap_or_default(),
            self.bound
                .map(|b| b.denom().to_string())
                .unwrap_or_default(),
            self.gamma,
            self.opt.map(|o| o.to_string()).unwrap_or_default(),
            within,
            self.wall_ms,
            self.status,
        )
    }
}

fn bench_instance(path: &Path, seed: u64, want_oracle: bool, budget: usize) -> Vec<BenchRow> {
    let instance = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let fail = |status: &'static str| {
        vec![BenchRow {
            instance: instance.clone(),
            n: 0,
            m: 0,
            algorithm: "steiner_pipeline",
            strategy: String::new(),
            case: String::new(),
            achieved: None,
            bound: None,
            gamma: String::new(),
            opt: None,
            wall_ms: 0.0,
            status,
        }]
    };
    let Ok(text) = std::fs::read_to_string(path) else {
        return fail("unreadable");
    };
    let Ok(g) = gio::read_graph(&text) else {
        return fail("parse_error");
    };
    let n = g.vertex_count();
    let m = g.edge_count();
    let Ok(metric) = shortest_path_metric(&g) else {
        return fail("disconnected");
    };
    let opt = if want_oracle && n <= oracle::HELD_KARP_MAX_N {
        oracle::held_karp_opt(&metric).ok().map(|r| r.opt_length)
    } else {
        None
    };
    let mut rows = Vec::new();
    let cfg = SolveConfig {
        seed,
        exhaustive_budget: budget,
        ..SolveConfig::default()
    };
    let t0 = Instant::now();
    match solve_detailed(&g, &cfg) {
        Ok(report) => {
            rows.push(BenchRow {
                instance: instance.clone(),
                n,
                m,
                algorithm: "steiner_pipeline",
                strategy: report
                    .certificate
                    .tree_strategy
                    .map(|s| s.name().to_string())
                    .unwrap_or_default(),
                case: report.certificate.case.name().to_string(),
                achieved: Some(report.tour.length),
                bound: Some(report.certificate.bound),
                gamma: format!(
                    "{}/{}",
                    report.certificate.gamma.numer(),
                    report.certificate.gamma.denom()
                ),
                opt,
                wall_ms: t0.elapsed().as_secs_f64() * 1e3,
                status: "ok",
            });
        }
        Err(Error::NotBiconnected) => rows.extend(fail("not_biconnected")),
        Err(_) => rows.extend(fail("failed")),
    }
    let t1 = Instant::now();
    if let Ok(tour) = steiner_tsp::double_tree_baseline(&g, &metric) {
        rows.push(BenchRow {
            instance,
            n,
            m,
            algorithm: "double_tree",
            strategy: String::new(),
            case: String::new(),
            achieved: Some(tour.length),
            bound: Some(Rational::from_integer(2 * (n as i64 - 1))),
            gamma: "0/1".into(),
            opt,
            wall_ms: t1.elapsed().as_secs_f64() * 1e3,
            status: "ok",
        });
    }
    rows
}

fn cmd_bench(
    dir: &Path,
    seed: u64,
    want_oracle: bool,
    budget: usize,
    csv_out: Option<&Path>,
) -> Result<(), CliError> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "txt"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Input(format!(
            "no .txt instances in {}",
            dir.display()
        )));
    }

    let run_one = |p: &PathBuf| bench_instance(p, seed, want_oracle, budget);
    let rows: Vec<BenchRow> = {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            paths.par_iter().flat_map_iter(run_one).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            paths.iter().flat_map(run_one).collect()
        }
    };

    let mut csv = String::from(
        "instance,n,m,algorithm,strategy,case,achieved,bound_num,bound_den,gamma,opt,within_bound,wall_ms,status\n",
    );
    for row in &rows {
        csv.push_str(&row.csv());
        csv.push('\n');
    }
    match csv_out {
        Some(out) => write_file(out, &csv)?,
        None => print!("{csv}"),
    }

    // Summary quantiles of achieved/opt and achieved/bound on stderr.
    let mut vs_opt: Vec<f64> = rows
        .iter()
        .filter_map(|r| match (r.achieved, r.opt) {
            (Some(a), Some(o)) if o > 0 => Some(a as f64 / o as f64),
            _ => None,
        })
        .collect();
    let mut vs_bound: Vec<f64> = rows
        .iter()
        .filter_map(|r| match (r.achieved, r.bound) {
            (Some(a), Some(b)) => Some(a as f64 * *b.denom() as f64 / *b.numer() as f64),
            _ => None,
        })
        .collect();
    let quantiles = |vals: &mut Vec<f64>| -> Option<[f64; 3]> {
        if vals.is_empty() {
            return None;
        }
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let q = |f: f64| vals[((vals.len() - 1) as f64 * f).round() as usize];
        Some([q(0.25), q(0.5), q(0.75)])
    };
    eprintln!("instances: {}, rows: {}", paths.len(), rows.len());
    if let Some([q1, q2, q3]) = quantiles(&mut vs_opt) {
        eprintln!("achieved/opt quartiles: {q1:.3} {q2:.3} {q3:.3}");
    }
    if let Some([q1, q2, q3]) = quantiles(&mut vs_bound) {
        eprintln!("achieved/bound quartiles: {q1:.3} {q2:.3} {q3:.3}");
    }
    let failures = rows.iter().filter(|r| r.status != "ok").count();
    eprintln!("failed rows: {failures}");
    Ok(())
}

fn cmd_gen(family: GenCmd) -> Result<(), CliError> {
    let (graph, out, tree_out): (Graph, PathBuf, Option<(PathBuf, SpanningTree)>) = match family {
        GenCmd::Petersen { out } => (generators::named(NamedGraph::Petersen)?, out, None),
        GenCmd::Wheel { r, out } => (generators::named(NamedGraph::Wheel(r))?, out, None),
        GenCmd::Bipartite { c, n, out } => (
            generators::named(NamedGraph::CompleteBipartite(c, n))?,
            out,
            None,
        ),
        GenCmd::Cycle { n, out } => (generators::named(NamedGraph::Cycle(n))?, out, None),
        GenCmd::Theta { n, chord, out } => {
            (generators::named(NamedGraph::Theta(n, chord))?, out, None)
        }
        GenCmd::Planted {
            n,
            extra,
            seed,
            out,
            tree_out,
        } => {
            let g = generators::planted_ham_path(n, extra, seed)?;
            let pair = match tree_out {
                Some(tp) => {
                    let tree = generators::planted_path_tree(&g)?;
                    Some((tp, tree))
                }
                None => None,
            };
            (g, out, pair)
        }
        GenCmd::Random { n, m, seed, out } => {
            (generators::random_biconnected(n, m, seed)?, out, None)
        }
        GenCmd::Cubic { n, seed, out } => (generators::random_cubic(n, seed)?, out, None),
    };
    write_file(&out, &gio::write_graph(&graph))?;
    println!(
        "wrote {} (n={}, m={})",
        out.display(),
        graph.vertex_count(),
        graph.edge_count()
    );
    if let Some((tree_path, tree)) = tree_out {
        write_file(&tree_path, &gio::write_tree(&tree))?;
        println!("wrote {}", tree_path.display());
    }
    Ok(())
}
