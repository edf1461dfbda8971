use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use kecss::dimacs;
use kecss::graph::Graph;
use kecss::mincut::edge_connectivity_at_least;
use kecss::mwu::{solve_lp_detailed, SolverConfig};
use kecss::oracles;
use kecss::rounding::round;
use kecss::Error;

const EXIT_PARSE: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(name = "kecss", version, about = "Approximate minimum-cost k-edge-connected spanning subgraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve the fractional LP relaxation.
    SolveLp {
        input: PathBuf,
        /// Override the connectivity requirement from the input header.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        /// Report solver progress and wall time on stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Full pipeline: LP, sparsify, round to an integral solution.
    Round {
        input: PathBuf,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Re-check a claimed solution file.
    Verify {
        input: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Run a brute-force reference oracle (small inputs only).
    Oracle {
        input: PathBuf,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum)]
        which: Which,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Freecut,
    Lp,
    Ip,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own exit code disagrees with our convention.
            eprint!("{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    if let Ok(v) = std::env::var("KECSS_THREADS") {
        match v.parse::<usize>() {
            Ok(t) if t >= 1 => {}
            _ => {
                return fail(EXIT_USAGE, "usage", &format!("KECSS_THREADS must be a positive integer, got '{v}'"));
            }
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            let (code, kind) = classify(&e);
            fail(code, kind, &e.to_string())
        }
    }
}

fn classify(e: &Error) -> (u8, &'static str) {
    match e {
        Error::Parse { .. } => (EXIT_PARSE, "parse"),
        Error::Infeasible(_) | Error::InfeasibleGraph | Error::NotKRootConnected(_) => {
            (EXIT_INFEASIBLE, "infeasible")
        }
        Error::InvalidParameter(_) | Error::RefusedScale(_) => (EXIT_USAGE, "usage"),
        Error::BudgetExceeded(_) => (EXIT_INTERNAL, "budget"),
        _ => (EXIT_INTERNAL, "internal"),
    }
}

fn fail(code: u8, kind: &str, message: &str) -> ExitCode {
    let doc = json!({ "schema": 1, "error": { "kind": kind, "message": message } });
    println!("{doc}");
    ExitCode::from(code)
}

fn load_graph(path: &PathBuf, k: Option<u32>) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, msg: format!("cannot read {}: {e}", path.display()) })?;
    dimacs::parse_graph(&text, k)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::SolveLp { input, k, eps, trace } => {
            let g = load_graph(&input, k)?;
            let started = Instant::now();
            let (sol, _) = solve_lp_detailed(&g, &SolverConfig::new(eps))?;
            if trace {
                eprintln!(
                    "trace: ranges={} punishes={} mincut_calls={} max_cong={:.4} wall={:?}",
                    sol.stats.ranges,
                    sol.stats.punishes,
                    sol.stats.mincut_calls,
                    sol.stats.max_congestion,
                    started.elapsed()
                );
            }
            let ratio = if sol.dual_lower_bound > 0.0 {
                json!(sol.objective / sol.dual_lower_bound)
            } else {
                json!(null)
            };
            let x: Vec<_> = sol
                .x
                .iter()
                .enumerate()
                .map(|(e, &v)| json!({ "edge": e, "value": v }))
                .collect();
            let doc = json!({
                "schema": 1,
                "objective": sol.objective,
                "dualLowerBound": sol.dual_lower_bound,
                "ratio": ratio,
                "x": x,
                "stats": sol.stats,
            });
            println!("{doc}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Round { input, k, eps, seed } => {
            let g = load_graph(&input, k)?;
            let (sol, _) = solve_lp_detailed(&g, &SolverConfig::new(eps))?;
            let res = round(&g, &sol.x, sol.objective, eps, seed)?;
            let verified = edge_connectivity_at_least(&g, &res.edges, g.k());
            let ratio = if sol.objective > 0.0 { res.cost / sol.objective } else { 1.0 };
            let doc = json!({
                "schema": 1,
                "edges": res.edges,
                "cost": res.cost,
                "lpObjective": sol.objective,
                "approxRatioVsLp": ratio,
                "withinBound": ratio <= 2.0 * (1.0 + 3.0 * eps) + 1e-9,
                "verified": verified,
            });
            println!("{doc}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { input, solution, k } => {
            let g = load_graph(&input, k)?;
            let text = std::fs::read_to_string(&solution).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("cannot read {}: {e}", solution.display()),
            })?;
            let ids = dimacs::parse_solution(&text, g.m())?;
            let pass = edge_connectivity_at_least(&g, &ids, g.k());
            let cost: f64 = ids.iter().map(|&e| g.edge(e).cost).sum();
            let doc = json!({ "schema": 1, "pass": pass, "cost": cost, "edges": ids.len() });
            println!("{doc}");
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(EXIT_INFEASIBLE) })
        }
        Cmd::Oracle { input, k, which } => {
            let g = load_graph(&input, k)?;
            let doc = match which {
                Which::Freecut => {
                    let fc = oracles::brute_free_cut(&g, &g.costs(), g.k())?;
                    json!({
                        "schema": 1,
                        "oracle": "freecut",
                        "value": fc.value,
                        "cutEdges": fc.cut_edges,
                        "freeEdges": fc.free_edges,
                    })
                }
                Which::Lp => {
                    let lp = oracles::exact_small_lp(&g)?;
                    json!({ "schema": 1, "oracle": "lp", "value": lp.objective, "x": lp.x })
                }
                Which::Ip => {
                    let ip = oracles::exhaustive_ip(&g)?;
                    json!({ "schema": 1, "oracle": "ip", "value": ip.cost, "edges": ip.edges })
                }
            };
            println!("{doc}");
            Ok(ExitCode::SUCCESS)
        }
    }
}
