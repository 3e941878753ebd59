//! Command-line surface: exact solves, caterpillar analysis, protocol
//! synthesis, family generators, and the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 solver budget exhausted.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use acquisition_core::caterpillar;
use acquisition_core::engine;
use acquisition_core::generators::{self, FamilySpec};
use acquisition_core::graph::Graph;
use acquisition_core::solver::{self, SolveOutcome};
use acquisition_core::synthesis;
use acquisition_core::verify::{self, Suite, VerifyOptions};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "acquisition",
    version,
    about = "Unit-acquisition games on graphs: solve, synthesize, generate, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact unit acquisition number with witness protocol and bound table.
    Solve {
        /// Edge-list file, or `-` for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        /// State budget for the exhaustive search.
        #[arg(long, default_value_t = solver::DEFAULT_STATE_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Caterpillar analysis: exact value, run condition, assignment, protocol.
    Caterpillar {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Run one constructive synthesizer and replay its protocol.
    Synthesize {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Root vertex for the level-2 construction.
        #[arg(long)]
        root: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Emit a named graph family.
    Generate {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Run a verification suite (use `all` for every suite).
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for randomized suites (they refuse to run without one).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = solver::DEFAULT_STATE_BUDGET)]
        budget: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Level2,
    Radius2,
    Matching,
    Diam2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dot,
}

#[derive(Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Path on n vertices.
    Path { n: usize, #[command(flatten)] out: OutputOpts },
    /// Cycle on n vertices.
    Cycle { n: usize, #[command(flatten)] out: OutputOpts },
    /// Complete graph on n vertices.
    Complete { n: usize, #[command(flatten)] out: OutputOpts },
    /// Star on n vertices.
    Star { n: usize, #[command(flatten)] out: OutputOpts },
    /// Double star with two centers of degree k.
    DoubleStar { k: usize, #[command(flatten)] out: OutputOpts },
    /// Chain of m double stars with centers of degree k.
    Gmk { m: usize, k: usize, #[command(flatten)] out: OutputOpts },
    /// Level-grown tree of depth d whose root acquires everything.
    Td {
        d: usize,
        #[arg(long, default_value_t = 5)]
        branching: usize,
        /// Also emit the consolidation protocol as JSON.
        #[arg(long)]
        with_protocol: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Extremal diameter-4 tree with center and neighbors of degree k.
    Diam4Tree { k: usize, #[command(flatten)] out: OutputOpts },
    /// 7-vertex graph whose consolidation needs its one cycle.
    CycleNeeding { #[command(flatten)] out: OutputOpts },
    /// The 10-vertex max-degree-3 tree that consolidates fully.
    UnitTree10 { #[command(flatten)] out: OutputOpts },
    /// Petersen graph.
    Petersen { #[command(flatten)] out: OutputOpts },
    /// Seeded random graph.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = RandomModel::Uniform)]
        model: RandomModel,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RandomModel {
    Uniform,
    Diameter2,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn read_graph(input: &str) -> Result<Graph, String> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("{}: {}", input, e))?
    };
    Graph::from_edge_list(&text).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Solve { input, budget, json } => cmd_solve(&input, budget, json),
        Command::Caterpillar { input, json } => cmd_caterpillar(&input, json),
        Command::Synthesize { input, method, root, json } => {
            cmd_synthesize(&input, method, root, json)
        }
        Command::Generate { family } => cmd_generate(family),
        Command::Verify { suite, max_n, samples, seed, budget, jobs, json } => {
            cmd_verify(&suite, max_n, samples, seed, budget, jobs, json)
        }
    }
}

fn cmd_solve(input: &str, budget: u64, json: bool) -> Result<ExitCode, String> {
    let g = read_graph(input)?;
    if !g.is_connected() {
        return Err("graph is disconnected; solve components separately".into());
    }
    let result = solver::unit_acquisition_number(&g, budget).map_err(|e| e.to_string())?;
    let degree_bound = if g.n() >= 2 { Some((g.n() - 1) / g.min_degree()) } else { None };
    let matching_bound = solver::min_maximal_matching(&g).ok().map(|(m, _)| m);
    let lower = solver::cut_lower_bound(&g).map_err(|e| e.to_string())?;

    if json {
        let solve_doc: serde_json::Value =
            serde_json::from_str(&result.to_json(&g)).expect("solver emits valid JSON");
        let report = json!({
            "schema_version": 1,
            "command": "solve",
            "inputs": {"n": g.n(), "edges": g.edge_count(), "graph_hash": g.hash_hex(), "budget": budget},
            "results": {
                "solve": solve_doc,
                "bounds": {
                    "degree": degree_bound,
                    "min_maximal_matching": matching_bound,
                    "cut_lower_bound": lower.size,
                    "cut_witness": lower.witness,
                    "cut_certificates": lower.certificates,
                },
            },
        });
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        match &result.outcome {
            SolveOutcome::Exact { value, witness } => {
                println!("a_u = {} (exact)", value);
                println!("witness: {} moves: {}", witness.len(), render_moves(witness));
            }
            SolveOutcome::Inconclusive { best_upper_bound } => {
                println!("inconclusive: a_u <= {} (budget exhausted)", best_upper_bound);
            }
        }
        println!(
            "bounds: (n-1)/min-degree = {}, min maximal matching = {}, cut lower bound = {}",
            degree_bound.map_or("-".into(), |b| b.to_string()),
            matching_bound.map_or("-".into(), |b| b.to_string()),
            lower.size
        );
        println!(
            "states explored: {}, elapsed: {} ms",
            result.states_explored,
            result.elapsed.as_millis()
        );
    }
    match result.outcome {
        SolveOutcome::Exact { .. } => Ok(ExitCode::SUCCESS),
        SolveOutcome::Inconclusive { .. } => Ok(ExitCode::from(EXIT_INCONCLUSIVE)),
    }
}

fn render_moves(p: &engine::Protocol) -> String {
    p.moves().iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_caterpillar(input: &str, json: bool) -> Result<ExitCode, String> {
    let g = read_graph(input)?;
    let view = caterpillar::recognize(&g).map_err(|e| format!("not a caterpillar: {}", e))?;
    let scan = caterpillar::a_u_caterpillar(&view);
    let condition = caterpillar::condition_check(&view);

    let mut assignment_doc = serde_json::Value::Null;
    let mut protocol_doc = serde_json::Value::Null;
    let mut assignment_text = String::new();
    if condition.is_ok() {
        let assignment = caterpillar::build_assignment(&view).expect("condition holds");
        let protocol = caterpillar::unit_protocol(&g, &view).map_err(|e| e.to_string())?;
        assignment_text = assignment
            .pairs
            .iter()
            .map(|p| {
                format!(
                    "cell ({},{}) <- leaf {} (distance {})",
                    p.cell.position,
                    p.cell.height,
                    p.leaf,
                    p.cell.position.abs_diff(p.source)
                )
            })
            .collect::<Vec<_>>()
            .join("\n");
        assignment_doc = json!(assignment
            .pairs
            .iter()
            .map(|p| json!({
                "position": p.cell.position,
                "height": p.cell.height,
                "leaf": p.leaf,
                "source": p.source,
            }))
            .collect::<Vec<_>>());
        protocol_doc = serde_json::from_str(&protocol.to_json(&g)).unwrap();
    }

    if json {
        let report = json!({
            "schema_version": 1,
            "command": "caterpillar",
            "inputs": {"n": g.n(), "graph_hash": g.hash_hex()},
            "results": {
                "value": scan.value,
                "condition_holds": condition.is_ok(),
                "failing_run": condition.as_ref().err().map(|run| json!({
                    "start": run.start,
                    "len": run.len,
                    "leaf_sum": run.leaf_sum,
                    "required": run.required,
                    "vertices": run.vertices,
                })),
                "spine": view.spine(),
                "leaf_counts": view.leaf_counts(),
                "pieces": scan.pieces.iter().map(|p| json!({
                    "spine_range": [p.spine_range.0, p.spine_range.1],
                    "vertices": p.vertices,
                })).collect::<Vec<_>>(),
                "assignment": assignment_doc,
                "protocol": protocol_doc,
            },
        });
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("a_u = {}", scan.value);
        println!("spine: {:?}, leaf counts {:?}", view.spine(), view.leaf_counts());
        match &condition {
            Ok(()) => {
                println!("run condition: holds (full consolidation)");
                println!("assignment:\n{}", assignment_text);
            }
            Err(run) => {
                println!(
                    "run condition: fails on internal run {:?} ({} leaves, needs {})",
                    run.vertices, run.leaf_sum, run.required
                );
                for piece in &scan.pieces {
                    println!("piece spine {:?}: vertices {:?}", piece.spine_range, piece.vertices);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_synthesize(
    input: &str,
    method: MethodArg,
    root: Option<usize>,
    json: bool,
) -> Result<ExitCode, String> {
    let g = read_graph(input)?;
    let outcome = match method {
        MethodArg::Level2 => {
            let root = root.unwrap_or(0);
            synthesis::level2_protocol(&g, root)
                .ok_or_else(|| format!("level-2 construction inapplicable at root {}", root))?
        }
        MethodArg::Radius2 => synthesis::radius2_partition_protocol(&g).map_err(|e| e.to_string())?,
        MethodArg::Matching => {
            synthesis::matching_partition_protocol(&g).map_err(|e| e.to_string())?
        }
        MethodArg::Diam2 => synthesis::diam2_protocol(&g).map_err(|e| e.to_string())?,
    };
    let replayed = engine::replay(&g, &outcome.protocol).map_err(|e| e.to_string())?;
    let verdict = replayed.support() == outcome.final_support;
    if json {
        let report = json!({
            "schema_version": 1,
            "command": "synthesize",
            "inputs": {"n": g.n(), "graph_hash": g.hash_hex()},
            "results": {
                "method": outcome.method.to_string(),
                "final_support": outcome.final_support,
                "replay_support": replayed.support(),
                "replay_ok": verdict,
                "protocol": serde_json::from_str::<serde_json::Value>(&outcome.protocol.to_json(&g)).unwrap(),
            },
        });
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("method: {}", outcome.method);
        println!("final support: {}", outcome.final_support);
        println!("replay: {}", if verdict { "ok" } else { "MISMATCH" });
        println!("protocol: {}", outcome.protocol.to_json(&g));
    }
    if verdict {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_VERIFY_FAILED))
    }
}

fn emit_graph(g: &Graph, out: &OutputOpts) {
    match out.format {
        Format::Edgelist => print!("{}", g.to_edge_list()),
        Format::Dot => print!("{}", g.to_dot()),
    }
}

fn cmd_generate(family: FamilyCmd) -> Result<ExitCode, String> {
    match family {
        FamilyCmd::Path { n, out } => {
            emit_graph(&generators::make(&FamilySpec::Path { n }).map_err(|e| e.to_string())?, &out)
        }
        FamilyCmd::Cycle { n, out } => {
            emit_graph(&generators::make(&FamilySpec::Cycle { n }).map_err(|e| e.to_string())?, &out)
        }
        FamilyCmd::Complete { n, out } => {
            emit_graph(&generators::make(&FamilySpec::Complete { n }).map_err(|e| e.to_string())?, &out)
        }
        FamilyCmd::Star { n, out } => {
            emit_graph(&generators::make(&FamilySpec::Star { n }).map_err(|e| e.to_string())?, &out)
        }
        FamilyCmd::DoubleStar { k, out } => emit_graph(
            &generators::make(&FamilySpec::DoubleStar { k }).map_err(|e| e.to_string())?,
            &out,
        ),
        FamilyCmd::Gmk { m, k, out } => {
            let built = generators::chained_double_stars(m, k).map_err(|e| e.to_string())?;
            emit_graph(&built.graph, &out);
            eprintln!(
                "junction pairs (degree-2 cuts): {:?}{}",
                built.junctions,
                if built.sharp { "" } else { " (k < 4: matching bound may be slack)" }
            );
        }
        FamilyCmd::Td { d, branching, with_protocol, out } => {
            let t = generators::make_td(d, branching).map_err(|e| e.to_string())?;
            emit_graph(&t.graph, &out);
            eprintln!("active counts: {:?}", t.active_counts);
            if with_protocol {
                println!("{}", t.protocol.to_json(&t.graph));
            }
        }
        FamilyCmd::Diam4Tree { k, out } => emit_graph(
            &generators::make(&FamilySpec::Diam4Tree { k }).map_err(|e| e.to_string())?,
            &out,
        ),
        FamilyCmd::CycleNeeding { out } => {
            emit_graph(&generators::cycle_needing_graph(), &out)
        }
        FamilyCmd::UnitTree10 { out } => emit_graph(&generators::max_degree3_unit_tree(), &out),
        FamilyCmd::Petersen { out } => emit_graph(&generators::petersen(), &out),
        FamilyCmd::Random { n, p, seed, model, out } => {
            let g = match model {
                RandomModel::Uniform => generators::random_graph(n, p, seed),
                RandomModel::Diameter2 => generators::random_diameter2_graph(n, p, seed, 100_000),
            }
            .map_err(|e| e.to_string())?;
            emit_graph(&g, &out);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: &str,
    max_n: Option<usize>,
    samples: Option<usize>,
    seed: Option<u64>,
    budget: u64,
    jobs: Option<usize>,
    json: bool,
) -> Result<ExitCode, String> {
    let options = VerifyOptions {
        max_n,
        samples,
        seed,
        budget,
        jobs: jobs
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get())),
    };
    let suites: Vec<Suite> = if suite == "all" {
        Suite::all().to_vec()
    } else {
        vec![Suite::from_name(suite).ok_or_else(|| {
            format!(
                "unknown suite {:?}; expected one of {} or all",
                suite,
                Suite::all().map(|s| s.name()).join(", ")
            )
        })?]
    };
    let mut all_passed = true;
    let mut reports = Vec::new();
    for s in suites {
        let report = verify::run_suite(s, &options)?;
        all_passed &= report.passed();
        if !json {
            print!("{}", report.render_text());
        }
        reports.push(report);
    }
    if json {
        let doc = json!({
            "schema_version": 1,
            "command": "verify",
            "inputs": {"seed": seed, "budget": budget, "max_n": max_n, "samples": samples},
            "results": reports,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    }
    if all_passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_VERIFY_FAILED))
    }
}
