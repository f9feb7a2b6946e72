//! `locgame`: exact values, game structures, strategy simulation and batch
//! verification for the localization game.
//!
//! Exit codes: 0 success, 1 verification failures, 2 unreadable or malformed
//! input, 3 solver cap exceeded, 4 inapplicable request.

mod cache;
mod error;
mod input;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use locgame::graph::{encode_graph6, leaf_count};
use locgame::strategy::{
    simulate_adversarial, OneCopTreeStrategy, OptimalPolicy, SimulationReport, TwoCopTreeStrategy,
};
use locgame::structure::MAX_STRUCTURE_VERTICES;
use locgame::verify::{run_suite, Suite, SuiteOptions, VerificationReport};
use locgame::{build_structure, reduce_structure, GameValue, Graph, Solver};
use serde::Serialize;

use crate::cache::ValueCache;
use crate::error::{CliError, CliResult};
use crate::input::GraphSource;

#[derive(Parser, Debug)]
#[command(name = "locgame", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact number of rounds `k` cops need to locate the robber.
    Lcapt {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(short, default_value_t = 1)]
        k: usize,
        /// Raise the solver's vertex cap (at most 20).
        #[arg(long)]
        cap: Option<usize>,
        /// JSONL results cache, read and appended to.
        #[arg(long, value_name = "FILE")]
        cache: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Rows of the game structure for a family of colorings.
    Structure {
        #[command(flatten)]
        graph: GraphSource,
        /// One coloring per line, e.g. `1|2,3|4,5` (1-based vertices).
        #[arg(long, value_name = "FILE", conflicts_with = "distance_k")]
        colorings: Option<PathBuf>,
        /// Use the distance colorings of all probe sets of size at most K.
        #[arg(long, value_name = "K")]
        distance_k: Option<usize>,
        /// Print the reduced structure instead.
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        json: bool,
    },
    /// Batch-check the bounds over a generated corpus.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Largest graph size (default: trees 10, outerplanar 8, lemma44 6).
        #[arg(long)]
        n_max: Option<usize>,
        /// Random instances: per n for lemma44, in total for block samples.
        #[arg(long, default_value_t = 200)]
        seeds: u64,
        #[arg(long, value_name = "FILE")]
        cache: Option<PathBuf>,
        #[arg(long)]
        cap: Option<usize>,
        /// Write every record as CSV.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Worst case of a cop strategy against an omniscient robber (JSON).
    Simulate {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, value_enum)]
        strategy: StrategyArg,
        /// Number of cops; must match the tree strategies (1 and 2).
        #[arg(short)]
        k: Option<usize>,
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Trees,
    Outerplanar,
    Lemma44,
}

impl SuiteArg {
    fn suite(self) -> Suite {
        match self {
            SuiteArg::Trees => Suite::Trees,
            SuiteArg::Outerplanar => Suite::Outerplanar,
            SuiteArg::Lemma44 => Suite::Lemma44,
        }
    }

    fn default_n_max(self) -> usize {
        match self {
            SuiteArg::Trees => 10,
            SuiteArg::Outerplanar => 8,
            SuiteArg::Lemma44 => 6,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    OneCopTree,
    TwoCopTree,
    Optimal,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match cli.command {
        Command::Lcapt {
            graph,
            k,
            cap,
            cache,
            json,
        } => cmd_lcapt(&graph, k, cap, cache.as_deref(), json),
        Command::Structure {
            graph,
            colorings,
            distance_k,
            reduced,
            json,
        } => cmd_structure(&graph, colorings.as_deref(), distance_k, reduced, json),
        Command::Verify {
            suite,
            n_max,
            seeds,
            cache,
            cap,
            csv,
            json,
        } => cmd_verify(suite, n_max, seeds, cache.as_deref(), cap, csv.as_deref(), json),
        Command::Simulate {
            graph,
            strategy,
            k,
            cap,
        } => cmd_simulate(&graph, strategy, k, cap),
    };
    eprintln!("runtime: {:.1?}", start.elapsed());
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
}

#[derive(Serialize)]
struct LcaptReport {
    graph6: String,
    n: usize,
    k: usize,
    value: GameValue,
    /// `None` when the graph is too large to build the structure.
    structure_height: Option<usize>,
    consistent: Option<bool>,
}

/// The structure built from all distance colorings of `≤ k` probes is
/// solvable exactly when the value is finite, and then has one more row
/// than the value (the singleton row) except on a single vertex.
fn structure_agrees(g: &Graph, k: usize, value: GameValue) -> CliResult<Option<(usize, bool)>> {
    if g.n() > MAX_STRUCTURE_VERTICES {
        return Ok(None);
    }
    let colorings = locgame::distance_colorings(g, k.min(g.n()), true)?;
    let gs = build_structure(g, &colorings)?;
    let ok = match value {
        GameValue::Infinite => !gs.is_solvable(),
        GameValue::Finite(v) => {
            let expected = if g.n() == 1 { v as usize } else { v as usize + 1 };
            gs.is_solvable() && gs.height() == expected
        }
    };
    Ok(Some((gs.height(), ok)))
}

fn cmd_lcapt(src: &GraphSource, k: usize, cap: Option<usize>, cache: Option<&Path>, json: bool) -> CliResult<u8> {
    let g = src.load()?;
    let cache = ValueCache::open(cache, cap)?;
    let value = cache.value(&g, k)?;
    let check = structure_agrees(&g, k, value)?;
    let consistent = check.map(|(_, ok)| ok);
    if json {
        print_json(&LcaptReport {
            graph6: encode_graph6(&g),
            n: g.n(),
            k,
            value,
            structure_height: check.map(|(h, _)| h),
            consistent,
        });
    } else {
        println!("{value}");
    }
    if consistent == Some(false) {
        eprintln!("structure height disagrees with the game value");
        return Ok(1);
    }
    Ok(0)
}

#[derive(Serialize)]
struct StructureReport {
    graph6: String,
    reduced: bool,
    height: usize,
    solvable: bool,
    #[serde(flatten)]
    dump: locgame::structure::StructureDump,
}

fn cmd_structure(
    src: &GraphSource,
    file: Option<&Path>,
    distance_k: Option<usize>,
    reduced: bool,
    json: bool,
) -> CliResult<u8> {
    let g = src.load()?;
    let colorings = input::colorings(&g, file, distance_k)?;
    let gs = build_structure(&g, &colorings)?;
    let solvable = gs.is_solvable();
    let (text, dump, height) = if reduced {
        let r = reduce_structure(&gs);
        (r.to_text(), r.dump(), r.height())
    } else {
        (gs.to_text(), gs.dump(), gs.height())
    };
    if json {
        print_json(&StructureReport {
            graph6: encode_graph6(&g),
            reduced,
            height,
            solvable,
            dump,
        });
    } else {
        print!("{text}");
        if !solvable {
            println!("unsolvable: not every vertex is in a row");
        }
    }
    Ok(0)
}

fn cmd_verify(
    suite: SuiteArg,
    n_max: Option<usize>,
    seeds: u64,
    cache: Option<&Path>,
    cap: Option<usize>,
    csv_path: Option<&Path>,
    json: bool,
) -> CliResult<u8> {
    let cache = ValueCache::open(cache, cap)?;
    let opts = SuiteOptions {
        n_max: n_max.unwrap_or(suite.default_n_max()),
        seeds,
    };
    let report = run_suite(suite.suite(), opts, &|g: &Graph, k| cache.value(g, k))?;
    eprintln!("cache entries: {}", cache.len());
    if let Some(path) = csv_path {
        write_csv(path, &report)?;
    }
    if json {
        print_json(&report);
    } else {
        for r in report.failures() {
            let computed = r.computed.map_or("-".to_string(), |c| c.to_string());
            println!("FAIL {} {} computed {} bound {} {}", r.claim, r.graph6, computed, r.bound, r.detail);
        }
        println!(
            "suite {} n_max {}: {} records, {} failures",
            report.suite, opts.n_max, report.summary.total, report.summary.failures
        );
    }
    Ok(if report.summary.failures > 0 { 1 } else { 0 })
}

fn write_csv(path: &Path, report: &VerificationReport) -> CliResult<()> {
    let mut w = csv::Writer::from_path(path)?;
    for r in &report.records {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| CliError::io(path, e))?;
    Ok(())
}

#[derive(Serialize)]
struct LabeledStep {
    belief: String,
    probe: String,
    class: String,
}

#[derive(Serialize)]
struct SimulateOutput {
    graph6: String,
    k: usize,
    strategy: String,
    worst_rounds: u32,
    /// Leaf bound of the tree strategies; `None` for the optimal policy.
    bound: Option<u32>,
    /// `None` when the exact solver's cap is exceeded.
    game_value: Option<GameValue>,
    trace: Vec<LabeledStep>,
}

fn cmd_simulate(src: &GraphSource, strategy: StrategyArg, k: Option<usize>, cap: Option<usize>) -> CliResult<u8> {
    let g = src.load()?;
    let cops = match strategy {
        StrategyArg::OneCopTree => 1,
        StrategyArg::TwoCopTree => 2,
        StrategyArg::Optimal => k.unwrap_or(1),
    };
    if k.is_some_and(|k| k != cops) {
        return Err(CliError::Precondition(format!(
            "strategy {strategy:?} plays with {cops} cop(s), not {}",
            k.unwrap_or_default()
        )));
    }
    let solve = |g: &Graph| match cap {
        Some(cap) => Solver::with_cap(g, cops, cap),
        None => Solver::new(g, cops),
    };
    let (report, bound): (SimulationReport, Option<u32>) = match strategy {
        StrategyArg::OneCopTree => {
            let s = OneCopTreeStrategy::new(&g)?;
            (simulate_adversarial(&g, &s)?, Some(leaf_count(&g)? as u32))
        }
        StrategyArg::TwoCopTree => {
            let s = TwoCopTreeStrategy::new(&g)?;
            let bound = (leaf_count(&g)? / 2).saturating_sub(1) as u32;
            (simulate_adversarial(&g, &s)?, Some(bound))
        }
        StrategyArg::Optimal => {
            let policy = OptimalPolicy::from_solver(solve(&g)?)?;
            (simulate_adversarial(&g, &policy)?, None)
        }
    };
    let game_value = match solve(&g) {
        Ok(s) => Some(s.value()),
        Err(locgame::Error::CapExceeded { .. }) => {
            eprintln!("game value skipped: exceeds the solver cap (see --cap)");
            None
        }
        Err(e) => return Err(e.into()),
    };
    let n = g.n();
    let trace = report
        .trace
        .iter()
        .map(|s| LabeledStep {
            belief: s.belief.label(n),
            probe: s.probe.label(n),
            class: s.class.label(n),
        })
        .collect();
    print_json(&SimulateOutput {
        graph6: encode_graph6(&g),
        k: report.k,
        strategy: report.strategy,
        worst_rounds: report.worst_rounds,
        bound,
        game_value,
        trace,
    });
    Ok(0)
}
