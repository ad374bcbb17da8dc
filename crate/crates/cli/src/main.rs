use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use edge_depth::depth::DepthReport;
use edge_depth_cli::closure_suite::cmd_closure_suite;
use edge_depth_cli::colon_suite::{cmd_colon_suite, ColonCheck};
use edge_depth_cli::engine::cmd_depth;
use edge_depth_cli::graph_spec::GraphSpec;
use edge_depth_cli::property_suite::cmd_property_suite;
use edge_depth_cli::table::{cmd_table, summarize, write_rows, FamilySpec, TableFamily};
use edge_depth_cli::{exit, outcome_code, CliError, CliResult, FieldChoice, OutputFormat, RunConfig, DEFAULT_SEED};
use edge_depth::depth::{DEFAULT_MAX_GENERATORS, DEFAULT_MAX_LATTICE};
use serde::Serialize;

/// Depth of powers of weighted edge ideals, checked against closed forms.
#[derive(Debug, Parser)]
#[command(name = "edge-depth", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value = "gf2", env = "EDGE_DEPTH_FIELD")]
    field: FieldChoice,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_GENERATORS, env = "EDGE_DEPTH_MAX_GENS")]
    max_gens: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_LATTICE, env = "EDGE_DEPTH_MAX_LATTICE")]
    max_lattice: usize,
    #[arg(long, global = true, env = "EDGE_DEPTH_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "csv", env = "EDGE_DEPTH_FORMAT")]
    format: OutputFormat,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED, env = "EDGE_DEPTH_SEED")]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// depth(S/I^t) for one graph given as JSON (inline, or @path)
    Depth {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 1)]
        t: u32,
    },
    /// Closed form against the engine over ranges of n and t
    Table {
        #[arg(long, value_enum)]
        family: TableFamily,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        t_min: u32,
        #[arg(long, default_value_t = 3)]
        t_max: u32,
        #[arg(long, default_value_t = 2)]
        w1: u32,
        #[arg(long, default_value_t = 2)]
        w3: u32,
        #[arg(long, default_value_t = 2)]
        w5: u32,
    },
    /// Replay colon and deletion identities by exact equality
    ColonSuite,
    /// Closedness criterion against the Newton-polyhedron oracle
    ClosureSuite {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_w: u32,
        /// Also sweep every cycle and path on this many vertices
        #[arg(long)]
        cycles_paths: Option<usize>,
    },
    /// Seeded randomized invariants of the engine
    PropertySuite,
}

fn config(g: &GlobalArgs) -> RunConfig {
    RunConfig {
        field: g.field,
        max_gens: g.max_gens,
        max_lattice: g.max_lattice,
        cache_dir: g.cache_dir.clone(),
        format: g.format,
        seed: g.seed,
    }
}

fn emit<T: Serialize>(items: &[T], format: OutputFormat) -> CliResult<()> {
    let out = io::stdout().lock();
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(out, items).map_err(|e| CliError::Output(e.to_string()))?;
            println!();
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for item in items {
                w.serialize(item).map_err(|e| CliError::Output(e.to_string()))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct DepthRow {
    ideal_hash: String,
    n: usize,
    t: u32,
    field: &'static str,
    depth: usize,
    pd: usize,
    witness_i: Option<usize>,
    witness_b: String,
    elapsed_ms: u64,
}

fn depth_rows(reports: &[DepthReport]) -> Vec<DepthRow> {
    reports
        .iter()
        .map(|r| DepthRow {
            ideal_hash: r.ideal_hash.clone(),
            n: r.n,
            t: r.t,
            field: r.field.as_str(),
            depth: r.depth,
            pd: r.pd,
            witness_i: r.witness_i,
            witness_b: r
                .witness_b
                .as_ref()
                .map(|b| b.iter().map(u32::to_string).collect::<Vec<_>>().join("-"))
                .unwrap_or_default(),
            elapsed_ms: r.elapsed_ms,
        })
        .collect()
}

fn read_graph(arg: &str) -> CliResult<GraphSpec> {
    match arg.strip_prefix('@') {
        Some(path) => GraphSpec::parse(&std::fs::read_to_string(path)?),
        None => GraphSpec::parse(arg),
    }
}

fn run(cli: Cli) -> CliResult<i32> {
    let cfg = config(&cli.global);
    match cli.command {
        Command::Depth { graph, t } => {
            let reports = cmd_depth(&read_graph(&graph)?, t, &cfg)?;
            match cfg.format {
                OutputFormat::Json => emit(&reports, cfg.format)?,
                OutputFormat::Csv => emit(&depth_rows(&reports), cfg.format)?,
            }
            let fields_agree = reports.windows(2).all(|w| w[0].depth == w[1].depth);
            Ok(if fields_agree { exit::PASS } else { exit::MISMATCH })
        }
        Command::Table { family, n_min, n_max, t_min, t_max, w1, w3, w5 } => {
            let spec = FamilySpec::new(family).with_weights(w1, w3, w5);
            let rows = cmd_table(&spec, n_min..=n_max, t_min..=t_max, &cfg)?;
            write_rows(&rows, cfg.format, io::stdout().lock())?;
            let (failed, skipped) = summarize(&rows);
            eprintln!("{} rows, {failed} mismatched, {skipped} skipped", rows.len());
            Ok(outcome_code(failed, skipped))
        }
        Command::ColonSuite => {
            let checks = cmd_colon_suite(&cfg)?;
            emit(&checks, cfg.format)?;
            let failed: Vec<&ColonCheck> = checks.iter().filter(|c| !c.passed).collect();
            for c in &failed {
                eprintln!("FAIL {} n={} t={} w={}: {}", c.identity, c.n, c.t, c.weights, c.detail);
            }
            eprintln!("{} identities, {} failed", checks.len(), failed.len());
            Ok(outcome_code(failed.len(), 0))
        }
        Command::ClosureSuite { max_n, max_w, cycles_paths } => {
            let report = cmd_closure_suite(max_n, max_w, cycles_paths, &cfg)?;
            emit(std::slice::from_ref(&report), OutputFormat::Json)?;
            eprintln!(
                "{:?} sweep: {} graphs, {} not closed, {} disagreements (seed {})",
                report.mode,
                report.checked,
                report.not_closed,
                report.disagreements.len(),
                report.seed
            );
            Ok(outcome_code(report.disagreements.len(), 0))
        }
        Command::PropertySuite => {
            let report = cmd_property_suite(&cfg)?;
            match cfg.format {
                OutputFormat::Json => emit(std::slice::from_ref(&report), cfg.format)?,
                OutputFormat::Csv => {
                    let rows: Vec<(String, usize, usize)> = report
                        .checks
                        .iter()
                        .map(|c| (c.name.clone(), c.instances, c.violations.len()))
                        .collect();
                    let mut w = csv::Writer::from_writer(io::stdout().lock());
                    w.write_record(["check", "instances", "violations"])
                        .map_err(|e| CliError::Output(e.to_string()))?;
                    for r in rows {
                        w.serialize(r).map_err(|e| CliError::Output(e.to_string()))?;
                    }
                    w.flush()?;
                }
            }
            for c in &report.checks {
                for v in &c.violations {
                    eprintln!("VIOLATION {} (seed {}): {v}", c.name, report.seed);
                }
            }
            Ok(outcome_code(report.violations(), 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::PASS };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = io::stdout().flush();
    ExitCode::from(code as u8)
}
