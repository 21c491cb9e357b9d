//! Command-line front end: parses arguments, loads the edge list, runs one
//! analysis and writes JSON to standard output or a file.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use mlcore::community::{community_search, CommunityQuery, Strategy};
use mlcore::densest::{densest_bruteforce, densest_subgraph, layer_densities, DensestMode, DensestResult};
use mlcore::innermost::innermost_cores;
use mlcore::levels::level_stats;
use mlcore::quasiclique::{mine_fcgqc, mine_fcgqc_pruned, MinerOptions, MiningParams, QuasiCliqueSet};
use mlcore::{decompose, load_edge_list, Core, Engine, Error, MultilayerGraph, VertexSet};

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(name = "mlcores", version, about = "Core decomposition of multilayer networks")]
pub struct Cli {
    /// Edge list: `<source> <target> <layer>` per line, `#` comments.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Decomposition engine: naive, bfs, dfs or hybrid.
    #[arg(long, global = true, default_value = "hybrid")]
    pub engine: Engine,
    /// Seed for every randomized choice (depth-first layer order).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Omit vertex lists from core records.
    #[arg(long, global = true)]
    pub no_vertices: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All distinct cores, one JSON record each, then a stats record.
    Decompose,
    /// Cores not dominated by any other core.
    Innermost,
    /// Core-based densest subgraph.
    Densest(DensestArgs),
    /// Frequent cross-graph quasi-cliques with core-based pruning.
    Quasicliques(MiningArgs),
    /// Best community containing the query vertices.
    Csearch(SearchArgs),
    /// Per-level lattice statistics.
    Stats,
}

#[derive(Debug, Args)]
pub struct DensestArgs {
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    /// Consider only inner-most cores.
    #[arg(long)]
    pub innermost_only: bool,
    /// Also report the exhaustive optimum (small graphs only).
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Args)]
pub struct MiningArgs {
    /// One threshold for every layer, or a comma-separated list per layer.
    #[arg(long, default_value = "1.0")]
    pub gamma: String,
    #[arg(long, default_value_t = 1.0)]
    pub min_sup: f64,
    #[arg(long, default_value_t = 3)]
    pub min_size: usize,
    /// Mine the whole vertex set without core-based pruning.
    #[arg(long)]
    pub no_prune: bool,
    /// Refuse to enumerate over more vertices than this.
    #[arg(long, default_value_t = mlcore::quasiclique::ENUM_CAP)]
    pub enum_cap: usize,
    /// Run both pruned and unpruned mining and report their timings.
    #[arg(long, conflicts_with = "no_prune")]
    pub compare: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Comma-separated vertex labels.
    #[arg(long, required = true)]
    pub query: String,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, default_value = "hybrid")]
    pub strategy: Strategy,
}

/// A failure with its process exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Io(_) => 2,
            Error::Refused(_) => 3,
            Error::Argument(_) | Error::NoCore => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn argument_failure(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn sorted_labels(g: &MultilayerGraph, set: &VertexSet) -> Vec<String> {
    let mut labels: Vec<String> = set.iter().map(|u| g.label(u).to_owned()).collect();
    labels.sort();
    labels
}

#[derive(Serialize)]
struct CoreRecord {
    vector: Vec<u32>,
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<String>>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    innermost: bool,
}

fn core_record(g: &MultilayerGraph, core: &Core, with_vertices: bool, innermost: bool) -> CoreRecord {
    CoreRecord {
        vector: core.vector.as_slice().to_vec(),
        size: core.vertices.len(),
        vertices: with_vertices.then(|| sorted_labels(g, &core.vertices)),
        innermost,
    }
}

fn write_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value).map_err(|e| Failure { code: 2, message: e.to_string() })?;
    writeln!(out)?;
    Ok(())
}

fn load(cli: &Cli) -> Result<MultilayerGraph, Failure> {
    let path = cli.input.as_ref().ok_or_else(|| argument_failure("--input is required"))?;
    let file = File::open(path).map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })?;
    let (g, report) = load_edge_list(BufReader::new(file))?;
    eprintln!(
        "loaded {} vertices, {} layers, {} edges ({} duplicates, {} self-loops ignored)",
        g.vertex_count(),
        g.layer_count(),
        report.edges_loaded,
        report.duplicates_ignored,
        report.self_loops_ignored
    );
    Ok(g)
}

fn parse_gamma(text: &str, layers: usize) -> Result<Vec<f64>, Failure> {
    let values: Vec<f64> = text
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| argument_failure(format!("invalid gamma value `{t}`"))))
        .collect::<Result<_, _>>()?;
    match values.len() {
        1 => Ok(vec![values[0]; layers]),
        n if n == layers => Ok(values),
        n => Err(argument_failure(format!("{n} gamma values given for {layers} layers"))),
    }
}

fn densest_json(g: &MultilayerGraph, r: &DensestResult) -> serde_json::Value {
    json!({
        "vertices": sorted_labels(g, &r.vertices),
        "size": r.vertices.len(),
        "delta": r.delta_value,
        "beta": r.beta,
        "layers": r.best_layers,
        "densities": layer_densities(g, &r.vertices),
    })
}

fn quasicliques_json(g: &MultilayerGraph, set: &QuasiCliqueSet) -> serde_json::Value {
    set.subgraphs
        .iter()
        .map(|q| json!({ "vertices": sorted_labels(g, &q.vertices), "layers": q.layers }))
        .collect()
}

/// Runs one command, writing its JSON output to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let g = load(cli)?;
    let with_vertices = !cli.no_vertices;
    match &cli.command {
        Command::Decompose => {
            let d = decompose(&g, cli.engine, cli.seed);
            for core in d.cores() {
                write_line(out, &core_record(&g, core, with_vertices, false))?;
            }
            let s = d.stats;
            write_line(
                out,
                &json!({"stats": {"cores_computed": s.cores_computed, "cores_visited": s.cores_visited, "output_cores": s.output_cores}}),
            )?;
        }
        Command::Innermost => {
            for core in &innermost_cores(&g).cores {
                write_line(out, &core_record(&g, core, with_vertices, true))?;
            }
        }
        Command::Densest(args) => {
            let mode = if args.innermost_only { DensestMode::InnermostOnly } else { DensestMode::Full };
            let r = densest_subgraph(&g, args.beta, mode)?;
            let mut value = densest_json(&g, &r);
            if args.exact {
                value["exact"] = densest_json(&g, &densest_bruteforce(&g, args.beta)?);
            }
            write_line(out, &value)?;
        }
        Command::Quasicliques(args) => {
            let params = MiningParams::new(parse_gamma(&args.gamma, g.layer_count())?, args.min_sup, args.min_size)?;
            let options = MinerOptions { enum_cap: Some(args.enum_cap) };
            let mut value = json!({ "vertices": g.vertex_count() });
            if args.no_prune {
                let result = mine_fcgqc(&g, &g.vertices(), &params, options)?;
                value["quasi_cliques"] = quasicliques_json(&g, &result);
            } else {
                let started = Instant::now();
                let d = decompose(&g, cli.engine, cli.seed);
                let pruned = mine_fcgqc_pruned(&g, &d, &params, options)?;
                let pruned_ms = started.elapsed().as_secs_f64() * 1e3;
                value["quasi_cliques"] = quasicliques_json(&g, &pruned.result);
                value["pruned_vertices"] = json!(pruned.kept.len());
                if args.compare {
                    let started = Instant::now();
                    let full = mine_fcgqc(&g, &g.vertices(), &params, options)?;
                    let full_ms = started.elapsed().as_secs_f64() * 1e3;
                    value["timing_ms"] = json!({ "pruned": pruned_ms, "unpruned": full_ms });
                    value["identical"] = json!(full == pruned.result);
                }
            }
            write_line(out, &value)?;
        }
        Command::Csearch(args) => {
            let mut query = Vec::new();
            for label in args.query.split(',').map(str::trim).filter(|l| !l.is_empty()) {
                query.push(g.vertex_by_label(label).ok_or_else(|| argument_failure(format!("unknown vertex `{label}`")))?);
            }
            let mut q = CommunityQuery::new(VertexSet::new(query), args.beta, args.strategy);
            q.seed = cli.seed;
            let r = community_search(&g, &q)?;
            write_line(
                out,
                &json!({
                    "vertices": sorted_labels(&g, &r.vertices),
                    "size": r.vertices.len(),
                    "score": r.score,
                    "vector": r.vector.as_slice(),
                    "layers": r.best_layers,
                }),
            )?;
        }
        Command::Stats => {
            let d = decompose(&g, cli.engine, cli.seed);
            let stats = level_stats(&g, &d);
            for row in &stats.levels {
                write_line(
                    out,
                    &json!({"level": row.level, "cores": row.cores, "mean_size": row.mean_size, "mean_density": row.mean_density}),
                )?;
            }
            write_line(out, &json!({"totals": {"lattice_vectors": stats.total_cores(), "distinct_cores": d.len()}}))?;
        }
    }
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.output {
        Some(path) => File::create(path)
            .map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })
            .and_then(|file| {
                let mut out = BufWriter::new(file);
                execute(&cli, &mut out)?;
                out.flush()?;
                Ok(())
            }),
        None => {
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            execute(&cli, &mut out).and_then(|_| out.flush().map_err(Failure::from))
        }
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
