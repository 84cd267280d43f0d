//! Subcommand definitions and dispatch.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use centra_core::graph_metrics::MetricValue;
use centra_core::registry::{self, GRAPH_METRICS, POINT_METRICS, STRATEGIES};
use centra_core::select::GroupSelectParams;
use centra_core::{Graph64, MetricParams};
use clap::{Args, Parser, Subcommand};

use crate::bench::{run_bench, write_bench};
use crate::config::{merge, parse_overrides, ExperimentConfig};
use crate::emit::{emit_results, write_summary, SUMMARY_HEADER};
use crate::error::{CliError, CliResult};
use crate::io::{dataset_stats, load_coordinates, parse_edge_list};

#[derive(Debug, Parser)]
#[command(name = "centra", version, about = "Centrality metrics and attack simulations on edge lists")]
pub struct Cli {
    /// Seed of every random draw.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// More log output; repeat for more.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Edge list with one `u v [w]` record per line.
    pub file: PathBuf,
    #[arg(long)]
    pub directed: bool,
    /// Side file of `node x y` records.
    #[arg(long)]
    pub coords: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Node, edge and degree counts.
    Stats(GraphArgs),
    /// Per-node scores of a point metric, highest first.
    Centrality {
        #[arg(required_unless_present = "list")]
        file: Option<PathBuf>,
        #[arg(long)]
        directed: bool,
        #[arg(long)]
        coords: Option<PathBuf>,
        #[arg(long, required_unless_present = "list")]
        metric: Option<String>,
        /// Parameter override, `key=value`.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long)]
        top: Option<usize>,
        /// Prints the metric ids and exits.
        #[arg(long)]
        list: bool,
    },
    /// A whole-graph metric.
    GraphMetric {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        metric: String,
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Seed-set selection.
    Select {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        strategy: String,
        #[arg(long)]
        budget: usize,
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Node-removal or infection experiment described by a JSON config.
    Attack {
        /// Overrides the config's input_path.
        file: Option<PathBuf>,
        #[arg(long)]
        config: PathBuf,
        /// Overrides the config's output_path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Median wall time per metric as CSV.
    Bench {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated ids, or `all`.
        #[arg(long, value_delimiter = ',')]
        metrics: Vec<String>,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
        #[arg(long = "param")]
        params: Vec<String>,
    },
}

fn load(file: &Path, directed: bool, coords: Option<&Path>) -> CliResult<Graph64> {
    let (mut g, _) = parse_edge_list(file, directed)?;
    if let Some(c) = coords {
        load_coordinates(&mut g, c)?;
    }
    Ok(g)
}

fn metric_params(overrides: &[String], seed: Option<u64>) -> CliResult<MetricParams> {
    let base = MetricParams { rng_seed: seed.unwrap_or(0), ..Default::default() };
    let p: MetricParams = merge(&base, Some(&parse_overrides(overrides)?))?;
    p.validate()?;
    Ok(p)
}

fn write_err(e: io::Error) -> CliError {
    CliError::input(format!("write failed: {e}"))
}

pub fn run(cli: Cli) -> CliResult<()> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::input(format!("--threads: {e}")))?;
    }
    let seed = cli.seed;
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Stats(a) => {
            let (g, report) = parse_edge_list::<f64>(&a.file, a.directed)?;
            let s = dataset_stats(&g);
            let mut lines = vec![
                format!("nodes {}", s.nodes),
                format!("edges {}", s.edges),
                format!("avg_degree {}", crate::emit::fmt_sig(s.avg_degree)),
            ];
            for (key, v) in [("max_degree", s.max_degree), ("max_in", s.max_in), ("max_out", s.max_out)] {
                if let Some(v) = v {
                    lines.push(format!("{key} {v}"));
                }
            }
            lines.push(format!("directed {}", s.directed));
            lines.push(format!("duplicates {}", report.duplicates));
            lines.push(format!("self_loops {}", report.self_loops));
            writeln!(out, "{}", lines.join("\n")).map_err(write_err)?;
        }
        Command::Centrality { list: true, .. } => {
            writeln!(out, "{}", POINT_METRICS.join("\n")).map_err(write_err)?;
        }
        Command::Centrality { file, directed, coords, metric, params, top, list: false } => {
            let g = load(&file.expect("required"), directed, coords.as_deref())?;
            let p = metric_params(&params, seed)?;
            let scores = registry::point_metric(&g, &metric.expect("required"), &p)?;
            if scores.skipped_pairs > 0 {
                log::warn!("{} node pairs skipped", scores.skipped_pairs);
            }
            writeln!(out, "node,score").map_err(write_err)?;
            for v in scores.ranking().into_iter().take(top.unwrap_or(usize::MAX)) {
                writeln!(out, "{},{}", g.label(v), scores.values[v]).map_err(write_err)?;
            }
        }
        Command::GraphMetric { graph, metric, params } => {
            let g = load(&graph.file, graph.directed, graph.coords.as_deref())?;
            let p = metric_params(&params, seed)?;
            let value = registry::graph_metric(&g, &metric, &p)?;
            if value.skipped_pairs > 0 {
                log::warn!("{} node pairs skipped", value.skipped_pairs);
            }
            writeln!(out, "key,value").map_err(write_err)?;
            let rows: Vec<(&str, String)> = match &value.value {
                MetricValue::Real(x) => vec![("value", x.to_string())],
                MetricValue::Integer(x) => vec![("value", x.to_string())],
                MetricValue::Nodes(nodes) => vec![
                    ("size", nodes.len().to_string()),
                    ("nodes", nodes.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ")),
                ],
                MetricValue::Hyperbolicity(h) => vec![
                    ("max", h.max.to_string()),
                    ("mean", h.mean.to_string()),
                    ("mean_relative", h.mean_relative.to_string()),
                    ("triples", h.triples.to_string()),
                ],
            };
            for (k, v) in rows {
                writeln!(out, "{k},{v}").map_err(write_err)?;
            }
        }
        Command::Select { graph, strategy, budget, params } => {
            let g = load(&graph.file, graph.directed, graph.coords.as_deref())?;
            let base = GroupSelectParams { budget, ..Default::default() };
            let p: GroupSelectParams = merge(&base, Some(&parse_overrides(&params)?))?;
            let result = registry::strategy(&g, &strategy, &p)?;
            writeln!(out, "step,node,score,excluded").map_err(write_err)?;
            for (i, s) in result.per_step.iter().enumerate() {
                writeln!(out, "{i},{},{},{}", g.label(s.node), s.score, s.excluded).map_err(write_err)?;
            }
            let reason = serde_json::to_value(result.stop_reason).expect("serialize");
            log::info!("stopped: {}", reason.as_str().unwrap_or_default());
            if result.seeds.len() < p.budget {
                eprintln!(
                    "stopped after {} of {} seeds: {}",
                    result.seeds.len(),
                    p.budget,
                    reason.as_str().unwrap_or_default()
                );
            }
        }
        Command::Attack { file, config, out: out_path } => {
            let mut cfg = ExperimentConfig::load(&config)?;
            if let Some(s) = seed {
                cfg.attack.rng_seed = s;
            }
            let input = file
                .or_else(|| cfg.input_path.clone())
                .ok_or_else(|| CliError::input("no input file given and config has no input_path"))?;
            let g = load(&input, cfg.directed, None)?;
            let mut rows = Vec::new();
            let mut summaries = Vec::new();
            let mut failures = Vec::new();
            for entry in &cfg.metrics {
                let plan = cfg.plan(cfg.source(entry)?);
                match centra_core::resilience::run_experiment(&g, &plan) {
                    Ok(mut result) => {
                        for r in &mut result.rows {
                            r.metric = entry.label().to_string();
                        }
                        rows.extend(result.rows);
                        summaries.push((entry.label().to_string(), result.summary));
                    }
                    Err(e) => {
                        log::error!("{}: {e}", entry.label());
                        failures.push(format!("{}: {e}", entry.label()));
                    }
                }
            }
            match out_path.or(cfg.output_path.clone()) {
                Some(path) => {
                    emit_results(&rows, cfg.output_format, Some(&path))?;
                    writeln!(out, "{SUMMARY_HEADER}").map_err(write_err)?;
                    for (label, summary) in &summaries {
                        write_summary(label, summary, &mut out)?;
                    }
                }
                None => emit_results(&rows, cfg.output_format, None)?,
            }
            if !failures.is_empty() {
                return Err(CliError::compute(format!("{} metrics failed: {}", failures.len(), failures.join("; "))));
            }
        }
        Command::Bench { graph, metrics, repeat, params } => {
            let g = load(&graph.file, graph.directed, graph.coords.as_deref())?;
            let p = metric_params(&params, seed)?;
            let all = metrics.iter().any(|m| m == "all");
            let ids: Vec<&str> =
                if all { POINT_METRICS.to_vec() } else { metrics.iter().map(String::as_str).collect() };
            if ids.is_empty() {
                return Err(CliError::input("--metrics lists no metrics"));
            }
            let (rows, failed) = run_bench(&g, &ids, &p, repeat, all)?;
            write_bench(&rows, &mut out)?;
            if failed > 0 {
                return Err(CliError::compute(format!("{failed} metrics failed")));
            }
        }
    }
    Ok(())
}

/// Ids accepted by each subcommand, for help output and tests.
pub fn advertised_ids() -> [(&'static str, &'static [&'static str]); 3] {
    [("centrality", POINT_METRICS), ("graph-metric", GRAPH_METRICS), ("select", STRATEGIES)]
}
