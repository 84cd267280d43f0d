//! Edge-list and coordinate ingestion, dataset statistics.

use std::fs;
use std::path::Path;

use centra_core::{BuildReport, Error, Graph, GraphBuilder, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

/// Records of a text file: 1-based line number and tokens split on whitespace or commas.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            return None;
        }
        let tokens = line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
        Some((i + 1, tokens))
    })
}

fn malformed(line: usize, reason: impl Into<String>) -> CliError {
    Error::InvalidEdge { line, reason: reason.into() }.into()
}

/// Parses `u v [w]` records; duplicate edges collapse and are counted in the report.
pub fn parse_edge_text<T: Scalar>(text: &str, directed: bool) -> CliResult<(Graph<T>, BuildReport)> {
    let mut builder = GraphBuilder::<T>::new(directed);
    for (line, tokens) in records(text) {
        let weight = match tokens.as_slice() {
            [_, _] => None,
            [_, _, w] => {
                let w: f64 = w.parse().map_err(|_| malformed(line, format!("weight {w:?} is not a number")))?;
                Some(T::from_f64(w).ok_or_else(|| malformed(line, format!("weight {w} not representable")))?)
            }
            _ => return Err(malformed(line, format!("expected `u v [w]`, found {} fields", tokens.len()))),
        };
        builder.add_edge_at(line, tokens[0], tokens[1], weight)?;
    }
    let (g, report) = builder.build();
    if report.records == 0 {
        return Err(CliError::input("edge list contains no edges"));
    }
    Ok((g, report))
}

pub fn parse_edge_list<T: Scalar>(path: &Path, directed: bool) -> CliResult<(Graph<T>, BuildReport)> {
    let (g, report) = parse_edge_text(&read(path)?, directed)
        .map_err(|e| CliError { message: format!("{}: {e}", path.display()), ..e })?;
    if report.duplicates > 0 || report.self_loops > 0 {
        log::warn!(
            "{}: collapsed {} duplicate edges, dropped {} self-loops",
            path.display(),
            report.duplicates,
            report.self_loops
        );
    }
    Ok((g, report))
}

/// Attaches `node x y` coordinates; every node needs exactly one entry.
pub fn load_coordinates<T: Scalar>(g: &mut Graph<T>, path: &Path) -> CliResult<()> {
    let text = read(path)?;
    let mut coords: Vec<Option<[T; 2]>> = vec![None; g.n()];
    for (line, tokens) in records(&text) {
        let [label, x, y] = tokens.as_slice() else {
            return Err(CliError::input(format!("{}:{line}: expected `node x y`", path.display())));
        };
        let v = g
            .id_of(label)
            .ok_or_else(|| CliError::input(format!("{}:{line}: unknown node {label:?}", path.display())))?;
        let parse = |s: &str| {
            s.parse::<f64>()
                .ok()
                .and_then(T::from_f64)
                .ok_or_else(|| CliError::input(format!("{}:{line}: bad coordinate {s:?}", path.display())))
        };
        coords[v] = Some([parse(x)?, parse(y)?]);
    }
    let missing = coords.iter().filter(|c| c.is_none()).count();
    if missing > 0 {
        return Err(CliError::input(format!("{}: {missing} nodes have no coordinates", path.display())));
    }
    g.set_coordinates(coords.into_iter().flatten().collect())?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetStats {
    pub nodes: usize,
    pub edges: usize,
    /// `2m/n` undirected, `m/n` directed; zero on the empty graph.
    pub avg_degree: f64,
    /// Undirected only.
    pub max_degree: Option<usize>,
    /// Directed only.
    pub max_in: Option<usize>,
    pub max_out: Option<usize>,
    pub directed: bool,
}

pub fn dataset_stats<T: Scalar>(g: &Graph<T>) -> DatasetStats {
    let (n, m) = (g.n(), g.m());
    let directed = g.is_directed();
    let ends = if directed { m } else { 2 * m };
    let max_of = |f: &dyn Fn(usize) -> usize| (0..n).map(f).max().unwrap_or(0);
    DatasetStats {
        nodes: n,
        edges: m,
        avg_degree: if n == 0 { 0.0 } else { ends as f64 / n as f64 },
        max_degree: (!directed).then(|| max_of(&|v| g.degree(v))),
        max_in: directed.then(|| max_of(&|v| g.in_degree(v))),
        max_out: directed.then(|| max_of(&|v| g.out_degree(v))),
        directed,
    }
}
