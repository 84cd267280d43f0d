//! Graph storage and the shared graph algorithms.
//!
//! - [`Graph`] keeps sorted adjacency lists with dense ids in first-appearance order.
//! - [`paths`] has BFS/Dijkstra single-source searches with path counts.
//! - [`components`] labels weak and strong components.
//! - [`flow`] is a deterministic Edmonds-Karp max-flow.

pub mod components;
pub mod flow;
pub mod paths;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Counts of input records dropped while building a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildReport {
    pub self_loops: usize,
    pub duplicates: usize,
    pub records: usize,
}

/// Simple graph with positive weights; optionally directed.
#[derive(Debug, Clone)]
pub struct Graph<T> {
    directed: bool,
    out_adj: Vec<Vec<(usize, T)>>,
    in_adj: Vec<Vec<(usize, T)>>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    coords: Option<Vec<[T; 2]>>,
    m: usize,
    uniform: Option<T>,
}

impl<T: Scalar> Graph<T> {
    /// Graph on nodes `0..n` labelled by their index.
    pub fn from_edges(n: usize, directed: bool, edges: &[(usize, usize)]) -> Self {
        let weighted: Vec<_> = edges.iter().map(|&(u, v)| (u, v, T::one())).collect();
        Self::from_weighted_edges(n, directed, &weighted).expect("unit weights are valid")
    }

    pub fn from_weighted_edges(n: usize, directed: bool, edges: &[(usize, usize, T)]) -> Result<Self> {
        let mut b = GraphBuilder::new(directed);
        for v in 0..n {
            b.add_node(&v.to_string());
        }
        for (i, &(u, v, w)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidNode { node: x, n });
                }
            }
            b.add_edge_at(i + 1, &u.to_string(), &v.to_string(), Some(w))?;
        }
        Ok(b.build().0)
    }

    pub fn n(&self) -> usize {
        self.out_adj.len()
    }

    /// Number of edges (arcs when directed).
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn out_edges(&self, v: usize) -> &[(usize, T)] {
        &self.out_adj[v]
    }

    pub fn in_edges(&self, v: usize) -> &[(usize, T)] {
        if self.directed {
            &self.in_adj[v]
        } else {
            &self.out_adj[v]
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_adj[v].iter().map(|e| e.0)
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.in_edges(v).iter().map(|e| e.0)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_edges(v).len()
    }

    /// Degree; in + out on directed graphs.
    pub fn degree(&self, v: usize) -> usize {
        if self.directed {
            self.out_adj[v].len() + self.in_adj[v].len()
        } else {
            self.out_adj[v].len()
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Sum of incident weights (in + out on directed graphs).
    pub fn strength(&self, v: usize) -> T {
        let out: T = self.out_adj[v].iter().map(|e| e.1).sum();
        if self.directed {
            out + self.in_adj[v].iter().map(|e| e.1).sum()
        } else {
            out
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.weight(u, v).is_some()
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<T> {
        let adj = &self.out_adj[u];
        adj.binary_search_by_key(&v, |e| e.0).ok().map(|i| adj[i].1)
    }

    /// Common weight of all edges, if there is one.
    pub fn uniform_weight(&self) -> Option<T> {
        self.uniform
    }

    pub fn is_weighted(&self) -> bool {
        self.uniform != Some(T::one()) && self.m > 0
    }

    /// Sorted neighbour set ignoring direction.
    pub fn undirected_neighbors(&self, v: usize) -> Vec<usize> {
        if !self.directed {
            return self.neighbors(v).collect();
        }
        let mut out: Vec<usize> = self.neighbors(v).chain(self.in_neighbors(v)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Neighbour multiset used by degree-based pruning: in + out on directed graphs.
    pub fn pruning_neighbors(&self, v: usize) -> Vec<usize> {
        if !self.directed {
            return self.neighbors(v).collect();
        }
        let mut out: Vec<usize> = self.neighbors(v).chain(self.in_neighbors(v)).collect();
        out.sort_unstable();
        out
    }

    /// Every edge once: `u < v` when undirected.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        let directed = self.directed;
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(move |(u, adj)| adj.iter().filter(move |e| directed || u < e.0).map(move |&(v, w)| (u, v, w)))
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn coordinates(&self) -> Option<&[[T; 2]]> {
        self.coords.as_deref()
    }

    pub fn set_coordinates(&mut self, coords: Vec<[T; 2]>) -> Result<()> {
        if coords.len() != self.n() {
            return Err(Error::InvalidParameter {
                name: "coordinates",
                reason: format!("expected {} points, got {}", self.n(), coords.len()),
            });
        }
        self.coords = Some(coords);
        Ok(())
    }

    pub fn check_node(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidNode { node: v, n: self.n() })
        }
    }

    /// Same topology with every weight replaced by `f(w)`.
    pub fn map_weights(&self, f: impl Fn(T) -> T) -> Result<Self> {
        let mut g = self.clone();
        let mut uniform: Option<Option<T>> = None;
        for adj in g.out_adj.iter_mut().chain(g.in_adj.iter_mut()) {
            for e in adj.iter_mut() {
                e.1 = f(e.1);
                if !(e.1 > T::zero() && e.1.is_finite()) {
                    return Err(Error::InvalidParameter {
                        name: "weight",
                        reason: format!("mapped weight {} is not positive", e.1),
                    });
                }
                uniform = Some(match uniform {
                    None => Some(e.1),
                    Some(Some(w)) if w == e.1 => Some(w),
                    _ => None,
                });
            }
        }
        g.uniform = uniform.unwrap_or(Some(T::one()));
        Ok(g)
    }

    /// Undirected copy; reciprocal arcs merge keeping the larger weight.
    pub fn to_undirected(&self) -> Self {
        if !self.directed {
            return self.clone();
        }
        let mut b = GraphBuilder::new(false);
        for l in &self.labels {
            b.add_node(l);
        }
        let mut edges: Vec<(usize, usize, T)> = self.edges().map(|(u, v, w)| (u.min(v), u.max(v), w)).collect();
        edges.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then(b.2.partial_cmp(&a.2).unwrap()));
        edges.dedup_by_key(|e| (e.0, e.1));
        let mut g = b.build().0;
        for (u, v, w) in edges {
            g.out_adj[u].push((v, w));
            g.out_adj[v].push((u, w));
            g.m += 1;
        }
        for adj in &mut g.out_adj {
            adj.sort_by_key(|e| e.0);
        }
        g.uniform = uniform_of(&g.out_adj);
        g.coords = self.coords.clone();
        g
    }

    /// Dense row-major adjacency (weights), `a[u*n + v]` for arc u -> v.
    pub fn dense_adjacency(&self) -> Vec<T> {
        let n = self.n();
        let mut a = vec![T::zero(); n * n];
        for u in 0..n {
            for &(v, w) in &self.out_adj[u] {
                a[u * n + v] = w;
            }
        }
        a
    }
}

fn uniform_of<T: Scalar>(adj: &[Vec<(usize, T)>]) -> Option<T> {
    let mut it = adj.iter().flatten().map(|e| e.1);
    match it.next() {
        None => Some(T::one()),
        Some(first) => it.all(|w| w == first).then_some(first),
    }
}

/// Incremental graph construction from labelled records.
#[derive(Debug, Clone)]
pub struct GraphBuilder<T> {
    directed: bool,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize, T)>,
    report: BuildReport,
}

impl<T: Scalar> GraphBuilder<T> {
    pub fn new(directed: bool) -> Self {
        Self { directed, labels: Vec::new(), index: HashMap::new(), edges: Vec::new(), report: BuildReport::default() }
    }

    pub fn add_node(&mut self, label: &str) -> usize {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), id);
        id
    }

    pub fn add_edge(&mut self, u: &str, v: &str, w: Option<T>) -> Result<()> {
        let line = self.report.records + 1;
        self.add_edge_at(line, u, v, w)
    }

    /// Adds a record; `line` is echoed in errors.
    pub fn add_edge_at(&mut self, line: usize, u: &str, v: &str, w: Option<T>) -> Result<()> {
        let w = w.unwrap_or_else(T::one);
        if !(w > T::zero() && w.is_finite()) {
            return Err(Error::InvalidEdge { line, reason: format!("weight {w} must be positive and finite") });
        }
        self.report.records += 1;
        let a = self.add_node(u);
        let b = self.add_node(v);
        if a == b {
            self.report.self_loops += 1;
            return Ok(());
        }
        self.edges.push((a, b, w));
        Ok(())
    }

    pub fn build(self) -> (Graph<T>, BuildReport) {
        let n = self.labels.len();
        let mut report = self.report;
        let mut keyed: Vec<(usize, usize, usize, T)> = self
            .edges
            .into_iter()
            .enumerate()
            .map(|(i, (u, v, w))| if self.directed { (u, v, i, w) } else { (u.min(v), u.max(v), i, w) })
            .collect();
        keyed.sort_by_key(|e| (e.0, e.1, e.2));
        let before = keyed.len();
        keyed.dedup_by_key(|e| (e.0, e.1));
        report.duplicates += before - keyed.len();

        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = if self.directed { vec![Vec::new(); n] } else { Vec::new() };
        for &(u, v, _, w) in &keyed {
            out_adj[u].push((v, w));
            if self.directed {
                in_adj[v].push((u, w));
            } else {
                out_adj[v].push((u, w));
            }
        }
        for adj in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            adj.sort_by_key(|e| e.0);
        }
        let uniform = uniform_of(&out_adj);
        let g = Graph {
            directed: self.directed,
            out_adj,
            in_adj,
            labels: self.labels,
            index: self.index,
            coords: None,
            m: keyed.len(),
            uniform,
        };
        (g, report)
    }
}
