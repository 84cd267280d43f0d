//! Deterministic and seeded random graph families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

pub fn path<T: Scalar>(n: usize) -> Graph<T> {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, false, &edges)
}

pub fn cycle<T: Scalar>(n: usize) -> Graph<T> {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    if n > 2 {
        edges.push((n - 1, 0));
    }
    Graph::from_edges(n, false, &edges)
}

/// Node 0 joined to every other node.
pub fn star<T: Scalar>(n: usize) -> Graph<T> {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, false, &edges)
}

pub fn complete<T: Scalar>(n: usize) -> Graph<T> {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, false, &edges)
}

/// G(n, p): every unordered pair (ordered when directed) is an edge with probability `p`.
pub fn erdos_renyi<T: Scalar>(n: usize, p: f64, directed: bool, seed: u64) -> Result<Graph<T>> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter { name: "p", reason: format!("{p} not in [0, 1]") });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let candidate = if directed { u != v } else { u < v };
            if candidate && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, directed, &edges))
}

/// Preferential attachment: a complete core on `m + 1` nodes, then each new node links to `m`
/// distinct existing nodes chosen with probability proportional to degree.
pub fn barabasi_albert<T: Scalar>(n: usize, m: usize, seed: u64) -> Result<Graph<T>> {
    if m < 1 || m >= n {
        return Err(Error::InvalidParameter { name: "m", reason: format!("need 1 <= m < n, got m={m}, n={n}") });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    // Every edge end once, so a uniform draw is degree-proportional.
    let mut ends = Vec::new();
    for u in 0..=m {
        for v in u + 1..=m {
            edges.push((u, v));
            ends.extend([u, v]);
        }
    }
    let mut targets = Vec::with_capacity(m);
    for v in m + 1..n {
        targets.clear();
        while targets.len() < m {
            let t = *ends.choose(&mut rng).expect("core has edges");
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            ends.extend([t, v]);
        }
    }
    Ok(Graph::from_edges(n, false, &edges))
}
