//! Single-source shortest paths with exact path counts.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

use super::Graph;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which arcs a search follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Out,
    In,
}

/// Result of a single-source search. `dist` is infinite for unreachable nodes.
#[derive(Debug, Clone)]
pub struct ShortestPaths<T> {
    pub source: usize,
    pub dist: Vec<T>,
    pub sigma: Vec<u128>,
    pub preds: Vec<Vec<usize>>,
    /// Reached nodes in non-decreasing distance.
    pub order: Vec<usize>,
}

impl<T: Scalar> ShortestPaths<T> {
    pub fn reachable(&self, v: usize) -> bool {
        self.dist[v].is_finite()
    }
}

/// Shortest paths from `source` following out-arcs; nodes farther than `cap` count as unreachable.
pub fn shortest_paths<T: Scalar>(g: &Graph<T>, source: usize, cap: Option<T>) -> Result<ShortestPaths<T>> {
    shortest_paths_dir(g, source, cap, Direction::Out)
}

pub fn shortest_paths_dir<T: Scalar>(
    g: &Graph<T>,
    source: usize,
    cap: Option<T>,
    dir: Direction,
) -> Result<ShortestPaths<T>> {
    g.check_node(source)?;
    match g.uniform_weight() {
        Some(w) => bfs(g, source, cap, dir, w),
        None => dijkstra(g, source, cap, dir),
    }
}

fn arcs<T: Scalar>(g: &Graph<T>, v: usize, dir: Direction) -> &[(usize, T)] {
    match dir {
        Direction::Out => g.out_edges(v),
        Direction::In => g.in_edges(v),
    }
}

fn bfs<T: Scalar>(g: &Graph<T>, s: usize, cap: Option<T>, dir: Direction, w: T) -> Result<ShortestPaths<T>> {
    let n = g.n();
    let mut hops = vec![usize::MAX; n];
    let mut sigma = vec![0u128; n];
    let mut preds = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let max_hops = cap.map(|c| {
        let h = (c / w).floor();
        if h < T::zero() {
            0
        } else {
            h.to_usize().unwrap_or(usize::MAX)
        }
    });
    hops[s] = 0;
    sigma[s] = 1;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        if max_hops.is_some_and(|h| hops[v] >= h) {
            continue;
        }
        for &(u, _) in arcs(g, v, dir) {
            if hops[u] == usize::MAX {
                hops[u] = hops[v] + 1;
                queue.push_back(u);
            }
            if hops[u] == hops[v] + 1 {
                sigma[u] = sigma[u].checked_add(sigma[v]).ok_or(Error::PathCountOverflow)?;
                preds[u].push(v);
            }
        }
    }
    let dist = hops.iter().map(|&h| if h == usize::MAX { T::infinity() } else { T::of_usize(h) * w }).collect();
    Ok(ShortestPaths { source: s, dist, sigma, preds, order })
}

struct HeapItem<T>(T, usize);

impl<T: PartialOrd> PartialEq for HeapItem<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<T: PartialOrd> Eq for HeapItem<T> {}
impl<T: PartialOrd> PartialOrd for HeapItem<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: PartialOrd> Ord for HeapItem<T> {
    // min-heap on distance, then node id
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.partial_cmp(&self.0).unwrap_or(Ordering::Equal).then_with(|| other.1.cmp(&self.1))
    }
}

fn dijkstra<T: Scalar>(g: &Graph<T>, s: usize, cap: Option<T>, dir: Direction) -> Result<ShortestPaths<T>> {
    let n = g.n();
    let mut dist = vec![T::infinity(); n];
    let mut sigma = vec![0u128; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    dist[s] = T::zero();
    sigma[s] = 1;
    let mut heap = BinaryHeap::from([HeapItem(T::zero(), s)]);
    while let Some(HeapItem(d, v)) = heap.pop() {
        if done[v] || d > dist[v] {
            continue;
        }
        done[v] = true;
        order.push(v);
        for &(u, w) in arcs(g, v, dir) {
            let nd = d + w;
            if cap.is_some_and(|c| nd > c) {
                continue;
            }
            if nd < dist[u] {
                dist[u] = nd;
                sigma[u] = sigma[v];
                preds[u].clear();
                preds[u].push(v);
                heap.push(HeapItem(nd, u));
            } else if nd == dist[u] && !done[u] {
                sigma[u] = sigma[u].checked_add(sigma[v]).ok_or(Error::PathCountOverflow)?;
                preds[u].push(v);
            }
        }
    }
    Ok(ShortestPaths { source: s, dist, sigma, preds, order })
}

/// Hop distances from `s` (usize::MAX when unreachable), ignoring weights.
pub fn hop_distances<T: Scalar>(g: &Graph<T>, s: usize, dir: Direction) -> Vec<usize> {
    let mut hops = vec![usize::MAX; g.n()];
    hops[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &(u, _) in arcs(g, v, dir) {
            if hops[u] == usize::MAX {
                hops[u] = hops[v] + 1;
                queue.push_back(u);
            }
        }
    }
    hops
}

/// Nodes within `h` hops of `s` ignoring direction, excluding `s`, with their hop distance.
pub fn ball<T: Scalar>(g: &Graph<T>, s: usize, h: usize) -> Vec<(usize, usize)> {
    let mut seen = std::collections::HashMap::from([(s, 0usize)]);
    let mut frontier = vec![s];
    let mut out = Vec::new();
    for d in 1..=h {
        let mut next = Vec::new();
        for &v in &frontier {
            for u in g.undirected_neighbors(v) {
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(u) {
                    e.insert(d);
                    next.push(u);
                    out.push((u, d));
                }
            }
        }
        frontier = next;
    }
    out.sort_unstable();
    out
}

/// Weighted distance matrix, row `s` = distances from `s`.
pub fn all_pairs_distances<T: Scalar>(g: &Graph<T>) -> Result<Vec<Vec<T>>> {
    (0..g.n()).map(|s| shortest_paths(g, s, None).map(|sp| sp.dist)).collect()
}
