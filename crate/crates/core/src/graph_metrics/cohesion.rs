//! Cohesive subgroups: k-core, maximum clique, maximum k-plex, k-component.

use serde::{Deserialize, Serialize};

use super::{GraphMetricValue, MetricValue};
use crate::error::{Error, Result};
use crate::graph::flow::FlowNetwork;
use crate::graph::Graph;
use crate::iterative::decomposition::k_shell_values;
use crate::scalar::Scalar;

pub const DEFAULT_SIZE_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CohesionKind {
    KCore,
    KCliqueMax,
    KPlexMax,
    KComponent,
}

/// Node set of the requested subgroup, sorted ascending; empty when none exists.
///
/// Direction is ignored. Clique and plex searches are exact and refuse graphs above `size_cap`.
pub fn cohesive_subgroup<T: Scalar>(
    g: &Graph<T>,
    kind: CohesionKind,
    k: usize,
    size_cap: usize,
) -> Result<GraphMetricValue<T>> {
    if k == 0 {
        return Err(Error::InvalidParameter { name: "k", reason: "must be at least 1".into() });
    }
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.undirected_neighbors(v)).collect();
    let (id, nodes) = match kind {
        CohesionKind::KCore => ("k-core", k_core(g, k)),
        CohesionKind::KCliqueMax => {
            check_cap(n, size_cap)?;
            let c = max_clique(&adj);
            ("k-clique-max", if c.len() >= k { c } else { Vec::new() })
        }
        CohesionKind::KPlexMax => {
            check_cap(n, size_cap)?;
            ("k-plex-max", max_plex(&adj, k))
        }
        CohesionKind::KComponent => ("k-component", largest_k_component(&adj, k)),
    };
    GraphMetricValue::new(id, MetricValue::Nodes(nodes))
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::SizeCapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// Maximal k-core: nodes whose shell index is at least `k`.
pub fn k_core<T: Scalar>(g: &Graph<T>, k: usize) -> Vec<usize> {
    let (shell, _) = k_shell_values(g);
    (0..g.n()).filter(|&v| shell[v] >= k).collect()
}

fn adjacency_matrix(adj: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let n = adj.len();
    let mut m = vec![vec![false; n]; n];
    for (v, list) in adj.iter().enumerate() {
        for &u in list {
            m[v][u] = true;
        }
    }
    m
}

/// Maximum clique by branch and bound with greedy colouring bounds.
pub fn max_clique(adj: &[Vec<usize>]) -> Vec<usize> {
    let m = adjacency_matrix(adj);
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand_clique(&m, &mut current, order, &mut best);
    best.sort_unstable();
    best
}

fn colour_sort(m: &[Vec<bool>], p: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in p {
        match classes.iter_mut().find(|c| c.iter().all(|&u| !m[u][v])) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(p.len());
    let mut colours = Vec::with_capacity(p.len());
    for (i, class) in classes.into_iter().enumerate() {
        for v in class {
            order.push(v);
            colours.push(i + 1);
        }
    }
    (order, colours)
}

fn expand_clique(m: &[Vec<bool>], current: &mut Vec<usize>, p: Vec<usize>, best: &mut Vec<usize>) {
    let (order, colours) = colour_sort(m, &p);
    for i in (0..order.len()).rev() {
        if current.len() + colours[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let next: Vec<usize> = order[..i].iter().copied().filter(|&u| m[v][u]).collect();
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand_clique(m, current, next, best);
        }
        current.pop();
    }
}

/// Largest set in which every member is adjacent to at least `|S| - k` other members.
pub fn max_plex(adj: &[Vec<usize>], k: usize) -> Vec<usize> {
    let n = adj.len();
    let m = adjacency_matrix(adj);
    let mut best = max_clique(adj);
    // any k nodes form a k-plex
    if best.len() < k.min(n) {
        best = (0..k.min(n)).collect();
    }
    let mut search = PlexSearch { m: &m, adj, k, deg_in: vec![0; n], set: Vec::new(), best };
    let mut candidates: Vec<usize> = (0..n).collect();
    candidates.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
    search.grow(candidates);
    let mut best = search.best;
    best.sort_unstable();
    best
}

struct PlexSearch<'a> {
    m: &'a [Vec<bool>],
    adj: &'a [Vec<usize>],
    k: usize,
    /// neighbours of each node inside `set`
    deg_in: Vec<usize>,
    set: Vec<usize>,
    best: Vec<usize>,
}

impl PlexSearch<'_> {
    fn can_add(&self, v: usize) -> bool {
        let size = self.set.len() + 1;
        if self.deg_in[v] + self.k < size {
            return false;
        }
        self.set.iter().all(|&u| self.m[u][v] || self.deg_in[u] + self.k >= size)
    }

    fn grow(&mut self, candidates: Vec<usize>) {
        if self.set.len() > self.best.len() {
            self.best = self.set.clone();
        }
        for (i, &v) in candidates.iter().enumerate() {
            let target = self.best.len() + 1;
            if self.set.len() + candidates.len() - i < target {
                return;
            }
            // a member of a plex of size `target` needs `target - k` neighbours
            if self.adj[v].len() + self.k < target || !self.can_add(v) {
                continue;
            }
            self.set.push(v);
            for &u in &self.adj[v] {
                self.deg_in[u] += 1;
            }
            let rest: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&u| self.can_add(u)).collect();
            self.grow(rest);
            for &u in &self.adj[v] {
                self.deg_in[u] -= 1;
            }
            self.set.pop();
        }
    }
}

fn induced(adj: &[Vec<usize>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut pos = vec![usize::MAX; adj.len()];
    for (i, &v) in nodes.iter().enumerate() {
        pos[v] = i;
    }
    nodes.iter().map(|&v| adj[v].iter().filter(|&&u| pos[u] != usize::MAX).map(|&u| pos[u]).collect()).collect()
}

fn components_of(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Minimum s-t vertex separator of non-adjacent `s`, `t` via unit node capacities.
fn min_vertex_cut(adj: &[Vec<usize>], s: usize, t: usize) -> Vec<usize> {
    let n = adj.len();
    let big = (n + 1) as f64;
    let mut net = FlowNetwork::<f64>::new(2 * n);
    for v in 0..n {
        net.add_arc(2 * v, 2 * v + 1, if v == s || v == t { big } else { 1.0 });
        for &u in &adj[v] {
            net.add_arc(2 * v + 1, 2 * u, big);
        }
    }
    net.max_flow(2 * s + 1, 2 * t);
    let side = net.residual_reachable(2 * s + 1);
    (0..n).filter(|&v| side[2 * v] && !side[2 * v + 1]).collect()
}

/// A minimum vertex cut of a connected graph, or `None` when it is complete.
fn graph_min_cut(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let m = adjacency_matrix(adj);
    let v = (0..n).min_by_key(|&v| adj[v].len())?;
    let mut best: Option<Vec<usize>> = None;
    let mut consider = |a: usize, b: usize| {
        let cut = min_vertex_cut(adj, a, b);
        if best.as_ref().is_none_or(|c| cut.len() < c.len()) {
            best = Some(cut);
        }
    };
    for t in 0..n {
        if t != v && !m[v][t] {
            consider(v, t);
        }
    }
    let nb = &adj[v];
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if !m[x][y] {
                consider(x, y);
            }
        }
    }
    best
}

/// All maximal vertex sets of connectivity at least `k` (complete graphs on `k + 1` nodes included).
pub fn k_components(adj: &[Vec<usize>], k: usize) -> Vec<Vec<usize>> {
    let mut found: Vec<Vec<usize>> = Vec::new();
    split_components(adj, &(0..adj.len()).collect::<Vec<_>>(), k, &mut found);
    found.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut maximal: Vec<Vec<usize>> = Vec::new();
    for c in found {
        if !maximal.iter().any(|m| c.iter().all(|v| m.binary_search(v).is_ok())) {
            maximal.push(c);
        }
    }
    maximal
}

fn split_components(adj: &[Vec<usize>], nodes: &[usize], k: usize, found: &mut Vec<Vec<usize>>) {
    // members of a k-connected set have at least k neighbours inside it
    let sub = induced(adj, nodes);
    let mut keep = vec![true; nodes.len()];
    let mut deg: Vec<usize> = sub.iter().map(Vec::len).collect();
    let mut stack: Vec<usize> = (0..nodes.len()).filter(|&v| deg[v] < k).collect();
    stack.iter().for_each(|&v| keep[v] = false);
    while let Some(v) = stack.pop() {
        for &u in &sub[v] {
            if keep[u] {
                deg[u] -= 1;
                if deg[u] < k {
                    keep[u] = false;
                    stack.push(u);
                }
            }
        }
    }
    let core: Vec<usize> = (0..nodes.len()).filter(|&v| keep[v]).map(|v| nodes[v]).collect();
    let core_adj = induced(adj, &core);
    for comp in components_of(&core_adj) {
        if comp.len() <= k {
            continue;
        }
        let members: Vec<usize> = comp.iter().map(|&i| core[i]).collect();
        let comp_adj = induced(adj, &members);
        match graph_min_cut(&comp_adj) {
            Some(cut) if cut.len() < k => {
                let mut removed = vec![false; members.len()];
                cut.iter().for_each(|&c| removed[c] = true);
                let rest: Vec<usize> = (0..members.len()).filter(|&i| !removed[i]).collect();
                let rest_adj = induced(&comp_adj, &rest);
                for part in components_of(&rest_adj) {
                    let mut next: Vec<usize> = part.iter().map(|&i| members[rest[i]]).collect();
                    next.extend(cut.iter().map(|&c| members[c]));
                    next.sort_unstable();
                    split_components(adj, &next, k, found);
                }
            }
            _ => found.push(members),
        }
    }
}

fn largest_k_component(adj: &[Vec<usize>], k: usize) -> Vec<usize> {
    k_components(adj, k).into_iter().next().unwrap_or_default()
}
