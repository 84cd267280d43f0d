//! Greedy seed-set selection that spreads seeds apart instead of taking the top-K ranked nodes.
//!
//! All strategies work on the undirected neighbour structure (direction ignored) and break
//! ties by lowest node id.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    Budget,
    StoppingRule,
    /// Every remaining candidate was excluded before the budget was reached.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionStep<T> {
    pub node: usize,
    pub score: T,
    /// Candidates rejected by the strategy's exclusion rule since the previous pick.
    pub excluded: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionResult<T> {
    pub seeds: Vec<usize>,
    pub per_step: Vec<SelectionStep<T>>,
    pub stop_reason: StopReason,
}

impl<T> SelectionResult<T> {
    fn new() -> Self {
        Self { seeds: Vec::new(), per_step: Vec::new(), stop_reason: StopReason::Budget }
    }

    fn push(&mut self, node: usize, score: T, excluded: usize) {
        self.seeds.push(node);
        self.per_step.push(SelectionStep { node, score, excluded });
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GroupSelectParams {
    pub budget: usize,
    /// Minimum hop distance between seeds (degree distance).
    pub t_td: usize,
    /// Common-neighbour threshold (FIDD).
    pub theta: f64,
    /// Influence threshold (SIDD).
    pub beta_inf: f64,
    /// Activation probability (degree discount, SIDD).
    pub p: f64,
    /// Weaken factor of degree punishment.
    pub omega: f64,
    /// Punishment radius.
    pub r: usize,
    /// Collective-influence ball radius.
    pub ell: usize,
    /// Enables the collective-influence stopping rule; lambda is re-checked each time the
    /// removed fraction has grown by at least this much (0 checks every step).
    pub q_stop: Option<f64>,
}

impl Default for GroupSelectParams {
    fn default() -> Self {
        Self { budget: 10, t_td: 2, theta: 3.0, beta_inf: 0.05, p: 0.01, omega: 0.1, r: 2, ell: 2, q_stop: None }
    }
}

fn bad(name: &'static str, reason: &str) -> Error {
    Error::InvalidParameter { name, reason: reason.to_string() }
}

impl GroupSelectParams {
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.budget == 0 {
            return Err(bad("budget", "must be at least 1"));
        }
        if self.budget > n {
            return Err(bad("budget", "exceeds the node count"));
        }
        if !(self.theta >= 0.0 && self.theta.is_finite()) {
            return Err(bad("theta", "must be a non-negative number"));
        }
        if !(self.beta_inf >= 0.0 && self.beta_inf.is_finite()) {
            return Err(bad("beta_inf", "must be a non-negative number"));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(bad("p", "must lie in [0, 1]"));
        }
        if !(0.0..=1.0).contains(&self.omega) {
            return Err(bad("omega", "must lie in [0, 1]"));
        }
        if self.r < 2 {
            return Err(bad("r", "must be at least 2"));
        }
        if self.ell < 1 {
            return Err(bad("ell", "must be at least 1"));
        }
        if let Some(q) = self.q_stop {
            if !(0.0..=1.0).contains(&q) {
                return Err(bad("q_stop", "must lie in [0, 1]"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceVariant {
    Plain,
    Fidd,
    Sidd,
}

/// Sorted undirected neighbour lists used by every strategy.
pub fn adjacency<T: Scalar>(g: &Graph<T>) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.undirected_neighbors(v)).collect()
}

/// Nodes in id order sorted by degree descending.
fn by_degree(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by(|&a, &b| adj[b].len().cmp(&adj[a].len()).then(a.cmp(&b)));
    order
}

/// Nodes within `depth` hops of `s` with their distances, restricted to `alive` nodes.
fn bfs(adj: &[Vec<usize>], s: usize, depth: usize, alive: Option<&[bool]>) -> Vec<(usize, usize)> {
    let mut seen = vec![false; adj.len()];
    let mut out = vec![(s, 0)];
    seen[s] = true;
    let mut queue = VecDeque::from([(s, 0usize)]);
    while let Some((v, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        for &u in &adj[v] {
            if !seen[u] && alive.is_none_or(|a| a[u]) {
                seen[u] = true;
                out.push((u, d + 1));
                queue.push_back((u, d + 1));
            }
        }
    }
    out
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Greedy max-degree selection keeping seeds at least `t_td` hops apart, with the FIDD and
/// SIDD relaxations for nodes inside the threshold.
pub fn degree_distance<T: Scalar>(
    g: &Graph<T>,
    params: &GroupSelectParams,
    variant: DistanceVariant,
) -> Result<SelectionResult<T>> {
    params.validate(g.n())?;
    let adj = adjacency(g);
    let mut second: Vec<Option<Vec<usize>>> = vec![None; g.n()];
    let mut ring2 = |v: usize| -> Vec<usize> {
        second[v]
            .get_or_insert_with(|| {
                let mut r: Vec<usize> =
                    bfs(&adj, v, 2, None).into_iter().filter(|&(_, d)| d == 2).map(|(u, _)| u).collect();
                r.sort_unstable();
                r
            })
            .clone()
    };
    let mut res = SelectionResult::new();
    let mut excluded = 0;
    // For every node, the seeds closer than the threshold.
    let mut close: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for v in by_degree(&adj) {
        if res.seeds.len() == params.budget {
            return Ok(res);
        }
        let admitted = close[v].is_empty()
            || match variant {
                DistanceVariant::Plain => false,
                DistanceVariant::Fidd | DistanceVariant::Sidd => {
                    let rv = ring2(v);
                    let pooled: usize = close[v]
                        .iter()
                        .map(|&w| sorted_intersection(&adj[v], &adj[w]) + sorted_intersection(&rv, &ring2(w)))
                        .sum();
                    (pooled as f64) < params.theta
                        && (variant == DistanceVariant::Fidd
                            || close[v].iter().all(|&w| influence(&adj, v, w, params.p) <= params.beta_inf))
                }
            };
        if !admitted {
            excluded += 1;
            continue;
        }
        res.push(v, T::of_usize(adj[v].len()), excluded);
        excluded = 0;
        if params.t_td > 0 {
            for (u, _) in bfs(&adj, v, params.t_td - 1, None) {
                close[u].push(v);
            }
        }
    }
    if res.seeds.len() < params.budget {
        res.stop_reason = StopReason::Exhausted;
    }
    Ok(res)
}

/// Two-hop activation estimate with uniform edge probability `p`.
pub fn influence(adj: &[Vec<usize>], u: usize, v: usize, p: f64) -> f64 {
    let direct = if adj[u].binary_search(&v).is_ok() { p } else { 0.0 };
    direct + sorted_intersection(&adj[u], &adj[v]) as f64 * p * p
}

/// Picks the argmax of `score` over unselected nodes, lowest id on ties.
fn argmax<F: Fn(usize) -> f64>(chosen: &[bool], score: F) -> Option<(usize, f64)> {
    let mut best: Option<(usize, f64)> = None;
    for v in (0..chosen.len()).filter(|&v| !chosen[v]) {
        let s = score(v);
        if best.is_none_or(|(_, b)| s > b) {
            best = Some((v, s));
        }
    }
    best
}

/// Degree minus the number of links into the seed set.
pub fn single_discount<T: Scalar>(g: &Graph<T>, budget: usize) -> Result<SelectionResult<T>> {
    let params = GroupSelectParams { budget, ..Default::default() };
    params.validate(g.n())?;
    discount_loop(g, budget, |d, t| (d - t) as f64)
}

/// Degree discount heuristic `d - 2t - (d - t) t p`.
pub fn degree_discount<T: Scalar>(g: &Graph<T>, budget: usize, p: f64) -> Result<SelectionResult<T>> {
    let params = GroupSelectParams { budget, p, ..Default::default() };
    params.validate(g.n())?;
    discount_loop(g, budget, |d, t| degree_discount_score(d, t, p))
}

pub fn degree_discount_score(d: usize, t: usize, p: f64) -> f64 {
    let (d, t) = (d as f64, t as f64);
    d - 2.0 * t - (d - t) * t * p
}

fn discount_loop<T: Scalar, F: Fn(usize, usize) -> f64>(
    g: &Graph<T>,
    budget: usize,
    score: F,
) -> Result<SelectionResult<T>> {
    let adj = adjacency(g);
    let mut chosen = vec![false; g.n()];
    let mut links = vec![0usize; g.n()];
    let mut res = SelectionResult::new();
    while res.seeds.len() < budget {
        let Some((v, s)) = argmax(&chosen, |v| score(adj[v].len(), links[v])) else { break };
        chosen[v] = true;
        for &u in &adj[v] {
            links[u] += 1;
        }
        res.push(v, T::of(s), 0);
    }
    Ok(res)
}

/// Degree minus the walk-weighted punishment received from every seed.
pub fn degree_punishment<T: Scalar>(g: &Graph<T>, budget: usize, omega: f64, r: usize) -> Result<SelectionResult<T>> {
    let params = GroupSelectParams { budget, omega, r, ..Default::default() };
    params.validate(g.n())?;
    let adj = adjacency(g);
    let n = g.n();
    let mut chosen = vec![false; n];
    let mut penalty = vec![0.0f64; n];
    let mut res = SelectionResult::new();
    while res.seeds.len() < budget {
        let Some((u, s)) = argmax(&chosen, |v| adj[v].len() as f64 - penalty[v]) else { break };
        chosen[u] = true;
        res.push(u, T::of(s), 0);
        for (v, p) in punishment_row(&adj, u, omega, r).into_iter().enumerate() {
            penalty[v] += p;
        }
    }
    Ok(res)
}

/// Punished degree of every node given the seed set.
pub fn punishment_scores(adj: &[Vec<usize>], seeds: &[usize], omega: f64, r: usize) -> Vec<f64> {
    let mut scores: Vec<f64> = adj.iter().map(|a| a.len() as f64).collect();
    for &u in seeds {
        for (s, p) in scores.iter_mut().zip(punishment_row(adj, u, omega, r)) {
            *s -= p;
        }
    }
    scores
}

/// `deg(u) * sum_{h=1}^{r-1} (A^h)_{uv} omega^h` for every `v`, by repeated sparse products.
pub fn punishment_row(adj: &[Vec<usize>], u: usize, omega: f64, r: usize) -> Vec<f64> {
    let n = adj.len();
    let mut walks = vec![0.0f64; n];
    walks[u] = 1.0;
    let mut row = vec![0.0f64; n];
    let mut weight = 1.0;
    for _ in 1..r {
        let mut next = vec![0.0f64; n];
        for (x, &c) in walks.iter().enumerate().filter(|(_, c)| **c != 0.0) {
            for &y in &adj[x] {
                next[y] += c;
            }
        }
        weight *= omega;
        for (acc, &c) in row.iter_mut().zip(&next) {
            *acc += c * weight;
        }
        walks = next;
    }
    let du = adj[u].len() as f64;
    row.iter_mut().for_each(|x| *x *= du);
    row
}

/// Collective influence of `v` on the residual graph given by `alive` and residual degrees.
pub fn ci_score(adj: &[Vec<usize>], alive: &[bool], deg: &[usize], v: usize, ell: usize) -> i64 {
    let frontier: i64 =
        bfs(adj, v, ell, Some(alive)).into_iter().filter(|&(_, d)| d == ell).map(|(u, _)| deg[u] as i64 - 1).sum();
    (deg[v] as i64 - 1) * frontier
}

/// Lambda estimate `(sum CI / (n <k>))^(1/(ell+1))` with `n` and `<k>` from the original graph.
pub fn ci_lambda(total_ci: i64, n: usize, mean_degree: f64, ell: usize) -> f64 {
    let ratio = total_ci.max(0) as f64 / (n as f64 * mean_degree);
    ratio.powf(1.0 / (ell as f64 + 1.0))
}

/// Repeatedly removes the node of highest collective influence on the residual graph.
pub fn collective_influence<T: Scalar>(g: &Graph<T>, params: &GroupSelectParams) -> Result<SelectionResult<T>> {
    params.validate(g.n())?;
    let adj = adjacency(g);
    let n = g.n();
    let ell = params.ell;
    let mean_degree = adj.iter().map(Vec::len).sum::<usize>() as f64 / n as f64;
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut ci: Vec<i64> = (0..n).map(|v| ci_score(&adj, &alive, &deg, v, ell)).collect();
    let mut res = SelectionResult::new();
    let mut last_check: Option<usize> = None;
    while res.seeds.len() < params.budget {
        if let Some(q) = params.q_stop {
            let removed = res.seeds.len();
            let due = last_check.is_none_or(|c| (removed - c) as f64 >= q * n as f64);
            if due && mean_degree > 0.0 {
                last_check = Some(removed);
                let total: i64 = (0..n).filter(|&v| alive[v]).map(|v| ci[v]).sum();
                if ci_lambda(total, n, mean_degree, ell) <= 1.0 {
                    res.stop_reason = StopReason::StoppingRule;
                    return Ok(res);
                }
            }
        }
        let dead: Vec<bool> = alive.iter().map(|a| !a).collect();
        let Some((v, s)) = argmax(&dead, |v| ci[v] as f64) else { break };
        res.push(v, T::of(s), 0);
        // Scores can change only within ell + 1 hops of the removed node.
        let touched = bfs(&adj, v, ell + 1, Some(&alive));
        alive[v] = false;
        for &u in &adj[v] {
            if alive[u] {
                deg[u] -= 1;
            }
        }
        deg[v] = 0;
        for (u, _) in touched.into_iter().skip(1) {
            ci[u] = ci_score(&adj, &alive, &deg, u, ell);
        }
        ci[v] = 0;
    }
    Ok(res)
}
