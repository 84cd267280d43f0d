use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::paths::{hop_distances, Direction};
use crate::graph::Graph;
use crate::iterative::decomposition::k_shell_values;
use crate::linalg::{normalize_sum, power_iteration};
use crate::params::MetricParams;
use crate::scalar::Scalar;
use crate::score::ScoreVector;

use super::{betweenness, closeness};

/// Shell index and distance-to-core `theta(v) = (k_max - k_s + 1) * sum_{u in core} d(v, u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImprovedMethod<T> {
    pub shell: Vec<usize>,
    pub theta: Vec<T>,
    /// (node, core member) pairs left out of theta because the member is unreachable.
    pub skipped_pairs: u64,
}

impl<T: Scalar> ImprovedMethod<T> {
    /// Shell descending, then theta ascending, then id ascending.
    pub fn ranking(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.shell.len()).collect();
        idx.sort_by(|&a, &b| {
            self.shell[b]
                .cmp(&self.shell[a])
                .then(self.theta[a].partial_cmp(&self.theta[b]).unwrap_or(std::cmp::Ordering::Equal))
                .then(a.cmp(&b))
        });
        idx
    }

    /// Scalar score `k_s + 0.5 / (1 + theta)` whose descending order follows [`Self::ranking`].
    pub fn scores(&self, params: &MetricParams) -> Result<ScoreVector<T>> {
        let half = T::of(0.5);
        let values =
            self.shell.iter().zip(&self.theta).map(|(&k, &t)| T::of_usize(k) + half / (T::one() + t)).collect();
        Ok(ScoreVector::new("improved-method", values, params)?.skipped(self.skipped_pairs))
    }
}

pub fn improved_method<T: Scalar>(g: &Graph<T>) -> ImprovedMethod<T> {
    let n = g.n();
    let (shell, _) = k_shell_values(g);
    let k_max = shell.iter().copied().max().unwrap_or(0);
    let core: Vec<usize> = (0..n).filter(|&v| shell[v] == k_max).collect();
    let rows: Vec<(T, u64)> = (0..n)
        .into_par_iter()
        .map(|v| {
            let d = hop_distances(g, v, Direction::Out);
            let mut sum = 0usize;
            let mut missed = 0u64;
            for &u in &core {
                if d[u] == usize::MAX {
                    missed += 1;
                } else {
                    sum += d[u];
                }
            }
            (T::of_usize((k_max - shell[v] + 1) * sum), missed)
        })
        .collect();
    ImprovedMethod { theta: rows.iter().map(|r| r.0).collect(), skipped_pairs: rows.iter().map(|r| r.1).sum(), shell }
}

/// `k^(1 - alpha) * s^alpha` with degree `k` and strength `s`.
pub fn gdsp_degree<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let a = T::of(params.alpha);
    let values = (0..g.n()).map(|v| T::of_usize(g.degree(v)).powf(T::one() - a) * g.strength(v).powf(a)).collect();
    ScoreVector::new("gdsp-degree", values, params)
}

fn gdsp_graph<T: Scalar>(g: &Graph<T>, alpha: f64) -> Result<Graph<T>> {
    let a = T::of(alpha);
    g.map_weights(|w| T::one() / w.powf(a))
}

/// Closeness on edge lengths `1 / w^alpha`.
pub fn gdsp_closeness<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let c = closeness(&gdsp_graph(g, params.alpha)?, params)?;
    Ok(ScoreVector::new("gdsp-closeness", c.values, params)?.skipped(c.skipped_pairs))
}

/// Betweenness on edge lengths `1 / w^alpha`.
pub fn gdsp_betweenness<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let b = betweenness(&gdsp_graph(g, params.alpha)?, params)?;
    ScoreVector::new("gdsp-betweenness", b.values, params)
}

/// `phi_v + sum_{u in N(v)} (w_uv / <w>) phi_u` with `w_uv = (k_u k_v)^alpha` for a given benchmark `phi`.
pub fn weight_neighborhood_with<T: Scalar>(g: &Graph<T>, phi: &[T], params: &MetricParams) -> Result<ScoreVector<T>> {
    crate::params::check_prob("alpha", params.alpha)?;
    let n = g.n();
    if phi.len() != n {
        return Err(Error::InvalidParameter { name: "benchmark", reason: format!("expected {n} scores") });
    }
    let a = T::of(params.alpha);
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.undirected_neighbors(v)).collect();
    let k: Vec<T> = nbrs.iter().map(|x| T::of_usize(x.len())).collect();
    let weight = |u: usize, v: usize| (k[u] * k[v]).powf(a);
    let mut total = T::zero();
    let mut edges = 0usize;
    for (v, list) in nbrs.iter().enumerate() {
        for &u in list.iter().filter(|&&u| u > v) {
            total += weight(u, v);
            edges += 1;
        }
    }
    let mean = if edges > 0 { total / T::of_usize(edges) } else { T::one() };
    let values = (0..n).map(|v| phi[v] + nbrs[v].iter().map(|&u| weight(u, v) / mean * phi[u]).sum::<T>()).collect();
    ScoreVector::new("weight-neighborhood", values, params)
}

/// Weight neighbourhood centrality with benchmark `degree`, `betweenness` or `k-shell`.
pub fn weight_neighborhood<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let phi: Vec<T> = match params.benchmark.as_str() {
        "degree" => g.degrees().into_iter().map(T::of_usize).collect(),
        "betweenness" => betweenness(g, params)?.values,
        "k-shell" => k_shell_values(g).0.into_iter().map(T::of_usize).collect(),
        other => {
            return Err(Error::UnknownId {
                kind: "benchmark",
                id: other.into(),
                valid: "degree, betweenness, k-shell".into(),
            })
        }
    };
    weight_neighborhood_with(g, &phi, params)
}

/// Mean fraction of nodes infected after `si_steps` rounds of an SI cascade seeded at each node.
///
/// Replicate `r` draws from seed `rng_seed + r` on the stream of the seeded node.
pub fn si_spread<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Vec<T> {
    let n = g.n();
    (0..n)
        .into_par_iter()
        .map(|seed| {
            let mut infected_total = 0usize;
            let mut infected = vec![false; n];
            for r in 0..params.si_runs {
                let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed.wrapping_add(r as u64));
                rng.set_stream(seed as u64);
                infected.iter_mut().for_each(|x| *x = false);
                infected[seed] = true;
                let mut active = vec![seed];
                for _ in 0..params.si_steps {
                    let mut fresh = Vec::new();
                    for &u in &active {
                        for &(w, _) in g.out_edges(u) {
                            if !infected[w] && rng.gen::<f64>() < params.si_beta {
                                infected[w] = true;
                                fresh.push(w);
                            }
                        }
                    }
                    active.extend(fresh);
                    active.sort_unstable();
                }
                infected_total += active.len();
            }
            T::of_usize(infected_total) / T::of_usize(params.si_runs * n)
        })
        .collect()
}

/// AHP combination of degree, betweenness and closeness weighted by agreement with SI spreading.
pub fn ahp<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let n = g.n();
    if n == 0 {
        return ScoreVector::new("ahp", Vec::new(), params);
    }
    let columns: [(&'static str, Vec<T>); 4] = [
        ("degree", g.degrees().into_iter().map(T::of_usize).collect()),
        ("betweenness", betweenness(g, params)?.values),
        ("closeness", closeness(g, params)?.values),
        ("si", si_spread(g, params)),
    ];
    let mut r: Vec<Vec<T>> = Vec::with_capacity(4);
    for (name, col) in &columns {
        let total: T = col.iter().copied().sum();
        if total <= T::zero() {
            return Err(Error::DegenerateAttribute { name });
        }
        r.push(col.iter().map(|&x| x / total).collect());
    }
    let floor = T::of(1e-12);
    let e: Vec<T> = (0..3).map(|j| (0..n).map(|i| T::one() / (r[j][i] - r[3][i]).abs().max(floor)).sum()).collect();
    let e_total: T = e.iter().copied().sum();
    let mut score = vec![T::zero(); n];
    for (j, (_, col)) in columns.iter().take(3).enumerate() {
        let d: Vec<T> = col.iter().map(|&x| x.max(floor)).collect();
        // B_ik = d_i / d_k applied without forming the matrix
        let op = |x: &[T], y: &mut [T]| {
            let s: T = x.iter().zip(&d).map(|(&xk, &dk)| xk / dk).sum();
            for (yi, &di) in y.iter_mut().zip(&d) {
                *yi = di * s;
            }
        };
        let mut s = power_iteration(n, op, None, T::of(params.tol), params.max_iter)?.vector;
        normalize_sum(&mut s);
        let w = e[j] / e_total;
        for (acc, si) in score.iter_mut().zip(s) {
            *acc += w * si;
        }
    }
    ScoreVector::new("ahp", score, params)
}
