use crate::error::{Error, Result};
use crate::graph::paths::{shortest_paths, shortest_paths_dir, Direction, ShortestPaths};
use crate::graph::Graph;
use crate::params::MetricParams;
use crate::scalar::Scalar;
use crate::score::ScoreVector;

use super::accumulate;

fn count<T: Scalar>(sigma: u128) -> T {
    T::from_u128(sigma).expect("path count conversion")
}

/// Pair dependencies `delta_s(v) = sum_t sigma_st(v) / sigma_st` over the search DAG; `delta[s]` is left 0.
pub(crate) fn dependencies<T: Scalar>(sp: &ShortestPaths<T>, delta: &mut [T]) {
    for &v in &sp.order {
        delta[v] = T::zero();
    }
    for &w in sp.order.iter().rev() {
        let coeff = (T::one() + delta[w]) / count::<T>(sp.sigma[w]);
        for &v in &sp.preds[w] {
            delta[v] += count::<T>(sp.sigma[v]) * coeff;
        }
    }
    delta[sp.source] = T::zero();
}

fn pair_divisor<T: Scalar>(g: &Graph<T>) -> Option<T> {
    let n = g.n();
    if n <= 2 {
        return None;
    }
    let pairs = T::of_usize((n - 1) * (n - 2));
    Some(if g.is_directed() { pairs } else { pairs / T::of_usize(2) })
}

fn brandes<T: Scalar>(g: &Graph<T>, cap: Option<T>, normalized: bool) -> Result<Vec<T>> {
    let n = g.n();
    let mut total = accumulate(n, n, |s, acc: &mut [T]| {
        let sp = shortest_paths(g, s, cap)?;
        let mut delta = vec![T::zero(); n];
        dependencies(&sp, &mut delta);
        for &v in &sp.order {
            acc[v] += delta[v];
        }
        Ok(())
    })?;
    if !g.is_directed() {
        let two = T::of_usize(2);
        total.iter_mut().for_each(|x| *x /= two);
    }
    if normalized {
        if let Some(d) = pair_divisor(g) {
            total.iter_mut().for_each(|x| *x /= d);
        }
    }
    Ok(total)
}

/// Shortest-path betweenness; unordered pairs on undirected graphs, ordered pairs on directed ones.
pub fn betweenness<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    ScoreVector::new("betweenness", brandes(g, None, params.normalized)?, params)
}

/// Betweenness restricted to pairs at distance at most `L`; `L = None` is plain betweenness.
pub fn l_betweenness<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let cap = params.l.map(T::of_usize);
    ScoreVector::new("l-betweenness", brandes(g, cap, params.normalized)?, params)
}

/// Source dependencies weighted by `x_r / (sum x - x_v)`, prefactor `1 / (n - 2)`.
///
/// Uses `percolation_states`, or all-ones states when none are given.
pub fn percolation<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let n = g.n();
    let x: Vec<T> = match &params.percolation_states {
        Some(states) if states.len() != n => {
            return Err(Error::InvalidParameter {
                name: "percolation_states",
                reason: format!("expected {n} entries, got {}", states.len()),
            })
        }
        Some(states) => states.iter().map(|&v| T::of(v)).collect(),
        None => vec![T::one(); n],
    };
    if x.iter().all(|&v| v <= T::zero()) {
        return Err(Error::DegenerateAttribute { name: "percolation_states" });
    }
    if n <= 2 {
        return ScoreVector::new("percolation", vec![T::zero(); n], params);
    }
    let total: T = x.iter().copied().sum();
    let mut values = accumulate(n, n, |r, acc: &mut [T]| {
        if x[r] <= T::zero() {
            return Ok(());
        }
        let sp = shortest_paths(g, r, None)?;
        let mut delta = vec![T::zero(); n];
        dependencies(&sp, &mut delta);
        for &v in &sp.order {
            let denom = total - x[v];
            if v != r && denom > T::zero() {
                acc[v] += delta[v] * x[r] / denom;
            }
        }
        Ok(())
    })?;
    let pre = T::of_usize(n - 2);
    values.iter_mut().for_each(|v| *v /= pre);
    ScoreVector::new("percolation", values, params)
}

/// Unit packets from every node to every target, split evenly among next hops; ordered pairs.
pub fn load<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let n = g.n();
    let mut values = accumulate(n, n, |t, acc: &mut [T]| {
        // preds[u] in the reversed search are u's next hops toward t
        let sp = shortest_paths_dir(g, t, None, Direction::In)?;
        let mut packets = vec![T::zero(); n];
        for &u in &sp.order {
            packets[u] = T::one();
        }
        for &u in sp.order.iter().rev() {
            if u == t {
                continue;
            }
            let share = packets[u] / T::of_usize(sp.preds[u].len());
            for &p in &sp.preds[u] {
                packets[p] += share;
            }
            acc[u] += packets[u] - T::one();
        }
        Ok(())
    })?;
    if params.normalized && n > 2 {
        let d = T::of_usize((n - 1) * (n - 2));
        values.iter_mut().for_each(|v| *v /= d);
    }
    ScoreVector::new("load", values, params)
}
