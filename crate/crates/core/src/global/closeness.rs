use crate::error::{Error, Result};
use crate::graph::paths::shortest_paths;
use crate::graph::Graph;
use crate::params::MetricParams;
use crate::scalar::Scalar;
use crate::score::ScoreVector;

/// Per node: finite out-distances to the other nodes it reaches, and how many it misses.
fn reach<T: Scalar>(g: &Graph<T>, v: usize) -> Result<(Vec<(usize, T)>, u64)> {
    let sp = shortest_paths(g, v, None)?;
    let found: Vec<(usize, T)> = sp.order.iter().filter(|&&u| u != v).map(|&u| (u, sp.dist[u])).collect();
    let missed = (g.n() - 1 - found.len()) as u64;
    Ok((found, missed))
}

fn per_node<T: Scalar>(g: &Graph<T>, f: impl Fn(usize, &[(usize, T)]) -> T + Sync) -> Result<(Vec<T>, u64)> {
    use rayon::prelude::*;
    let rows: Vec<Result<(T, u64)>> = (0..g.n())
        .into_par_iter()
        .map(|v| {
            let (found, missed) = reach(g, v)?;
            Ok((f(v, &found), missed))
        })
        .collect();
    let mut values = Vec::with_capacity(g.n());
    let mut skipped = 0;
    for row in rows {
        let (x, missed) = row?;
        values.push(x);
        skipped += missed;
    }
    Ok((values, skipped))
}

fn closeness_values<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<(Vec<T>, u64)> {
    let n = g.n();
    per_node(g, |_, found| {
        if found.is_empty() {
            return T::zero();
        }
        let farness: T = found.iter().map(|e| e.1).sum();
        let c = T::one() / farness;
        if params.reachable_scaling {
            c * T::of_usize(found.len()) / T::of_usize(n - 1)
        } else {
            c
        }
    })
}

/// `1 / sum_u d(v, u)` over the nodes `v` reaches; 0 when it reaches none.
///
/// `reachable_scaling` multiplies by the reached fraction `r / (n - 1)`.
pub fn closeness<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let (values, skipped) = closeness_values(g, params)?;
    Ok(ScoreVector::new("closeness", values, params)?.skipped(skipped))
}

/// Closeness divided by the closeness total.
pub fn bavelas<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let (mut values, skipped) = closeness_values(g, params)?;
    let total: T = values.iter().copied().sum();
    if total > T::zero() {
        values.iter_mut().for_each(|x| *x /= total);
    }
    Ok(ScoreVector::new("bavelas", values, params)?.skipped(skipped))
}

fn decay_values<T: Scalar>(g: &Graph<T>, base: T) -> Result<(Vec<T>, u64)> {
    per_node(g, |_, found| found.iter().map(|&(_, d)| base.powf(d)).sum())
}

/// `sum_u (1/2)^d(v, u)` over reached nodes.
pub fn residual<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let (values, skipped) = decay_values(g, T::of(0.5))?;
    Ok(ScoreVector::new("residual", values, params)?.skipped(skipped))
}

/// `sum_u delta^d(v, u)` over reached nodes with `delta = delta_decay`.
pub fn decay<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let (values, skipped) = decay_values(g, T::of(params.delta_decay))?;
    Ok(ScoreVector::new("decay", values, params)?.skipped(skipped))
}

/// `1 / max_u d(v, u)` over reached nodes; 0 when none.
pub fn eccentricity<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let (values, skipped) = per_node(g, |_, found| {
        let ecc = found.iter().fold(T::zero(), |m, e| m.max(e.1));
        if ecc > T::zero() {
            T::one() / ecc
        } else {
            T::zero()
        }
    })?;
    Ok(ScoreVector::new("eccentricity", values, params)?.skipped(skipped))
}

/// Mean of Euclidean over graph distance across reached nodes.
pub fn straightness<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let coords = g.coordinates().ok_or(Error::MissingCoordinates { metric: "straightness" })?;
    let (values, skipped) = per_node(g, |v, found| {
        if found.is_empty() {
            return T::zero();
        }
        let [x, y] = coords[v];
        let ratio: T = found
            .iter()
            .map(|&(u, d)| {
                let [a, b] = coords[u];
                (x - a).hypot(y - b) / d
            })
            .sum();
        ratio / T::of_usize(found.len())
    })?;
    Ok(ScoreVector::new("straightness", values, params)?.skipped(skipped))
}
