use crate::error::{Error, Result};
use crate::graph::components::{components, Connectivity};
use crate::graph::flow::flow_network;
use crate::graph::paths::{hop_distances, Direction};
use crate::graph::Graph;
use crate::linalg::{check_dense_cap, invert, DenseMatrix};
use crate::params::MetricParams;
use crate::scalar::Scalar;
use crate::score::ScoreVector;

use super::accumulate;

/// Sum of max-flow throughflow `m_st(v)` over source-sink pairs excluding `v`.
///
/// Unordered pairs on undirected graphs, ordered pairs on directed ones. `normalized` divides each term
/// by `m_st`; `flow_hops` keeps only pairs within `h` hops.
pub fn flow_betweenness<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let n = g.n();
    let base = flow_network(g);
    let values = accumulate(n, n, |s, acc: &mut [T]| {
        let hops = params.flow_hops.then(|| hop_distances(g, s, Direction::Out));
        let mut net = base.clone();
        let first = if g.is_directed() { 0 } else { s + 1 };
        for t in first..n {
            if t == s || hops.as_ref().is_some_and(|h| h[t] > params.h) {
                continue;
            }
            net.reset();
            let value = net.max_flow(s, t);
            if value <= T::zero() {
                continue;
            }
            let scale = if params.normalized { T::one() / value } else { T::one() };
            for (v, f) in net.inflow().into_iter().enumerate() {
                if v != s && v != t && f > T::zero() {
                    acc[v] += f * scale;
                }
            }
        }
        Ok(())
    })?;
    ScoreVector::new("flow-betweenness", values, params)
}

fn require_connected_undirected<T: Scalar>(g: &Graph<T>, metric: &'static str) -> Result<()> {
    if g.is_directed() {
        return Err(Error::UndirectedRequired { metric });
    }
    if g.n() > 0 && components(g, Connectivity::Weak).count() > 1 {
        return Err(Error::Disconnected { metric });
    }
    Ok(())
}

/// Inverse of the Laplacian with the last row and column removed, padded back to `n x n` with zeros.
fn grounded_inverse<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<DenseMatrix<T>> {
    let n = g.n();
    check_dense_cap(n, params.dense_cap)?;
    let k = n - 1;
    let mut lap = DenseMatrix::zeros(k);
    for (u, v, w) in g.edges() {
        if u < k {
            lap[(u, u)] += w;
        }
        if v < k {
            lap[(v, v)] += w;
        }
        if u < k && v < k {
            lap[(u, v)] -= w;
            lap[(v, u)] -= w;
        }
    }
    let inv = invert(&lap)?;
    let mut out = DenseMatrix::zeros(n);
    for i in 0..k {
        for j in 0..k {
            out[(i, j)] = inv[(i, j)];
        }
    }
    Ok(out)
}

/// Electrical current through each node over ordered source-sink pairs, prefactor `1 / ((n-1)(n-2))`.
///
/// Per edge the pair currents are differences of one potential column, so the sum of absolute
/// currents over all pairs comes from a single sort.
pub fn current_flow_betweenness<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    require_connected_undirected(g, "current-flow-betweenness")?;
    let n = g.n();
    if n <= 2 {
        return ScoreVector::new("current-flow-betweenness", vec![T::zero(); n], params);
    }
    let c = grounded_inverse(g, params)?;
    let mut through = vec![T::zero(); n];
    let mut f = vec![T::zero(); n];
    for (u, v, w) in g.edges() {
        for (x, fx) in f.iter_mut().enumerate() {
            *fx = c[(u, x)] - c[(v, x)];
        }
        f.sort_by(|a, b| a.partial_cmp(b).expect("finite potentials"));
        let mut unordered = T::zero();
        for (i, &fx) in f.iter().enumerate() {
            unordered += fx * (T::of_usize(2 * i) - T::of_usize(n - 1));
        }
        // half of the ordered-pair total lands on each endpoint
        let share = w * unordered;
        through[u] += share;
        through[v] += share;
    }
    let endpoint = T::of_usize(n - 1);
    let pre = T::of_usize((n - 1) * (n - 2));
    let values = through.into_iter().map(|x| ((x - endpoint) / pre).max(T::zero())).collect();
    ScoreVector::new("current-flow-betweenness", values, params)
}

/// `n / sum_w (p_vw(v) - p_vw(w))`, the potential drop of a unit current from `v` to `w`.
pub fn current_flow_closeness<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    require_connected_undirected(g, "current-flow-closeness")?;
    let n = g.n();
    if n <= 1 {
        return ScoreVector::new("current-flow-closeness", vec![T::zero(); n], params);
    }
    let c = grounded_inverse(g, params)?;
    let values = (0..n)
        .map(|v| {
            let drop: T = (0..n).filter(|&w| w != v).map(|w| c[(v, v)] + c[(w, w)] - c[(v, w)] - c[(w, v)]).sum();
            T::of_usize(n) / drop
        })
        .collect();
    ScoreVector::new("current-flow-closeness", values, params)
}

/// Random-walk betweenness over unordered pairs with `I_s = I_t = 1`, divided by `n(n-1)/2`.
pub fn random_walk_betweenness<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    require_connected_undirected(g, "random-walk-betweenness")?;
    let n = g.n();
    if n <= 1 {
        return ScoreVector::new("random-walk-betweenness", vec![T::zero(); n], params);
    }
    let t = grounded_inverse(g, params)?;
    let edges: Vec<(usize, usize, T)> = g.edges().collect();
    let half = T::of(0.5);
    let mut values = accumulate(n, n, |s, acc: &mut [T]| {
        let mut pot = vec![T::zero(); n];
        let mut current = vec![T::zero(); n];
        for target in s + 1..n {
            for (x, p) in pot.iter_mut().enumerate() {
                *p = t[(x, s)] - t[(x, target)];
            }
            current.iter_mut().for_each(|c| *c = T::zero());
            for &(u, v, w) in &edges {
                let i = half * w * (pot[u] - pot[v]).abs();
                current[u] += i;
                current[v] += i;
            }
            current[s] = T::one();
            current[target] = T::one();
            for (a, &c) in acc.iter_mut().zip(&current) {
                *a += c;
            }
        }
        Ok(())
    })?;
    let pairs = T::of_usize(n * (n - 1) / 2);
    values.iter_mut().for_each(|v| *v /= pairs);
    ScoreVector::new("random-walk-betweenness", values, params)
}

/// Information centrality `n / sum_u 1/I_uv` with `I_uv = 1 / (C_uu + C_vv - 2 C_uv)`, `C = inv(L + J)`.
pub fn information<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    require_connected_undirected(g, "information")?;
    let n = g.n();
    check_dense_cap(n, params.dense_cap)?;
    if n <= 1 {
        return ScoreVector::new("information", vec![T::zero(); n], params);
    }
    let mut m = DenseMatrix::from_vec(n, vec![T::one(); n * n]);
    for (u, v, w) in g.edges() {
        m[(u, u)] += w;
        m[(v, v)] += w;
        m[(u, v)] -= w;
        m[(v, u)] -= w;
    }
    let c = invert(&m)?;
    let values = (0..n)
        .map(|v| {
            let resist: T = (0..n).filter(|&u| u != v).map(|u| c[(u, u)] + c[(v, v)] - T::of(2.0) * c[(u, v)]).sum();
            T::of_usize(n) / resist
        })
        .collect();
    ScoreVector::new("information", values, params)
}
