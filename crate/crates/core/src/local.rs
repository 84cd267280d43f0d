//! Point centralities computed from a node's local neighbourhood.
//!
//! - degree (total, in, out) and its normalised form
//! - semi-local, hybrid degree and volume (undirected only)
//! - clustering, redundancy, ClusterRank
//! - local and mapping entropy
//! - k-order h-index and truncated Gaussian curvature

use crate::error::{Error, Result};
use crate::graph::paths::ball;
use crate::graph::Graph;
use crate::params::MetricParams;
use crate::scalar::Scalar;
use crate::score::ScoreVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeKind {
    Total,
    In,
    Out,
}

fn undirected_only<T: Scalar>(g: &Graph<T>, metric: &'static str) -> Result<()> {
    if g.is_directed() {
        Err(Error::UndirectedRequired { metric })
    } else {
        Ok(())
    }
}

/// Degree; `normalized` divides by n - 1 (2(n - 1) for directed total degree).
pub fn degree<T: Scalar>(g: &Graph<T>, kind: DegreeKind, normalized: bool) -> Result<ScoreVector<T>> {
    let id = match kind {
        DegreeKind::Total => "degree",
        DegreeKind::In => "in-degree",
        DegreeKind::Out => "out-degree",
    };
    if kind != DegreeKind::Total && !g.is_directed() {
        return Err(Error::DirectedRequired { metric: id });
    }
    let n = g.n();
    let scale = match (normalized, kind, g.is_directed()) {
        (false, ..) => 1,
        (true, DegreeKind::Total, true) => 2 * n.saturating_sub(1),
        (true, ..) => n.saturating_sub(1),
    };
    let values = (0..n)
        .map(|v| {
            let d = match kind {
                DegreeKind::Total => g.degree(v),
                DegreeKind::In => g.in_degree(v),
                DegreeKind::Out => g.out_degree(v),
            };
            if scale == 0 {
                T::zero()
            } else {
                T::of_usize(d) / T::of_usize(scale)
            }
        })
        .collect();
    ScoreVector::with_digest(id, values, format!("{{\"normalized\":{normalized}}}"))
}

/// Number of nodes within two hops of each node, itself excluded.
pub fn two_hop_counts<T: Scalar>(g: &Graph<T>) -> Vec<usize> {
    (0..g.n()).map(|w| ball(g, w, 2).len()).collect()
}

fn semi_local_raw<T: Scalar>(g: &Graph<T>) -> Vec<T> {
    let d2 = two_hop_counts(g);
    let q: Vec<usize> = (0..g.n()).map(|u| g.neighbors(u).map(|w| d2[w]).sum()).collect();
    (0..g.n()).map(|v| T::of_usize(g.neighbors(v).map(|u| q[u]).sum())).collect()
}

pub fn semi_local<T: Scalar>(g: &Graph<T>) -> Result<ScoreVector<T>> {
    undirected_only(g, "semi-local")?;
    ScoreVector::with_digest("semi-local", semi_local_raw(g), "{}".into())
}

/// `(beta - p) * alpha * deg + p * C_mlocal` with `C_mlocal` = semi-local minus twice the neighbour degree sum.
pub fn hybrid_degree<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    undirected_only(g, "hybrid-degree")?;
    let p = T::of(params.p);
    let coef = (T::of(params.hybrid_beta) - p) * T::of(params.hybrid_alpha);
    let semi = semi_local_raw(g);
    let values = (0..g.n())
        .map(|v| {
            let nd: usize = g.neighbors(v).map(|u| g.degree(u)).sum();
            let mlocal = semi[v] - T::of_usize(2 * nd);
            coef * T::of_usize(g.degree(v)) + p * mlocal
        })
        .collect();
    ScoreVector::new("hybrid-degree", values, params)
}

/// Sum of degrees over the nodes within `h` hops, `v` excluded.
pub fn volume<T: Scalar>(g: &Graph<T>, h: usize) -> Result<ScoreVector<T>> {
    undirected_only(g, "volume")?;
    let values = (0..g.n()).map(|v| T::of_usize(ball(g, v, h).iter().map(|&(u, _)| g.degree(u)).sum())).collect();
    ScoreVector::with_digest("volume", values, format!("{{\"h\":{h}}}"))
}

/// Local clustering; directed graphs use the out-neighbourhood over ordered pairs.
pub fn clustering_values<T: Scalar>(g: &Graph<T>) -> Vec<T> {
    (0..g.n())
        .map(|v| {
            let nb: Vec<usize> = g.neighbors(v).collect();
            let k = nb.len();
            if k < 2 {
                return T::zero();
            }
            let mut links = 0usize;
            for &r in &nb {
                for &s in &nb {
                    if r != s && g.has_edge(r, s) {
                        links += 1;
                    }
                }
            }
            T::of_usize(links) / T::of_usize(k * (k - 1))
        })
        .collect()
}

pub fn clustering<T: Scalar>(g: &Graph<T>) -> Result<ScoreVector<T>> {
    ScoreVector::with_digest("clustering", clustering_values(g), "{}".into())
}

fn sym_weight<T: Scalar>(g: &Graph<T>, a: usize, b: usize) -> T {
    let w = g.weight(a, b).unwrap_or(T::zero());
    if g.is_directed() {
        w + g.weight(b, a).unwrap_or(T::zero())
    } else {
        w + w
    }
}

/// Burt's redundancy; on unit weights this is 2e / deg.
pub fn redundancy<T: Scalar>(g: &Graph<T>) -> Result<ScoreVector<T>> {
    let values = (0..g.n())
        .map(|v| {
            let nv = g.undirected_neighbors(v);
            if nv.is_empty() {
                return T::zero();
            }
            if !g.is_weighted() && !g.is_directed() {
                let mut links = 0usize;
                for (i, &r) in nv.iter().enumerate() {
                    links += nv[i + 1..].iter().filter(|&&s| g.has_edge(r, s)).count();
                }
                return T::of_usize(2 * links) / T::of_usize(nv.len());
            }
            let total: T = nv.iter().map(|&r| sym_weight(g, v, r)).sum();
            let mut sum = T::zero();
            for &r in &nv {
                let shared: Vec<usize> =
                    g.undirected_neighbors(r).into_iter().filter(|s| nv.binary_search(s).is_ok()).collect();
                let max = shared.iter().map(|&t| sym_weight(g, r, t)).fold(T::zero(), T::max);
                if max == T::zero() {
                    continue;
                }
                for &s in &shared {
                    sum += sym_weight(g, v, s) / total * sym_weight(g, r, s) / max;
                }
            }
            sum
        })
        .collect();
    ScoreVector::with_digest("redundancy", values, "{}".into())
}

/// `-sum_{u in N(v)} d(u) ln d(u)`.
pub fn local_entropy<T: Scalar>(g: &Graph<T>) -> Result<ScoreVector<T>> {
    let values = (0..g.n())
        .map(|v| {
            -g.undirected_neighbors(v)
                .into_iter()
                .map(|u| {
                    let d = T::of_usize(g.degree(u));
                    d * d.ln()
                })
                .sum::<T>()
        })
        .collect();
    ScoreVector::with_digest("local-entropy", values, "{}".into())
}

/// `-d(v) sum_{u in N(v)} ln d(u)`.
pub fn mapping_entropy<T: Scalar>(g: &Graph<T>) -> Result<ScoreVector<T>> {
    let values = (0..g.n())
        .map(|v| {
            let s: T = g.undirected_neighbors(v).into_iter().map(|u| T::of_usize(g.degree(u)).ln()).sum();
            -T::of_usize(g.degree(v)) * s
        })
        .collect();
    ScoreVector::with_digest("mapping-entropy", values, "{}".into())
}

/// `10^(-cc(v)) * sum_{u in Nout(v)} (outdeg(u) + 1)`.
pub fn cluster_rank<T: Scalar>(g: &Graph<T>) -> Result<ScoreVector<T>> {
    if !g.is_directed() {
        return Err(Error::DirectedRequired { metric: "clusterrank" });
    }
    let cc = clustering_values(g);
    let ten = T::of(10.0);
    let values = (0..g.n())
        .map(|v| {
            let s: usize = g.neighbors(v).map(|u| g.out_degree(u) + 1).sum();
            ten.powf(-cc[v]) * T::of_usize(s)
        })
        .collect();
    ScoreVector::with_digest("clusterrank", values, "{}".into())
}

/// Largest h such that at least h of the inputs are >= h.
pub fn h_operator(values: &mut [usize]) -> usize {
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.iter().enumerate().take_while(|&(i, &x)| x > i).count()
}

/// k-order h-index; order 0 is the degree.
pub fn h_index_values<T: Scalar>(g: &Graph<T>, order: usize) -> Vec<usize> {
    let nbrs: Vec<Vec<usize>> = (0..g.n()).map(|v| g.pruning_neighbors(v)).collect();
    let mut h: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut buf = Vec::new();
    for _ in 0..order {
        let next: Vec<usize> = nbrs
            .iter()
            .map(|nb| {
                buf.clear();
                buf.extend(nb.iter().map(|&u| h[u]));
                h_operator(&mut buf)
            })
            .collect();
        if next == h {
            break;
        }
        h = next;
    }
    h
}

pub fn h_index<T: Scalar>(g: &Graph<T>, order: usize) -> Result<ScoreVector<T>> {
    let values = h_index_values(g, order).into_iter().map(T::of_usize).collect();
    ScoreVector::with_digest("h-index", values, format!("{{\"h_order\":{order}}}"))
}

fn count_cliques<T: Scalar>(g: &Graph<T>, cands: &[usize], size: usize, max: usize, counts: &mut [u64]) {
    for (i, &u) in cands.iter().enumerate() {
        counts[size + 1] += 1;
        if size + 1 < max {
            let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&w| g.has_edge(u, w)).collect();
            count_cliques(g, &next, size + 1, max, counts);
        }
    }
}

/// Counts `s[k]` of k-cliques containing `v` for k = 1..=k_max (`s[1] = 1`).
pub fn clique_counts<T: Scalar>(g: &Graph<T>, v: usize, k_max: usize) -> Vec<u64> {
    let mut counts = vec![0u64; k_max + 1];
    counts[1] = 1;
    if k_max >= 2 {
        let nb: Vec<usize> = g.neighbors(v).collect();
        count_cliques(g, &nb, 1, k_max, &mut counts);
    }
    counts
}

/// `sum_{k=0}^{k_max-1} (-1)^k s^{k+1} / (k+1)`.
pub fn gauss_curvature<T: Scalar>(g: &Graph<T>, k_max: usize) -> Result<ScoreVector<T>> {
    undirected_only(g, "gauss-curvature")?;
    if k_max < 1 {
        return Err(Error::InvalidParameter { name: "k_max", reason: "must be at least 1".into() });
    }
    let values = (0..g.n())
        .map(|v| {
            let s = clique_counts(g, v, k_max);
            (0..k_max)
                .map(|k| {
                    let term = T::of(s[k + 1] as f64) / T::of_usize(k + 1);
                    if k % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    ScoreVector::with_digest("gauss-curvature", values, format!("{{\"k_max\":{k_max}}}"))
}
