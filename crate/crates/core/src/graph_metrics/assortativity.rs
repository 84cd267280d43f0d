use serde::{Deserialize, Serialize};

use super::GraphMetricValue;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::MetricParams;
use crate::scalar::Scalar;
use crate::score::ScoreVector;

/// Which degree is read at each end of an edge. Directed modes read the source first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AssortativityMode {
    Undirected,
    OutIn,
    InIn,
    OutOut,
}

fn pearson<T: Scalar>(pairs: &[(T, T)]) -> Result<T> {
    if pairs.len() < 2 {
        return Err(Error::UndefinedAssortativity);
    }
    let n = T::of_usize(pairs.len());
    let mx = pairs.iter().map(|p| p.0).sum::<T>() / n;
    let my = pairs.iter().map(|p| p.1).sum::<T>() / n;
    let (mut sxy, mut sxx, mut syy) = (T::zero(), T::zero(), T::zero());
    for &(x, y) in pairs {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    let tiny = T::epsilon() * n;
    if sxx <= tiny || syy <= tiny {
        return Err(Error::UndefinedAssortativity);
    }
    Ok(sxy / (sxx * syy).sqrt())
}

/// Pearson correlation of excess degrees across edge ends.
///
/// Undirected mode counts each edge in both orientations and ignores direction on directed input.
type DegreeFn<T> = fn(&Graph<T>, usize) -> usize;

pub fn assortativity<T: Scalar>(g: &Graph<T>, mode: AssortativityMode) -> Result<GraphMetricValue<T>> {
    let excess = |d: usize| T::of_usize(d) - T::one();
    let pairs: Vec<(T, T)> = match mode {
        AssortativityMode::Undirected => {
            let u = g.to_undirected();
            u.edges()
                .flat_map(|(a, b, _)| {
                    let (x, y) = (excess(u.degree(a)), excess(u.degree(b)));
                    [(x, y), (y, x)]
                })
                .collect()
        }
        directed => {
            if !g.is_directed() {
                return Err(Error::DirectedRequired { metric: "directed assortativity" });
            }
            let (src, dst): (DegreeFn<T>, DegreeFn<T>) = match directed {
                AssortativityMode::OutIn => (Graph::out_degree, Graph::in_degree),
                AssortativityMode::InIn => (Graph::in_degree, Graph::in_degree),
                _ => (Graph::out_degree, Graph::out_degree),
            };
            g.edges().map(|(a, b, _)| (excess(src(g, a)), excess(dst(g, b)))).collect()
        }
    };
    GraphMetricValue::real("assortativity", pearson(&pairs)?)
}

/// Per-node share `(j + 1)(j kbar - mu_q^2) / (2 L sigma_q^2)` of the undirected assortativity.
///
/// `mu_q`, `sigma_q` are the mean and deviation of the excess degree seen from a random edge end,
/// which makes the shares sum to the global coefficient.
pub fn local_assortativity<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let u = g.to_undirected();
    let n = u.n();
    let ends = T::of_usize(2 * u.m());
    if u.m() == 0 {
        return Err(Error::UndefinedAssortativity);
    }
    let j: Vec<T> = (0..n).map(|v| T::of_usize(u.degree(v)) - T::one()).collect();
    let deg: Vec<T> = (0..n).map(|v| T::of_usize(u.degree(v))).collect();
    let mu = (0..n).map(|v| deg[v] * j[v]).sum::<T>() / ends;
    let var = (0..n).map(|v| deg[v] * (j[v] - mu) * (j[v] - mu)).sum::<T>() / ends;
    if var <= T::epsilon() {
        return Err(Error::UndefinedAssortativity);
    }
    let values = (0..n)
        .map(|v| {
            if u.degree(v) == 0 {
                return T::zero();
            }
            let kbar = u.neighbors(v).map(|w| j[w]).sum::<T>() / deg[v];
            deg[v] * (j[v] * kbar - mu * mu) / (ends * var)
        })
        .collect();
    ScoreVector::new("local-assortativity", values, params)
}
