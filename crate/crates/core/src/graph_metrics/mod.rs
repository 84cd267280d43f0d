//! Whole-graph centralization and structure measures.

pub mod assortativity;
pub mod cohesion;
pub mod hyperbolicity;

pub use assortativity::{assortativity, local_assortativity, AssortativityMode};
pub use cohesion::{cohesive_subgroup, CohesionKind, DEFAULT_SIZE_CAP};
pub use hyperbolicity::{delta_hyperbolicity, Hyperbolicity};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::global;
use crate::graph::paths::shortest_paths;
use crate::graph::Graph;
use crate::local::clustering_values;
use crate::params::MetricParams;
use crate::scalar::Scalar;

/// Value of a graph-level metric.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum MetricValue<T> {
    Real(T),
    Integer(u64),
    Nodes(Vec<usize>),
    Hyperbolicity(Hyperbolicity<T>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphMetricValue<T> {
    pub metric_id: String,
    pub value: MetricValue<T>,
    pub skipped_pairs: u64,
}

impl<T: Scalar> GraphMetricValue<T> {
    pub fn new(metric_id: &str, value: MetricValue<T>) -> Result<Self> {
        let finite = match &value {
            MetricValue::Real(x) => x.is_finite(),
            MetricValue::Hyperbolicity(h) => h.max.is_finite() && h.mean.is_finite() && h.mean_relative.is_finite(),
            _ => true,
        };
        if !finite {
            return Err(Error::NonFinite { metric: metric_id.into(), node: 0 });
        }
        Ok(Self { metric_id: metric_id.into(), value, skipped_pairs: 0 })
    }

    pub fn real(metric_id: &str, x: T) -> Result<Self> {
        Self::new(metric_id, MetricValue::Real(x))
    }

    pub fn skipped(mut self, pairs: u64) -> Self {
        self.skipped_pairs = pairs;
        self
    }

    /// The scalar value, if the metric has one.
    pub fn as_real(&self) -> Option<T> {
        match &self.value {
            MetricValue::Real(x) => Some(*x),
            MetricValue::Integer(x) => T::from_u64(*x),
            MetricValue::Hyperbolicity(h) => Some(h.max),
            MetricValue::Nodes(_) => None,
        }
    }
}

/// Sum of distances over ordered reachable pairs.
pub fn dispersion<T: Scalar>(g: &Graph<T>) -> Result<GraphMetricValue<T>> {
    let n = g.n();
    let mut total = T::zero();
    let mut skipped = 0u64;
    for s in 0..n {
        let sp = shortest_paths(g, s, None)?;
        total += sp.order.iter().map(|&u| sp.dist[u]).sum::<T>();
        skipped += (n - sp.order.len()) as u64;
    }
    Ok(GraphMetricValue::real("dispersion", total)?.skipped(skipped))
}

/// Degree centralization from distinct-neighbour counts, ignoring direction.
///
/// Raw: `sum_i binom(1 + d* - d_i, 2)`. Normalized: `sum_i (d* - d_i) / (n^2 - 3n + 2)`, needs n >= 3.
pub fn degree_gc<T: Scalar>(g: &Graph<T>, normalized: bool) -> Result<GraphMetricValue<T>> {
    let n = g.n();
    let deg: Vec<usize> = (0..n).map(|v| g.undirected_neighbors(v).len()).collect();
    let top = deg.iter().copied().max().unwrap_or(0);
    if normalized {
        if n < 3 {
            return Err(Error::InvalidParameter {
                name: "n",
                reason: "normalized degree centralization needs n >= 3".into(),
            });
        }
        let diff: usize = deg.iter().map(|&d| top - d).sum();
        return GraphMetricValue::real("degree-gc", T::of_usize(diff) / T::of_usize(n * n - 3 * n + 2));
    }
    let raw: usize = deg.iter().map(|&d| (1 + top - d) * (top - d) / 2).sum();
    GraphMetricValue::real("degree-gc", T::of_usize(raw))
}

/// Base point centrality of a centralization index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentralizationBase {
    Betweenness,
    Closeness,
    FlowBetweenness,
}

fn spread<T: Scalar>(values: &[T]) -> T {
    let top = values.iter().copied().fold(T::neg_infinity(), T::max);
    values.iter().map(|&x| top - x).sum()
}

/// Freeman centralization; the star graph attains 1 for every base.
///
/// - betweenness: normalized betweenness, sum of differences over `n - 1`
/// - closeness: `(n - 1)` times closeness, over `(n^2 - 3n + 2) / (2n - 3)`
/// - flow betweenness: per-pair normalized flow betweenness divided by the pair count, over `n - 1`
pub fn centralization<T: Scalar>(
    g: &Graph<T>,
    base: CentralizationBase,
    params: &MetricParams,
) -> Result<GraphMetricValue<T>> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidParameter { name: "n", reason: "centralization needs n >= 3".into() });
    }
    let mut p = params.clone();
    let nf = T::of_usize(n);
    let (id, value) = match base {
        CentralizationBase::Betweenness => {
            p.normalized = true;
            let b = global::betweenness(g, &p)?.values;
            ("betweenness-gc", spread(&b) / (nf - T::one()))
        }
        CentralizationBase::Closeness => {
            p.reachable_scaling = false;
            let c = global::closeness(g, &p)?;
            if c.skipped_pairs > 0 {
                return Err(Error::Disconnected { metric: "closeness centralization" });
            }
            let scaled: Vec<T> = c.values.iter().map(|&x| x * (nf - T::one())).collect();
            let denom = T::of_usize(n * n - 3 * n + 2) / T::of_usize(2 * n - 3);
            ("closeness-gc", spread(&scaled) / denom)
        }
        CentralizationBase::FlowBetweenness => {
            p.normalized = true;
            p.flow_hops = false;
            let f = global::flow_betweenness(g, &p)?.values;
            let pairs = if g.is_directed() { (n - 1) * (n - 2) } else { (n - 1) * (n - 2) / 2 };
            let scaled: Vec<T> = f.iter().map(|&x| x / T::of_usize(pairs)).collect();
            ("flow-betweenness-gc", spread(&scaled) / (nf - T::one()))
        }
    };
    GraphMetricValue::real(id, value)
}

/// Fraction of arcs whose reverse arc exists.
pub fn reciprocity<T: Scalar>(g: &Graph<T>) -> Result<GraphMetricValue<T>> {
    if !g.is_directed() {
        return Err(Error::DirectedRequired { metric: "reciprocity" });
    }
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mutual = g.edges().filter(|&(u, v, _)| g.has_edge(v, u)).count();
    GraphMetricValue::real("reciprocity", T::of_usize(mutual) / T::of_usize(g.m()))
}

/// Mean local clustering coefficient; nodes of degree below 2 count as 0.
pub fn global_clustering<T: Scalar>(g: &Graph<T>) -> Result<GraphMetricValue<T>> {
    let c = clustering_values(g);
    let mean = if c.is_empty() { T::zero() } else { c.iter().copied().sum::<T>() / T::of_usize(c.len()) };
    GraphMetricValue::real("global-clustering", mean)
}
