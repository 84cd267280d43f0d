use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{GraphMetricValue, MetricValue};
use crate::error::{Error, Result};
use crate::graph::paths::{hop_distances, Direction};
use crate::graph::Graph;
use crate::linalg::check_dense_cap;
use crate::params::MetricParams;
use crate::scalar::Scalar;

/// Thin-triangle statistics over the evaluated triples.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hyperbolicity<T> {
    pub max: T,
    pub mean: T,
    /// Mean of delta divided by the shortest side of its triple.
    pub mean_relative: T,
    pub triples: u64,
}

struct Distances {
    n: usize,
    d: Vec<u32>,
}

impl Distances {
    fn get(&self, a: usize, b: usize) -> u32 {
        self.d[a * self.n + b]
    }

    /// Vertices on at least one shortest `u`-`v` path.
    fn geodesic(&self, u: usize, v: usize) -> Vec<usize> {
        let duv = self.get(u, v);
        (0..self.n).filter(|&w| self.get(u, w) + self.get(w, v) == duv).collect()
    }

    fn to_geodesic(&self, m: usize, geo: &[usize]) -> u32 {
        geo.iter().map(|&w| self.get(m, w)).min().unwrap_or(0)
    }

    /// `min_m max` of the distances from `m` to the three geodesics.
    fn delta(&self, i: usize, j: usize, k: usize) -> u32 {
        let sides = [self.geodesic(i, j), self.geodesic(i, k), self.geodesic(j, k)];
        (0..self.n).map(|m| sides.iter().map(|geo| self.to_geodesic(m, geo)).max().unwrap_or(0)).min().unwrap_or(0)
    }
}

fn triple_count(n: usize) -> u128 {
    let n = n as u128;
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Gromov delta on hop distances, ignoring direction.
///
/// Enumerates every triple when `sample_count >= C(n, 3)`, otherwise samples `sample_count` triples of
/// distinct nodes with a generator seeded by `rng_seed`.
pub fn delta_hyperbolicity<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<GraphMetricValue<T>> {
    if params.sample_count == 0 {
        return Err(Error::InvalidParameter { name: "sample_count", reason: "must be at least 1".into() });
    }
    let u = g.to_undirected();
    let n = u.n();
    check_dense_cap(n, params.dense_cap)?;
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        let row = hop_distances(&u, s, Direction::Out);
        if row.contains(&usize::MAX) {
            return Err(Error::Disconnected { metric: "delta-hyperbolicity" });
        }
        d.extend(row.into_iter().map(|x| x as u32));
    }
    let dist = Distances { n, d };
    let triples: Vec<[usize; 3]> = if (params.sample_count as u128) >= triple_count(n) {
        let mut all = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    all.push([i, j, k]);
                }
            }
        }
        all
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
        (0..params.sample_count)
            .map(|_| {
                let mut t = [0usize; 3];
                for (slot, v) in t.iter_mut().zip(sample(&mut rng, n, 3)) {
                    *slot = v;
                }
                t.sort_unstable();
                t
            })
            .collect()
    };
    let deltas: Vec<(u32, u32)> = triples
        .par_iter()
        .map(|&[i, j, k]| {
            let shortest = dist.get(i, j).min(dist.get(i, k)).min(dist.get(j, k));
            (dist.delta(i, j, k), shortest)
        })
        .collect();
    let count = deltas.len();
    let mut h = Hyperbolicity { max: T::zero(), mean: T::zero(), mean_relative: T::zero(), triples: count as u64 };
    for &(delta, side) in &deltas {
        let x = T::of(delta as f64);
        h.max = h.max.max(x);
        h.mean += x;
        h.mean_relative += x / T::of(side as f64);
    }
    if count > 0 {
        h.mean /= T::of_usize(count);
        h.mean_relative /= T::of_usize(count);
    }
    GraphMetricValue::new("delta-hyperbolicity", MetricValue::Hyperbolicity(h))
}
