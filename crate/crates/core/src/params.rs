//! Parameters shared by the metric families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Free parameters of every metric; each metric reads the fields it needs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MetricParams {
    /// Hop radius (volume, flow-betweenness pair radius when `flow_hops` is set).
    pub h: usize,
    /// Spreading probability (hybrid degree).
    pub p: f64,
    /// Katz attenuation; `None` selects 0.85 / lambda_max.
    pub katz_alpha: Option<f64>,
    /// PageRank damping.
    pub pagerank_alpha: f64,
    /// Additive constant of Katz and PageRank.
    pub beta: f64,
    /// Hybrid degree weights.
    pub hybrid_alpha: f64,
    pub hybrid_beta: f64,
    /// GDSP and weight-neighbourhood tuning exponent.
    pub alpha: f64,
    /// Benchmark centrality of the weight-neighbourhood metric.
    pub benchmark: String,
    /// Diffusion passing probability; `None` selects 1 / lambda_max.
    pub q: Option<f64>,
    /// Diffusion horizon.
    #[serde(rename = "T")]
    pub t: usize,
    pub lambda_mdd: f64,
    /// Path-length cap of L-betweenness; `None` means the diameter.
    #[serde(rename = "L")]
    pub l: Option<usize>,
    pub delta_decay: f64,
    /// Gaussian curvature truncation.
    pub k_max: usize,
    /// h-index order.
    pub h_order: usize,
    pub tol: f64,
    pub max_iter: usize,
    /// Iteration cap for HITS and SALSA.
    pub hits_max_iter: usize,
    pub percolation_states: Option<Vec<f64>>,
    pub si_beta: f64,
    pub si_steps: usize,
    pub si_runs: usize,
    pub sample_count: usize,
    pub rng_seed: u64,
    /// Score sums to one (PageRank).
    pub normalized: bool,
    /// Directed eigenvector/Katz aggregate over out-neighbours instead of in-neighbours.
    pub out_aggregation: bool,
    /// Restricts flow betweenness to pairs within `h` hops.
    pub flow_hops: bool,
    /// Wasserman-Faust scaling of closeness on disconnected graphs.
    pub reachable_scaling: bool,
    pub dense_cap: usize,
    /// Order of cohesive-subgroup queries (k-core, k-plex, k-component, minimum clique size).
    pub k: usize,
    /// Node cap of the exact clique and plex searches.
    pub size_cap: usize,
}

impl Default for MetricParams {
    fn default() -> Self {
        Self {
            h: 2,
            p: 0.05,
            katz_alpha: None,
            pagerank_alpha: 0.85,
            beta: 1.0,
            hybrid_alpha: 1000.0,
            hybrid_beta: 0.1,
            alpha: 0.5,
            benchmark: "degree".into(),
            q: None,
            t: 5,
            lambda_mdd: 0.7,
            l: None,
            delta_decay: 0.5,
            k_max: 3,
            h_order: 50,
            tol: 1e-10,
            max_iter: 100_000,
            hits_max_iter: 10_000,
            percolation_states: None,
            si_beta: 0.05,
            si_steps: 5,
            si_runs: 100,
            sample_count: 1000,
            rng_seed: 0,
            normalized: false,
            out_aggregation: false,
            flow_hops: false,
            reachable_scaling: false,
            dense_cap: crate::linalg::DENSE_CAP,
            k: 2,
            size_cap: crate::graph_metrics::cohesion::DEFAULT_SIZE_CAP,
        }
    }
}

fn bad(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter { name, reason: reason.into() }
}

pub(crate) fn check_prob(name: &'static str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(bad(name, format!("{x} not in [0, 1]")))
    }
}

impl MetricParams {
    pub fn validate(&self) -> Result<()> {
        check_prob("p", self.p)?;
        check_prob("lambda_mdd", self.lambda_mdd)?;
        check_prob("si_beta", self.si_beta)?;
        if !(self.alpha >= 0.0 && self.alpha.is_finite()) {
            return Err(bad("alpha", "must be a non-negative number"));
        }
        check_prob("delta_decay", self.delta_decay)?;
        if !(self.pagerank_alpha >= 0.0 && self.pagerank_alpha < 1.0) {
            return Err(bad("pagerank_alpha", "must lie in [0, 1)"));
        }
        if let Some(q) = self.q {
            if !(q > 0.0 && q.is_finite()) {
                return Err(bad("q", "must be positive"));
            }
        }
        if !(self.tol > 0.0) {
            return Err(bad("tol", "must be positive"));
        }
        for (name, v) in [
            ("max_iter", self.max_iter),
            ("hits_max_iter", self.hits_max_iter),
            ("h", self.h),
            ("T", self.t),
            ("si_steps", self.si_steps),
            ("si_runs", self.si_runs),
            ("k_max", self.k_max),
            ("k", self.k),
        ] {
            if v < 1 {
                return Err(bad(name, "must be at least 1"));
            }
        }
        if self.l == Some(0) {
            return Err(bad("L", "must be at least 1"));
        }
        if let Some(states) = &self.percolation_states {
            for &x in states {
                check_prob("percolation_states", x)?;
            }
        }
        Ok(())
    }

    /// Canonical serialization used as the params digest.
    pub fn digest(&self) -> String {
        serde_json::to_string(self).expect("params serialize")
    }

    /// Applies a `key=value` override.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let mut json = serde_json::to_value(&*self).expect("params serialize");
        let obj = json.as_object_mut().expect("params object");
        let Some(slot) = obj.get_mut(key) else {
            let mut keys: Vec<_> = obj.keys().cloned().collect();
            keys.sort();
            return Err(Error::UnknownId { kind: "parameter", id: key.into(), valid: keys.join(", ") });
        };
        *slot = match serde_json::from_str::<serde_json::Value>(value) {
            Ok(v) => v,
            Err(_) => serde_json::Value::String(value.into()),
        };
        *self = serde_json::from_value(json).map_err(|e| bad("override", format!("{key}={value}: {e}")))?;
        self.validate()
    }
}
