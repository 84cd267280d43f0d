use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::MetricParams;
use crate::scalar::Scalar;

/// Per-node scores of one metric; every entry is finite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreVector<T> {
    pub values: Vec<T>,
    pub metric_id: String,
    pub params_digest: String,
    /// Node pairs left out because one cannot reach the other.
    pub skipped_pairs: u64,
}

impl<T: Scalar> ScoreVector<T> {
    pub fn new(metric_id: &str, values: Vec<T>, params: &MetricParams) -> Result<Self> {
        Self::with_digest(metric_id, values, params.digest())
    }

    pub fn with_digest(metric_id: &str, values: Vec<T>, params_digest: String) -> Result<Self> {
        if let Some(node) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { metric: metric_id.into(), node });
        }
        Ok(Self { values, metric_id: metric_id.into(), params_digest, skipped_pairs: 0 })
    }

    pub fn skipped(mut self, pairs: u64) -> Self {
        self.skipped_pairs = pairs;
        self
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Node ids by descending score, ascending id on ties.
    pub fn ranking(&self) -> Vec<usize> {
        rank_desc(&self.values)
    }
}

/// Indices sorted by descending value; ties by ascending index.
pub fn rank_desc<T: Scalar>(values: &[T]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap_or(std::cmp::Ordering::Equal).then(a.cmp(&b)));
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranking_breaks_ties_by_id() {
        assert_eq!(rank_desc(&[3.0, 1.0, 2.0]), vec![0, 2, 1]);
        assert_eq!(rank_desc(&[1.0, 1.0, 1.0]), vec![0, 1, 2]);
    }

    #[test]
    fn non_finite_rejected() {
        let p = MetricParams::default();
        assert!(ScoreVector::new("x", vec![1.0, f64::NAN], &p).is_err());
        assert!(ScoreVector::new("x", vec![1.0, 2.0], &p).is_ok());
    }
}
