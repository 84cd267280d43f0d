//! Point centralities that need whole-graph path or flow computations.
//!
//! - [`betweenness`]: betweenness, L-betweenness, percolation, load
//! - [`flow`]: flow, current-flow and random-walk betweenness, current-flow closeness, information
//! - [`closeness`]: closeness, Bavelas, residual and decay closeness, eccentricity, straightness
//! - [`composite`]: improved method, generalized degree and shortest paths, weight neighbourhood, AHP

pub mod betweenness;
pub mod closeness;
pub mod composite;
pub mod flow;

pub use betweenness::{betweenness, l_betweenness, load, percolation};
pub use closeness::{bavelas, closeness, decay, eccentricity, residual, straightness};
pub use composite::{
    ahp, gdsp_betweenness, gdsp_closeness, gdsp_degree, improved_method, weight_neighborhood, weight_neighborhood_with,
    ImprovedMethod,
};
pub use flow::{
    current_flow_betweenness, current_flow_closeness, flow_betweenness, information, random_walk_betweenness,
};

use rayon::prelude::*;

use crate::error::Result;
use crate::scalar::Scalar;

const CHUNK: usize = 32;

/// Sums per-source contributions `f(s, acc)` for `s in 0..sources`.
///
/// Sources are grouped in fixed chunks and the chunk sums are added in order, so the result does not
/// depend on the thread count.
pub(crate) fn accumulate<T, F>(n: usize, sources: usize, f: F) -> Result<Vec<T>>
where
    T: Scalar,
    F: Fn(usize, &mut [T]) -> Result<()> + Sync,
{
    let partial: Vec<Result<Vec<T>>> = (0..sources.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut acc = vec![T::zero(); n];
            for s in c * CHUNK..((c + 1) * CHUNK).min(sources) {
                f(s, &mut acc)?;
            }
            Ok(acc)
        })
        .collect();
    let mut total = vec![T::zero(); n];
    for chunk in partial {
        for (t, x) in total.iter_mut().zip(chunk?) {
            *t += x;
        }
    }
    Ok(total)
}
