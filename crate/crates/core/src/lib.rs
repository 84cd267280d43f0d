//! Centrality metrics, graph-level measures and attack simulation for complex networks.
//!
//! Everything is generic over a floating-point [`Scalar`] (`f32` or `f64`); the
//! `*64` aliases below fix the common double-precision case.

pub mod error;
pub mod generators;
pub mod global;
pub mod graph;
pub mod graph_metrics;
pub mod iterative;
pub mod linalg;
pub mod local;
pub mod params;
pub mod registry;
pub mod resilience;
pub mod scalar;
pub mod score;
pub mod select;

pub use error::{Error, Result};
pub use graph::{BuildReport, Graph, GraphBuilder};
pub use params::MetricParams;
pub use scalar::Scalar;
pub use score::ScoreVector;

pub type Graph64 = Graph<f64>;
pub type Graph32 = Graph<f32>;
pub type Scores64 = ScoreVector<f64>;
pub type Scores32 = ScoreVector<f32>;
