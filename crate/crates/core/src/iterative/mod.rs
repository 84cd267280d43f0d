//! Point centralities defined as decomposition sweeps or fixed points.
//!
//! - [`decomposition`]: k-shell, mixed degree decomposition, neighbourhood coreness
//! - [`spectral`]: eigenvector, Katz, contribution, dynamical influence, diffusion, subgraph
//! - [`walks`]: PageRank, HITS, SALSA, LeaderRank, cumulative nomination

pub mod decomposition;
pub mod spectral;
pub mod walks;

pub use decomposition::{k_shell, mixed_degree, neighborhood_coreness, DecompositionResult};
pub use spectral::{contribution, diffusion, dynamical_influence, eigenvector, katz, spectral_radius, subgraph};
pub use walks::{cumulative_nomination, hits, leader_rank, pagerank, salsa};
