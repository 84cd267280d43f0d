//! String ids for every point metric, graph metric and selection strategy.

use crate::error::{Error, Result};
use crate::global;
use crate::graph::Graph;
use crate::graph_metrics::{self as gm, AssortativityMode, CentralizationBase, CohesionKind, GraphMetricValue};
use crate::iterative;
use crate::local::{self, DegreeKind};
use crate::params::MetricParams;
use crate::scalar::Scalar;
use crate::score::ScoreVector;
use crate::select::{self, DistanceVariant, GroupSelectParams, SelectionResult};

pub const POINT_METRICS: &[&str] = &[
    "degree",
    "in-degree",
    "out-degree",
    "semi-local",
    "hybrid-degree",
    "volume",
    "clustering",
    "redundancy",
    "local-entropy",
    "mapping-entropy",
    "clusterrank",
    "h-index",
    "gauss-curvature",
    "k-shell",
    "mixed-degree",
    "nc",
    "nc-plus",
    "eigenvector",
    "katz",
    "pagerank",
    "contribution",
    "cumulative-nomination",
    "dynamical-influence",
    "authority",
    "hub",
    "salsa-authority",
    "salsa-hub",
    "leader-rank",
    "diffusion",
    "subgraph",
    "betweenness",
    "l-betweenness",
    "percolation",
    "load",
    "flow-betweenness",
    "current-flow-betweenness",
    "current-flow-closeness",
    "random-walk-betweenness",
    "closeness",
    "bavelas",
    "residual",
    "decay",
    "eccentricity",
    "straightness",
    "information",
    "improved-method",
    "gdsp-degree",
    "gdsp-closeness",
    "gdsp-betweenness",
    "weight-neighborhood",
    "ahp",
    "local-assortativity",
];

/// Point metrics that build a dense n x n matrix and are refused above `dense_cap`.
pub const DENSE_METRICS: &[&str] = &[
    "katz",
    "subgraph",
    "current-flow-betweenness",
    "current-flow-closeness",
    "random-walk-betweenness",
    "information",
];

pub const GRAPH_METRICS: &[&str] = &[
    "dispersion",
    "degree-gc",
    "centralization-betweenness",
    "centralization-closeness",
    "centralization-flow-betweenness",
    "reciprocity",
    "k-core",
    "k-clique-max",
    "k-plex-max",
    "k-component",
    "global-clustering",
    "assortativity",
    "assortativity-out-in",
    "assortativity-in-in",
    "assortativity-out-out",
    "delta-hyperbolicity",
];

pub const STRATEGIES: &[&str] = &[
    "degree-distance",
    "fidd",
    "sidd",
    "single-discount",
    "degree-discount",
    "degree-punishment",
    "collective-influence",
];

fn unknown(kind: &'static str, id: &str, valid: &[&str]) -> Error {
    Error::UnknownId { kind, id: id.into(), valid: valid.join(", ") }
}

/// Computes the point metric `id`.
///
/// `weight-neighborhood` accepts any other point metric id as its benchmark.
pub fn point_metric<T: Scalar>(g: &Graph<T>, id: &str, params: &MetricParams) -> Result<ScoreVector<T>> {
    params.validate()?;
    let p = params;
    match id {
        "degree" => local::degree(g, DegreeKind::Total, p.normalized),
        "in-degree" => local::degree(g, DegreeKind::In, p.normalized),
        "out-degree" => local::degree(g, DegreeKind::Out, p.normalized),
        "semi-local" => local::semi_local(g),
        "hybrid-degree" => local::hybrid_degree(g, p),
        "volume" => local::volume(g, p.h),
        "clustering" => local::clustering(g),
        "redundancy" => local::redundancy(g),
        "local-entropy" => local::local_entropy(g),
        "mapping-entropy" => local::mapping_entropy(g),
        "clusterrank" => local::cluster_rank(g),
        "h-index" => local::h_index(g, p.h_order),
        "gauss-curvature" => local::gauss_curvature(g, p.k_max),
        "k-shell" => iterative::k_shell(g).into_scores(id, p.digest()),
        "mixed-degree" => iterative::mixed_degree(g, p.lambda_mdd)?.into_scores(id, p.digest()),
        "nc" => iterative::neighborhood_coreness(g, false),
        "nc-plus" => iterative::neighborhood_coreness(g, true),
        "eigenvector" => iterative::eigenvector(g, p),
        "katz" => iterative::katz(g, p),
        "pagerank" => iterative::pagerank(g, p),
        "contribution" => iterative::contribution(g, p),
        "cumulative-nomination" => iterative::cumulative_nomination(g, p),
        "dynamical-influence" => iterative::dynamical_influence(g, p),
        "authority" => Ok(iterative::hits(g, p)?.0),
        "hub" => Ok(iterative::hits(g, p)?.1),
        "salsa-authority" => Ok(iterative::salsa(g, p)?.0),
        "salsa-hub" => Ok(iterative::salsa(g, p)?.1),
        "leader-rank" => iterative::leader_rank(g, p),
        "diffusion" => iterative::diffusion(g, p),
        "subgraph" => iterative::subgraph(g, p),
        "betweenness" => global::betweenness(g, p),
        "l-betweenness" => global::l_betweenness(g, p),
        "percolation" => global::percolation(g, p),
        "load" => global::load(g, p),
        "flow-betweenness" => global::flow_betweenness(g, p),
        "current-flow-betweenness" => global::current_flow_betweenness(g, p),
        "current-flow-closeness" => global::current_flow_closeness(g, p),
        "random-walk-betweenness" => global::random_walk_betweenness(g, p),
        "closeness" => global::closeness(g, p),
        "bavelas" => global::bavelas(g, p),
        "residual" => global::residual(g, p),
        "decay" => global::decay(g, p),
        "eccentricity" => global::eccentricity(g, p),
        "straightness" => global::straightness(g, p),
        "information" => global::information(g, p),
        "improved-method" => global::improved_method(g).scores(p),
        "gdsp-degree" => global::gdsp_degree(g, p),
        "gdsp-closeness" => global::gdsp_closeness(g, p),
        "gdsp-betweenness" => global::gdsp_betweenness(g, p),
        "weight-neighborhood" => {
            if p.benchmark == id {
                return Err(Error::InvalidParameter {
                    name: "benchmark",
                    reason: "cannot be weight-neighborhood".into(),
                });
            }
            let phi = point_metric(g, &p.benchmark, p)
                .map_err(|e| match e {
                    Error::UnknownId { id, valid, .. } => Error::UnknownId { kind: "benchmark", id, valid },
                    other => other,
                })?
                .values;
            global::weight_neighborhood_with(g, &phi, p)
        }
        "ahp" => global::ahp(g, p),
        "local-assortativity" => gm::local_assortativity(g, p),
        _ => Err(unknown("metric", id, POINT_METRICS)),
    }
}

/// Computes the graph-level metric `id`. Cohesion queries use `params.k` and `params.size_cap`.
pub fn graph_metric<T: Scalar>(g: &Graph<T>, id: &str, params: &MetricParams) -> Result<GraphMetricValue<T>> {
    params.validate()?;
    let p = params;
    match id {
        "dispersion" => gm::dispersion(g),
        "degree-gc" => gm::degree_gc(g, p.normalized),
        "centralization-betweenness" => gm::centralization(g, CentralizationBase::Betweenness, p),
        "centralization-closeness" => gm::centralization(g, CentralizationBase::Closeness, p),
        "centralization-flow-betweenness" => gm::centralization(g, CentralizationBase::FlowBetweenness, p),
        "reciprocity" => gm::reciprocity(g),
        "k-core" => gm::cohesive_subgroup(g, CohesionKind::KCore, p.k, p.size_cap),
        "k-clique-max" => gm::cohesive_subgroup(g, CohesionKind::KCliqueMax, p.k, p.size_cap),
        "k-plex-max" => gm::cohesive_subgroup(g, CohesionKind::KPlexMax, p.k, p.size_cap),
        "k-component" => gm::cohesive_subgroup(g, CohesionKind::KComponent, p.k, p.size_cap),
        "global-clustering" => gm::global_clustering(g),
        "assortativity" => gm::assortativity(g, AssortativityMode::Undirected),
        "assortativity-out-in" => gm::assortativity(g, AssortativityMode::OutIn),
        "assortativity-in-in" => gm::assortativity(g, AssortativityMode::InIn),
        "assortativity-out-out" => gm::assortativity(g, AssortativityMode::OutOut),
        "delta-hyperbolicity" => gm::delta_hyperbolicity(g, p),
        _ => Err(unknown("graph metric", id, GRAPH_METRICS)),
    }
}

/// Runs the selection strategy `id`.
pub fn strategy<T: Scalar>(g: &Graph<T>, id: &str, params: &GroupSelectParams) -> Result<SelectionResult<T>> {
    match id {
        "degree-distance" => select::degree_distance(g, params, DistanceVariant::Plain),
        "fidd" => select::degree_distance(g, params, DistanceVariant::Fidd),
        "sidd" => select::degree_distance(g, params, DistanceVariant::Sidd),
        "single-discount" => select::single_discount(g, params.budget),
        "degree-discount" => select::degree_discount(g, params.budget, params.p),
        "degree-punishment" => select::degree_punishment(g, params.budget, params.omega, params.r),
        "collective-influence" => select::collective_influence(g, params),
        _ => Err(unknown("strategy", id, STRATEGIES)),
    }
}
