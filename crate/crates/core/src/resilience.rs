//! Attack experiments: static targeted removal, random removal and single-attempt SIR cascades,
//! measured by the giant component.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::components::{giant_size_masked, Connectivity};
use crate::graph::Graph;
use crate::params::MetricParams;
use crate::registry;
use crate::scalar::Scalar;
use crate::score::{rank_desc, ScoreVector};
use crate::select::GroupSelectParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeState {
    Susceptible,
    Infected,
    Removed,
}

/// Node ids by descending score, ascending id on ties.
pub fn rank_targets<T: Scalar>(scores: &ScoreVector<T>) -> Result<Vec<usize>> {
    if let Some(node) = scores.values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { metric: scores.metric_id.clone(), node });
    }
    Ok(rank_desc(&scores.values))
}

/// Number of nodes attacked at fraction `phi`: `ceil(phi n)`, guarded against rounding noise.
pub fn attack_count(phi: f64, n: usize) -> usize {
    ((phi * n as f64 - 1e-9).ceil().max(0.0) as usize).min(n)
}

/// Giant weak component of the alive nodes as a fraction of all `n` nodes.
pub fn giant_fraction<T: Scalar>(g: &Graph<T>, alive: &[bool]) -> f64 {
    if g.n() == 0 {
        return 0.0;
    }
    giant_size_masked(g, alive, Connectivity::Weak) as f64 / g.n() as f64
}

fn check_phi_grid(phi_grid: &[f64]) -> Result<()> {
    if phi_grid.iter().any(|p| !(0.0..=1.0).contains(p)) {
        return Err(Error::InvalidParameter { name: "phi_grid", reason: "values must lie in [0, 1]".into() });
    }
    if phi_grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidParameter { name: "phi_grid", reason: "values must be sorted".into() });
    }
    Ok(())
}

/// Giant fraction after removing the first `ceil(phi n)` nodes of `order` for each `phi`.
///
/// `order` is either a full static ranking or an explicit seed list; a shorter list is removed
/// entirely once `ceil(phi n)` exceeds its length.
pub fn non_infectious_attack<T: Scalar>(g: &Graph<T>, order: &[usize], phi_grid: &[f64]) -> Result<Vec<f64>> {
    check_phi_grid(phi_grid)?;
    for &v in order {
        g.check_node(v)?;
    }
    let n = g.n();
    Ok(phi_grid
        .iter()
        .map(|&phi| {
            let mut alive = vec![true; n];
            for &v in order.iter().take(attack_count(phi, n)) {
                alive[v] = false;
            }
            giant_fraction(g, &alive)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InfectiousOutcome {
    /// Final labels: never-infected nodes stay susceptible (immune ones included).
    pub states: Vec<NodeState>,
    /// Nodes that survived an infection attempt.
    pub immune: Vec<bool>,
    pub seeds: usize,
    /// Nodes ever infected, seeds included.
    pub infected_total: usize,
    /// Giant component of the susceptible nodes over the original node count.
    pub giant_fraction: f64,
}

/// Single-attempt SIR cascade in synchronous rounds.
///
/// Each round the infected nodes, in ascending id, try every susceptible out-neighbour once
/// with probability `beta` and are then removed. A susceptible node that survives an attempt
/// becomes immune for the rest of the cascade.
pub fn infectious_attack<T: Scalar>(
    g: &Graph<T>,
    seeds: &[usize],
    beta: f64,
    rng_seed: u64,
) -> Result<InfectiousOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    cascade(g, seeds, beta, &mut rng)
}

fn cascade<T: Scalar>(g: &Graph<T>, seeds: &[usize], beta: f64, rng: &mut ChaCha8Rng) -> Result<InfectiousOutcome> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::InvalidParameter { name: "beta", reason: format!("{beta} not in [0, 1]") });
    }
    if seeds.is_empty() {
        return Err(Error::EmptySeedSet);
    }
    let n = g.n();
    let mut states = vec![NodeState::Susceptible; n];
    let mut immune = vec![false; n];
    let mut active = Vec::with_capacity(seeds.len());
    for &s in seeds {
        g.check_node(s)?;
        if states[s] == NodeState::Susceptible {
            states[s] = NodeState::Infected;
            active.push(s);
        }
    }
    let distinct_seeds = active.len();
    let mut infected_total = active.len();
    while !active.is_empty() {
        active.sort_unstable();
        let mut next = Vec::new();
        for &v in &active {
            for &(u, _) in g.out_edges(v) {
                if states[u] != NodeState::Susceptible || immune[u] {
                    continue;
                }
                if rng.gen_bool(beta) {
                    states[u] = NodeState::Infected;
                    next.push(u);
                } else {
                    immune[u] = true;
                }
            }
        }
        for &v in &active {
            states[v] = NodeState::Removed;
        }
        infected_total += next.len();
        active = next;
    }
    let alive: Vec<bool> = states.iter().map(|&s| s == NodeState::Susceptible).collect();
    Ok(InfectiousOutcome {
        giant_fraction: giant_fraction(g, &alive),
        states,
        immune,
        seeds: distinct_seeds,
        infected_total,
    })
}

/// Secondary infections per seed: `(infected_total - seeds) / seeds`.
pub fn mean_infected_per_attacker(outcome: &InfectiousOutcome) -> Result<f64> {
    if outcome.seeds == 0 {
        return Err(Error::EmptySeedSet);
    }
    Ok((outcome.infected_total - outcome.seeds) as f64 / outcome.seeds as f64)
}

/// Relative graph centrality `(GC - GC') / GC`.
pub fn rgc(gc_before: f64, gc_after: f64) -> Result<f64> {
    if gc_before == 0.0 {
        return Err(Error::ZeroBaseline);
    }
    Ok((gc_before - gc_after) / gc_before)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AttackKind {
    #[default]
    NonInfectious,
    Infectious,
}

/// Where the attacked nodes come from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum RankingSource {
    /// Static ranking by a point metric computed once on the intact graph.
    Metric {
        id: String,
        #[serde(default)]
        params: MetricParams,
    },
    /// Seed order of a group-selection strategy; its budget is set from the largest phi.
    Strategy {
        id: String,
        #[serde(default)]
        params: GroupSelectParams,
    },
    /// Fresh uniform permutation per replicate.
    Random,
}

impl RankingSource {
    pub fn label(&self) -> &str {
        match self {
            RankingSource::Metric { id, .. } | RankingSource::Strategy { id, .. } => id,
            RankingSource::Random => "random",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AttackPlan {
    pub kind: AttackKind,
    pub source: RankingSource,
    pub phi_grid: Vec<f64>,
    /// Infection probability of infectious attacks.
    pub beta: f64,
    pub runs: usize,
    pub rng_seed: u64,
    /// Records per-row wall time; off by default so output is reproducible byte for byte.
    pub timing: bool,
}

impl Default for AttackPlan {
    fn default() -> Self {
        Self {
            kind: AttackKind::NonInfectious,
            source: RankingSource::Random,
            phi_grid: (0..=10).map(|i| i as f64 * 0.05).collect(),
            beta: 0.05,
            runs: 100,
            rng_seed: 0,
            timing: false,
        }
    }
}

impl AttackPlan {
    pub fn validate(&self) -> Result<()> {
        check_phi_grid(&self.phi_grid)?;
        if !(0.0..=1.0).contains(&self.beta) {
            return Err(Error::InvalidParameter { name: "beta", reason: "must lie in [0, 1]".into() });
        }
        if self.runs < 1 {
            return Err(Error::InvalidParameter { name: "runs", reason: "must be at least 1".into() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttackRow {
    pub metric: String,
    pub phi: f64,
    pub run: usize,
    pub giant_frac: f64,
    /// Secondary infections per seed over `n`; empty for non-infectious rows and seedless rows.
    pub infected_frac: Option<f64>,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhiSummary {
    pub phi: f64,
    pub giant_mean: f64,
    pub giant_std: f64,
    pub infected_mean: Option<f64>,
    pub infected_std: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentResult {
    /// Ordered by phi, then run.
    pub rows: Vec<AttackRow>,
    pub summary: Vec<PhiSummary>,
}

/// Mean and sample standard deviation.
pub fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Runs every replicate of `plan`; replicate `r` draws from `rng_seed + r`.
pub fn run_experiment<T: Scalar>(g: &Graph<T>, plan: &AttackPlan) -> Result<ExperimentResult> {
    plan.validate()?;
    let n = g.n();
    let max_k = plan.phi_grid.iter().map(|&p| attack_count(p, n)).max().unwrap_or(0);
    let fixed: Option<Vec<usize>> = match &plan.source {
        RankingSource::Metric { id, params } => Some(rank_targets(&registry::point_metric(g, id, params)?)?),
        RankingSource::Strategy { id, params } => {
            let params = GroupSelectParams { budget: max_k.max(1), ..params.clone() };
            Some(registry::strategy(g, id, &params)?.seeds)
        }
        RankingSource::Random => None,
    };
    let label = plan.source.label().to_string();
    let per_run: Vec<Vec<AttackRow>> = (0..plan.runs)
        .into_par_iter()
        .map(|r| {
            let seed = plan.rng_seed.wrapping_add(r as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let order = match &fixed {
                Some(o) => o.clone(),
                None => {
                    let mut o: Vec<usize> = (0..n).collect();
                    o.shuffle(&mut rng);
                    o
                }
            };
            plan.phi_grid
                .iter()
                .map(|&phi| {
                    let start = Instant::now();
                    let k = attack_count(phi, n).min(order.len());
                    let (giant_frac, infected_frac) = match plan.kind {
                        AttackKind::NonInfectious => (non_infectious_attack(g, &order, &[phi])?[0], None),
                        AttackKind::Infectious if k == 0 => (giant_fraction(g, &vec![true; n]), None),
                        AttackKind::Infectious => {
                            let mut cascade_rng = ChaCha8Rng::seed_from_u64(seed);
                            let o = cascade(g, &order[..k], plan.beta, &mut cascade_rng)?;
                            (o.giant_fraction, Some(mean_infected_per_attacker(&o)? / n as f64))
                        }
                    };
                    Ok(AttackRow {
                        metric: label.clone(),
                        phi,
                        run: r,
                        giant_frac,
                        infected_frac,
                        elapsed_ms: plan.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(plan.runs * plan.phi_grid.len());
    let mut summary = Vec::with_capacity(plan.phi_grid.len());
    for (i, &phi) in plan.phi_grid.iter().enumerate() {
        let column: Vec<&AttackRow> = per_run.iter().map(|runs| &runs[i]).collect();
        let giant: Vec<f64> = column.iter().map(|row| row.giant_frac).collect();
        let infected: Option<Vec<f64>> = column.iter().map(|row| row.infected_frac).collect();
        let (giant_mean, giant_std) = mean_std(&giant);
        let (infected_mean, infected_std) = match infected {
            Some(xs) => {
                let (m, s) = mean_std(&xs);
                (Some(m), Some(s))
            }
            None => (None, None),
        };
        summary.push(PhiSummary { phi, giant_mean, giant_std, infected_mean, infected_std });
        rows.extend(column.into_iter().cloned());
    }
    Ok(ExperimentResult { rows, summary })
}
