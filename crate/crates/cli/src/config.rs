//! JSON experiment configuration.

use std::path::{Path, PathBuf};

use centra_core::registry::{POINT_METRICS, STRATEGIES};
use centra_core::resilience::{AttackKind, AttackPlan, RankingSource};
use centra_core::select::GroupSelectParams;
use centra_core::{Error, MetricParams};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::emit::OutputFormat;
use crate::error::{CliError, CliResult};

/// Id of the uniform random-removal baseline.
pub const RANDOM: &str = "random";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MetricEntry {
    Id(String),
    Spec {
        id: String,
        /// Row label; defaults to the id.
        #[serde(default)]
        label: Option<String>,
        #[serde(default)]
        params: Map<String, Value>,
    },
}

impl MetricEntry {
    pub fn id(&self) -> &str {
        match self {
            MetricEntry::Id(id) | MetricEntry::Spec { id, .. } => id,
        }
    }

    pub fn label(&self) -> &str {
        match self {
            MetricEntry::Spec { label: Some(l), .. } => l,
            _ => self.id(),
        }
    }

    fn params(&self) -> Option<&Map<String, Value>> {
        match self {
            MetricEntry::Spec { params, .. } => Some(params),
            MetricEntry::Id(_) => None,
        }
    }
}

/// Attack settings; every field falls back to the default plan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AttackSettings {
    pub kind: AttackKind,
    pub phi_grid: Vec<f64>,
    pub beta: f64,
    pub runs: usize,
    pub rng_seed: u64,
    pub timing: bool,
}

impl Default for AttackSettings {
    fn default() -> Self {
        let p = AttackPlan::default();
        Self { kind: p.kind, phi_grid: p.phi_grid, beta: p.beta, runs: p.runs, rng_seed: p.rng_seed, timing: p.timing }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub input_path: Option<PathBuf>,
    #[serde(default)]
    pub directed: bool,
    pub metrics: Vec<MetricEntry>,
    #[serde(default)]
    pub attack: AttackSettings,
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub output_format: OutputFormat,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> CliResult<Self> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| CliError::input(format!("invalid config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }

    /// Checks ids, overrides and attack settings without touching a graph.
    pub fn validate(&self) -> CliResult<()> {
        if self.metrics.is_empty() {
            return Err(CliError::input("config lists no metrics"));
        }
        for entry in &self.metrics {
            self.source(entry)?;
        }
        self.plan(RankingSource::Random).validate()?;
        Ok(())
    }

    /// Ranking source of `entry`, with overrides merged into the default parameters.
    pub fn source(&self, entry: &MetricEntry) -> CliResult<RankingSource> {
        let id = entry.id();
        let overrides = entry.params();
        if id == RANDOM {
            if overrides.is_some_and(|o| !o.is_empty()) {
                return Err(CliError::input("random attack takes no parameters"));
            }
            return Ok(RankingSource::Random);
        }
        if STRATEGIES.contains(&id) {
            let params: GroupSelectParams = merge(&GroupSelectParams::default(), overrides)?;
            return Ok(RankingSource::Strategy { id: id.into(), params });
        }
        if POINT_METRICS.contains(&id) {
            let base = MetricParams { rng_seed: self.attack.rng_seed, ..Default::default() };
            let params: MetricParams = merge(&base, overrides)?;
            params.validate()?;
            return Ok(RankingSource::Metric { id: id.into(), params });
        }
        let valid: Vec<&str> = POINT_METRICS.iter().chain(STRATEGIES).copied().chain([RANDOM]).collect();
        Err(Error::UnknownId { kind: "attack metric", id: id.into(), valid: valid.join(", ") }.into())
    }

    pub fn plan(&self, source: RankingSource) -> AttackPlan {
        let a = &self.attack;
        AttackPlan {
            kind: a.kind,
            source,
            phi_grid: a.phi_grid.clone(),
            beta: a.beta,
            runs: a.runs,
            rng_seed: a.rng_seed,
            timing: a.timing,
        }
    }
}

/// Replaces fields of `base` by `overrides`; unknown keys and mistyped values are errors.
pub fn merge<P: Serialize + DeserializeOwned>(base: &P, overrides: Option<&Map<String, Value>>) -> CliResult<P> {
    let mut json = serde_json::to_value(base).expect("params serialize");
    let obj = json.as_object_mut().expect("params object");
    for (key, value) in overrides.into_iter().flatten() {
        let Some(slot) = obj.get_mut(key) else {
            let mut keys: Vec<_> = obj.keys().cloned().collect();
            keys.sort();
            return Err(Error::UnknownId { kind: "parameter", id: key.clone(), valid: keys.join(", ") }.into());
        };
        *slot = value.clone();
    }
    serde_json::from_value(json).map_err(|e| CliError::input(format!("parameter override: {e}")))
}

/// Parses repeated `key=value` flags; values are JSON when they parse as JSON, strings otherwise.
pub fn parse_overrides(pairs: &[String]) -> CliResult<Map<String, Value>> {
    let mut map = Map::new();
    for pair in pairs {
        let (k, v) =
            pair.split_once('=').ok_or_else(|| CliError::input(format!("expected key=value, got {pair:?}")))?;
        let v = serde_json::from_str(v).unwrap_or_else(|_| Value::String(v.into()));
        map.insert(k.trim().into(), v);
    }
    Ok(map)
}
