//! Exhaustive search for good colorings and the Ramsey-number driver.

mod engine;
mod lemma;
mod predict;
mod ramsey;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::graph::EdgeColoring;

pub use engine::find_good_coloring;
pub use lemma::{k34_minus_edge, verify_lemma_k34, LemmaReport};
pub use predict::{predicted_value, predicted_value_with, PredictionMode};
pub use ramsey::{
    ramsey_number, resolved_specs, verify_table, RamseyResult, TableRow, TableStatus,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryLevel {
    None,
    /// Color-twin ordering plus the minimum color on edge `(0, 1)`.
    FirstEdge,
    /// [`SymmetryLevel::FirstEdge`] plus row ordering of interchangeable vertices.
    VertexOrbits,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    /// Seconds per search; `0.0` means unlimited.
    pub time_limit: f64,
    pub symmetry_level: SymmetryLevel,
    /// Number of workers sharing the top of the branching tree.
    pub worker_partition: usize,
    /// Report the same witness a single worker would find.
    pub deterministic: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            time_limit: 300.0,
            symmetry_level: SymmetryLevel::VertexOrbits,
            worker_partition: 1,
            deterministic: true,
        }
    }
}

impl SearchConfig {
    pub fn with_time_limit(mut self, seconds: f64) -> Self {
        self.time_limit = seconds;
        self
    }

    pub fn with_symmetry(mut self, level: SymmetryLevel) -> Self {
        self.symmetry_level = level;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.worker_partition = workers;
        self
    }

    fn deadline(&self, start: Instant) -> Option<Instant> {
        (self.time_limit > 0.0).then(|| start + Duration::from_secs_f64(self.time_limit))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub oracle_prunes: u64,
    pub symmetry_prunes: u64,
    pub seconds: f64,
}

impl SearchStats {
    fn merged(&self, other: &SearchStats) -> SearchStats {
        SearchStats {
            nodes: self.nodes + other.nodes,
            oracle_prunes: self.oracle_prunes + other.oracle_prunes,
            symmetry_prunes: self.symmetry_prunes + other.symmetry_prunes,
            seconds: self.seconds.max(other.seconds),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Found(EdgeColoring),
    Exhausted,
    Timeout,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Found(_) => "found",
            Verdict::Exhausted => "exhausted",
            Verdict::Timeout => "timeout",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&EdgeColoring> {
        match &self.verdict {
            Verdict::Found(c) => Some(c),
            _ => None,
        }
    }

    /// One JSON-lines stats record.
    pub fn stats_record(&self, n: usize, spec: &crate::TargetSpec) -> String {
        serde_json::json!({
            "spec": spec.to_string(),
            "n": n,
            "verdict": self.verdict.name(),
            "nodes": self.stats.nodes,
            "oracle_prunes": self.stats.oracle_prunes,
            "symmetry_prunes": self.stats.symmetry_prunes,
            "seconds": self.stats.seconds,
        })
        .to_string()
    }
}
