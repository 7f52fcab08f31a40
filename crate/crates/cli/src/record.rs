//! JSON records written by `solve`. Vertex ids are 1-based, as in graph files.

use std::time::Duration;

use mwbis_core::lp::{LpModel, LpSolution};
use mwbis_core::{Solution, WeightMode, WeightedInstance};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceDigest {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    /// `degree` or `explicit`.
    pub weights: String,
}

impl InstanceDigest {
    pub fn of(instance: &WeightedInstance) -> Self {
        InstanceDigest {
            n: instance.graph().n(),
            m: instance.graph().m(),
            k: instance.k(),
            weights: match instance.mode() {
                WeightMode::Degree => "degree",
                WeightMode::Explicit => "explicit",
            }
            .to_owned(),
        }
    }
}

/// Fractional optimum of the LP relaxation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LpDetails {
    /// Per-vertex values, vertex `i + 1` at index `i`.
    pub values: Vec<f64>,
    pub rows: usize,
    pub iterations: usize,
    pub max_violation: f64,
    /// Exact objective as `p/q`, when the basis was certified.
    pub exact_objective: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: String,
    pub instance: InstanceDigest,
    pub method: String,
    pub value: f64,
    pub vertices: Vec<usize>,
    pub wall_time_ms: f64,
    pub proven_optimal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lp: Option<LpDetails>,
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

impl RunRecord {
    /// Re-verifies `solution` against `instance` before building the record.
    pub fn from_solution(
        command: String,
        instance: &WeightedInstance,
        solution: &Solution,
        elapsed: Duration,
    ) -> Result<Self, CliError> {
        solution
            .verify(instance)
            .map_err(|e| CliError::Mismatch(format!("{} solution: {e}", solution.method)))?;
        Ok(RunRecord {
            command,
            instance: InstanceDigest::of(instance),
            method: solution.method.name().to_owned(),
            value: solution.value,
            vertices: solution.vertices.iter().map(|v| v + 1).collect(),
            wall_time_ms: millis(elapsed),
            proven_optimal: solution.proven_optimal,
            lp: None,
        })
    }

    /// Requires feasibility within 1e-9 and an objective consistent with the values.
    pub fn from_lp(
        command: String,
        instance: &WeightedInstance,
        model: &LpModel,
        lp: &LpSolution,
        elapsed: Duration,
    ) -> Result<Self, CliError> {
        let max_violation = model.max_violation(&lp.values);
        let recomputed = model.objective_value(&lp.values);
        if max_violation > 1e-9 {
            return Err(CliError::Mismatch(format!(
                "LP point violates a constraint by {max_violation:e}"
            )));
        }
        if (recomputed - lp.objective).abs() > 1e-9 * lp.objective.abs().max(1.0) {
            return Err(CliError::Mismatch(format!(
                "LP objective {} but values give {recomputed}",
                lp.objective
            )));
        }
        Ok(RunRecord {
            command,
            instance: InstanceDigest::of(instance),
            method: "lp".to_owned(),
            value: lp.objective,
            vertices: Vec::new(),
            wall_time_ms: millis(elapsed),
            proven_optimal: lp.certified,
            lp: Some(LpDetails {
                values: lp.values.clone(),
                rows: model.rows.len(),
                iterations: lp.iterations,
                max_violation,
                exact_objective: lp.exact_objective.as_ref().map(|q| q.to_string()),
            }),
        })
    }
}
