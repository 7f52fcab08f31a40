//! The clique LP relaxation of budgeted independent set:
//!
//! ```text
//! maximize    sum_i w_i x_i
//! subject to  sum_i x_i <= k
//!             sum_{i in C} x_i <= 1     for every maximal clique C
//!             x_i >= 0
//! ```
//!
//! There is no explicit `x_i <= 1` cap; clique rows imply it for every vertex.

mod certify;
mod cliques;
mod simplex;

use alloc::vec::Vec;
use core::fmt;

use num_rational::{BigRational, Ratio};

use crate::graph::WeightedInstance;
use crate::solvers::{exact_mwbis, SearchConfig};

pub use cliques::{enumerate_maximal_cliques, DEFAULT_CLIQUE_CAP};
pub use simplex::{solve_lp, solve_lp_with, SimplexOptions};

#[derive(Clone, Debug, PartialEq)]
pub enum LpError {
    CliqueCap {
        cap: usize,
    },
    IterationCap {
        iterations: usize,
        rows: usize,
        cols: usize,
        objective: f64,
        bland: bool,
    },
    /// The integer optimum could not be proven within the search limits.
    ExactSearchIncomplete,
    NotOptimal(LpStatus),
    GapParameter {
        k: u64,
    },
}

impl fmt::Display for LpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpError::CliqueCap { cap } => {
                write!(f, "more than {cap} maximal cliques; raise the clique cap")
            }
            LpError::IterationCap {
                iterations,
                rows,
                cols,
                objective,
                bland,
            } => write!(
                f,
                "simplex stopped after {iterations} pivots on a {rows}x{cols} tableau \
                 (objective {objective}, bland rule {})",
                if *bland { "on" } else { "off" }
            ),
            LpError::ExactSearchIncomplete => {
                write!(f, "exact search hit its limit before proving optimality")
            }
            LpError::NotOptimal(status) => write!(f, "LP is {status:?}"),
            LpError::GapParameter { k } => write!(f, "gap formula needs 2 <= k <= 2^40, got {k}"),
        }
    }
}

impl core::error::Error for LpError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    Budget,
    Clique,
}

/// A `<=` constraint in sparse form.
#[derive(Clone, Debug, PartialEq)]
pub struct LpRow {
    pub coeffs: Vec<(usize, f64)>,
    pub rhs: f64,
    pub kind: RowKind,
}

/// `max objective·x` subject to every row (`<=`) and `x >= 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LpModel {
    pub num_vars: usize,
    pub objective: Vec<f64>,
    pub rows: Vec<LpRow>,
}

impl LpModel {
    /// Largest violation of any row or nonnegativity bound at `values` (0 if feasible).
    pub fn max_violation(&self, values: &[f64]) -> f64 {
        let rows = self.rows.iter().map(|row| {
            let lhs: f64 = row.coeffs.iter().map(|&(j, a)| a * values[j]).sum();
            lhs - row.rhs
        });
        let bounds = values.iter().map(|&x| -x);
        rows.chain(bounds).fold(0.0, f64::max)
    }

    pub fn objective_value(&self, values: &[f64]) -> f64 {
        self.objective.iter().zip(values).map(|(c, x)| c * x).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub values: Vec<f64>,
    pub objective: f64,
    pub status: LpStatus,
    /// Final basis as column indices into `[A | I]` (structural then slack).
    pub basis: Vec<usize>,
    pub iterations: usize,
    /// Objective of the final basis in exact arithmetic, for integral models.
    pub exact_objective: Option<BigRational>,
    /// The final basis was re-checked exactly as primal and dual feasible.
    pub certified: bool,
}

/// The relaxation for `instance`: one budget row followed by one row per maximal clique.
pub fn build_lp(instance: &WeightedInstance, clique_cap: usize) -> Result<LpModel, LpError> {
    let n = instance.graph().n();
    let cliques = enumerate_maximal_cliques(instance.graph(), clique_cap)?;
    let mut rows = Vec::with_capacity(cliques.len() + 1);
    rows.push(LpRow {
        coeffs: (0..n).map(|j| (j, 1.0)).collect(),
        rhs: instance.k() as f64,
        kind: RowKind::Budget,
    });
    rows.extend(cliques.into_iter().map(|c| LpRow {
        coeffs: c.into_iter().map(|j| (j, 1.0)).collect(),
        rhs: 1.0,
        kind: RowKind::Clique,
    }));
    Ok(LpModel {
        num_vars: n,
        objective: instance.weights().to_vec(),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GapReport {
    pub ip_optimum: f64,
    pub lp_optimum: f64,
    /// `ip_optimum / lp_optimum`; 1 when the LP optimum is 0.
    pub ratio: f64,
    /// The same ratio in exact arithmetic when the LP was certified.
    pub exact_ratio: Option<BigRational>,
}

/// Integer optimum over LP optimum for one instance.
pub fn integrality_gap(
    instance: &WeightedInstance,
    clique_cap: usize,
    search: &SearchConfig,
) -> Result<GapReport, LpError> {
    let ip = exact_mwbis(instance, search);
    if !ip.proven_optimal {
        return Err(LpError::ExactSearchIncomplete);
    }
    let model = build_lp(instance, clique_cap)?;
    let lp = solve_lp(&model)?;
    if lp.status != LpStatus::Optimal {
        return Err(LpError::NotOptimal(lp.status));
    }
    let ratio = if lp.objective > 0.0 {
        ip.value / lp.objective
    } else {
        1.0
    };
    let exact_ratio = match (&lp.exact_objective, instance.integral_weight(&ip.vertices)) {
        (Some(lp_exact), Some(ip_exact)) if lp.certified && *lp_exact.numer() != 0.into() => {
            Some(BigRational::from_integer(ip_exact.into()) / lp_exact)
        }
        _ => None,
    };
    Ok(GapReport {
        ip_optimum: ip.value,
        lp_optimum: lp.objective,
        ratio,
        exact_ratio,
    })
}

/// `k^3 / (2k^3 - 3k^2 + 3k - 1)`, the integrality-gap bound of the star-of-stars family.
pub fn gap_upper_bound_formula(k: u64) -> Result<Ratio<i128>, LpError> {
    if !(2..=1 << 40).contains(&k) {
        return Err(LpError::GapParameter { k });
    }
    let k = i128::from(k);
    let k3 = k * k * k;
    Ok(Ratio::new(k3, 2 * k3 - 3 * k * k + 3 * k - 1))
}
