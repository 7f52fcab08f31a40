//! Dense-tableau primal simplex for `max c·x  s.t.  A x <= b,  x >= 0`.
//!
//! Rows with a negative right-hand side get an artificial variable and the solve runs in two
//! phases. Pivoting is Dantzig's largest-coefficient rule until the objective stalls for
//! `5 * (rows + cols)` iterations, then Bland's smallest-index rule for the rest of the phase.

use alloc::vec;
use alloc::vec::Vec;

use super::{certify, LpError, LpModel, LpSolution, LpStatus};

const PIVOT_TOL: f64 = 1e-11;
const COST_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimplexOptions {
    /// Total pivots allowed over both phases.
    pub max_iterations: usize,
    /// Exact rational re-evaluation of the final basis when the model data is integral.
    pub certify: bool,
}

impl SimplexOptions {
    pub fn for_model(model: &LpModel) -> Self {
        let size = model.rows.len() + model.num_vars;
        SimplexOptions {
            max_iterations: 1000 + 50 * size,
            certify: true,
        }
    }
}

/// Solves `model` with default options.
pub fn solve_lp(model: &LpModel) -> Result<LpSolution, LpError> {
    solve_lp_with(model, &SimplexOptions::for_model(model))
}

pub fn solve_lp_with(model: &LpModel, options: &SimplexOptions) -> Result<LpSolution, LpError> {
    let mut tableau = Tableau::new(model);
    let mut iterations = 0;

    if tableau.num_artificial > 0 {
        tableau.load_phase_one_costs();
        match tableau.run(&mut iterations, options.max_iterations)? {
            PhaseEnd::Optimal => {}
            PhaseEnd::Unbounded => unreachable!("phase one objective is bounded above by 0"),
        }
        if tableau.objective() < -1e-7 {
            return Ok(LpSolution {
                values: vec![0.0; model.num_vars],
                objective: 0.0,
                status: LpStatus::Infeasible,
                basis: Vec::new(),
                iterations,
                exact_objective: None,
                certified: false,
            });
        }
        tableau.evict_artificials();
    }

    tableau.load_costs(&model.objective);
    let status = match tableau.run(&mut iterations, options.max_iterations)? {
        PhaseEnd::Optimal => LpStatus::Optimal,
        PhaseEnd::Unbounded => LpStatus::Unbounded,
    };

    let values = tableau.primal_values();
    let objective = values
        .iter()
        .zip(&model.objective)
        .map(|(x, c)| x * c)
        .sum();
    let basis = tableau.basis.clone();
    let mut solution = LpSolution {
        values,
        objective,
        status,
        basis,
        iterations,
        exact_objective: None,
        certified: false,
    };
    if status == LpStatus::Optimal && options.certify && tableau.num_artificial_basic() == 0 {
        if let Some(cert) = certify::certify_basis(model, &solution.basis) {
            solution.certified = cert.primal_feasible && cert.dual_feasible;
            solution.exact_objective = Some(cert.objective);
        }
    }
    Ok(solution)
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

struct Tableau {
    rows: usize,
    /// structural + slack + artificial
    cols: usize,
    num_structural: usize,
    num_artificial: usize,
    /// (rows + 1) x (cols + 1), row-major; the last row holds reduced costs and `-z`.
    data: Vec<f64>,
    basis: Vec<usize>,
    banned: Vec<bool>,
}

impl Tableau {
    fn new(model: &LpModel) -> Self {
        let rows = model.rows.len();
        let n = model.num_vars;
        let negative: Vec<usize> = (0..rows).filter(|&i| model.rows[i].rhs < 0.0).collect();
        let num_artificial = negative.len();
        let cols = n + rows + num_artificial;
        let width = cols + 1;
        let mut data = vec![0.0; (rows + 1) * width];
        let mut basis = vec![0; rows];
        let mut art = n + rows;
        for (i, row) in model.rows.iter().enumerate() {
            let sign = if row.rhs < 0.0 { -1.0 } else { 1.0 };
            let r = &mut data[i * width..(i + 1) * width];
            for &(j, a) in &row.coeffs {
                r[j] += sign * a;
            }
            r[n + i] = sign;
            r[cols] = sign * row.rhs;
            if row.rhs < 0.0 {
                r[art] = 1.0;
                basis[i] = art;
                art += 1;
            } else {
                basis[i] = n + i;
            }
        }
        Tableau {
            rows,
            cols,
            num_structural: n,
            num_artificial,
            data,
            basis,
            banned: vec![false; cols],
        }
    }

    fn width(&self) -> usize {
        self.cols + 1
    }

    fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.width() + j]
    }

    fn objective(&self) -> f64 {
        -self.at(self.rows, self.cols)
    }

    fn is_artificial(&self, j: usize) -> bool {
        j >= self.num_structural + self.rows
    }

    fn num_artificial_basic(&self) -> usize {
        self.basis
            .iter()
            .filter(|&&j| self.is_artificial(j))
            .count()
    }

    /// Objective row for `max -sum(artificials)`, priced out against the starting basis.
    fn load_phase_one_costs(&mut self) {
        let (w, rows, cols) = (self.width(), self.rows, self.cols);
        let mut obj = vec![0.0; w];
        obj[cols - self.num_artificial..cols].fill(-1.0);
        for i in 0..rows {
            if self.is_artificial(self.basis[i]) {
                for (o, v) in obj.iter_mut().zip(&self.data[i * w..(i + 1) * w]) {
                    *o += v;
                }
            }
        }
        self.data[rows * w..].copy_from_slice(&obj);
    }

    fn load_costs(&mut self, costs: &[f64]) {
        let (w, rows) = (self.width(), self.rows);
        let mut obj = vec![0.0; w];
        obj[..costs.len()].copy_from_slice(costs);
        for i in 0..rows {
            let cb = costs.get(self.basis[i]).copied().unwrap_or(0.0);
            if cb != 0.0 {
                for (o, v) in obj.iter_mut().zip(&self.data[i * w..(i + 1) * w]) {
                    *o -= cb * v;
                }
            }
        }
        for (j, o) in obj.iter_mut().enumerate().take(self.cols) {
            if self.is_artificial(j) {
                *o = 0.0;
            }
        }
        self.data[rows * w..].copy_from_slice(&obj);
    }

    /// Pivots artificial variables (all at zero after a feasible phase one) out of the basis
    /// where possible and bans every artificial column from re-entering.
    fn evict_artificials(&mut self) {
        for i in 0..self.rows {
            if self.is_artificial(self.basis[i]) {
                if let Some(j) =
                    (0..self.num_structural + self.rows).find(|&j| self.at(i, j).abs() > PIVOT_TOL)
                {
                    self.pivot(i, j);
                }
            }
        }
        for j in 0..self.cols {
            if self.is_artificial(j) {
                self.banned[j] = true;
            }
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let w = self.width();
        let p = self.at(row, col);
        for v in &mut self.data[row * w..(row + 1) * w] {
            *v /= p;
        }
        let pivot_row: Vec<f64> = self.data[row * w..(row + 1) * w].to_vec();
        for i in 0..=self.rows {
            if i == row {
                continue;
            }
            let factor = self.at(i, col);
            if factor != 0.0 {
                for (v, pr) in self.data[i * w..(i + 1) * w].iter_mut().zip(&pivot_row) {
                    *v -= factor * pr;
                }
                self.data[i * w + col] = 0.0;
            }
        }
        self.basis[row] = col;
    }

    fn entering(&self, bland: bool) -> Option<usize> {
        let obj = self.rows;
        let eligible = (0..self.cols).filter(|&j| !self.banned[j] && self.at(obj, j) > COST_TOL);
        if bland {
            eligible.min()
        } else {
            eligible.fold(None, |best: Option<usize>, j| match best {
                Some(b) if self.at(obj, b) >= self.at(obj, j) => Some(b),
                _ => Some(j),
            })
        }
    }

    /// Minimum ratio test; ties go to the row whose basic variable has the smallest index.
    fn leaving(&self, col: usize) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for i in 0..self.rows {
            let a = self.at(i, col);
            if a > PIVOT_TOL {
                let ratio = self.at(i, self.cols) / a;
                best = match best {
                    None => Some((i, ratio)),
                    Some((b, r)) => {
                        if ratio < r - 1e-12
                            || (ratio <= r + 1e-12 && self.basis[i] < self.basis[b])
                        {
                            Some((i, ratio))
                        } else {
                            Some((b, r))
                        }
                    }
                };
            }
        }
        best.map(|(i, _)| i)
    }

    fn run(&mut self, iterations: &mut usize, max_iterations: usize) -> Result<PhaseEnd, LpError> {
        let stall_limit = 5 * (self.rows + self.cols);
        let mut stalled = 0;
        let mut bland = false;
        loop {
            let Some(col) = self.entering(bland) else {
                return Ok(PhaseEnd::Optimal);
            };
            let Some(row) = self.leaving(col) else {
                return Ok(PhaseEnd::Unbounded);
            };
            if *iterations >= max_iterations {
                return Err(LpError::IterationCap {
                    iterations: *iterations,
                    rows: self.rows,
                    cols: self.cols,
                    objective: self.objective(),
                    bland,
                });
            }
            let before = self.objective();
            self.pivot(row, col);
            *iterations += 1;
            if self.objective() > before + 1e-12 {
                stalled = 0;
            } else {
                stalled += 1;
                if stalled >= stall_limit {
                    bland = true;
                }
            }
        }
    }

    fn primal_values(&self) -> Vec<f64> {
        let mut x = vec![0.0; self.num_structural];
        for (i, &j) in self.basis.iter().enumerate() {
            if j < self.num_structural {
                let v = self.at(i, self.cols);
                x[j] = if v < 0.0 && v > -1e-9 { 0.0 } else { v };
            }
        }
        x
    }
}
