//! Exact re-evaluation of a simplex basis in rational arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::LpModel;

pub(crate) struct Certificate {
    pub objective: BigRational,
    pub primal_feasible: bool,
    pub dual_feasible: bool,
}

fn exact(v: f64) -> Option<BigRational> {
    (v.abs() < 9.0e15 && v == (v as i64) as f64)
        .then(|| BigRational::from_integer(BigInt::from(v as i64)))
}

/// Re-solves `B x_B = b` and `B^T y = c_B` exactly for the basis `basis` (column indices into
/// `[A | I]`), then checks `x_B >= 0` and reduced costs `c_j - y·A_j <= 0`.
///
/// Returns `None` when the model has non-integral data or the basis is singular.
pub(crate) fn certify_basis(model: &LpModel, basis: &[usize]) -> Option<Certificate> {
    let m = model.rows.len();
    let n = model.num_vars;
    if basis.len() != m || basis.iter().any(|&j| j >= n + m) {
        return None;
    }
    // dense exact copy of A, row-major
    let mut a = vec![vec![BigRational::zero(); n]; m];
    let mut b = Vec::with_capacity(m);
    for (i, row) in model.rows.iter().enumerate() {
        for &(j, v) in &row.coeffs {
            a[i][j] += exact(v)?;
        }
        b.push(exact(row.rhs)?);
    }
    let c: Vec<BigRational> = model
        .objective
        .iter()
        .map(|&v| exact(v))
        .collect::<Option<_>>()?;
    let column = |j: usize, i: usize| -> BigRational {
        if j < n {
            a[i][j].clone()
        } else if j - n == i {
            BigRational::from_integer(1.into())
        } else {
            BigRational::zero()
        }
    };
    let cost = |j: usize| -> BigRational {
        if j < n {
            c[j].clone()
        } else {
            BigRational::zero()
        }
    };

    // B x_B = b
    let bmat: Vec<Vec<BigRational>> = (0..m)
        .map(|i| basis.iter().map(|&j| column(j, i)).collect())
        .collect();
    let x_b = solve(bmat.clone(), b.clone())?;
    // B^T y = c_B
    let bt: Vec<Vec<BigRational>> = (0..m)
        .map(|r| (0..m).map(|i| bmat[i][r].clone()).collect())
        .collect();
    let c_b: Vec<BigRational> = basis.iter().map(|&j| cost(j)).collect();
    let y = solve(bt, c_b.clone())?;

    let primal_feasible = x_b.iter().all(|v| !v.is_negative());
    let mut in_basis = vec![false; n + m];
    for &j in basis {
        in_basis[j] = true;
    }
    let dual_feasible = (0..n + m).filter(|&j| !in_basis[j]).all(|j| {
        let mut reduced = cost(j);
        for (i, yi) in y.iter().enumerate() {
            let aij = column(j, i);
            if !aij.is_zero() {
                reduced -= yi * aij;
            }
        }
        !reduced.is_positive()
    });
    let objective = c_b
        .iter()
        .zip(&x_b)
        .fold(BigRational::zero(), |acc, (ci, xi)| acc + ci * xi);
    Some(Certificate {
        objective,
        primal_feasible,
        dual_feasible,
    })
}

/// Gauss–Jordan elimination with exact pivots. `None` if the matrix is singular.
fn solve(mut mat: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let m = rhs.len();
    for col in 0..m {
        let pivot = (col..m).find(|&r| !mat[r][col].is_zero())?;
        mat.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = BigRational::from_integer(1.into()) / mat[col][col].clone();
        for v in mat[col].iter_mut().skip(col) {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        rhs[col] *= &inv;
        let pivot_row = mat[col].clone();
        let pivot_rhs = rhs[col].clone();
        for r in 0..m {
            if r == col || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for (v, p) in mat[r].iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            rhs[r] -= &factor * &pivot_rhs;
        }
    }
    Some(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn solves_small_system() {
        // 2x + y = 3, x + 3y = 5  ->  x = 4/5, y = 7/5
        let mat = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(3, 1)]];
        let x = solve(mat, vec![q(3, 1), q(5, 1)]).unwrap();
        assert_eq!(x, vec![q(4, 5), q(7, 5)]);
    }

    #[test]
    fn singular_is_none() {
        let mat = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert!(solve(mat, vec![q(1, 1), q(2, 1)]).is_none());
    }
}
