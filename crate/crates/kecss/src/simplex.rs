//! Dense tableau simplex for the tiny explicit LPs built by the oracles.
//!
//! Solves max b^T y s.t. A y <= c, y >= 0 (c >= 0, so y = 0 is feasible)
//! and reports both the optimum and the duals of the row constraints.
//! Bland's rule for anti-cycling; everything here is small and dense.

const TOL: f64 = 1e-9;

pub(crate) struct SimplexResult {
    pub value: f64,
    /// Dual of each row constraint (the primal solution of the original
    /// covering LP when this is used as its dual).
    pub row_duals: Vec<f64>,
}

/// rows: one entry per constraint, each a dense coefficient vector over the
/// y variables; rhs: the c vector; objective: the b vector.
pub(crate) fn solve_max(rows: &[Vec<f64>], rhs: &[f64], objective: &[f64]) -> SimplexResult {
    let m = rows.len();
    let nv = objective.len();
    let ncols = nv + m;
    // Tableau: m constraint rows + objective row; columns = vars, slacks, rhs.
    let mut t = vec![vec![0.0f64; ncols + 1]; m + 1];
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), nv);
        t[i][..nv].copy_from_slice(row);
        t[i][nv + i] = 1.0;
        t[i][ncols] = rhs[i];
        assert!(rhs[i] >= -TOL, "rhs must be nonnegative for the slack basis");
    }
    for j in 0..nv {
        t[m][j] = -objective[j];
    }
    let mut basis: Vec<usize> = (nv..nv + m).collect();

    loop {
        // Bland: entering = smallest index with negative reduced cost.
        let Some(enter) = (0..ncols).find(|&j| t[m][j] < -TOL) else {
            break;
        };
        // Ratio test; Bland tie-break on smallest basis variable.
        let mut leave: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            if t[i][enter] > TOL {
                let ratio = t[i][ncols] / t[i][enter];
                let better = match leave {
                    None => true,
                    Some(l) => {
                        ratio < best_ratio - TOL
                            || (ratio < best_ratio + TOL && basis[i] < basis[l])
                    }
                };
                if better {
                    best_ratio = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            // Unbounded; callers construct LPs where this cannot happen.
            panic!("simplex: unbounded objective");
        };
        // Pivot.
        let piv = t[leave][enter];
        for x in t[leave].iter_mut() {
            *x /= piv;
        }
        for i in 0..=m {
            if i != leave && t[i][enter].abs() > 0.0 {
                let f = t[i][enter];
                for j in 0..=ncols {
                    t[i][j] -= f * t[leave][j];
                }
            }
        }
        basis[leave] = enter;
    }

    let value = t[m][ncols];
    let row_duals = (0..m).map(|i| t[m][nv + i].max(0.0)).collect();
    SimplexResult { value, row_duals }
}
