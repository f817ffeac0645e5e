//! Dense Gaussian elimination for the small systems the solvers produce.

/// Pivots smaller than this mark a system as singular.
pub const PIVOT_TOL: f64 = 1e-12;

/// Solves `a * x = b` for a system with at least as many equations as
/// unknowns, using Gaussian elimination with partial pivoting.
///
/// Returns `None` when a pivot falls below [`PIVOT_TOL`] (rank deficient) or
/// when the surplus equations of an overdetermined system are inconsistent
/// beyond `consistency_tol`.
pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>, consistency_tol: f64) -> Option<Vec<f64>> {
    let rows = a.len();
    if rows == 0 || b.len() != rows {
        return None;
    }
    let cols = a[0].len();
    if rows < cols || a.iter().any(|r| r.len() != cols) {
        return None;
    }

    for col in 0..cols {
        let (pivot_row, pivot_abs) = (col..rows)
            .map(|r| (r, a[r][col].abs()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pivot_abs < PIVOT_TOL {
            return None;
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for r in col + 1..rows {
            let factor = a[r][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            for c in col..cols {
                a[r][c] -= factor * a[col][c];
            }
            b[r] -= factor * b[col];
        }
    }

    // surplus rows are reduced to 0 = b[r]
    if b[cols..].iter().any(|v| v.abs() > consistency_tol) {
        return None;
    }

    let mut x = vec![0.0; cols];
    for r in (0..cols).rev() {
        let tail: f64 = (r + 1..cols).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - tail) / a[r][r];
    }
    Some(x)
}
