use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{Error, Result};

/// Gauss–Jordan inverse with partial pivoting. Fails if a pivot magnitude
/// drops below `tol`.
pub fn small_inverse(m: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            op: "small_inverse",
            left: m.shape(),
            right: (m.cols(), m.cols()),
        });
    }
    let n = m.rows();
    let mut a: Vec<Vec<Complex64>> = (0..n)
        .map(|i| (0..n).map(|j| *m.get(i, j)).collect())
        .collect();
    let mut inv: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
                .collect()
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
            .unwrap();
        let pivot = a[pivot_row][col];
        if pivot.norm() < tol {
            return Err(Error::Singular {
                pivot: pivot.norm(),
            });
        }
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);

        let scale = pivot.inv();
        for j in 0..n {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for row in 0..n {
            if row == col {
                continue;
            }
            let factor = a[row][col];
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                let (ac, ic) = (a[col][j], inv[col][j]);
                a[row][j] -= factor * ac;
                inv[row][j] -= factor * ic;
            }
        }
    }
    Ok(ComplexMatrix::from_fn(n, n, |i, j| inv[i][j]))
}
