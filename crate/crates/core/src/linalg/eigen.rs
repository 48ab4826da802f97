use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 64;

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Cyclic complex Jacobi: each rotation first removes the phase of the
/// pivot `a_pq` with a diagonal unitary, then applies the real symmetric
/// Jacobi rotation. Sweeps stop once every off-diagonal magnitude is below
/// `tol`.
pub fn hermitian_eigenvalues(m: &ComplexMatrix, tol: f64) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            op: "hermitian_eigenvalues",
            left: m.shape(),
            right: (m.cols(), m.cols()),
        });
    }
    let asym = m.hermitian_asymmetry();
    if asym > tol {
        return Err(Error::NotHermitian {
            max_asymmetry: asym,
        });
    }
    let n = m.rows();
    let mut a: Vec<Complex64> =
        ComplexMatrix::from_fn(n, n, |i, j| (m.get(i, j) + m.get(j, i).conj()) * 0.5)
            .data()
            .to_vec();
    let at = |i: usize, j: usize| i * n + j;

    let off_diagonal = |a: &[Complex64]| {
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                worst = worst.max(a[at(i, j)].norm());
            }
        }
        worst
    };

    let mut sweeps = 0;
    loop {
        let off = off_diagonal(&a);
        if off < tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NotConverged {
                sweeps,
                off_diagonal: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[at(p, q)];
                let g = apq.norm();
                if g == 0.0 {
                    continue;
                }
                let phase = apq / g;
                let alpha = a[at(p, p)].re;
                let beta = a[at(q, q)].re;
                let theta = (beta - alpha) / (2.0 * g);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let pc = phase.conj();

                // A ← A·G with G = [[c, s], [−s·ē, c·ē]] on (p, q)
                for k in 0..n {
                    let akp = a[at(k, p)];
                    let akq = a[at(k, q)];
                    a[at(k, p)] = akp * c - akq * pc * s;
                    a[at(k, q)] = akp * s + akq * pc * c;
                }
                // A ← G†·A
                for k in 0..n {
                    let apk = a[at(p, k)];
                    let aqk = a[at(q, k)];
                    a[at(p, k)] = apk * c - aqk * phase * s;
                    a[at(q, k)] = apk * s + aqk * phase * c;
                }
                a[at(p, q)] = Complex64::new(0.0, 0.0);
                a[at(q, p)] = Complex64::new(0.0, 0.0);
                a[at(p, p)] = Complex64::new(a[at(p, p)].re, 0.0);
                a[at(q, q)] = Complex64::new(a[at(q, q)].re, 0.0);
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[at(i, i)].re).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}
